#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mrm/reed_muller.hpp"
#include "test_support.hpp"

using namespace mrm;
using mrm::testing::Rng;

namespace {

// literal enumeration oracle for |L_d|
std::uint64_t count_exponents(std::uint32_t q, std::size_t m, std::int64_t d) {
    if (d < 0) return 0;
    std::uint64_t n = 1;
    for (std::size_t l = 0; l < m; ++l) n *= q;
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < n; ++code) {
        std::uint64_t rest = code, w = 0;
        for (std::size_t l = 0; l < m; ++l) {
            w += rest % q;
            rest /= q;
        }
        if (w <= static_cast<std::uint64_t>(d)) ++count;
    }
    return count;
}

MVPoly random_reduced_poly(Rng& rng, const std::shared_ptr<const Field>& field, std::size_t m,
                           std::int64_t d) {
    // random exponents inside L_d
    MVPoly f(field, m);
    auto exps = multi_indices_up_to_weight(m, d, field->order() - 1);
    std::uniform_int_distribution<std::uint32_t> coeff(0, field->order() - 1);
    for (const auto& e : exps) f.add_term_index(e, coeff(rng));
    return f;
}

}  // namespace

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 2) == 21);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ull);
    CHECK_THROWS_AS(binomial(200, 100), UnsupportedSize);
}

TEST_CASE("dimension examples") {
    CHECK(rm_dimension(2, 2, 1) == 3);
    CHECK(rm_dimension(4, 2, 5) == 15);
    CHECK(rm_dimension(3, 2, -1) == 0);
    CHECK(rm_dimension(2, 3, 99) == 8);      // saturates at q^m
    CHECK(rm_dimension(5, 2, 8) == 25);      // d = m(q-1)
    CHECK(rm_dimension(7, 1, 3) == 4);
}

TEST_CASE("dimension routes agree with literal enumeration") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        for (std::size_t m : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
            std::int64_t dmax = static_cast<std::int64_t>(m) * (q - 1);
            for (std::int64_t d = -1; d <= dmax + 2; ++d) {
                std::uint64_t expect = count_exponents(q, m, d);
                CHECK(rm_dimension_by_counting(q, m, d) == expect);
                CHECK(rm_dimension_by_recurrence(q, m, d) == expect);
                CHECK(rm_dimension(q, m, d) == expect);
            }
        }
    }
}

TEST_CASE("weight slices sum to the full dimension") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        for (std::int64_t d = 0; d <= 2 * (q - 1); ++d) {
            std::size_t total = 0;
            for (std::int64_t w = 0; w <= d; ++w)
                total += multi_indices_of_weight(2, static_cast<std::uint32_t>(w), q - 1).size();
            CHECK(total == rm_dimension(q, 2, d));
        }
    }
}

TEST_CASE("information set of RM_1 over GF(2)^2") {
    auto f2 = Field::make(2, 1);
    RMCode code(f2, 2, 1);
    CHECK(code.length() == 4);
    CHECK(code.dimension() == 3);
    const auto& is = code.information_set();
    REQUIRE(is.size() == 3);
    CHECK(is[0] == Point{f2->element(0), f2->element(0)});
    CHECK(is[1] == Point{f2->element(0), f2->element(1)});
    CHECK(is[2] == Point{f2->element(1), f2->element(0)});
    CHECK(code.infoset_positions() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("information set edge degrees") {
    auto f3 = Field::make(3, 1);
    RMCode d0(f3, 2, 0);
    REQUIRE(d0.information_set().size() == 1);
    CHECK(d0.information_set()[0] == Point{f3->zero(), f3->zero()});

    RMCode full(f3, 2, 4);  // d = m(q-1): every point
    CHECK(full.information_set().size() == 9);
    CHECK(full.dimension() == full.length());

    RMCode beyond(f3, 2, 7);  // saturated past m(q-1)
    CHECK(beyond.dimension() == 9);

    CHECK_THROWS_AS(RMCode(f3, 2, -1), DegreeOutOfRange);
}

TEST_CASE("encoding examples") {
    auto f2 = Field::make(2, 1);
    RMCode code(f2, 2, 1);

    MVPoly zero(f2, 2);
    auto zeros = code.encode(zero);
    for (const auto& v : zeros) CHECK(v.is_zero());

    MVPoly one = MVPoly::constant(f2, 2, f2->one());
    for (const auto& v : code.encode(one)) CHECK(v == f2->one());

    MVPoly x1(f2, 2);
    x1.add_term_index(MultiIndex{1, 0}, 1);
    auto enc = code.encode_indices(x1);
    CHECK(enc == std::vector<std::uint32_t>{0, 0, 1, 1});
}

TEST_CASE("encode rejects polynomials outside the reduced monomial set") {
    auto f2 = Field::make(2, 1);
    RMCode code(f2, 2, 2);
    MVPoly toobig(f2, 2);
    toobig.add_term_index(MultiIndex{1, 2}, 1);  // weight 3 > d
    CHECK_THROWS_AS(code.encode(toobig), DegreeTooLarge);
    MVPoly unreduced(f2, 2);
    unreduced.add_term_index(MultiIndex{2, 0}, 1);  // exponent 2 > q-1
    CHECK_THROWS_AS(code.encode(unreduced), DegreeTooLarge);
    MVPoly wrong_arity(f2, 1);
    wrong_arity.add_term_index(MultiIndex{1}, 1);
    CHECK_THROWS_AS(code.encode(wrong_arity), ArityMismatch);
}

TEST_CASE("interpolation") {
    auto f3 = Field::make(3, 1);
    RMCode code(f3, 2, 2);

    // all-zero values give the zero polynomial
    std::vector<std::uint32_t> zeros(code.dimension(), 0);
    CHECK(code.interpolate_indices(zeros).is_zero());

    // dimension-1 code: a single constant
    RMCode c0(f3, 2, 0);
    MVPoly c = c0.interpolate({f3->element(2)});
    CHECK(c == MVPoly::constant(f3, 2, f3->element(2)));

    CHECK_THROWS_AS(code.interpolate_indices({0, 1}), LengthMismatch);
}

TEST_CASE("encode then restrict then interpolate is the identity") {
    Rng rng(29);
    for (auto [p, t, m] : {std::tuple<std::uint32_t, std::uint32_t, std::size_t>{2, 1, 2},
                           {3, 1, 2}, {2, 2, 1}, {5, 1, 2}, {2, 1, 3}}) {
        auto field = Field::make(p, t);
        std::int64_t dmax = static_cast<std::int64_t>(m) * (field->order() - 1);
        for (std::int64_t d = 0; d <= dmax; ++d) {
            RMCode code(field, m, d);
            for (int round = 0; round < 5; ++round) {
                MVPoly f = random_reduced_poly(rng, field, m, d);
                auto word = code.encode_indices(f);
                std::vector<std::uint32_t> restricted;
                for (std::size_t pos : code.infoset_positions())
                    restricted.push_back(word[pos]);
                CHECK(code.interpolate_indices(restricted) == f);
            }
        }
    }
}

TEST_CASE("evaluation matrices are invertible across the sweep") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        auto field = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
        for (std::size_t m : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
            std::int64_t dmax = static_cast<std::int64_t>(m) * (q - 1);
            for (std::int64_t d = 0; d <= dmax; ++d) CHECK_NOTHROW(RMCode(field, m, d));
        }
    }
}

TEST_CASE("pool shares instances") {
    RMCodePool pool;
    auto f3 = Field::make(3, 1);
    auto a = pool.get(f3, 2, 3);
    auto b = pool.get(f3, 2, 3);
    CHECK(a.get() == b.get());
    auto c = pool.get(f3, 2, 4);
    CHECK(a.get() != c.get());
}
