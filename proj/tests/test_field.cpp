#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "mrm/field.hpp"

using namespace mrm;

TEST_CASE("prime field construction") {
    auto f = Field::make(2, 1);
    CHECK(f->characteristic() == 2);
    CHECK(f->order() == 2);
    CHECK(f->modulus() == std::vector<std::uint32_t>{0, 1});  // x

    auto g5 = Field::make(5, 1);
    CHECK(g5->order() == 5);
}

TEST_CASE("GF(4) uses the only irreducible quadratic") {
    auto f = Field::make(2, 2);
    CHECK(f->order() == 4);
    CHECK(f->modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1
}

TEST_CASE("frozen moduli for small extensions") {
    CHECK(Field::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});     // x^3+x+1
    CHECK(Field::make(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});  // x^4+x+1
    CHECK(Field::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});        // x^2+1
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(Field::make(4, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field::make(1, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field::make(0, 2), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field::make(2, 0), UnsupportedSize);
    CHECK_THROWS_AS(Field::make(2, 17), UnsupportedSize);  // 2^17 > 2^16
    CHECK_NOTHROW(Field::make(2, 16));
}

TEST_CASE("enumeration is the base-p index order") {
    auto f2 = Field::make(2, 1);
    auto e2 = f2->enumerate();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].index() == 0);
    CHECK(e2[1].index() == 1);

    auto f5 = Field::make(5, 1);
    auto e5 = f5->enumerate();
    for (std::uint32_t i = 0; i < 5; ++i) CHECK(e5[i].index() == i);

    // GF(4): coefficient vectors 00, 01, 10, 11 read base-2
    auto f4 = Field::make(2, 2);
    auto e4 = f4->enumerate();
    CHECK(e4[0].coefficients() == std::vector<std::uint32_t>{0, 0});
    CHECK(e4[1].coefficients() == std::vector<std::uint32_t>{1, 0});
    CHECK(e4[2].coefficients() == std::vector<std::uint32_t>{0, 1});  // the generator x
    CHECK(e4[3].coefficients() == std::vector<std::uint32_t>{1, 1});
    CHECK(e4[0].is_zero());
    CHECK(e4[1] == f4->one());
}

TEST_CASE("arithmetic examples") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->element(2) * f5->element(3) == f5->one());  // 6 mod 5

    auto f2 = Field::make(2, 1);
    CHECK(f2->one() + f2->one() == f2->zero());

    auto f4 = Field::make(2, 2);
    for (std::uint32_t a = 1; a < 4; ++a)
        CHECK(f4->element(a) * f4->element(a).inverse() == f4->one());

    CHECK_THROWS_AS(f4->zero().inverse(), DivisionByZero);
    CHECK_THROWS_AS(f4->one() + f5->one(), FieldMismatch);
}

namespace {

void check_axioms_exhaustive(const Field& f) {
    std::uint32_t q = f.order();
    for (std::uint32_t a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.pow(a, q - 1) == 1);
        }
        // x^q - x vanishes everywhere
        CHECK(f.sub(f.pow(a, q), a) == 0);
        for (std::uint32_t b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            // Frobenius
            CHECK(f.pow(f.add(a, b), f.characteristic()) ==
                  f.add(f.pow(a, f.characteristic()), f.pow(b, f.characteristic())));
            for (std::uint32_t c = 0; c < q; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

void check_axioms_random(const Field& f, int rounds) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    for (int i = 0; i < rounds; ++i) {
        std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.pow(f.add(a, b), f.characteristic()) ==
              f.add(f.pow(a, f.characteristic()), f.pow(b, f.characteristic())));
        CHECK(f.sub(f.pow(a, f.order()), a) == 0);
        if (a != 0) CHECK(f.pow(a, f.order() - 1) == 1);
    }
}

}  // namespace

TEST_CASE("field axioms, exhaustive up to q = 16") {
    for (auto [p, t] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                        {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}})
        check_axioms_exhaustive(*Field::make(p, t));
}

TEST_CASE("field axioms, randomized above q = 16") {
    for (auto [p, t] : {std::pair<std::uint32_t, std::uint32_t>{5, 2}, {3, 3}, {2, 7}, {251, 1},
                        {2, 16}, {13, 2}})
        check_axioms_random(*Field::make(p, t), 500);
}

TEST_CASE("pow handles edge exponents") {
    auto f = Field::make(3, 2);
    CHECK(f->pow(0, 0) == 1);
    CHECK(f->pow(0, 5) == 0);
    CHECK(f->pow(1, 123456789ull) == 1);
    for (std::uint32_t a = 1; a < 9; ++a) CHECK(f->pow(a, 9) == a);  // a^q = a
}

TEST_CASE("enumeration serializes identically across instances") {
    auto serialize = [](const Field& f) {
        std::string s;
        for (std::uint32_t i = 0; i < f.order(); ++i) {
            s += std::to_string(i);
            s += ':';
            for (std::uint32_t c : f.coefficients(i)) s += std::to_string(c);
            s += ';';
        }
        return s;
    };
    auto a = Field::make(3, 2);
    auto b = Field::make(3, 2);
    CHECK(serialize(*a) == serialize(*b));
    CHECK(serialize(*a) ==
          "0:00;1:10;2:20;3:01;4:11;5:21;6:02;7:12;8:22;");
    CHECK(serialize(*Field::make(2, 2)) == "0:00;1:10;2:01;3:11;");
}

TEST_CASE("elements from equal (p,t) fields interoperate") {
    auto a = Field::make(2, 2);
    auto b = Field::make(2, 2);
    CHECK(a->element(2) + b->element(3) == a->element(1));
    CHECK(a->element(2) == b->element(2));
}
