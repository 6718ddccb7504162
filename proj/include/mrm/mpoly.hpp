#ifndef MRM_MPOLY_HPP
#define MRM_MPOLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mrm/field.hpp"

namespace mrm {

// Exponent tuple in N^m.
struct MultiIndex {
    std::vector<std::uint32_t> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::uint32_t> e) : entries(std::move(e)) {}
    MultiIndex(std::initializer_list<std::uint32_t> e) : entries(e) {}

    static MultiIndex zero(std::size_t m) { return MultiIndex(std::vector<std::uint32_t>(m, 0)); }

    std::size_t arity() const { return entries.size(); }
    std::uint32_t operator[](std::size_t l) const { return entries[l]; }

    std::uint64_t weight() const {
        std::uint64_t w = 0;
        for (auto v : entries) w += v;
        return w;
    }

    bool operator==(const MultiIndex& o) const { return entries == o.entries; }
    bool operator!=(const MultiIndex& o) const { return entries != o.entries; }

    std::string str() const;  // "(i1,...,im)"

    // Total order used everywhere for canonical listings: ascending weight,
    // then lexicographic on entries.
    struct GradedLex {
        bool operator()(const MultiIndex& a, const MultiIndex& b) const;
    };
};

// Componentwise partial order i <= j (resp. strict: <= and not equal).
bool leq(const MultiIndex& a, const MultiIndex& b);
bool strictly_less(const MultiIndex& a, const MultiIndex& b);

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
// Componentwise difference; requires b <= a.
MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

// All tuples in N^m with the given exact weight and every entry <= coord_cap,
// lexicographically ascending.
std::vector<MultiIndex> multi_indices_of_weight(std::size_t m, std::uint32_t weight,
                                                std::uint32_t coord_cap);

// All tuples with weight <= max_weight and entries <= coord_cap, graded-lex
// ascending.  Empty when max_weight < 0.
std::vector<MultiIndex> multi_indices_up_to_weight(std::size_t m, std::int64_t max_weight,
                                                   std::uint32_t coord_cap);

// binom(n, k) mod p by Lucas' theorem.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

// binom(j, i) = prod_l binom(j_l, i_l) reduced into the prime subfield.
// Zero whenever some i_l > j_l.
FieldElement multi_binomial(const MultiIndex& j, const MultiIndex& i, const Field& field);

// Sparse multivariate polynomial over GF(q).  Canonical form: no stored
// coefficient is zero; terms are kept in graded-lex order of their exponent
// tuples.  Values are immutable in spirit: operations return new polynomials
// and never mutate shared state.
class MVPoly {
  public:
    using TermMap = std::map<MultiIndex, std::uint32_t, MultiIndex::GradedLex>;

    MVPoly(std::shared_ptr<const Field> field, std::size_t nvars);

    static MVPoly constant(std::shared_ptr<const Field> field, std::size_t nvars, FieldElement c);
    static MVPoly monomial(std::shared_ptr<const Field> field, MultiIndex e, FieldElement c);

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    std::size_t nvars() const { return nvars_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    std::int64_t degree() const;

    FieldElement coefficient(const MultiIndex& e) const;
    const TermMap& terms() const { return terms_; }

    // Accumulates c into the coefficient of X^e, keeping canonical form.
    void add_term(const MultiIndex& e, FieldElement c);
    void add_term_index(const MultiIndex& e, std::uint32_t c);
    // Appends a nonzero term known to come after every stored term in
    // graded-lex order.
    void push_term_ordered(const MultiIndex& e, std::uint32_t c);

    MVPoly operator+(const MVPoly& o) const;
    MVPoly operator-(const MVPoly& o) const;
    MVPoly operator*(const MVPoly& o) const;
    MVPoly& operator+=(const MVPoly& o);
    MVPoly& operator-=(const MVPoly& o);

    bool operator==(const MVPoly& o) const;
    bool operator!=(const MVPoly& o) const { return !(*this == o); }

    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    // Text form: terms as "coeff_index:e1,e2,...,em" joined by ';' in
    // graded-lex order; the zero polynomial is "0".
    std::string to_text() const;
    static MVPoly from_text(std::shared_ptr<const Field> field, std::size_t nvars,
                            std::string_view text);

  private:
    void check_compatible(const MVPoly& o) const;

    std::shared_ptr<const Field> field_;
    std::size_t nvars_;
    TermMap terms_;
};

// Hasse derivative H(F, i): the coefficient of Z^i in F(X + Z), computed by
// the closed form sum_{j >= i} f_j binom(j, i) X^{j-i}.
MVPoly hasse_derivative(const MVPoly& f, const MultiIndex& i);

// V_j = prod_l (X_l^q - X_l)^{j_l}, expanded to canonical sparse form.
MVPoly vanishing_poly(const MultiIndex& j, std::shared_ptr<const Field> field);

// Values of F at every point of GF(q)^m as element indices, points ordered
// lexicographically by element index with the last coordinate fastest.
std::vector<std::uint32_t> evaluate_on_domain(const MVPoly& f);

}  // namespace mrm

#endif
