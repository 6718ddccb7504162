#ifndef MRM_REED_MULLER_HPP
#define MRM_REED_MULLER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "mrm/mpoly.hpp"

namespace mrm {

// Exact binomial coefficient; throws UnsupportedSize on uint64 overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Dimension k_d of the degree-<=d Reed-Muller code over GF(q) in m variables,
// i.e. |L_d| with L_d = { i in N^m : i_l <= q-1, |i| <= d }.  Computed along
// two independent routes that are checked against each other:
//   - counting the exponent set directly, and
//   - solving binom(m+d, m) = sum_j binom(m-1+j, m-1) * k_{d-jq} for k_d,
//     with k_d = 0 for d < 0 and k_d = q^m for d >= m(q-1).
std::uint64_t rm_dimension(std::uint32_t q, std::size_t m, std::int64_t d);
std::uint64_t rm_dimension_by_counting(std::uint32_t q, std::size_t m, std::int64_t d);
std::uint64_t rm_dimension_by_recurrence(std::uint32_t q, std::size_t m, std::int64_t d);

using Point = std::vector<FieldElement>;

// Generalized Reed-Muller code RM_d: evaluations of every m-variate
// polynomial of total degree <= d (exponents reduced, i.e. inside L_d) at all
// n = q^m points of GF(q)^m.
//
// The evaluation domain is ordered lexicographically by element index with
// the last coordinate fastest.  The information set I_d consists of the
// points whose index tuples lie in L_d, in graded-lex order of the tuple;
// the inverse of the monomial-evaluation matrix on I_d is computed at
// construction (and certifies that I_d really is an information set).
class RMCode {
  public:
    RMCode(std::shared_ptr<const Field> field, std::size_t nvars, std::int64_t degree_bound);

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    std::size_t nvars() const { return m_; }
    std::int64_t degree_bound() const { return d_; }

    std::size_t length() const { return n_; }         // n = q^m
    std::size_t dimension() const { return exps_.size(); }

    // L_d, graded-lex.
    const std::vector<MultiIndex>& exponents() const { return exps_; }

    // Information-set points in canonical order; infoset_positions()[r] is
    // the index of the r-th point inside the full evaluation domain.
    const std::vector<Point>& information_set() const { return infoset_points_; }
    const std::vector<std::size_t>& infoset_positions() const { return infoset_pos_; }

    Point point(std::size_t position) const;

    // ev: requires every exponent of f to lie in L_d (DegreeTooLarge
    // otherwise; polynomials are not silently reduced mod X_l^q - X_l).
    std::vector<FieldElement> encode(const MVPoly& f) const;
    std::vector<std::uint32_t> encode_indices(const MVPoly& f) const;

    // Unique f with exponents in L_d matching the given values on the
    // information set.
    MVPoly interpolate(const std::vector<FieldElement>& values) const;
    MVPoly interpolate_indices(const std::vector<std::uint32_t>& values) const;

  private:
    std::shared_ptr<const Field> field_;
    std::size_t m_;
    std::int64_t d_;
    std::size_t n_;
    std::vector<MultiIndex> exps_;
    std::vector<Point> infoset_points_;
    std::vector<std::size_t> infoset_pos_;
    std::vector<std::uint16_t> inv_;  // dimension x dimension, row-major
};

// Shares RMCode instances across codes with equal (field, m, d); useful when
// many multiplicity codes over the same field are built side by side.
// Lookups and insertions are serialized by an internal mutex.
class RMCodePool {
  public:
    std::shared_ptr<const RMCode> get(std::shared_ptr<const Field> field, std::size_t nvars,
                                      std::int64_t degree_bound);

  private:
    std::mutex mutex_;
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::size_t, std::int64_t>,
             std::shared_ptr<const RMCode>>
        cache_;
};

}  // namespace mrm

#endif
