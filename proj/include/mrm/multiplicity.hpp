#ifndef MRM_MULTIPLICITY_HPP
#define MRM_MULTIPLICITY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "mrm/reed_muller.hpp"

namespace mrm {

// Codeword of a multiplicity code: n positions, each holding one field
// element per derivative order j with |j| < s (slot order = graded-lex on j).
class Codeword {
  public:
    Codeword(std::shared_ptr<const Field> field, std::size_t positions, std::size_t slots);

    const Field& field() const { return *field_; }
    std::size_t positions() const { return npos_; }
    std::size_t slots() const { return nslots_; }

    FieldElement at(std::size_t position, std::size_t slot) const {
        return field_->element(data_[position * nslots_ + slot]);
    }
    std::uint32_t index_at(std::size_t position, std::size_t slot) const {
        return data_[position * nslots_ + slot];
    }
    void set(std::size_t position, std::size_t slot, FieldElement v);
    void set_index(std::size_t position, std::size_t slot, std::uint32_t v) {
        data_[position * nslots_ + slot] = v;
    }

    bool operator==(const Codeword& o) const;
    bool operator!=(const Codeword& o) const { return !(*this == o); }

  private:
    std::shared_ptr<const Field> field_;
    std::size_t npos_, nslots_;
    std::vector<std::uint32_t> data_;
};

// Message symbols in canonical information-set order: derivative order j in
// graded-lex order, then points of I_{d_j} in their information-set order.
using Message = std::vector<FieldElement>;

// Components F_j of the unique rewriting F = sum_j F_j * V_j, one entry per
// j with |j| <= d/q (zero components included).
using Decomposition = std::map<MultiIndex, MVPoly, MultiIndex::GradedLex>;

// Multiplicity code MRM^s_d over GF(q)^m: evaluations of every polynomial of
// total degree <= d together with all its Hasse derivatives of order weight
// < s.  Requires 0 <= d < sq, which makes the evaluation map injective.
class MultCode {
  public:
    // pool, when given, shares the Reed-Muller component codes with other
    // MultCode instances.
    MultCode(std::shared_ptr<const Field> field, std::size_t nvars, std::uint32_t order,
             std::int64_t degree_bound, RMCodePool* pool = nullptr);

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    std::size_t nvars() const { return m_; }
    std::uint32_t order() const { return s_; }
    std::int64_t degree_bound() const { return d_; }

    std::size_t length() const { return n_; }                       // n = q^m
    std::size_t symbols_per_position() const { return sorders_.size(); }  // sigma
    std::size_t message_length() const { return k_; }               // k = binom(m+d, m)

    // S = { j : |j| < s }, graded-lex; slots of a Codeword follow this order.
    const std::vector<MultiIndex>& derivative_orders() const { return sorders_; }
    std::size_t slot_of(const MultiIndex& j) const;

    // d_j = min(m(q-1), d - |j| q); negative means the component is empty.
    std::int64_t component_degree(const MultiIndex& j) const;
    // Component Reed-Muller code RM_{d_j}; null when d_j < 0.
    const RMCode* component_code(const MultiIndex& j) const;

    struct InfosetEntry {
        std::size_t slot;      // into derivative_orders()
        std::size_t position;  // into the evaluation domain
    };
    // The information set, canonical order; its size equals message_length().
    const std::vector<InfosetEntry>& information_set() const { return infoset_; }

    // V_j for any j in S.
    const MVPoly& vanishing(const MultiIndex& j) const;

    // --- the evaluation map ev^s ---
    // c_{j,P} = H(F, j)(P) for every j in S and point P. Requires deg F <= d.
    Codeword evaluate(const MVPoly& f) const;

    // --- the unique decomposition F = sum F_j V_j ---
    Decomposition decompose(const MVPoly& f) const;
    MVPoly recompose(const Decomposition& dec) const;

    // --- systematic encoding ---
    // The codeword of the unique degree-<=d polynomial whose derivative
    // values on the information set equal the message.
    Codeword encode_systematic(const Message& msg) const;
    // Same output, but assembled from the components F_j without ever
    // forming F.
    Codeword encode_systematic_fast(const Message& msg) const;
    // Restriction of a codeword to the information set.
    Message extract_message(const Codeword& c) const;
    // Univariate (m = 1) specialization using Newton interpolation on the
    // prefix information sets {alpha_0..alpha_{d_j}}.
    Codeword encode_derivative(const Message& msg) const;

  private:
    struct Recovered {
        std::vector<MVPoly> components;                         // per slot, zero when d_j < 0
        std::vector<std::vector<std::vector<std::uint32_t>>> deriv;  // [slot_j][slot_u][position]
    };
    Recovered recover_components(const Message& msg) const;
    std::vector<std::uint32_t> message_indices(const Message& msg) const;

    std::shared_ptr<const Field> field_;
    std::size_t m_;
    std::uint32_t s_;
    std::int64_t d_;
    std::size_t n_;
    std::size_t k_;
    std::vector<MultiIndex> sorders_;
    std::vector<std::int64_t> compdeg_;                     // per slot
    std::vector<std::shared_ptr<const RMCode>> subcodes_;   // per slot, null when empty
    std::vector<MVPoly> vpolys_;                            // per slot
    std::vector<std::vector<std::uint32_t>> hv_;            // hv_[j][v] = H(V_j, v)(P), point-free
    std::vector<std::uint32_t> sign_;                       // (-1)^{|j|} per slot
    std::vector<std::size_t> msg_offset_;                   // per slot, start into the message
    std::vector<InfosetEntry> infoset_;
    // Nonzero terms H(F_j', u)(P) * H(V_j', v)(P) of the derivative
    // recursion for order i, grouped per slot of i; comp_slot < slot(i)
    // always (the j' = i term is handled separately via sign_).
    struct Contribution {
        std::size_t comp_slot;   // slot of j'
        std::size_t deriv_slot;  // slot of u
        std::uint32_t factor;    // H(V_j', v)(P), point-independent
    };
    std::vector<std::vector<Contribution>> prior_contribs_;
    // per component slot: the derivative slots whose domain evaluations the
    // recursion actually reads (always includes 0)
    std::vector<std::vector<std::size_t>> needed_derivs_;
};

}  // namespace mrm

#endif
