#include "mrm/multiplicity.hpp"

#include <algorithm>
#include <string>

namespace mrm {

Codeword::Codeword(std::shared_ptr<const Field> field, std::size_t positions, std::size_t slots)
    : field_(std::move(field)), npos_(positions), nslots_(slots),
      data_(positions * slots, 0) {}

void Codeword::set(std::size_t position, std::size_t slot, FieldElement v) {
    if (!v.valid() || !field_->same_field(v.field()))
        throw FieldMismatch("codeword entry from a different field");
    data_[position * nslots_ + slot] = v.index();
}

bool Codeword::operator==(const Codeword& o) const {
    return field_->same_field(*o.field_) && npos_ == o.npos_ && nslots_ == o.nslots_ &&
           data_ == o.data_;
}

namespace {

// [Z^v] (Z^q - Z)^j: nonzero only for v = j + (q-1)w with 0 <= w <= j, where
// it equals binom(j, w) (-1)^{j-w}.
std::uint32_t unit_vanishing_coeff(const Field& f, std::uint32_t j, std::uint32_t v) {
    std::uint32_t q = f.order();
    if (v < j) return 0;
    std::uint32_t diff = v - j;
    if (diff % (q - 1) != 0) return 0;
    std::uint32_t w = diff / (q - 1);
    if (w > j) return 0;
    std::uint32_t b = binomial_mod(j, w, f.characteristic());
    if ((j - w) % 2 == 1) b = f.neg(b);
    return b;
}

// H(V_j, v) evaluated at any point of GF(q)^m; V_j(P + Z) does not depend
// on P, so neither does this value.
std::uint32_t vanishing_hasse_value(const Field& f, const MultiIndex& j, const MultiIndex& v) {
    std::uint32_t r = 1;
    for (std::size_t l = 0; l < j.arity() && r != 0; ++l)
        r = f.mul(r, unit_vanishing_coeff(f, j[l], v[l]));
    return r;
}

}  // namespace

MultCode::MultCode(std::shared_ptr<const Field> field, std::size_t nvars, std::uint32_t order,
                   std::int64_t degree_bound, RMCodePool* pool)
    : field_(std::move(field)), m_(nvars), s_(order), d_(degree_bound) {
    if (m_ < 1) throw InvalidParameter("m must be at least 1");
    if (s_ < 1) throw InvalidParameter("derivative order s must be at least 1");
    const Field& f = *field_;
    std::uint32_t q = f.order();
    if (d_ < 0 || d_ >= static_cast<std::int64_t>(s_) * q)
        throw DegreeOutOfRange("degree out of range (require 0 <= d < s*q)");

    std::uint64_t n = 1;
    for (std::size_t l = 0; l < m_; ++l) {
        n *= q;
        if (n > (1ull << 24)) throw UnsupportedSize("code length exceeds 2^24");
    }
    n_ = static_cast<std::size_t>(n);

    std::uint64_t k = binomial(static_cast<std::uint64_t>(m_) + d_, m_);
    if (k > (1ull << 26)) throw UnsupportedSize("message length exceeds 2^26");
    k_ = static_cast<std::size_t>(k);

    std::uint64_t sigma_count = binomial(static_cast<std::uint64_t>(m_) + s_ - 1, m_);
    if (sigma_count > (1ull << 20))
        throw UnsupportedSize("more than 2^20 derivative orders per position");
    if (n * sigma_count > (1ull << 26)) throw UnsupportedSize("codeword exceeds 2^26 symbols");
    sorders_ = multi_indices_up_to_weight(m_, static_cast<std::int64_t>(s_) - 1, s_ - 1);
    std::size_t sigma = sorders_.size();
    if (sigma != sigma_count) throw Error("derivative order enumeration size mismatch");

    RMCodePool local_pool;
    RMCodePool* rm_pool = pool != nullptr ? pool : &local_pool;

    std::int64_t dmax = static_cast<std::int64_t>(m_) * (q - 1);
    compdeg_.reserve(sigma);
    subcodes_.reserve(sigma);
    vpolys_.reserve(sigma);
    sign_.reserve(sigma);
    for (const MultiIndex& j : sorders_) {
        std::int64_t dj =
            std::min(dmax, d_ - static_cast<std::int64_t>(j.weight()) * q);
        compdeg_.push_back(dj);
        subcodes_.push_back(dj >= 0 ? rm_pool->get(field_, m_, dj) : nullptr);
        vpolys_.push_back(vanishing_poly(j, field_));
        sign_.push_back(j.weight() % 2 == 0 ? 1u : f.neg(1));
    }

    hv_.assign(sigma, std::vector<std::uint32_t>(sigma, 0));
    for (std::size_t a = 0; a < sigma; ++a)
        for (std::size_t b = 0; b < sigma; ++b)
            hv_[a][b] = vanishing_hasse_value(f, sorders_[a], sorders_[b]);

    // For every order i, collect the nonzero recursion terms over earlier
    // components j' < i: pairs u + v = i with H(V_j', v)(P) != 0.
    prior_contribs_.resize(sigma);
    for (std::size_t si = 0; si < sigma; ++si) {
        const MultiIndex& i = sorders_[si];
        std::vector<std::uint32_t> u(m_, 0);
        bool more = true;
        while (more) {
            MultiIndex mu(u);
            MultiIndex mv = i - mu;
            std::size_t su = slot_of(mu), sv = slot_of(mv);
            for (std::size_t sj = 0; sj < si; ++sj) {
                if (compdeg_[sj] < 0) continue;
                std::uint32_t h = hv_[sj][sv];
                if (h != 0) prior_contribs_[si].push_back({sj, su, h});
            }
            // odometer over u <= i
            more = false;
            for (std::size_t l = m_; l-- > 0;) {
                if (u[l] < i[l]) {
                    ++u[l];
                    std::fill(u.begin() + l + 1, u.end(), 0);
                    more = true;
                    break;
                }
            }
        }
    }

    needed_derivs_.assign(sigma, {});
    for (std::size_t slot = 0; slot < sigma; ++slot)
        if (compdeg_[slot] >= 0) needed_derivs_[slot].push_back(0);
    for (std::size_t si = 0; si < sigma; ++si)
        for (const auto& t : prior_contribs_[si]) needed_derivs_[t.comp_slot].push_back(t.deriv_slot);
    for (auto& list : needed_derivs_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    std::size_t off = 0;
    msg_offset_.reserve(sigma);
    for (std::size_t slot = 0; slot < sigma; ++slot) {
        msg_offset_.push_back(off);
        if (!subcodes_[slot]) continue;
        for (std::size_t pos : subcodes_[slot]->infoset_positions())
            infoset_.push_back({slot, pos});
        off += subcodes_[slot]->dimension();
    }
    if (off != k_)
        throw Error("information set size " + std::to_string(off) +
                    " does not match message length " + std::to_string(k_));
}

std::size_t MultCode::slot_of(const MultiIndex& j) const {
    auto it = std::lower_bound(sorders_.begin(), sorders_.end(), j, MultiIndex::GradedLex{});
    if (it == sorders_.end() || *it != j)
        throw InvalidParameter("derivative order " + j.str() + " has weight >= s");
    return static_cast<std::size_t>(it - sorders_.begin());
}

std::int64_t MultCode::component_degree(const MultiIndex& j) const {
    if (j.arity() != m_) throw ArityMismatch("derivative order arity does not match code");
    std::int64_t dmax = static_cast<std::int64_t>(m_) * (field_->order() - 1);
    return std::min(dmax, d_ - static_cast<std::int64_t>(j.weight()) * field_->order());
}

const RMCode* MultCode::component_code(const MultiIndex& j) const {
    return subcodes_[slot_of(j)].get();
}

const MVPoly& MultCode::vanishing(const MultiIndex& j) const { return vpolys_[slot_of(j)]; }

Codeword MultCode::evaluate(const MVPoly& f) const {
    if (!field_->same_field(f.field())) throw FieldMismatch("polynomial over a different field");
    if (f.nvars() != m_) throw ArityMismatch("polynomial arity does not match code");
    if (f.degree() > d_) throw DegreeTooLarge("polynomial degree exceeds the code's bound");
    Codeword out(field_, n_, sorders_.size());
    for (std::size_t slot = 0; slot < sorders_.size(); ++slot) {
        std::vector<std::uint32_t> vals = evaluate_on_domain(hasse_derivative(f, sorders_[slot]));
        for (std::size_t pos = 0; pos < n_; ++pos) out.set_index(pos, slot, vals[pos]);
    }
    return out;
}

namespace {

// X^u = sum_i P_i(X) (X^q - X)^i with deg P_i <= q-1, by repeated splitting
// of X^{tq+r} as X^r ((X^q - X) + X)^t.
using UniPoly = std::map<std::uint32_t, std::uint32_t>;       // exponent -> coefficient
using UniExpansion = std::map<std::uint32_t, UniPoly>;        // i -> P_i

const UniExpansion& power_expansion(std::uint32_t u, const Field& f,
                                    std::map<std::uint32_t, UniExpansion>& memo) {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    std::uint32_t q = f.order();
    UniExpansion res;
    if (u < q) {
        res[0][u] = 1;
    } else {
        std::uint32_t t = u / q, r = u % q;
        for (std::uint32_t i = 0; i <= t; ++i) {
            std::uint32_t b = binomial_mod(t, i, f.characteristic());
            if (b == 0) continue;
            const UniExpansion& sub = power_expansion(r + t - i, f, memo);
            for (const auto& [i2, poly] : sub)
                for (const auto& [e, c] : poly) {
                    std::uint32_t& acc = res[i + i2][e];
                    acc = f.add(acc, f.mul(b, c));
                }
        }
        for (auto pit = res.begin(); pit != res.end();) {
            auto& poly = pit->second;
            for (auto cit = poly.begin(); cit != poly.end();)
                cit = cit->second == 0 ? poly.erase(cit) : std::next(cit);
            pit = poly.empty() ? res.erase(pit) : std::next(pit);
        }
    }
    return memo.emplace(u, std::move(res)).first->second;
}

}  // namespace

Decomposition MultCode::decompose(const MVPoly& f) const {
    if (!field_->same_field(f.field())) throw FieldMismatch("polynomial over a different field");
    if (f.nvars() != m_) throw ArityMismatch("polynomial arity does not match code");
    if (f.degree() > d_) throw DegreeTooLarge("polynomial degree exceeds the code's bound");
    const Field& fld = *field_;

    std::int64_t jmax = d_ / fld.order();
    Decomposition dec;
    for (const MultiIndex& j :
         multi_indices_up_to_weight(m_, jmax, static_cast<std::uint32_t>(jmax)))
        dec.emplace(j, MVPoly(field_, m_));

    std::map<std::uint32_t, UniExpansion> memo;
    std::vector<const UniExpansion*> per_var(m_);
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t l = 0; l < m_; ++l) per_var[l] = &power_expansion(e[l], fld, memo);
        // cartesian product of the per-variable expansions
        std::vector<UniExpansion::const_iterator> comp_it(m_);
        std::vector<UniPoly::const_iterator> term_it(m_);
        for (std::size_t l = 0; l < m_; ++l) {
            comp_it[l] = per_var[l]->begin();
            term_it[l] = comp_it[l]->second.begin();
        }
        for (;;) {
            MultiIndex j = MultiIndex::zero(m_);
            MultiIndex exp = MultiIndex::zero(m_);
            std::uint32_t coeff = c;
            for (std::size_t l = 0; l < m_; ++l) {
                j.entries[l] = comp_it[l]->first;
                exp.entries[l] = term_it[l]->first;
                coeff = fld.mul(coeff, term_it[l]->second);
            }
            auto slot = dec.find(j);
            if (slot == dec.end())
                throw Error("component index " + j.str() + " escaped the weight bound");
            slot->second.add_term_index(exp, coeff);
            // advance the nested iterator odometer
            std::size_t l = m_;
            bool done = true;
            while (l-- > 0) {
                if (++term_it[l] == comp_it[l]->second.end()) {
                    if (++comp_it[l] == per_var[l]->end()) comp_it[l] = per_var[l]->begin();
                    term_it[l] = comp_it[l]->second.begin();
                    if (comp_it[l] != per_var[l]->begin()) {
                        done = false;
                        break;
                    }
                } else {
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
    return dec;
}

MVPoly MultCode::recompose(const Decomposition& dec) const {
    const Field& f = *field_;
    std::vector<std::pair<MultiIndex, std::uint32_t>> bulk;
    for (const auto& [j, fj] : dec) {
        if (j.arity() != m_) throw ArityMismatch("component index arity does not match code");
        if (fj.is_zero()) continue;
        if (!field_->same_field(fj.field()))
            throw FieldMismatch("component over a different field");
        if (fj.nvars() != m_) throw ArityMismatch("component arity does not match code");
        std::int64_t dj = component_degree(j);
        if (fj.degree() > dj)
            throw ComponentDegreeTooLarge("component " + j.str() + " has degree " +
                                          std::to_string(fj.degree()) + " > " +
                                          std::to_string(dj));
        const MVPoly& vj = vanishing(j);
        for (const auto& [ea, ca] : fj.terms())
            for (const auto& [eb, cb] : vj.terms()) bulk.emplace_back(ea + eb, f.mul(ca, cb));
    }
    // sort with cached weights; GradedLex would recompute them per compare
    std::vector<std::pair<std::uint64_t, std::size_t>> order(bulk.size());
    for (std::size_t i = 0; i < bulk.size(); ++i) order[i] = {bulk[i].first.weight(), i};
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return bulk[a.second].first.entries < bulk[b.second].first.entries;
    });
    MVPoly total(field_, m_);
    for (std::size_t i = 0; i < order.size();) {
        std::uint32_t acc = 0;
        std::size_t start = i;
        for (; i < order.size() && bulk[order[i].second].first == bulk[order[start].second].first;
             ++i)
            acc = f.add(acc, bulk[order[i].second].second);
        total.push_term_ordered(bulk[order[start].second].first, acc);
    }
    return total;
}

std::vector<std::uint32_t> MultCode::message_indices(const Message& msg) const {
    if (msg.size() != k_)
        throw LengthMismatch("message has " + std::to_string(msg.size()) + " symbols, expected " +
                             std::to_string(k_));
    std::vector<std::uint32_t> out;
    out.reserve(k_);
    for (const auto& v : msg) {
        if (!v.valid() || !field_->same_field(v.field()))
            throw FieldMismatch("message symbol from a different field");
        out.push_back(v.index());
    }
    return out;
}

MultCode::Recovered MultCode::recover_components(const Message& msg) const {
    const Field& f = *field_;
    std::vector<std::uint32_t> m = message_indices(msg);
    std::size_t sigma = sorders_.size();

    Recovered rec;
    rec.components.reserve(sigma);
    rec.deriv.resize(sigma);
    for (std::size_t slot = 0; slot < sigma; ++slot) rec.components.emplace_back(field_, m_);

    for (std::size_t slot = 0; slot < sigma; ++slot) {
        if (!subcodes_[slot]) continue;
        const RMCode& sub = *subcodes_[slot];
        const auto& positions = sub.infoset_positions();
        std::size_t kj = sub.dimension();
        std::vector<std::uint32_t> vals(kj);
        for (std::size_t r = 0; r < kj; ++r) {
            std::size_t pos = positions[r];
            std::uint32_t acc = m[msg_offset_[slot] + r];
            for (const auto& t : prior_contribs_[slot])
                acc = f.sub(acc, f.mul(rec.deriv[t.comp_slot][t.deriv_slot][pos], t.factor));
            vals[r] = f.mul(sign_[slot], acc);
        }
        MVPoly fj = sub.interpolate_indices(vals);
        rec.deriv[slot].resize(sigma);
        for (std::size_t su : needed_derivs_[slot])
            rec.deriv[slot][su] = evaluate_on_domain(hasse_derivative(fj, sorders_[su]));
        rec.components[slot] = std::move(fj);
    }
    return rec;
}

Codeword MultCode::encode_systematic(const Message& msg) const {
    Recovered rec = recover_components(msg);
    Decomposition dec;
    for (std::size_t slot = 0; slot < sorders_.size(); ++slot)
        if (subcodes_[slot]) dec.emplace(sorders_[slot], std::move(rec.components[slot]));
    return evaluate(recompose(dec));
}

Codeword MultCode::encode_systematic_fast(const Message& msg) const {
    const Field& f = *field_;
    Recovered rec = recover_components(msg);
    std::vector<std::uint32_t> m = message_indices(msg);
    std::size_t sigma = sorders_.size();
    Codeword out(field_, n_, sigma);

    std::vector<char> in_infoset(n_);
    for (std::size_t slot = 0; slot < sigma; ++slot) {
        std::fill(in_infoset.begin(), in_infoset.end(), 0);
        if (subcodes_[slot]) {
            const auto& positions = subcodes_[slot]->infoset_positions();
            for (std::size_t r = 0; r < positions.size(); ++r) {
                in_infoset[positions[r]] = 1;
                out.set_index(positions[r], slot, m[msg_offset_[slot] + r]);
            }
        }
        const bool has_self = subcodes_[slot] != nullptr;
        for (std::size_t pos = 0; pos < n_; ++pos) {
            if (in_infoset[pos]) continue;
            std::uint32_t acc = 0;
            for (const auto& t : prior_contribs_[slot])
                acc = f.add(acc, f.mul(rec.deriv[t.comp_slot][t.deriv_slot][pos], t.factor));
            if (has_self)
                acc = f.add(acc, f.mul(sign_[slot], rec.deriv[slot][0][pos]));
            out.set_index(pos, slot, acc);
        }
    }
    return out;
}

Message MultCode::extract_message(const Codeword& c) const {
    if (!field_->same_field(c.field())) throw FieldMismatch("codeword over a different field");
    if (c.positions() != n_ || c.slots() != sorders_.size())
        throw ShapeMismatch("codeword is " + std::to_string(c.positions()) + "x" +
                            std::to_string(c.slots()) + ", expected " + std::to_string(n_) + "x" +
                            std::to_string(sorders_.size()));
    Message out;
    out.reserve(k_);
    for (const auto& entry : infoset_) out.push_back(c.at(entry.position, entry.slot));
    return out;
}

namespace {

std::uint32_t eval_dense(const Field& f, const std::vector<std::uint32_t>& coeffs,
                         std::uint32_t x) {
    std::uint32_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
    return acc;
}

std::vector<std::uint32_t> conv_dense(const Field& f, const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    return out;
}

// Unique interpolant through (xs[i], ys[i]) by Newton divided differences.
std::vector<std::uint32_t> newton_interpolate(const Field& f, const std::vector<std::uint32_t>& xs,
                                              std::vector<std::uint32_t> ys) {
    std::size_t n = xs.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            ys[i] = f.div(f.sub(ys[i], ys[i - 1]), f.sub(xs[i], xs[i - level]));
            if (i == level) break;
        }
    std::vector<std::uint32_t> poly{ys[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        poly.insert(poly.begin(), 0);
        for (std::size_t t = 0; t + 1 < poly.size(); ++t)
            poly[t] = f.sub(poly[t], f.mul(xs[i], poly[t + 1]));
        poly[0] = f.add(poly[0], ys[i]);
    }
    return poly;
}

}  // namespace

Codeword MultCode::encode_derivative(const Message& msg) const {
    if (m_ != 1) throw NotUnivariate("derivative-code encoding requires m = 1");
    const Field& f = *field_;
    std::uint32_t q = f.order();
    std::vector<std::uint32_t> m = message_indices(msg);

    // hder[j][u]: dense coefficients of H(F_j, u)
    std::vector<std::vector<std::vector<std::uint32_t>>> hder(s_);
    std::vector<std::vector<std::uint32_t>> comps(s_);

    for (std::uint32_t j = 0; j < s_; ++j) {
        std::int64_t dj = compdeg_[j];
        if (dj < 0) continue;
        std::size_t npts = static_cast<std::size_t>(dj) + 1;
        std::vector<std::uint32_t> xs(npts), vals(npts);
        for (std::size_t i = 0; i < npts; ++i) {
            std::uint32_t x = static_cast<std::uint32_t>(i);  // alpha_i has index i
            std::uint32_t acc = m[msg_offset_[j] + i];
            for (std::uint32_t jp = 0; jp < j; ++jp) {
                if (compdeg_[jp] < 0) continue;
                for (std::uint32_t v = jp; v <= j; ++v) {
                    std::uint32_t h = unit_vanishing_coeff(f, jp, v);
                    if (h == 0) continue;
                    acc = f.sub(acc, f.mul(eval_dense(f, hder[jp][j - v], x), h));
                }
            }
            xs[i] = x;
            vals[i] = f.mul(sign_[j], acc);
        }
        comps[j] = newton_interpolate(f, xs, vals);
        hder[j].resize(s_);
        for (std::uint32_t u = 0; u < s_; ++u) {
            std::vector<std::uint32_t> der(comps[j].size() > u ? comps[j].size() - u : 0, 0);
            for (std::size_t e = u; e < comps[j].size(); ++e)
                der[e - u] = f.mul(comps[j][e], binomial_mod(e, u, f.characteristic()));
            if (der.empty()) der.push_back(0);
            hder[j][u] = std::move(der);
        }
    }

    // F = sum_j F_j (X^q - X)^j by dense convolution
    std::vector<std::uint32_t> total{0};
    std::vector<std::uint32_t> vpow{1};
    std::vector<std::uint32_t> vbase(q + 1, 0);
    vbase[1] = f.neg(1);
    vbase[q] = 1;
    for (std::uint32_t j = 0; j < s_; ++j) {
        if (compdeg_[j] >= 0 && !comps[j].empty()) {
            std::vector<std::uint32_t> term = conv_dense(f, comps[j], vpow);
            if (term.size() > total.size()) total.resize(term.size(), 0);
            for (std::size_t e = 0; e < term.size(); ++e) total[e] = f.add(total[e], term[e]);
        }
        if (j + 1 < s_) vpow = conv_dense(f, vpow, vbase);
    }
    MVPoly fpoly(field_, 1);
    for (std::size_t e = 0; e < total.size(); ++e)
        fpoly.add_term_index(MultiIndex{static_cast<std::uint32_t>(e)}, total[e]);
    return evaluate(fpoly);
}

}  // namespace mrm
