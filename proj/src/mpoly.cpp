#include "mrm/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mrm {

std::string MultiIndex::str() const {
    std::string s = "(";
    for (std::size_t l = 0; l < entries.size(); ++l) {
        if (l) s += ',';
        s += std::to_string(entries[l]);
    }
    s += ')';
    return s;
}

bool MultiIndex::GradedLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
    std::uint64_t wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.entries < b.entries;
}

bool leq(const MultiIndex& a, const MultiIndex& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("multi-index arities differ");
    for (std::size_t l = 0; l < a.arity(); ++l)
        if (a[l] > b[l]) return false;
    return true;
}

bool strictly_less(const MultiIndex& a, const MultiIndex& b) { return leq(a, b) && a != b; }

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("multi-index arities differ");
    MultiIndex r = a;
    for (std::size_t l = 0; l < r.arity(); ++l) r.entries[l] += b[l];
    return r;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    if (!leq(b, a)) throw ArityMismatch("multi-index difference would be negative");
    MultiIndex r = a;
    for (std::size_t l = 0; l < r.arity(); ++l) r.entries[l] -= b[l];
    return r;
}

namespace {

void gen_weight(std::size_t m, std::uint32_t remaining, std::uint32_t cap,
                std::vector<std::uint32_t>& cur, std::vector<MultiIndex>& out) {
    if (cur.size() + 1 == m) {
        if (remaining <= cap) {
            cur.push_back(remaining);
            out.emplace_back(cur);
            cur.pop_back();
        }
        return;
    }
    std::uint32_t top = std::min(cap, remaining);
    for (std::uint32_t v = 0; v <= top; ++v) {
        cur.push_back(v);
        gen_weight(m, remaining - v, cap, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_weight(std::size_t m, std::uint32_t weight,
                                                std::uint32_t coord_cap) {
    std::vector<MultiIndex> out;
    if (m == 0) {
        if (weight == 0) out.emplace_back();
        return out;
    }
    std::vector<std::uint32_t> cur;
    gen_weight(m, weight, coord_cap, cur, out);
    return out;
}

std::vector<MultiIndex> multi_indices_up_to_weight(std::size_t m, std::int64_t max_weight,
                                                   std::uint32_t coord_cap) {
    std::vector<MultiIndex> out;
    if (max_weight < 0) return out;
    std::uint64_t top = std::min<std::uint64_t>(static_cast<std::uint64_t>(max_weight),
                                                static_cast<std::uint64_t>(coord_cap) * m);
    for (std::uint64_t w = 0; w <= top; ++w) {
        auto slice = multi_indices_of_weight(m, static_cast<std::uint32_t>(w), coord_cap);
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    // Lucas: reduce digit by digit in base p; each digit pair has n_i, k_i < p,
    // so the small binomial is computable mod p with Fermat inversion.
    std::uint64_t result = 1;
    while (k > 0 || n > 0) {
        std::uint64_t nd = n % p, kd = k % p;
        n /= p;
        k /= p;
        if (kd > nd) return 0;
        std::uint64_t num = 1, den = 1;
        std::uint64_t kk = std::min(kd, nd - kd);
        for (std::uint64_t i = 1; i <= kk; ++i) {
            num = num * ((nd + 1 - i) % p) % p;
            den = den * (i % p) % p;
        }
        // den != 0 mod p: every factor is < p
        std::uint64_t den_inv = 1, base = den, e = p - 2;
        while (e) {
            if (e & 1) den_inv = den_inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        result = result * num % p * den_inv % p;
    }
    return static_cast<std::uint32_t>(result);
}

FieldElement multi_binomial(const MultiIndex& j, const MultiIndex& i, const Field& field) {
    if (j.arity() != i.arity()) throw ArityMismatch("multi-index arities differ");
    std::uint32_t p = field.characteristic();
    std::uint32_t r = 1;
    for (std::size_t l = 0; l < j.arity() && r != 0; ++l)
        r = r * binomial_mod(j[l], i[l], p) % p;
    return field.element(r);
}

MVPoly::MVPoly(std::shared_ptr<const Field> field, std::size_t nvars)
    : field_(std::move(field)), nvars_(nvars) {
    if (nvars_ == 0) throw ArityMismatch("polynomials need at least one variable");
}

MVPoly MVPoly::constant(std::shared_ptr<const Field> field, std::size_t nvars, FieldElement c) {
    MVPoly f(std::move(field), nvars);
    f.add_term(MultiIndex::zero(nvars), c);
    return f;
}

MVPoly MVPoly::monomial(std::shared_ptr<const Field> field, MultiIndex e, FieldElement c) {
    MVPoly f(std::move(field), e.arity());
    f.add_term(e, c);
    return f;
}

std::int64_t MVPoly::degree() const {
    if (terms_.empty()) return -1;
    // graded-lex keeps the highest weight last
    return static_cast<std::int64_t>(terms_.rbegin()->first.weight());
}

FieldElement MVPoly::coefficient(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return field_->element(it == terms_.end() ? 0 : it->second);
}

void MVPoly::add_term(const MultiIndex& e, FieldElement c) {
    if (!field_->same_field(c.field())) throw FieldMismatch("coefficient from a different field");
    add_term_index(e, c.index());
}

void MVPoly::add_term_index(const MultiIndex& e, std::uint32_t c) {
    if (e.arity() != nvars_) throw ArityMismatch("exponent arity does not match polynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void MVPoly::push_term_ordered(const MultiIndex& e, std::uint32_t c) {
    if (c == 0) return;
    terms_.emplace_hint(terms_.end(), e, c);
}

void MVPoly::check_compatible(const MVPoly& o) const {
    if (!field_->same_field(*o.field_)) throw FieldMismatch("polynomials over different fields");
    if (nvars_ != o.nvars_) throw ArityMismatch("polynomials in different numbers of variables");
}

MVPoly& MVPoly::operator+=(const MVPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term_index(e, c);
    return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term_index(e, field_->neg(c));
    return *this;
}

MVPoly MVPoly::operator+(const MVPoly& o) const {
    MVPoly r = *this;
    r += o;
    return r;
}

MVPoly MVPoly::operator-(const MVPoly& o) const {
    MVPoly r = *this;
    r -= o;
    return r;
}

MVPoly MVPoly::operator*(const MVPoly& o) const {
    check_compatible(o);
    MVPoly r(field_, nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term_index(ea + eb, field_->mul(ca, cb));
    return r;
}

bool MVPoly::operator==(const MVPoly& o) const {
    return field_->same_field(*o.field_) && nvars_ == o.nvars_ && terms_ == o.terms_;
}

FieldElement MVPoly::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != nvars_) throw ArityMismatch("point dimension does not match polynomial");
    for (const auto& x : point)
        if (!x.valid() || !field_->same_field(x.field()))
            throw FieldMismatch("point coordinate from a different field");
    std::uint32_t acc = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t term = c;
        for (std::size_t l = 0; l < nvars_; ++l)
            term = field_->mul(term, field_->pow(point[l].index(), e[l]));
        acc = field_->add(acc, term);
    }
    return field_->element(acc);
}

std::string MVPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += ';';
        s += std::to_string(c);
        s += ':';
        for (std::size_t l = 0; l < nvars_; ++l) {
            if (l) s += ',';
            s += std::to_string(e[l]);
        }
    }
    return s;
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
    if (s.empty()) throw ParseError("empty " + std::string(what));
    std::uint64_t v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
        if (v > (1ull << 32)) throw ParseError(std::string(what) + " too large");
    }
    return v;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

MVPoly MVPoly::from_text(std::shared_ptr<const Field> field, std::size_t nvars,
                         std::string_view text) {
    MVPoly f(field, nvars);
    text = strip(text);
    if (text.empty() || text == "0") return f;
    for (std::string_view term : split(text, ';')) {
        term = strip(term);
        if (term.empty()) throw ParseError("empty term in polynomial text");
        auto parts = split(term, ':');
        if (parts.size() != 2) throw ParseError("term must be coeff:exponents");
        std::uint64_t c = parse_uint(strip(parts[0]), "coefficient");
        if (c >= field->order()) throw ParseError("coefficient index out of range");
        auto exps = split(parts[1], ',');
        if (exps.size() != nvars) throw ParseError("wrong number of exponents in term");
        std::vector<std::uint32_t> e(nvars);
        for (std::size_t l = 0; l < nvars; ++l)
            e[l] = static_cast<std::uint32_t>(parse_uint(strip(exps[l]), "exponent"));
        f.add_term_index(MultiIndex(std::move(e)), static_cast<std::uint32_t>(c));
    }
    return f;
}

MVPoly hasse_derivative(const MVPoly& f, const MultiIndex& i) {
    if (i.arity() != f.nvars()) throw ArityMismatch("derivative order arity does not match");
    const Field& k = f.field();
    std::size_t m = f.nvars();
    MVPoly r(f.field_ptr(), m);
    if (f.is_zero()) return r;

    // per-variable tables of binom(e, i_l) mod p over the occurring exponents
    std::vector<std::uint32_t> maxe(m, 0);
    for (const auto& [j, c] : f.terms())
        for (std::size_t l = 0; l < m; ++l) maxe[l] = std::max(maxe[l], j[l]);
    std::uint32_t p = k.characteristic();
    std::vector<std::vector<std::uint32_t>> tab(m);
    for (std::size_t l = 0; l < m; ++l) {
        tab[l].resize(maxe[l] + 1);
        for (std::uint32_t e = 0; e <= maxe[l]; ++e) tab[l][e] = binomial_mod(e, i[l], p);
    }

    // j -> j - i is injective and preserves graded-lex order among the
    // surviving terms, so the output can be appended in order.
    for (const auto& [j, c] : f.terms()) {
        if (!leq(i, j)) continue;
        std::uint32_t b = 1;
        for (std::size_t l = 0; l < m && b != 0; ++l) b = b * tab[l][j[l]] % p;
        if (b == 0) continue;
        r.push_term_ordered(j - i, k.mul(c, b));
    }
    return r;
}

MVPoly vanishing_poly(const MultiIndex& j, std::shared_ptr<const Field> field) {
    std::size_t m = j.arity();
    const Field& k = *field;
    std::uint32_t q = k.order();
    MVPoly r = MVPoly::constant(field, m, k.one());
    for (std::size_t l = 0; l < m; ++l) {
        // (X_l^q - X_l)^{j_l} = sum_w binom(j_l, w) (-1)^{j_l - w} X_l^{j_l + (q-1)w}
        if (j[l] == 0) continue;
        MVPoly factor(field, m);
        for (std::uint32_t w = 0; w <= j[l]; ++w) {
            std::uint32_t b = binomial_mod(j[l], w, k.characteristic());
            if (b == 0) continue;
            if ((j[l] - w) % 2 == 1) b = k.neg(b);
            MultiIndex e = MultiIndex::zero(m);
            e.entries[l] = j[l] + (q - 1) * w;
            factor.add_term_index(e, b);
        }
        r = r * factor;
    }
    return r;
}

namespace {

// Exponent tuples packed into a uint64, `bits` bits per variable, first
// variable in the top field.  Substituting the first variable then becomes
// shift and mask work, and equal tails collapse with one sort per level.
struct PackedTerm {
    std::uint64_t key;
    std::uint32_t val;
};

void emit_zeros(std::vector<std::uint32_t>& out, std::uint32_t q, std::size_t vars_left) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < vars_left; ++i) count *= q;
    out.insert(out.end(), count, 0);
}

void eval_rec_packed(const Field& k, std::size_t vars_left, unsigned bits,
                     std::vector<PackedTerm>& terms, std::vector<std::uint32_t>& out) {
    std::uint32_t q = k.order();
    if (terms.empty()) {
        emit_zeros(out, q, vars_left);
        return;
    }
    if (vars_left == 0) {
        std::uint32_t acc = 0;
        for (const auto& t : terms) acc = k.add(acc, t.val);
        out.push_back(acc);
        return;
    }
    const unsigned shift = static_cast<unsigned>((vars_left - 1) * bits);
    const std::uint64_t mask = shift == 0 ? 0 : (~0ull >> (64 - shift));
    std::sort(terms.begin(), terms.end(), [mask](const PackedTerm& a, const PackedTerm& b) {
        return (a.key & mask) < (b.key & mask);
    });
    std::vector<PackedTerm> sub;
    sub.reserve(terms.size());
    for (std::uint32_t a = 0; a < q; ++a) {
        sub.clear();
        std::size_t i = 0;
        while (i < terms.size()) {
            std::uint64_t tail = terms[i].key & mask;
            std::uint32_t acc = 0;
            for (; i < terms.size() && (terms[i].key & mask) == tail; ++i)
                acc = k.add(acc, k.mul(terms[i].val,
                                       k.pow(a, static_cast<std::uint64_t>(terms[i].key >> shift))));
            if (acc != 0) sub.push_back({tail, acc});
        }
        eval_rec_packed(k, vars_left - 1, bits, sub, out);
    }
}

// Fallback for exponents too wide to pack: substitutes variable by variable
// on explicit tuples.
using FlatTerm = std::pair<std::vector<std::uint32_t>, std::uint32_t>;

void eval_rec_flat(const Field& k, std::size_t nvars, const std::vector<FlatTerm>& terms,
                   std::vector<std::uint32_t>& out) {
    std::uint32_t q = k.order();
    if (terms.empty()) {
        emit_zeros(out, q, nvars);
        return;
    }
    if (nvars == 0) {
        std::uint32_t acc = 0;
        for (const auto& [e, c] : terms) acc = k.add(acc, c);
        out.push_back(acc);
        return;
    }
    for (std::uint32_t a = 0; a < q; ++a) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> collapsed;
        for (const auto& [e, c] : terms) {
            std::uint32_t v = k.mul(c, k.pow(a, e[0]));
            if (v == 0) continue;
            std::vector<std::uint32_t> tail(e.begin() + 1, e.end());
            auto [it, inserted] = collapsed.emplace(std::move(tail), v);
            if (!inserted) {
                it->second = k.add(it->second, v);
                if (it->second == 0) collapsed.erase(it);
            }
        }
        std::vector<FlatTerm> sub(collapsed.begin(), collapsed.end());
        eval_rec_flat(k, nvars - 1, sub, out);
    }
}

}  // namespace

std::vector<std::uint32_t> evaluate_on_domain(const MVPoly& f) {
    const Field& k = f.field();
    std::size_t m = f.nvars();
    std::uint64_t n = 1;
    for (std::size_t l = 0; l < m; ++l) {
        n *= k.order();
        if (n > (1ull << 24)) throw UnsupportedSize("evaluation domain larger than 2^24 points");
    }
    std::vector<std::uint32_t> out;
    out.reserve(n);

    unsigned bits = static_cast<unsigned>(64 / m);
    std::uint64_t cap = bits >= 64 ? ~0ull : (1ull << bits) - 1;
    bool packable = true;
    for (const auto& [e, c] : f.terms())
        for (std::size_t l = 0; l < m && packable; ++l)
            if (e[l] >= cap) packable = false;

    if (packable) {
        std::vector<PackedTerm> terms;
        terms.reserve(f.term_count());
        for (const auto& [e, c] : f.terms()) {
            std::uint64_t key = 0;
            for (std::size_t l = 0; l < m; ++l) key = (key << bits) | e[l];
            terms.push_back({key, c});
        }
        eval_rec_packed(k, m, bits, terms, out);
    } else {
        std::vector<FlatTerm> terms;
        terms.reserve(f.term_count());
        for (const auto& [e, c] : f.terms()) terms.emplace_back(e.entries, c);
        eval_rec_flat(k, m, terms, out);
    }
    return out;
}

}  // namespace mrm
