#include "mrm/reed_muller.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mrm {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t f = n - k + i;
        std::uint64_t g = std::gcd(r, i);
        std::uint64_t ri = r / g, ii = i / g;
        std::uint64_t fg = std::gcd(f, ii);
        f /= fg;
        ii /= fg;
        // ii == 1 here since C(n-k+i-1, i-1)*(n-k+i) is divisible by i
        if (f != 0 && ri > ~0ull / f) throw UnsupportedSize("binomial coefficient overflows 64 bits");
        r = ri * f;
    }
    return r;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (base != 0 && r > ~0ull / base) throw UnsupportedSize("q^m overflows 64 bits");
        r *= base;
    }
    return r;
}

std::uint64_t rec_dimension(std::uint32_t q, std::size_t m, std::int64_t d,
                            std::map<std::int64_t, std::uint64_t>& memo) {
    if (d < 0) return 0;
    std::int64_t dmax = static_cast<std::int64_t>(m) * (q - 1);
    if (d >= dmax) return checked_pow(q, m);
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    std::uint64_t k = binomial(static_cast<std::uint64_t>(m) + d, m);
    for (std::int64_t j = 1; j <= d / q; ++j)
        k -= binomial(m - 1 + j, m - 1) * rec_dimension(q, m, d - j * q, memo);
    memo.emplace(d, k);
    return k;
}

}  // namespace

std::uint64_t rm_dimension_by_counting(std::uint32_t q, std::size_t m, std::int64_t d) {
    if (m < 1) throw InvalidParameter("m must be at least 1");
    if (d < 0) return 0;
    std::int64_t dmax = static_cast<std::int64_t>(m) * (q - 1);
    std::int64_t dd = std::min(d, dmax);
    if (dd > 10'000'000) throw UnsupportedSize("degree range too large to count");
    // coefficient counts of (1 + x + ... + x^{q-1})^m up to degree dd,
    // one sliding-window convolution per variable
    std::vector<std::uint64_t> dp(dd + 1, 0);
    dp[0] = 1;
    for (std::size_t v = 0; v < m; ++v) {
        std::vector<std::uint64_t> pref(dd + 2, 0);
        for (std::int64_t w = 0; w <= dd; ++w) pref[w + 1] = pref[w] + dp[w];
        for (std::int64_t w = dd; w >= 0; --w) {
            std::int64_t lo = std::max<std::int64_t>(0, w - (q - 1));
            dp[w] = pref[w + 1] - pref[lo];
        }
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : dp) total += c;
    return total;
}

std::uint64_t rm_dimension_by_recurrence(std::uint32_t q, std::size_t m, std::int64_t d) {
    if (m < 1) throw InvalidParameter("m must be at least 1");
    std::map<std::int64_t, std::uint64_t> memo;
    return rec_dimension(q, m, d, memo);
}

std::uint64_t rm_dimension(std::uint32_t q, std::size_t m, std::int64_t d) {
    std::uint64_t a = rm_dimension_by_counting(q, m, d);
    std::uint64_t b = rm_dimension_by_recurrence(q, m, d);
    if (a != b)
        throw Error("dimension routes disagree for q=" + std::to_string(q) + " m=" +
                    std::to_string(m) + " d=" + std::to_string(d));
    return a;
}

namespace {

// Gauss-Jordan inverse over GF(q) on element indices; returns false when
// singular.  a is destroyed.
bool invert_matrix(const Field& f, std::vector<std::uint32_t>& a, std::size_t k,
                   std::vector<std::uint32_t>& out) {
    out.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) out[i * k + i] = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv * k + col] == 0) ++piv;
        if (piv == k) return false;
        if (piv != col) {
            for (std::size_t j = 0; j < k; ++j) {
                std::swap(a[piv * k + j], a[col * k + j]);
                std::swap(out[piv * k + j], out[col * k + j]);
            }
        }
        std::uint32_t s = f.inv(a[col * k + col]);
        if (s != 1) {
            for (std::size_t j = 0; j < k; ++j) {
                a[col * k + j] = f.mul(a[col * k + j], s);
                out[col * k + j] = f.mul(out[col * k + j], s);
            }
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            std::uint32_t c = a[r * k + col];
            if (c == 0) continue;
            std::uint32_t nc = f.neg(c);
            for (std::size_t j = 0; j < k; ++j) {
                a[r * k + j] = f.add(a[r * k + j], f.mul(nc, a[col * k + j]));
                out[r * k + j] = f.add(out[r * k + j], f.mul(nc, out[col * k + j]));
            }
        }
    }
    return true;
}

}  // namespace

RMCode::RMCode(std::shared_ptr<const Field> field, std::size_t nvars, std::int64_t degree_bound)
    : field_(std::move(field)), m_(nvars), d_(degree_bound) {
    if (m_ < 1) throw InvalidParameter("m must be at least 1");
    if (d_ < 0) throw DegreeOutOfRange("degree bound must be nonnegative");
    const Field& f = *field_;
    std::uint32_t q = f.order();

    std::uint64_t n = checked_pow(q, m_);
    if (n > (1ull << 24)) throw UnsupportedSize("code length exceeds 2^24");
    n_ = static_cast<std::size_t>(n);

    exps_ = multi_indices_up_to_weight(m_, d_, q - 1);
    std::size_t k = exps_.size();
    if (k > 4096) throw UnsupportedSize("code dimension exceeds 4096");

    infoset_points_.reserve(k);
    infoset_pos_.reserve(k);
    for (const MultiIndex& t : exps_) {
        Point pt;
        pt.reserve(m_);
        std::size_t pos = 0;
        for (std::size_t l = 0; l < m_; ++l) {
            pt.push_back(f.element(t[l]));
            pos = pos * q + t[l];
        }
        infoset_points_.push_back(std::move(pt));
        infoset_pos_.push_back(pos);
    }

    // monomial-evaluation matrix on the candidate information set
    std::vector<std::uint32_t> a(k * k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            std::uint32_t v = 1;
            for (std::size_t l = 0; l < m_; ++l) v = f.mul(v, f.pow(exps_[r][l], exps_[c][l]));
            a[r * k + c] = v;
        }
    std::vector<std::uint32_t> inverse;
    if (!invert_matrix(f, a, k, inverse))
        throw InvalidInformationSet("evaluation matrix on the information set is singular");
    inv_.assign(inverse.begin(), inverse.end());  // indices fit 16 bits (q <= 2^16)
}

Point RMCode::point(std::size_t position) const {
    if (position >= n_) throw ShapeMismatch("point position out of range");
    Point pt(m_, field_->zero());
    std::uint32_t q = field_->order();
    for (std::size_t l = m_; l-- > 0;) {
        pt[l] = field_->element(static_cast<std::uint32_t>(position % q));
        position /= q;
    }
    return pt;
}

std::vector<std::uint32_t> RMCode::encode_indices(const MVPoly& f) const {
    if (!field_->same_field(f.field())) throw FieldMismatch("polynomial over a different field");
    if (f.nvars() != m_) throw ArityMismatch("polynomial arity does not match code");
    std::uint32_t q = field_->order();
    for (const auto& [e, c] : f.terms()) {
        if (static_cast<std::int64_t>(e.weight()) > d_)
            throw DegreeTooLarge("polynomial degree exceeds the code's bound");
        for (std::size_t l = 0; l < m_; ++l)
            if (e[l] > q - 1) throw DegreeTooLarge("exponent outside the reduced monomial set");
    }
    return evaluate_on_domain(f);
}

std::vector<FieldElement> RMCode::encode(const MVPoly& f) const {
    std::vector<std::uint32_t> idx = encode_indices(f);
    std::vector<FieldElement> out;
    out.reserve(idx.size());
    for (std::uint32_t v : idx) out.push_back(field_->element(v));
    return out;
}

MVPoly RMCode::interpolate_indices(const std::vector<std::uint32_t>& values) const {
    std::size_t k = exps_.size();
    if (values.size() != k) throw LengthMismatch("expected one value per information-set point");
    const Field& f = *field_;
    MVPoly out(field_, m_);
    for (std::size_t r = 0; r < k; ++r) {
        std::uint32_t acc = 0;
        const std::uint16_t* row = inv_.data() + r * k;
        for (std::size_t c = 0; c < k; ++c)
            if (values[c]) acc = f.add(acc, f.mul(row[c], values[c]));
        out.push_term_ordered(exps_[r], acc);
    }
    return out;
}

MVPoly RMCode::interpolate(const std::vector<FieldElement>& values) const {
    std::vector<std::uint32_t> idx;
    idx.reserve(values.size());
    for (const auto& v : values) {
        if (!v.valid() || !field_->same_field(v.field()))
            throw FieldMismatch("value from a different field");
        idx.push_back(v.index());
    }
    return interpolate_indices(idx);
}

std::shared_ptr<const RMCode> RMCodePool::get(std::shared_ptr<const Field> field,
                                              std::size_t nvars, std::int64_t degree_bound) {
    auto key = std::make_tuple(field->characteristic(), field->extension_degree(), nvars,
                               degree_bound);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    // built outside the lock; a racing duplicate build is wasted work, not
    // an error, and the first insert wins
    auto code = std::make_shared<const RMCode>(std::move(field), nvars, degree_bound);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(key, code).first->second;
}

}  // namespace mrm
