#include "fmc/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "fmc/errors.hpp"
#include "fmc/poly.hpp"

namespace fmc {

namespace {

bool is_prime_small(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

constexpr uint32_t kNoSolution = 0xffffffffu;
// Fields up to this size get a quadratic-solution lookup table; larger odd-char
// fields fall back to Tonelli-Shanks per query.
constexpr uint128 kTableLimit = 1u << 22;

} // namespace

int kmax() {
    static int cached = [] {
        int cap = kDegreeCap;
        if (const char* env = std::getenv("FMC_KMAX")) {
            int v = std::atoi(env);
            if (v >= 1 && v < cap) cap = v;
        }
        return cap;
    }();
    return cached;
}

// ---------------------------------------------------------------------------
// FieldElement

bool FieldElement::is_zero() const {
    for (int i = 0; i < ctx->k(); ++i)
        if (c[i] != 0) return false;
    return true;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (ctx != o.ctx) fail(Errc::ContextMismatch, "comparing elements of different fields");
    for (int i = 0; i < ctx->k(); ++i)
        if (c[i] != o.c[i]) return false;
    return true;
}

bool FieldElement::operator<(const FieldElement& o) const {
    if (ctx != o.ctx) fail(Errc::ContextMismatch, "ordering elements of different fields");
    for (int i = 0; i < ctx->k(); ++i)
        if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return ctx->add(*this, o); }
FieldElement FieldElement::operator-(const FieldElement& o) const { return ctx->sub(*this, o); }
FieldElement FieldElement::operator-() const { return ctx->neg(*this); }
FieldElement FieldElement::operator*(const FieldElement& o) const { return ctx->mul(*this, o); }

// ---------------------------------------------------------------------------
// FieldContext

FieldContext::FieldContext(int64_t p, int k, std::vector<int64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < k_; ++i) q_ *= uint128(p_);
    // Precompute x^(k+i) mod f, i in [0, k-1): reduction of overflow degrees.
    red_rows_.assign(size_t(k_ - 1) * k_, 0);
    if (k_ > 1) {
        // row 0 = x^k mod f = -(f - x^k)
        std::vector<int64_t> cur(k_);
        for (int i = 0; i < k_; ++i) cur[i] = (p_ - modulus_[i] % p_) % p_;
        for (int i = 0; i < k_; ++i) red_rows_[i] = uint8_t(cur[i]);
        for (int row = 1; row < k_ - 1; ++row) {
            // multiply cur by x, reduce
            int64_t carry = cur[k_ - 1];
            for (int i = k_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (carry) {
                for (int i = 0; i < k_; ++i)
                    cur[i] = (cur[i] + carry * (p_ - modulus_[i] % p_)) % p_;
            }
            for (int i = 0; i < k_; ++i) red_rows_[size_t(row) * k_ + i] = uint8_t(cur[i]);
        }
    }
}

FieldElement FieldContext::zero() const {
    FieldElement e;
    e.ctx = this;
    return e;
}

FieldElement FieldContext::one() const { return from_residue(1); }

FieldElement FieldContext::from_residue(int64_t a) const {
    FieldElement e;
    e.ctx = this;
    a %= p_;
    if (a < 0) a += p_;
    e.c[0] = uint8_t(a);
    return e;
}

FieldElement FieldContext::from_index(uint128 i) const {
    FieldElement e;
    e.ctx = this;
    // c0 is the most significant base-p digit so that index order matches the
    // lexicographic order on (c0, ..., c_{k-1}).
    for (int d = k_ - 1; d >= 0; --d) {
        e.c[d] = uint8_t(i % uint128(p_));
        i /= uint128(p_);
    }
    return e;
}

uint128 FieldContext::index_of(const FieldElement& x) const {
    uint128 i = 0;
    for (int d = 0; d < k_; ++d) i = i * uint128(p_) + x.c[d];
    return i;
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
    if (a.ctx != this || b.ctx != this) fail(Errc::ContextMismatch, "add across fields");
    FieldElement r;
    r.ctx = this;
    for (int i = 0; i < k_; ++i) {
        int v = a.c[i] + b.c[i];
        if (v >= p_) v -= int(p_);
        r.c[i] = uint8_t(v);
    }
    return r;
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const {
    if (a.ctx != this || b.ctx != this) fail(Errc::ContextMismatch, "sub across fields");
    FieldElement r;
    r.ctx = this;
    for (int i = 0; i < k_; ++i) {
        int v = a.c[i] - b.c[i];
        if (v < 0) v += int(p_);
        r.c[i] = uint8_t(v);
    }
    return r;
}

FieldElement FieldContext::neg(const FieldElement& a) const {
    if (a.ctx != this) fail(Errc::ContextMismatch, "neg across fields");
    FieldElement r;
    r.ctx = this;
    for (int i = 0; i < k_; ++i) r.c[i] = uint8_t(a.c[i] ? p_ - a.c[i] : 0);
    return r;
}

void FieldContext::raw_mul(const uint8_t* a, const uint8_t* b, uint8_t* out) const {
    int32_t prod[2 * kDegreeCap - 1] = {0};
    for (int i = 0; i < k_; ++i) {
        if (!a[i]) continue;
        int32_t ai = a[i];
        for (int j = 0; j < k_; ++j) prod[i + j] += ai * b[j];
    }
    int64_t acc[kDegreeCap];
    for (int i = 0; i < k_; ++i) acc[i] = prod[i];
    for (int d = k_; d <= 2 * k_ - 2; ++d) {
        int64_t c = prod[d] % p_;
        if (c) {
            const uint8_t* row = &red_rows_[size_t(d - k_) * k_];
            for (int i = 0; i < k_; ++i) acc[i] += c * row[i];
        }
    }
    for (int i = 0; i < k_; ++i) out[i] = uint8_t(acc[i] % p_);
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
    if (a.ctx != this || b.ctx != this) fail(Errc::ContextMismatch, "mul across fields");
    FieldElement r;
    r.ctx = this;
    raw_mul(a.c.data(), b.c.data(), r.c.data());
    return r;
}

FieldElement FieldContext::pow(const FieldElement& a, uint128 n) const {
    if (a.ctx != this) fail(Errc::ContextMismatch, "pow across fields");
    FieldElement base = a;
    FieldElement r = one();
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

FieldElement FieldContext::inv(const FieldElement& a) const {
    if (a.ctx != this) fail(Errc::ContextMismatch, "inv across fields");
    if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    // Extended Euclid in F_p[x] on (a, f).
    std::vector<int64_t> r0(modulus_.begin(), modulus_.end());
    std::vector<int64_t> r1(k_ + 1, 0);
    for (int i = 0; i < k_; ++i) r1[i] = a.c[i];
    std::vector<int64_t> t0(k_ + 1, 0), t1(k_ + 1, 0);
    t1[0] = 1;
    auto deg = [&](const std::vector<int64_t>& v) {
        for (int d = int(v.size()) - 1; d >= 0; --d)
            if (v[d] % p_ != 0) return d;
        return -1;
    };
    auto inv_mod_p = [&](int64_t x) {
        int64_t r = 1, b = x % p_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    };
    while (true) {
        int d1 = deg(r1);
        if (d1 < 0) fail(Errc::Internal, "gcd(a, modulus) != 1 in field inverse");
        if (d1 == 0) break;
        int d0 = deg(r0);
        while (d0 >= d1) {
            int64_t c = (r0[d0] % p_) * inv_mod_p(r1[d1]) % p_;
            int sh = d0 - d1;
            for (int i = 0; i <= d1; ++i) r0[i + sh] = ((r0[i + sh] - c * r1[i]) % p_ + p_) % p_;
            for (int i = 0; i <= deg(t1); ++i)
                if (i + sh <= k_) t0[i + sh] = ((t0[i + sh] - c * t1[i]) % p_ + p_) % p_;
            d0 = deg(r0);
        }
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
    int64_t lead = inv_mod_p(r1[0] % p_);
    FieldElement out;
    out.ctx = this;
    for (int i = 0; i < k_; ++i) out.c[i] = uint8_t((t1[i] % p_) * lead % p_);
    return out;
}

std::vector<FieldElement> FieldContext::roots_of_unity(uint64_t n) const {
    // x^n = 1 has exactly gcd(n, q-1) solutions, all in the cyclic group F_q*.
    uint128 g = gcd128(uint128(n), q_ - 1);
    std::vector<FieldElement> out;
    if (q_ <= kTableLimit) {
        for (uint128 i = 1; i < q_; ++i) {
            FieldElement x = from_index(i);
            if (pow(x, g) == one()) out.push_back(x);
        }
    } else {
        // Find a generator of the cyclic group F_q* and take powers.
        std::vector<uint128> fac = factorize(q_ - 1);
        std::vector<uint128> distinct;
        for (uint128 f : fac)
            if (distinct.empty() || distinct.back() != f) distinct.push_back(f);
        FieldElement gen = zero();
        for (uint128 i = 2; i < q_; ++i) {
            FieldElement cand = from_index(i);
            bool ok = !cand.is_zero();
            for (uint128 f : distinct)
                if (ok && pow(cand, (q_ - 1) / f) == one()) ok = false;
            if (ok) {
                gen = cand;
                break;
            }
        }
        FieldElement w = pow(gen, (q_ - 1) / g);
        FieldElement cur = one();
        for (uint128 i = 0; i < g; ++i) {
            out.push_back(cur);
            cur = mul(cur, w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void FieldContext::build_table() const {
    // For char 2 the table maps y^2 + y; for odd char it maps y^2.
    sqrt_table_.assign(size_t(q_), kNoSolution);
    for (uint128 i = 0; i < q_; ++i) {
        FieldElement y = from_index(i);
        FieldElement key = (p_ == 2) ? add(mul(y, y), y) : mul(y, y);
        size_t slot = size_t(index_of(key));
        if (sqrt_table_[slot] == kNoSolution) sqrt_table_[slot] = uint32_t(i);
    }
}

std::vector<FieldElement> FieldContext::sqrt(const FieldElement& a) const {
    if (a.ctx != this) fail(Errc::ContextMismatch, "sqrt across fields");
    std::vector<FieldElement> out;
    if (p_ == 2) {
        // Squaring is a bijection in char 2: unique root a^(q/2).
        out.push_back(pow(a, q_ >> 1));
        return out;
    }
    if (a.is_zero()) {
        out.push_back(zero());
        return out;
    }
    if (q_ <= kTableLimit) {
        std::call_once(table_once_, [this] { build_table(); });
        uint32_t hit = sqrt_table_[size_t(index_of(a))];
        if (hit == kNoSolution) return out;
        FieldElement y = from_index(hit);
        out.push_back(y);
        FieldElement z = neg(y);
        if (z != y) out.push_back(z);
        std::sort(out.begin(), out.end());
        return out;
    }
    // Euler criterion, then Tonelli-Shanks.
    if (pow(a, (q_ - 1) / 2) != one()) return out;
    uint128 odd = q_ - 1;
    int s = 0;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++s;
    }
    // First quadratic non-residue in canonical order.
    FieldElement nr = zero();
    for (uint128 i = 1; i < q_; ++i) {
        FieldElement cand = from_index(i);
        if (pow(cand, (q_ - 1) / 2) != one() && !cand.is_zero()) {
            nr = cand;
            break;
        }
    }
    FieldElement m_elt = pow(nr, odd);
    FieldElement x = pow(a, (odd + 1) / 2);
    FieldElement b = pow(a, odd);
    int r = s;
    while (!(b == one())) {
        int m = 0;
        FieldElement t = b;
        while (!(t == one())) {
            t = mul(t, t);
            ++m;
        }
        FieldElement g2 = m_elt;
        for (int i = 0; i < r - m - 1; ++i) g2 = mul(g2, g2);
        x = mul(x, g2);
        m_elt = mul(g2, g2);
        b = mul(b, m_elt);
        r = m;
    }
    out.push_back(x);
    FieldElement z = neg(x);
    if (z != x) out.push_back(z);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FieldElement> FieldContext::solve_quadratic(const FieldElement& b,
                                                        const FieldElement& c) const {
    if (b.ctx != this || c.ctx != this) fail(Errc::ContextMismatch, "solve_quadratic");
    std::vector<FieldElement> out;
    if (p_ != 2) {
        // y^2 + by = c  <=>  (2y + b)^2 = b^2 + 4c
        FieldElement four = from_residue(4);
        FieldElement disc = add(mul(b, b), mul(four, c));
        FieldElement inv2 = inv(from_residue(2));
        for (const FieldElement& w : sqrt(disc)) out.push_back(mul(sub(w, b), inv2));
    } else if (b.is_zero()) {
        out = sqrt(c);
    } else {
        // y = b z turns y^2 + by = c into z^2 + z = c/b^2; char-2 fields here
        // have q <= 2^12, solved by the cached table.
        std::call_once(table_once_, [this] { build_table(); });
        FieldElement bi = inv(b);
        FieldElement d = mul(mul(c, bi), bi);
        uint32_t hit = sqrt_table_[size_t(index_of(d))];
        if (hit != kNoSolution) {
            FieldElement z = from_index(hit);
            out.push_back(mul(b, z));
            out.push_back(mul(b, add(z, one())));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string FieldContext::to_string(const FieldElement& x) const {
    std::ostringstream os;
    if (k_ == 1) {
        os << int(x.c[0]);
        return os.str();
    }
    os << "[";
    for (int i = 0; i < k_; ++i) {
        if (i) os << ",";
        os << int(x.c[i]);
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Registry

namespace {

std::mutex g_registry_mutex;
std::map<std::pair<int64_t, int>, std::unique_ptr<FieldContext>>& registry() {
    static std::map<std::pair<int64_t, int>, std::unique_ptr<FieldContext>> r;
    return r;
}

/// Lexicographically smallest monic irreducible of degree k over F_p.
std::vector<int64_t> smallest_irreducible(int64_t p, int k) {
    const FieldContext& fp = field_make(p, 1);
    uint128 total = 1;
    for (int i = 0; i < k; ++i) total *= uint128(p);
    for (uint128 n = 0; n < total; ++n) {
        // Digits of n in base p with c0 as the most significant digit, so
        // ascending n scans (c0, ..., c_{k-1}) in lexicographic order.
        std::vector<int64_t> mod(k + 1, 0);
        mod[k] = 1;
        uint128 v = n;
        for (int d = k - 1; d >= 0; --d) {
            mod[d] = int64_t(v % uint128(p));
            v /= uint128(p);
        }
        std::vector<FieldElement> coeffs;
        coeffs.reserve(k + 1);
        for (int i = 0; i <= k; ++i) coeffs.push_back(fp.from_residue(mod[i]));
        Poly f = poly_make(fp, coeffs);
        if (poly_is_irreducible(f)) return mod;
    }
    fail(Errc::Internal, "no irreducible polynomial found");
}

} // namespace

const FieldContext& field_make(int64_t p, int k) {
    if (!is_prime_small(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
    if (p > kPrimeCap) fail(Errc::NotPrime, "p exceeds supported bound " + std::to_string(kPrimeCap));
    if (k < 1 || k > kmax()) fail(Errc::DegreeTooLarge, "k = " + std::to_string(k));
    {
        std::lock_guard<std::mutex> lock(g_registry_mutex);
        auto it = registry().find({p, k});
        if (it != registry().end()) return *it->second;
    }
    std::vector<int64_t> mod;
    if (k == 1) {
        mod = {0, 1}; // x - 0 placeholder; elements are single residues mod p
    } else {
        mod = smallest_irreducible(p, k);
    }
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto it = registry().find({p, k});
    if (it != registry().end()) return *it->second;
    auto ctx = std::unique_ptr<FieldContext>(new FieldContext(p, k, std::move(mod)));
    const FieldContext& ref = *ctx;
    registry().emplace(std::make_pair(p, k), std::move(ctx));
    return ref;
}

// ---------------------------------------------------------------------------
// Embeddings

FieldElement Embedding::operator()(const FieldElement& x) const {
    if (x.ctx != src_) fail(Errc::ContextMismatch, "embedding source mismatch");
    FieldElement out = dst_->zero();
    for (int i = 0; i < src_->k(); ++i) {
        if (x.c[i]) out = dst_->add(out, dst_->mul(dst_->from_residue(x.c[i]), gen_powers_[i]));
    }
    return out;
}

namespace {
std::mutex g_embed_mutex;
std::map<std::pair<const FieldContext*, const FieldContext*>, std::unique_ptr<Embedding>>&
embed_cache() {
    static std::map<std::pair<const FieldContext*, const FieldContext*>, std::unique_ptr<Embedding>> m;
    return m;
}
} // namespace

const Embedding& embedding(const FieldContext& src, const FieldContext& dst) {
    if (src.p() != dst.p() || dst.k() % src.k() != 0)
        fail(Errc::DegreeTooLarge, "no embedding F_{p^a} -> F_{p^c} unless a | c");
    {
        std::lock_guard<std::mutex> lock(g_embed_mutex);
        auto it = embed_cache().find({&src, &dst});
        if (it != embed_cache().end()) return *it->second;
    }
    // The source modulus splits completely in dst; take its least root.
    std::vector<FieldElement> coeffs;
    for (int64_t c : src.modulus()) coeffs.push_back(dst.from_residue(c));
    Poly f = poly_make(dst, coeffs);
    std::vector<FieldElement> roots = poly_roots_auto(f);
    if (roots.empty()) fail(Errc::Internal, "modulus has no root in extension");
    auto emb = std::unique_ptr<Embedding>(new Embedding());
    emb->src_ = &src;
    emb->dst_ = &dst;
    emb->gen_powers_.resize(src.k());
    emb->gen_powers_[0] = dst.one();
    for (int i = 1; i < src.k(); ++i)
        emb->gen_powers_[i] = dst.mul(emb->gen_powers_[i - 1], roots.front());
    std::lock_guard<std::mutex> lock(g_embed_mutex);
    auto it = embed_cache().find({&src, &dst});
    if (it != embed_cache().end()) return *it->second;
    const Embedding& ref = *emb;
    embed_cache().emplace(std::make_pair(&src, &dst), std::move(emb));
    return ref;
}

FieldElement lift(const FieldElement& x, const FieldContext& ctx) {
    if (x.ctx == &ctx) return x;
    return embedding(*x.ctx, ctx)(x);
}

} // namespace fmc
