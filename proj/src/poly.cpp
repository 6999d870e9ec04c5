#include "fmc/poly.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fmc/errors.hpp"

namespace fmc {

namespace {
constexpr uint128 kScanLimit = 1u << 22;

void trim(Poly& f) {
    while (!f.coeffs.empty() && f.coeffs.back().is_zero()) f.coeffs.pop_back();
}
} // namespace

Poly poly_make(const FieldContext& ctx, std::vector<FieldElement> coeffs) {
    for (const FieldElement& c : coeffs)
        if (c.ctx != &ctx) fail(Errc::ContextMismatch, "polynomial coefficient field");
    Poly f{&ctx, std::move(coeffs)};
    trim(f);
    return f;
}

Poly poly_from_residues(const FieldContext& ctx, const std::vector<int64_t>& coeffs) {
    std::vector<FieldElement> out;
    out.reserve(coeffs.size());
    for (int64_t c : coeffs) out.push_back(ctx.from_residue(c));
    return poly_make(ctx, std::move(out));
}

FieldElement poly_eval(const Poly& f, const FieldElement& x) {
    const FieldContext& F = *f.ctx;
    FieldElement acc = F.zero();
    for (int i = f.degree(); i >= 0; --i) acc = F.add(F.mul(acc, x), f.coeffs[i]);
    return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
    const FieldContext& F = *a.ctx;
    std::vector<FieldElement> out(std::max(a.coeffs.size(), b.coeffs.size()), F.zero());
    for (size_t i = 0; i < a.coeffs.size(); ++i) out[i] = a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) out[i] = F.add(out[i], b.coeffs[i]);
    return poly_make(F, std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    const FieldContext& F = *a.ctx;
    if (a.is_zero() || b.is_zero()) return Poly{&F, {}};
    std::vector<FieldElement> out(a.coeffs.size() + b.coeffs.size() - 1, F.zero());
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
    return poly_make(F, std::move(out));
}

Poly poly_mod(const Poly& a, const Poly& m) {
    const FieldContext& F = *a.ctx;
    if (m.is_zero()) fail(Errc::DivisionByZero, "poly_mod by zero");
    std::vector<FieldElement> r = a.coeffs;
    FieldElement lead_inv = F.inv(m.coeffs.back());
    int dm = m.degree();
    for (int d = int(r.size()) - 1; d >= dm; --d) {
        if (r[d].is_zero()) continue;
        FieldElement c = F.mul(r[d], lead_inv);
        for (int i = 0; i <= dm; ++i) r[d - dm + i] = F.sub(r[d - dm + i], F.mul(c, m.coeffs[i]));
    }
    r.resize(std::min<size_t>(r.size(), size_t(dm)));
    return poly_make(F, std::move(r));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    const FieldContext& F = *a.ctx;
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(x, y);
        x = y;
        y = r;
    }
    if (!x.is_zero()) {
        FieldElement li = F.inv(x.coeffs.back());
        for (FieldElement& c : x.coeffs) c = F.mul(c, li);
    }
    return x;
}

Poly poly_powmod(const Poly& base, uint128 e, const Poly& m) {
    const FieldContext& F = *base.ctx;
    Poly r = poly_from_residues(F, {1});
    Poly b = poly_mod(base, m);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, b), m);
        b = poly_mod(poly_mul(b, b), m);
        e >>= 1;
    }
    return r;
}

std::vector<FieldElement> poly_roots_serial(const Poly& f) {
    if (f.is_zero()) fail(Errc::Internal, "roots of the zero polynomial");
    const FieldContext& F = *f.ctx;
    std::vector<FieldElement> out;
    for (uint128 i = 0; i < F.q(); ++i) {
        FieldElement x = F.from_index(i);
        if (poly_eval(f, x).is_zero()) out.push_back(x);
    }
    return out; // index order == canonical order
}

std::vector<FieldElement> poly_roots(const Poly& f) {
    if (f.is_zero()) fail(Errc::Internal, "roots of the zero polynomial");
    const FieldContext& F = *f.ctx;
#ifdef _OPENMP
    if (F.q() >= (1u << 14) && F.q() <= uint128(INT64_MAX)) {
        int64_t q = int64_t(F.q());
        std::vector<std::vector<FieldElement>> chunks;
        int nt = 0;
#pragma omp parallel
        {
#pragma omp single
            {
                nt = omp_get_num_threads();
                chunks.resize(size_t(nt));
            }
            int tid = omp_get_thread_num();
#pragma omp for schedule(static)
            for (int64_t i = 0; i < q; ++i) {
                FieldElement x = F.from_index(uint128(i));
                if (poly_eval(f, x).is_zero()) chunks[size_t(tid)].push_back(x);
            }
        }
        std::vector<FieldElement> out;
        for (auto& ch : chunks) out.insert(out.end(), ch.begin(), ch.end());
        std::sort(out.begin(), out.end());
        return out;
    }
#endif
    return poly_roots_serial(f);
}

namespace {

/// Splits a squarefree product of linears into roots (char-agnostic).
void split_linear_product(const Poly& f, Rng& rng, std::vector<FieldElement>& out) {
    const FieldContext& F = *f.ctx;
    if (f.degree() == 0) return;
    if (f.degree() == 1) {
        // monic x + c -> root -c; normalize first
        FieldElement li = F.inv(f.coeffs[1]);
        out.push_back(F.neg(F.mul(f.coeffs[0], li)));
        return;
    }
    uint128 q = F.q();
    while (true) {
        // random shift delta; gcd((x+delta)^((q-1)/2) - 1, f) splits in odd char.
        FieldElement delta = F.from_index(rng.below128(q));
        Poly shifted = poly_make(F, {delta, F.one()});
        Poly g;
        if (F.p() == 2) {
            // Trace map: x + x^2 + x^4 + ... + x^(q/2) takes values in F_2.
            Poly acc = poly_mod(shifted, f);
            Poly tr = acc;
            for (int i = 1; i < F.k(); ++i) {
                acc = poly_mod(poly_mul(acc, acc), f);
                tr = poly_add(tr, acc);
            }
            g = poly_gcd(tr, f);
        } else {
            Poly h = poly_powmod(shifted, (q - 1) / 2, f);
            h = poly_add(h, poly_from_residues(F, {int64_t(F.p()) - 1})); // h - 1
            g = poly_gcd(h, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            std::vector<FieldElement> quot(size_t(f.degree() - g.degree() + 1), F.zero());
            std::vector<FieldElement> r = f.coeffs;
            FieldElement li = F.inv(g.coeffs.back());
            for (int d = int(r.size()) - 1; d >= g.degree(); --d) {
                if (r[d].is_zero()) continue;
                FieldElement c = F.mul(r[d], li);
                quot[size_t(d - g.degree())] = c;
                for (int i = 0; i <= g.degree(); ++i)
                    r[d - g.degree() + i] = F.sub(r[d - g.degree() + i], F.mul(c, g.coeffs[i]));
            }
            Poly q2 = poly_make(F, std::move(quot));
            split_linear_product(g, rng, out);
            split_linear_product(q2, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<FieldElement> poly_roots_cz(const Poly& f) {
    if (f.is_zero()) fail(Errc::Internal, "roots of the zero polynomial");
    const FieldContext& F = *f.ctx;
    // Keep only roots in F_q: gcd(f, x^q - x).
    Poly x = poly_from_residues(F, {0, 1});
    Poly xq = poly_powmod(x, F.q(), f);
    Poly diff = poly_add(xq, poly_make(F, {F.zero(), F.neg(F.one())}));
    Poly g = poly_gcd(diff, f);
    std::vector<FieldElement> out;
    if (g.degree() >= 1) {
        uint64_t seed = 0x3c6ef372u ^ uint64_t(F.q()) ^ (uint64_t(f.degree()) << 32);
        Rng rng(seed);
        split_linear_product(g, rng, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FieldElement> poly_roots_auto(const Poly& f) {
    if (f.ctx->q() <= kScanLimit) return poly_roots(f);
    return poly_roots_cz(f);
}

bool poly_is_irreducible(const Poly& f) {
    const FieldContext& F = *f.ctx;
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    // Rabin: x^(q^n) == x mod f, and gcd(x^(q^(n/r)) - x, f) = 1 for prime r | n.
    Poly x = poly_from_residues(F, {0, 1});
    auto frob_iter = [&](int e) {
        // x^(q^e) mod f by iterating x -> x^q
        Poly acc = poly_mod(x, f);
        for (int i = 0; i < e; ++i) acc = poly_powmod(acc, F.q(), f);
        return acc;
    };
    Poly xqn = frob_iter(n);
    if (!(poly_add(xqn, poly_make(F, {F.zero(), F.neg(F.one())})).is_zero())) return false;
    int m = n;
    std::vector<int> primes;
    for (int d = 2; d * d <= m; ++d)
        while (m % d == 0) {
            if (primes.empty() || primes.back() != d) primes.push_back(d);
            m /= d;
        }
    if (m > 1) primes.push_back(m);
    for (int r : primes) {
        Poly xe = frob_iter(n / r);
        Poly diff = poly_add(xe, poly_make(F, {F.zero(), F.neg(F.one())}));
        Poly g = poly_gcd(diff, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

} // namespace fmc
