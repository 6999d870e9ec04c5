#ifndef FMC_FIELD_HPP
#define FMC_FIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fmc/intmath.hpp"

namespace fmc {

/// Hard cap on extension degree. FMC_KMAX in the environment may lower it.
constexpr int kDegreeCap = 12;
constexpr int64_t kPrimeCap = 97;

/// Effective degree cap for this process (min of kDegreeCap and FMC_KMAX).
int kmax();

class FieldContext;
struct FieldElement;

/// F_{p^k} as F_p[x]/(f) for the lexicographically smallest monic irreducible
/// f of degree k. Contexts are interned: field_make(p, k) always returns the
/// same object, so element contexts can be compared by pointer.
///
/// All state is immutable after construction except lazily built lookup
/// tables, which are guarded for concurrent readers.
class FieldContext {
  public:
    int64_t p() const { return p_; }
    int k() const { return k_; }
    uint128 q() const { return q_; }
    /// Modulus coefficients, constant term first, length k+1, monic.
    const std::vector<int64_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Image of the prime-field residue a (curve coefficients live in F_p).
    FieldElement from_residue(int64_t a) const;
    /// Element with canonical index i (c0 is the most significant base-p digit).
    FieldElement from_index(uint128 i) const;
    uint128 index_of(const FieldElement& x) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, uint128 n) const;

    /// All solutions of x^n = 1, canonically ordered. |result| = gcd(n, q-1).
    std::vector<FieldElement> roots_of_unity(uint64_t n) const;

    /// Solutions y of y^2 = a (0, 1 or 2 of them), canonically ordered.
    /// Uses a cached table for small q, Tonelli-Shanks otherwise.
    std::vector<FieldElement> sqrt(const FieldElement& a) const;

    /// Solutions of y^2 + b y = c, canonically ordered. Covers every
    /// characteristic (char 2 reduces to an Artin-Schreier equation).
    std::vector<FieldElement> solve_quadratic(const FieldElement& b, const FieldElement& c) const;

    std::string to_string(const FieldElement& x) const;

  private:
    friend const FieldContext& field_make(int64_t, int);
    friend struct FieldElement;
    FieldContext(int64_t p, int k, std::vector<int64_t> modulus);

    void raw_mul(const uint8_t* a, const uint8_t* b, uint8_t* out) const;

    int64_t p_;
    int k_;
    uint128 q_;
    std::vector<int64_t> modulus_;
    // x^(k+i) mod f for i in [0, k-1), row-major k entries each; reduction helper.
    std::vector<uint8_t> red_rows_;

    // q2_table_[index(a)] = index of the canonical solution of y^2 + y = a (char 2),
    // or of y^2 = a (odd char, small q). uint32 sentinel = no solution.
    mutable std::once_flag table_once_;
    mutable std::vector<uint32_t> sqrt_table_;

    void build_table() const;
};

/// Element of one FieldContext. Coefficients little-endian, residues in [0, p).
struct FieldElement {
    const FieldContext* ctx = nullptr;
    std::array<uint8_t, kDegreeCap> c{};

    bool is_zero() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Canonical order: lexicographic on the little-endian coefficient list.
    bool operator<(const FieldElement& o) const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
};

/// Interned context for F_{p^k}. Deterministic: the modulus is the
/// lexicographically smallest monic irreducible of degree k over F_p.
/// Throws NotPrime / DegreeTooLarge.
const FieldContext& field_make(int64_t p, int k);

/// Field homomorphism F_{p^a} -> F_{p^c} for a | c, realized by mapping the
/// source generator to the least root of the source modulus in the target.
/// Cached per (src, dst) pair.
class Embedding {
  public:
    const FieldContext& src() const { return *src_; }
    const FieldContext& dst() const { return *dst_; }
    FieldElement operator()(const FieldElement& x) const;

  private:
    friend const Embedding& embedding(const FieldContext&, const FieldContext&);
    const FieldContext* src_;
    const FieldContext* dst_;
    std::vector<FieldElement> gen_powers_; // root^i for i in [0, src.k)
};

/// Throws DegreeTooLarge if src.k does not divide dst.k.
const Embedding& embedding(const FieldContext& src, const FieldContext& dst);

/// Lift x into ctx (identity if already there; embeds otherwise).
FieldElement lift(const FieldElement& x, const FieldContext& ctx);

} // namespace fmc

#endif
