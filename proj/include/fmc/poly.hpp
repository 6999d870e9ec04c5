#ifndef FMC_POLY_HPP
#define FMC_POLY_HPP

#include <vector>

#include "fmc/field.hpp"

namespace fmc {

/// Dense polynomial over one FieldContext, coefficients little-endian.
/// Trailing zero coefficients are trimmed; the zero polynomial is {}.
struct Poly {
    const FieldContext* ctx = nullptr;
    std::vector<FieldElement> coeffs;

    int degree() const { return int(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
};

Poly poly_make(const FieldContext& ctx, std::vector<FieldElement> coeffs);
/// Coefficients given as prime-field residues.
Poly poly_from_residues(const FieldContext& ctx, const std::vector<int64_t>& coeffs);

FieldElement poly_eval(const Poly& f, const FieldElement& x);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& m);
Poly poly_gcd(const Poly& a, const Poly& b); // monic gcd
Poly poly_powmod(const Poly& base, uint128 e, const Poly& m);

/// All roots in the coefficient field by exhaustive scan over the q elements,
/// canonically ordered. OpenMP-parallel for large q; poly_roots_serial is the
/// reference implementation kept for testing. Precondition: f != 0.
std::vector<FieldElement> poly_roots(const Poly& f);
std::vector<FieldElement> poly_roots_serial(const Poly& f);

/// All roots via x^q-x splitting and randomized equal-degree splitting.
/// Same output as poly_roots; usable when q is far past scanning range.
std::vector<FieldElement> poly_roots_cz(const Poly& f);

/// Roots chosen by field size: scan below the table limit, CZ splitting above.
std::vector<FieldElement> poly_roots_auto(const Poly& f);

/// Rabin irreducibility test for a monic polynomial over F_p (k = 1 context).
bool poly_is_irreducible(const Poly& f);

} // namespace fmc

#endif
