#ifndef FMC_INTMATH_HPP
#define FMC_INTMATH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fmc {

// Group orders over F_{p^k} with p <= 97, k <= 12 reach ~7e23, past uint64.
using int128 = __int128;
using uint128 = unsigned __int128;

std::string to_string_u128(uint128 v);
std::string to_string_i128(int128 v);

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m);
uint128 mulmod128(uint128 a, uint128 b, uint128 m);
uint128 powmod128(uint128 base, uint128 exp, uint128 m);

uint128 gcd128(uint128 a, uint128 b);
uint128 lcm128(uint128 a, uint128 b);

bool is_prime_u64(uint64_t n);
bool is_prime_u128(uint128 n);

/// Prime factorization (trial division + Pollard rho), sorted ascending, with multiplicity.
std::vector<uint128> factorize(uint128 n);

/// Euler's totient for small m.
uint64_t totient(uint64_t m);

/// v_q(n): exponent of prime q in n.
int valuation(uint128 n, uint128 q);

/// Deterministic 64-bit mix (splitmix64); used to seed reproducible sampling.
uint64_t splitmix64(uint64_t& state);

/// Small deterministic PRNG for reproducible randomized searches.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() { return splitmix64(state_); }
    /// Uniform in [0, n), n > 0.
    uint64_t below(uint64_t n) { return next() % n; }
    uint128 below128(uint128 n) {
        uint128 v = (uint128(next()) << 64) | next();
        return v % n;
    }

  private:
    uint64_t state_;
};

} // namespace fmc

#endif
