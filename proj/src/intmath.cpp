#include "fmc/intmath.hpp"

#include <algorithm>

namespace fmc {

std::string to_string_u128(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string_i128(int128 v) {
    if (v < 0) return "-" + to_string_u128(uint128(-v));
    return to_string_u128(uint128(v));
}

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((uint128(a) * b) % m);
}

uint128 mulmod128(uint128 a, uint128 b, uint128 m) {
    a %= m;
    b %= m;
    // Schoolbook double-and-add; operands stay below 2^127 so a+a cannot wrap
    // after reduction as long as m < 2^127, which holds for all orders we see.
    uint128 r = 0;
    while (b > 0) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a += a;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

uint128 powmod128(uint128 base, uint128 exp, uint128 m) {
    uint128 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod128(r, base, m);
        base = mulmod128(base, base, m);
        exp >>= 1;
    }
    return r;
}

uint128 gcd128(uint128 a, uint128 b) {
    while (b) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint128 lcm128(uint128 a, uint128 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd128(a, b) * b;
}

namespace {

bool miller_rabin(uint128 n, uint128 a) {
    if (a % n == 0) return true;
    uint128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    uint128 x = powmod128(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod128(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime_u128(uint128 n) {
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (n % p == 0) return n == p;
    }
    // First 13 primes are a proven deterministic base set below 3.3e24,
    // which covers every group order arising at p <= 97, k <= 12.
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

bool is_prime_u64(uint64_t n) { return is_prime_u128(n); }

namespace {

uint128 pollard_rho(uint128 n, uint64_t seed) {
    if ((n & 1) == 0) return 2;
    uint64_t st = seed;
    while (true) {
        uint128 c = splitmix64(st) % (n - 1) + 1;
        uint128 x = splitmix64(st) % n;
        uint128 y = x;
        uint128 d = 1;
        auto f = [&](uint128 v) { return (mulmod128(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            uint128 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = gcd128(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(uint128 n, std::vector<uint128>& out) {
    if (n == 1) return;
    if (is_prime_u128(n)) {
        out.push_back(n);
        return;
    }
    uint128 d = pollard_rho(n, 0x5bf03635u ^ uint64_t(n));
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<uint128> factorize(uint128 n) {
    std::vector<uint128> out;
    for (uint128 p = 2; p < 1000 && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t totient(uint64_t m) {
    if (m == 0) return 0;
    uint64_t result = m;
    uint64_t n = m;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int valuation(uint128 n, uint128 q) {
    int v = 0;
    while (n > 0 && n % q == 0) {
        n /= q;
        ++v;
    }
    return v;
}

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace fmc
