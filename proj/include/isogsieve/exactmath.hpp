#pragma once

// Exact integer arithmetic: primality, factorization, Kronecker symbols,
// integer square roots. Everything is deterministic; no randomized state
// escapes this header.

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "isogsieve/integer.hpp"

namespace isogsieve {

// thrown when a factorization exceeds its configured effort; callers never
// see a partial result
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

// complete factorization of a positive integer; primes strictly increasing
struct Factorization {
    Integer value;
    std::vector<PrimePower> factors;

    Integer product() const {
        Integer p = 1;
        for (const auto& f : factors) p *= pow_int(f.prime, f.exponent);
        return p;
    }
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// one strong-pseudoprime round; n odd > 2
inline bool miller_rabin_round_u64(std::uint64_t n, std::uint64_t a) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

inline bool miller_rabin_round(const Integer& n, const Integer& a) {
    if (a % n == 0) return true;
    Integer d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    Integer x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// the first twelve primes are valid Miller-Rabin witnesses for every
// n < 3.317e24, which covers all 64-bit inputs
inline constexpr std::uint64_t kSmallWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace detail

// Eratosthenes; primes strictly below limit, ascending
inline std::vector<std::int64_t> primes_below(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit <= 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit), false);
    for (std::int64_t i = 2; i < limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j < limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : detail::kSmallWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    for (std::uint64_t a : detail::kSmallWitnesses)
        if (!detail::miller_rabin_round_u64(n, a)) return false;
    return true;
}

// Deterministic for 64-bit inputs (fixed witness set); beyond that, trial
// division by every prime below 1000 followed by 40 Miller-Rabin rounds with
// the first 40 primes as witnesses. Same input, same answer, always.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return is_prime(n.convert_to<std::uint64_t>());
    static const std::vector<std::int64_t> small = primes_below(1000);
    for (std::int64_t p : small)
        if (n % p == 0) return false;
    int rounds = 0;
    for (std::int64_t a = 2; rounds < 40; ++a) {
        if (!is_prime(static_cast<std::uint64_t>(a))) continue;
        if (!detail::miller_rabin_round(n, Integer(a))) return false;
        ++rounds;
    }
    return true;
}

inline bool is_prime(std::int64_t n) {
    return n >= 2 && is_prime(static_cast<std::uint64_t>(n));
}

// floor square root; exact for any size
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    return boost::multiprecision::sqrt(n);
}

struct FactorizeLimits {
    std::int64_t trial_bound = 1'000'000;
    // total modular-squaring budget across all Pollard-Brent attempts
    std::uint64_t rho_max_iterations = 1u << 26;
};

namespace detail {

// Brent-cycle Pollard rho with polynomial x^2 + c; deterministic: the
// constant c runs 1, 2, 3, ... and the start value is always 2.
// Returns a nontrivial factor of composite odd n, or throws when the
// iteration budget runs out.
inline Integer pollard_brent(const Integer& n, std::uint64_t& budget) {
    for (unsigned c = 1;; ++c) {
        Integer y = 2, q = 1, g = 1, x, ys;
        std::uint64_t r = 1;
        const std::uint64_t block = 128;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            for (std::uint64_t k = 0; k < r && g == 1; k += block) {
                ys = y;
                const std::uint64_t steps = std::min(block, r - k);
                if (budget < steps) throw ResourceLimitError("factorize: effort limit reached");
                budget -= steps;
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs_int(x - y) % n;
                }
                g = boost::multiprecision::gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            // the gcd batch overshot; retrace one step at a time
            do {
                ys = (ys * ys + c) % n;
                g = boost::multiprecision::gcd(abs_int(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
        // cycle degenerated for this c; try the next constant
    }
}

inline void factor_into(Integer n, std::map<Integer, unsigned>& out, const FactorizeLimits& limits,
                        std::uint64_t& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n, budget);
    factor_into(d, out, limits, budget);
    factor_into(n / d, out, limits, budget);
}

}  // namespace detail

// complete prime factorization of n >= 1; trial division up to
// limits.trial_bound, then Pollard-Brent on whatever survives
inline Factorization factorize(const Integer& n, const FactorizeLimits& limits = {}) {
    if (n < 1) throw std::invalid_argument("factorize: input must be >= 1");
    Factorization result;
    result.value = n;
    Integer m = n;
    std::map<Integer, unsigned> found;
    for (std::int64_t p = 2; p <= limits.trial_bound && p * p <= m; p = (p == 2 ? 3 : p + 2)) {
        if (m % p != 0) continue;
        unsigned e = 0;
        do {
            m /= p;
            ++e;
        } while (m % p == 0);
        found[Integer(p)] = e;
        if (is_prime(m)) break;
    }
    if (m > 1) {
        std::uint64_t budget = limits.rho_max_iterations;
        detail::factor_into(m, found, limits, budget);
    }
    for (const auto& [p, e] : found) result.factors.push_back({p, e});
    return result;
}

// Kronecker symbol (a|n), the full extension of the Legendre symbol to all
// nonzero n; coincides with Legendre for odd prime n.
inline int kronecker_symbol(Integer a, Integer n) {
    if (n == 0) throw std::invalid_argument("kronecker_symbol: n must be nonzero");
    int sign = 1;
    if (n < 0) {
        if (a < 0) sign = -sign;
        n = -n;
    }
    int twos = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0) return 0;
        // (a|2) = (-1)^((a^2-1)/8)
        Integer amod = a % 8;
        if (amod < 0) amod += 8;
        if ((twos & 1) && (amod == 3 || amod == 5)) sign = -sign;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            Integer nmod = n % 8;
            if (nmod == 3 || nmod == 5) sign = -sign;
        }
        std::swap(a, n);
        if ((a % 4 == 3) && (n % 4 == 3)) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

}  // namespace isogsieve
