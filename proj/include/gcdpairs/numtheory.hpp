#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace gcdpairs {

using Natural = std::uint64_t;

/// p^k with p prime and k >= 1.
struct PrimePower {
    Natural p = 2;
    unsigned k = 1;

    Natural value() const noexcept;
    friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

namespace numtheory {

/// Euclid's algorithm. gcd(0, 0) is 0, so "gcd divides n" fails for it.
constexpr Natural gcd(Natural a, Natural b) noexcept {
    while (b != 0) {
        Natural r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// d | n. Zero divides only zero.
constexpr bool divides(Natural d, Natural n) noexcept { return d == 0 ? n == 0 : n % d == 0; }

bool is_prime(Natural n) noexcept;

/// Prime factorization by trial division over a 2,3-wheel, ascending primes.
std::vector<PrimePower> factorize(Natural n);

/// Totient by factorization. Throws DomainError for m == 0.
Natural euler_phi(Natural m);

/// phi[0..limit] by a linear sieve; phi[0] is 0.
std::vector<Natural> totient_table(Natural limit);

/// Largest argument accepted by phi_partial_sum; the sum stays below 2^64.
inline constexpr Natural kMaxPhiSumArgument = Natural{1} << 32;

/// Sum of phi(j) for 1 <= j <= N. Small N use the sieve; large N use the
/// Dirichlet-hyperbola recursion Phi(N) = N(N+1)/2 - sum_{d>=2} Phi(N/d).
Natural phi_partial_sum(Natural N);

/// All positive divisors of n, ascending. n >= 1.
std::vector<Natural> divisors(Natural n);

/// Divisors of n other than 1, ascending, n included. Requires n >= 2.
std::vector<Natural> nontrivial_divisors(Natural n);

/// Ascending primes strictly below x.
std::vector<Natural> primes_below(Natural x);

/// (p, k) with p^k == n, or nullopt when n has more than one prime factor.
/// Requires n >= 2.
std::optional<PrimePower> prime_power_decompose(Natural n);

}  // namespace numtheory
}  // namespace gcdpairs
