#include "gcdpairs/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "gcdpairs/error.hpp"

namespace gcdpairs {

Natural PrimePower::value() const noexcept {
    Natural v = 1;
    for (unsigned i = 0; i < k; ++i) v *= p;
    return v;
}

namespace numtheory {

namespace {

// Calls visit(p) for each prime factor candidate of n in turn, dividing it out;
// returns the cofactor left after trial division (1 or a prime).
template <class Visit>
Natural trial_divide(Natural n, Visit&& visit) {
    for (Natural p : {Natural{2}, Natural{3}}) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k) visit(p, k);
    }
    // 6j-1, 6j+1 wheel
    for (Natural p = 5, step = 2; p <= n / p; p += step, step = 6 - step) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k) visit(p, k);
    }
    return n;
}

}  // namespace

bool is_prime(Natural n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (Natural p = 5, step = 2; p <= n / p; p += step, step = 6 - step)
        if (n % p == 0) return false;
    return true;
}

std::vector<PrimePower> factorize(Natural n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    std::vector<PrimePower> out;
    Natural rest = trial_divide(n, [&](Natural p, unsigned k) { out.push_back({p, k}); });
    if (rest > 1) out.push_back({rest, 1});
    return out;
}

Natural euler_phi(Natural m) {
    if (m == 0) throw DomainError("euler_phi: m must be >= 1");
    Natural phi = m;
    for (const auto& [p, k] : factorize(m)) phi = phi / p * (p - 1);
    return phi;
}

std::vector<Natural> totient_table(Natural limit) {
    std::vector<Natural> phi(limit + 1, 0);
    if (limit >= 1) phi[1] = 1;
    std::vector<Natural> primes;
    for (Natural i = 2; i <= limit; ++i) {
        if (phi[i] == 0) {
            phi[i] = i - 1;
            primes.push_back(i);
        }
        for (Natural p : primes) {
            if (p * i > limit) break;
            if (i % p == 0) {
                phi[p * i] = phi[i] * p;
                break;
            }
            phi[p * i] = phi[i] * (p - 1);
        }
    }
    return phi;
}

namespace {

constexpr Natural kSieveOnlyLimit = Natural{1} << 20;

class SummatoryTotient {
public:
    explicit SummatoryTotient(Natural n) {
        auto limit = static_cast<Natural>(std::cbrt(static_cast<double>(n)));
        limit = std::max<Natural>(limit * limit, 1024);
        prefix_ = totient_table(limit);
        for (std::size_t i = 1; i < prefix_.size(); ++i) prefix_[i] += prefix_[i - 1];
    }

    Natural operator()(Natural x) {
        if (x < prefix_.size()) return prefix_[x];
        if (auto it = memo_.find(x); it != memo_.end()) return it->second;
        Natural result = x % 2 == 0 ? (x / 2) * (x + 1) : x * ((x + 1) / 2);
        for (Natural d = 2; d <= x;) {
            Natural q = x / d;
            Natural last = x / q;
            result -= (last - d + 1) * (*this)(q);
            d = last + 1;
        }
        memo_.emplace(x, result);
        return result;
    }

private:
    std::vector<Natural> prefix_;
    std::unordered_map<Natural, Natural> memo_;
};

}  // namespace

Natural phi_partial_sum(Natural N) {
    if (N > kMaxPhiSumArgument) throw DomainError("phi_partial_sum: argument above 2^32 would overflow");
    if (N <= kSieveOnlyLimit) {
        auto phi = totient_table(N);
        Natural sum = 0;
        for (Natural v : phi) sum += v;
        return sum;
    }
    return SummatoryTotient(N)(N);
}

std::vector<Natural> divisors(Natural n) {
    if (n == 0) throw DomainError("divisors: n must be positive");
    std::vector<Natural> small, large;
    for (Natural d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Natural> nontrivial_divisors(Natural n) {
    if (n < 2) throw DomainError("nontrivial_divisors: n must be >= 2");
    auto all = divisors(n);
    all.erase(all.begin());
    return all;
}

std::vector<Natural> primes_below(Natural x) {
    std::vector<Natural> primes;
    if (x <= 2) return primes;
    std::vector<bool> composite(x, false);
    for (Natural i = 2; i < x; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        if (i > (x - 1) / i) continue;
        for (Natural j = i * i; j < x; j += i) composite[j] = true;
    }
    return primes;
}

std::optional<PrimePower> prime_power_decompose(Natural n) {
    if (n < 2) throw DomainError("prime_power_decompose: n must be >= 2");
    auto factors = factorize(n);
    if (factors.size() != 1) return std::nullopt;
    return factors.front();
}

}  // namespace numtheory
}  // namespace gcdpairs
