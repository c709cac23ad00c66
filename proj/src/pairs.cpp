#include "gcdpairs/pairs.hpp"

#include <algorithm>
#include <limits>

#include "gcdpairs/error.hpp"

namespace gcdpairs::pairs {

using numtheory::gcd;

namespace {

bool pair_condition(Natural n, Natural a, Natural b) noexcept {
    Natural g = gcd(a, b);
    return g != 0 && n % g == 0;
}

void require_modulus(Natural n, const char* who) {
    if (n == 0) throw DomainError(std::string(who) + ": modulus must be >= 1");
}

// Walks nu_n in lexicographic order. Row a = 0 holds {0, d} for the proper
// divisors d of n; a row whose a divides n is complete; other rows need gcds.
template <class Row, class Emit>
void visit_pairs(Natural n, Row&& full_row, Emit&& emit) {
    for (Natural d : numtheory::divisors(n)) {
        if (d < n) emit(Natural{0}, d);
    }
    for (Natural a = 1; a < n; ++a) {
        if (n % a == 0) {
            full_row(a);
            continue;
        }
        for (Natural b = a; b < n; ++b) {
            if (n % gcd(a, b) == 0) emit(a, b);
        }
    }
}

}  // namespace

GcdPair GcdPair::make(Natural n, std::int64_t x, std::int64_t y) {
    Natural a = canonical_residue(n, x);
    Natural b = canonical_residue(n, y);
    if (a > b) std::swap(a, b);
    if (!pair_condition(n, a, b))
        throw DomainError("{" + std::to_string(a) + "," + std::to_string(b) + "} is not a gcd-pair mod " +
                          std::to_string(n));
    return {n, a, b};
}

PairSet PairSet::from_entries(Natural n, std::string label, std::optional<std::vector<Natural>> subset,
                              std::vector<Entry> entries) {
    require_modulus(n, "PairSet");
    std::vector<bool> allowed;
    if (subset) {
        if (!std::is_sorted(subset->begin(), subset->end()) ||
            std::adjacent_find(subset->begin(), subset->end()) != subset->end())
            throw DomainError("PairSet: subset must be strictly ascending");
        allowed.assign(n, false);
        for (Natural x : *subset) {
            if (x >= n) throw DomainError("PairSet: subset element " + std::to_string(x) + " outside [0, n)");
            allowed[x] = true;
        }
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (e.a > e.b || e.b >= n) throw DomainError("PairSet: pair out of canonical range");
        if (!pair_condition(n, e.a, e.b))
            throw DomainError("PairSet: {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                              "} is not a gcd-pair");
        if (i > 0 && !(entries[i - 1] < e)) throw DomainError("PairSet: pairs must be strictly ascending");
        if (subset && !(allowed[e.a] && allowed[e.b])) throw DomainError("PairSet: pair leaves the subset");
    }
    return PairSet(n, std::move(label), std::move(subset), std::move(entries));
}

std::vector<GcdPair> PairSet::to_vector() const {
    std::vector<GcdPair> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back({n_, e.a, e.b});
    return out;
}

bool PairSet::contains(Natural a, Natural b) const noexcept {
    if (a > b) std::swap(a, b);
    if (b >= n_) return false;
    Entry key{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    return std::binary_search(entries_.begin(), entries_.end(), key);
}

Natural canonical_residue(Natural n, std::int64_t x) {
    require_modulus(n, "canonical_residue");
    if (x >= 0) return static_cast<Natural>(x) % n;
    // -(x + 1) avoids overflow at INT64_MIN.
    Natural magnitude_minus_one = static_cast<Natural>(-(x + 1));
    Natural r = magnitude_minus_one % n;
    return n - 1 - r;
}

bool is_gcd_pair(Natural n, std::int64_t x, std::int64_t y) {
    return pair_condition(n, canonical_residue(n, x), canonical_residue(n, y));
}

PairSet enumerate(Natural n) {
    require_modulus(n, "enumerate");
    if (n > kMaxEnumerableModulus)
        throw DomainError("enumerate: modulus " + std::to_string(n) + " above the enumeration limit");
    std::vector<PairSet::Entry> entries;
    // |nu_n| is roughly (3/pi^2) n^2; reserve a little above that.
    entries.reserve(static_cast<std::size_t>(0.32 * static_cast<double>(n) * static_cast<double>(n)) + 16);
    auto emit = [&](Natural a, Natural b) {
        entries.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
    };
    visit_pairs(
        n,
        [&](Natural a) {
            for (Natural b = a; b < n; ++b) emit(a, b);
        },
        emit);
    return PairSet(n, std::string(PairSet::kFullLabel), std::nullopt, std::move(entries));
}

Natural count(Natural n) {
    require_modulus(n, "count");
    Natural total = 0;
    visit_pairs(
        n, [&](Natural a) { total += n - a; }, [&](Natural, Natural) { ++total; });
    return total;
}

PairSet restrict(const PairSet& full, std::span<const Natural> subset, std::string label) {
    const Natural n = full.modulus();
    std::vector<bool> allowed(n, false);
    for (Natural x : subset) {
        if (x >= n)
            throw DomainError("restrict: element " + std::to_string(x) + " outside [0, " + std::to_string(n) + ")");
        allowed[x] = true;
    }
    std::vector<Natural> members;
    for (Natural x = 0; x < n; ++x)
        if (allowed[x]) members.push_back(x);

    std::vector<PairSet::Entry> kept;
    for (const auto& e : full.entries())
        if (allowed[e.a] && allowed[e.b]) kept.push_back(e);
    return PairSet(n, std::move(label), std::move(members), std::move(kept));
}

ElementClasses classify_elements(Natural n) {
    if (n < 2) throw DomainError("classify_elements: n must be >= 2");
    ElementClasses out;
    out.n = n;
    for (Natural a = 1; a < n; ++a) (gcd(a, n) == 1 ? out.units : out.zero_divisors).push_back(a);
    return out;
}

ZeroDivisorPartition zero_divisor_partition(Natural n) {
    if (n < 2) throw DomainError("zero_divisor_partition: n must be >= 2");
    ZeroDivisorPartition out;
    out.n = n;
    for (Natural d : numtheory::nontrivial_divisors(n)) {
        std::vector<Natural> cell;
        for (Natural r = 1; r < n / d; ++r)
            if (gcd(r * d, n) == d) cell.push_back(r * d);
        if (!cell.empty()) out.cells.emplace(d, std::move(cell));
    }
    return out;
}

std::string_view to_string(CountKind kind) noexcept {
    switch (kind) {
        case CountKind::Exact: return "Exact";
        case CountKind::StrictLowerBound: return "StrictLowerBound";
        case CountKind::LowerBound: return "LowerBound";
    }
    return "?";
}

namespace {

Natural checked_power(Natural p, unsigned k) {
    Natural v = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (__builtin_mul_overflow(v, p, &v)) throw DomainError("prime power overflows 64 bits");
    }
    return v;
}

Natural nu_prime_power(Natural p, unsigned k) {
    Natural total = k;
    Natural power = 1;
    for (unsigned i = 1; i <= k; ++i) {
        power *= p;
        total += numtheory::phi_partial_sum(power - 1);
    }
    return total;
}

std::string pk_text(Natural p, unsigned k) { return std::to_string(p) + "^" + std::to_string(k); }

}  // namespace

CountResult count_prime_power_formula(const PrimePower& pp) {
    if (pp.k < 1 || !numtheory::is_prime(pp.p)) throw DomainError("count_prime_power_formula: invalid prime power");
    checked_power(pp.p, pp.k);
    return {nu_prime_power(pp.p, pp.k), CountKind::Exact,
            "prime-power count |nu_{p^k}| = k + sum_i Phi(p^i - 1), p^k = " + pk_text(pp.p, pp.k)};
}

CountResult composite_lower_bound(Natural n) {
    if (n < 4 || numtheory::is_prime(n))
        throw DomainError("composite_lower_bound: " + std::to_string(n) + " is not composite");
    return {1 + numtheory::phi_partial_sum(n - 1), CountKind::StrictLowerBound,
            "composite bound |nu_n| > 1 + Phi(n - 1)"};
}

Natural count_unit_pairs(Natural m) {
    require_modulus(m, "count_unit_pairs");
    std::vector<Natural> units;
    for (Natural r = 1; r < m; ++r)
        if (gcd(r, m) == 1) units.push_back(r);
    Natural total = 0;
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = i; j < units.size(); ++j)
            if (gcd(units[i], units[j]) == 1) ++total;
    return total;
}

std::vector<CountResult> zero_divisor_formulas(Natural n) {
    if (n < 2) throw DomainError("zero_divisor_formulas: n must be >= 2");
    std::vector<CountResult> out;
    if (numtheory::is_prime(n)) {
        out.push_back({0, CountKind::Exact, "prime modulus: Z(Z_p) is empty"});
        return out;
    }
    const auto factors = numtheory::factorize(n);
    if (factors.size() == 1) {
        const auto [p, k] = factors.front();
        out.push_back({nu_prime_power(p, k - 1) - k + 1, CountKind::Exact,
                       "prime power p^k: |nu_{p^(k-1)}| - k + 1, p^k = " + pk_text(p, k)});
    }
    auto cofactor_prime = [&](Natural small) -> std::optional<Natural> {
        if (n % small != 0) return std::nullopt;
        Natural p = n / small;
        return numtheory::is_prime(p) ? std::optional(p) : std::nullopt;
    };
    if (auto p = cofactor_prime(2); p && *p != 2) {
        out.push_back({nu_prime_power(*p, 1) + *p - 1, CountKind::Exact,
                       "2p form: |nu_p| + p - 1, p = " + std::to_string(*p)});
    }
    if (auto p = cofactor_prime(3); p && *p != 3) {
        out.push_back({nu_prime_power(*p, 1) + *p + *p / 2, CountKind::Exact,  // ceil((p-1)/2) == floor(p/2)
                       "3p form: |nu_p| + p + ceil((p - 1)/2), p = " + std::to_string(*p)});
    }
    if (factors.size() == 2 && factors[0].k == 1 && factors[1].k == 1) {
        const Natural p = factors[0].p, q = factors[1].p;
        out.push_back({nu_prime_power(p, 1) + nu_prime_power(q, 1) + p + q - 5, CountKind::LowerBound,
                       "pq form: |nu_p| + |nu_q| + p + q - 5, p = " + std::to_string(p) +
                           ", q = " + std::to_string(q)});
    }
    Natural cell_sum = 0;
    for (Natural d : numtheory::nontrivial_divisors(n))
        if (d < n) cell_sum += count_unit_pairs(n / d);
    out.push_back({cell_sum, CountKind::LowerBound, "divisor-cell sum: sum_{d in D_n} |nu_{n/d,U(Z_{n/d})}|"});
    return out;
}

CountResult count_zero_divisor_closed(Natural n) {
    auto all = zero_divisor_formulas(n);
    for (const auto& r : all)
        if (r.kind == CountKind::Exact) return r;
    return *std::max_element(all.begin(), all.end(),
                             [](const CountResult& x, const CountResult& y) { return x.value < y.value; });
}

UnitBijection sprime_unit_bijection(Natural n, Natural d) {
    if (n < 4 || d < 2 || d >= n || n % d != 0)
        throw DomainError("sprime_unit_bijection: d = " + std::to_string(d) +
                          " is not a proper nontrivial divisor of " + std::to_string(n));
    UnitBijection out;
    out.n = n;
    out.d = d;
    out.m = n / d;

    std::vector<Natural> cell;
    for (Natural r = 1; r < out.m; ++r)
        if (gcd(r * d, n) == d) cell.push_back(r * d);
    out.cell_pairs = restrict(enumerate(n), cell, "cell d=" + std::to_string(d));
    out.unit_pairs = restrict(enumerate(out.m), classify_elements(out.m).units, "units");

    bool all_hit = true;
    for (const auto& e : out.cell_pairs.entries()) {
        GcdPair image{out.m, e.a / d, e.b / d};
        all_hit = all_hit && out.unit_pairs.contains(image.a, image.b);
        out.matches.push_back({{n, e.a, e.b}, image});
    }
    out.complete = all_hit && out.matches.size() == out.unit_pairs.size();
    return out;
}

}  // namespace gcdpairs::pairs
