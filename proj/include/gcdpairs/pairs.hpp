#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcdpairs/numtheory.hpp"

namespace gcdpairs::pairs {

/// An unordered gcd-pair {a, b} of residues mod n, stored with a <= b.
struct GcdPair {
    Natural n = 1;
    Natural a = 0;
    Natural b = 0;

    /// Reduces x and y mod n and orders them. Throws DomainError when n == 0
    /// or when the reduced pair is not a gcd-pair.
    static GcdPair make(Natural n, std::int64_t x, std::int64_t y);

    friend auto operator<=>(const GcdPair&, const GcdPair&) = default;
};

/// Moduli above this are refused by enumerate(); the pair count grows like n^2.
inline constexpr Natural kMaxEnumerableModulus = Natural{1} << 16;

/// The set nu_n of all gcd-pairs mod n, or a restriction of it to a subset A.
///
/// Pairs are kept in lexicographic (a, b) order with a <= b and no duplicates,
/// which makes equality and golden comparisons deterministic. Instances are
/// immutable once built.
class PairSet {
public:
    struct Entry {
        std::uint32_t a;
        std::uint32_t b;
        friend auto operator<=>(const Entry&, const Entry&) = default;
    };

    static constexpr std::string_view kFullLabel = "all";

    /// The empty nu_1.
    PairSet() : label_(kFullLabel) {}

    /// Validates every invariant (ordering, uniqueness, gcd condition, subset
    /// membership) and throws DomainError on violation.
    static PairSet from_entries(Natural n, std::string label, std::optional<std::vector<Natural>> subset,
                                std::vector<Entry> entries);

    Natural modulus() const noexcept { return n_; }
    const std::string& label() const noexcept { return label_; }
    /// The restricting set A in ascending order; nullopt for the full nu_n.
    const std::optional<std::vector<Natural>>& subset() const noexcept { return subset_; }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    std::span<const Entry> entries() const noexcept { return entries_; }
    GcdPair operator[](std::size_t i) const { return {n_, entries_[i].a, entries_[i].b}; }
    std::vector<GcdPair> to_vector() const;

    /// Order-insensitive membership test on residues already in [0, n).
    bool contains(Natural a, Natural b) const noexcept;

    friend bool operator==(const PairSet&, const PairSet&) = default;

private:
    friend PairSet enumerate(Natural n);
    friend PairSet restrict(const PairSet&, std::span<const Natural>, std::string);
    PairSet(Natural n, std::string label, std::optional<std::vector<Natural>> subset, std::vector<Entry> entries)
        : n_(n), label_(std::move(label)), subset_(std::move(subset)), entries_(std::move(entries)) {}

    Natural n_ = 1;
    std::string label_;
    std::optional<std::vector<Natural>> subset_;
    std::vector<Entry> entries_;
};

/// The representative of x in [0, n). Throws DomainError for n == 0.
Natural canonical_residue(Natural n, std::int64_t x);

/// Whether {x mod n, y mod n} is a gcd-pair. {0, 0} never is.
bool is_gcd_pair(Natural n, std::int64_t x, std::int64_t y);

/// All of nu_n. Rows whose smaller element divides n are emitted without any
/// gcd evaluation; the remaining rows test gcd(a, b) | n.
PairSet enumerate(Natural n);

/// |nu_n| by the same traversal as enumerate(), without materializing pairs.
Natural count(Natural n);

/// nu_{n,A}: pairs of `full` with both endpoints in `subset`. Throws
/// DomainError if any element of `subset` lies outside [0, n).
PairSet restrict(const PairSet& full, std::span<const Natural> subset, std::string label = "restricted");

struct ElementClasses {
    Natural n = 2;
    std::vector<Natural> zero{0};
    std::vector<Natural> units;
    std::vector<Natural> zero_divisors;
};

/// Splits [0, n) into {0}, the units and the zero divisors. Requires n >= 2.
ElementClasses classify_elements(Natural n);

/// Cells S'_d = { rd : 1 <= r < n/d, gcd(rd, n) = d } for the proper
/// nontrivial divisors d of n (S'_n is always empty and is left out).
struct ZeroDivisorPartition {
    Natural n = 2;
    std::map<Natural, std::vector<Natural>> cells;
};

ZeroDivisorPartition zero_divisor_partition(Natural n);

enum class CountKind { Exact, StrictLowerBound, LowerBound };

std::string_view to_string(CountKind kind) noexcept;

struct CountResult {
    Natural value = 0;
    CountKind kind = CountKind::Exact;
    std::string provenance;

    friend bool operator==(const CountResult&, const CountResult&) = default;
};

/// |nu_{p^k}| = k + sum_{i=1..k} sum_{j=1..p^i-1} phi(j).
CountResult count_prime_power_formula(const PrimePower& pp);

/// 1 + sum_{j<n} phi(j), which |nu_n| strictly exceeds for composite n.
/// Throws DomainError unless n is composite.
CountResult composite_lower_bound(Natural n);

/// |nu_{m,U(Z_m)}|: pairs of units r <= s with gcd(r, s) = 1, counted directly.
Natural count_unit_pairs(Natural m);

/// Every closed form for |nu_{n,Z(Z_n)}| that applies to n, in a fixed order:
/// prime, prime power, 2p, 3p, pq, divisor-cell sum. Requires n >= 2.
std::vector<CountResult> zero_divisor_formulas(Natural n);

/// The strongest entry of zero_divisor_formulas(n): the first Exact one, or
/// else the largest lower bound.
CountResult count_zero_divisor_closed(Natural n);

/// The matching {rd, sd} in nu_{n,S'_d} <-> {r, s} in nu_{m,U(Z_m)}, m = n/d.
struct UnitBijection {
    struct Match {
        GcdPair cell_pair;
        GcdPair unit_pair;
    };

    Natural n = 0;
    Natural d = 0;
    Natural m = 0;
    PairSet cell_pairs;   // nu_{n,S'_d}
    PairSet unit_pairs;   // nu_{m,U(Z_m)}
    std::vector<Match> matches;
    /// Every cell pair maps onto a distinct unit pair and every unit pair is hit.
    bool complete = false;
};

/// Requires d a proper nontrivial divisor of n (so S'_d is nonempty).
UnitBijection sprime_unit_bijection(Natural n, Natural d);

}  // namespace gcdpairs::pairs
