#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcdpairs/graph.hpp"

namespace gcdpairs::verify {

/// Pass: the claim holds on the whole tested range.
/// Fail: the implementation disagrees with brute force (a regression).
/// Discrepancy: brute force disagrees with the claim as published.
/// Noted: an erratum in the published text with no computational content.
enum class Status { Pass, Fail, Discrepancy, Noted };

std::string_view to_string(Status s) noexcept;
std::optional<Status> parse_status(std::string_view text) noexcept;

struct Entry {
    std::string id;
    std::string statement;  // what is claimed, in words
    std::string range;      // what was tested
    Status status = Status::Pass;
    std::string details;
    std::optional<std::string> claimed;
    std::optional<std::string> observed;

    friend bool operator==(const Entry&, const Entry&) = default;
};

struct Report {
    std::vector<Entry> entries;

    bool has_failures() const noexcept;
    const Entry* find(std::string_view id) const noexcept;
    friend bool operator==(const Report&, const Report&) = default;
};

struct Options {
    /// Caps every family's upper range; 0 keeps each family's default.
    /// Families tied to an exact-search bound never exceed that bound.
    Natural max_n = 0;
    /// Only claims whose id contains this substring run.
    std::string filter;
    bool parallel = true;
    graph::ExactBounds bounds;
};

/// Every claim id, in report order.
std::vector<std::string> claim_ids();

Report run(const Options& options = {});

}  // namespace gcdpairs::verify
