#include "gcdpairs/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "gcdpairs/error.hpp"
#include "gcdpairs/graph.hpp"
#include "gcdpairs/oracle.hpp"
#include "gcdpairs/pairs.hpp"
#include "gcdpairs/serialize.hpp"
#include "gcdpairs/verify.hpp"

namespace gcdpairs::cli {

namespace {

using serialize::Json;

struct ListArgs {
    Natural n = 0;
    std::string subset = "all";
    bool json = false;
};

struct CheckArgs {
    Natural n = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool json = false;
};

struct CountArgs {
    Natural n = 0;
    std::string method = "both";
    bool json = false;
};

struct GraphArgs {
    Natural n = 0;
    bool analyze = false;
    std::string dot;
    bool json = false;
};

struct VerifyArgs {
    Natural max_n = 0;
    std::string claim;
    bool json = false;
    bool serial = false;
};

void append(std::string& buf, Natural v) {
    char digits[24];
    auto [end, ec] = std::to_chars(digits, digits + sizeof digits, v);
    buf.append(digits, end);
}

std::vector<Natural> parse_subset(Natural n, const std::string& spec) {
    if (spec == "all") {
        std::vector<Natural> all(n);
        for (Natural i = 0; i < n; ++i) all[i] = i;
        return all;
    }
    if (spec == "units" || spec == "zero-divisors") {
        if (n < 2) return {};
        auto classes = pairs::classify_elements(n);
        return spec == "units" ? classes.units : classes.zero_divisors;
    }
    std::vector<Natural> out;
    std::string_view rest = spec;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        Natural v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw DomainError("subset: '" + std::string(item) + "' is not all, units, zero-divisors or a list of residues");
        if (v >= n) throw DomainError("subset: " + std::to_string(v) + " is not a residue mod " + std::to_string(n));
        out.push_back(v);
    }
    return out;
}

void require_modulus(Natural n) {
    if (n == 0) throw DomainError("n must be at least 1");
}

int cmd_list(const ListArgs& args, std::ostream& out) {
    require_modulus(args.n);
    auto full = pairs::enumerate(args.n);
    const bool restricted = args.subset != "all";
    auto set = restricted ? pairs::restrict(full, parse_subset(args.n, args.subset), args.subset) : std::move(full);
    if (args.json) {
        out << serialize::print(serialize::to_json(set));
        return kOk;
    }
    std::string buf;
    buf.reserve(set.size() * 12 + 64);
    for (const auto& e : set.entries()) {
        buf += '{';
        append(buf, e.a);
        buf += ',';
        append(buf, e.b);
        buf += "}\n";
    }
    buf += "The number of gcd-pairs is ";
    append(buf, set.size());
    buf += '\n';
    out << buf;
    return kOk;
}

int cmd_check(const CheckArgs& args, std::ostream& out) {
    require_modulus(args.n);
    const Natural a = pairs::canonical_residue(args.n, args.a);
    const Natural b = pairs::canonical_residue(args.n, args.b);
    const bool member = pairs::is_gcd_pair(args.n, args.a, args.b);
    if (args.json) {
        Json doc = Json::object();
        doc["schema_version"] = serialize::kSchemaVersion;
        doc["n"] = args.n;
        doc["input"] = {args.a, args.b};
        doc["residues"] = {std::min(a, b), std::max(a, b)};
        doc["gcd"] = numtheory::gcd(a, b);
        doc["gcd_pair"] = member;
        out << serialize::print(doc);
    } else {
        out << '{' << std::min(a, b) << ',' << std::max(a, b) << "} is " << (member ? "" : "not ")
            << "a gcd-pair of Z_" << args.n << " (gcd = " << numtheory::gcd(a, b) << ")\n";
    }
    return member ? kOk : kNegative;
}

std::optional<pairs::CountResult> total_formula(Natural n) {
    if (n < 2) return std::nullopt;
    auto parts = numtheory::prime_power_decompose(n);
    if (parts) return pairs::count_prime_power_formula(*parts);
    return pairs::composite_lower_bound(n);
}

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err) {
    require_modulus(args.n);
    if (args.method != "enumerate" && args.method != "formula" && args.method != "both")
        throw DomainError("method must be enumerate, formula or both");
    const bool enumerate = args.method != "formula";
    const bool formula = args.method != "enumerate";
    const Natural n = args.n;

    std::optional<Natural> nu, nu_z;
    if (enumerate) {
        if (n > pairs::kMaxEnumerableModulus) throw DomainError("enumeration is limited to n <= 65536");
        nu = pairs::count(n);
        if (n >= 2) {
            auto zd = pairs::classify_elements(n).zero_divisors;
            nu_z = pairs::restrict(pairs::enumerate(n), zd).size();
        } else {
            nu_z = 0;
        }
    }
    std::optional<pairs::CountResult> total;
    std::vector<pairs::CountResult> zero;
    if (formula) {
        total = total_formula(n);
        if (n >= 2) zero = pairs::zero_divisor_formulas(n);
    }

    std::vector<std::string> mismatches;
    if (enumerate && formula) {
        if (total && total->kind == pairs::CountKind::Exact && total->value != *nu)
            mismatches.push_back("|nu_n|: formula " + std::to_string(total->value) + " vs enumeration " +
                                 std::to_string(*nu));
        for (const auto& r : zero)
            if (r.kind == pairs::CountKind::Exact && r.value != *nu_z)
                mismatches.push_back("|nu_n,Z|: " + r.provenance + " gives " + std::to_string(r.value) +
                                     " vs enumeration " + std::to_string(*nu_z));
    }

    if (args.json) {
        auto embed = [](const pairs::CountResult& r) {
            Json j = serialize::to_json(r);
            j.erase("schema_version");
            return j;
        };
        Json doc = Json::object();
        doc["schema_version"] = serialize::kSchemaVersion;
        doc["n"] = n;
        if (enumerate) doc["enumerate"] = {{"nu", *nu}, {"nu_zero_divisors", *nu_z}};
        if (formula) {
            Json zs = Json::array();
            for (const auto& r : zero) zs.push_back(embed(r));
            doc["formula"] = {{"nu", total ? embed(*total) : Json(nullptr)}, {"nu_zero_divisors", std::move(zs)}};
        }
        if (enumerate && formula) doc["mismatches"] = mismatches;
        out << serialize::print(doc);
    } else {
        out << "n = " << n << '\n';
        if (enumerate) {
            out << "|nu_n|   enumerate: " << *nu << '\n';
            out << "|nu_n,Z| enumerate: " << *nu_z << '\n';
        }
        if (formula) {
            if (total)
                out << "|nu_n|   formula: " << pairs::to_string(total->kind) << ' ' << total->value << " ["
                    << total->provenance << "]\n";
            else
                out << "|nu_n|   formula: unavailable\n";
            if (zero.empty()) out << "|nu_n,Z| formula: unavailable\n";
            for (const auto& r : zero)
                out << "|nu_n,Z| formula: " << pairs::to_string(r.kind) << ' ' << r.value << " [" << r.provenance
                    << "]\n";
        }
    }
    for (const auto& m : mismatches) err << "mismatch: " << m << '\n';
    return mismatches.empty() ? kOk : kVerificationFailed;
}

template <class T>
std::string show(const std::optional<T>& v) {
    if (!v) return "null";
    std::ostringstream s;
    s << *v;
    return s.str();
}

int cmd_graph(const GraphArgs& args, std::ostream& out, std::ostream& err) {
    require_modulus(args.n);
    if (args.n > kMaxGraphOrder) throw DomainError("graph is limited to n <= " + std::to_string(kMaxGraphOrder));
    auto g = graph::GcdGraph::build(args.n);
    if (!args.dot.empty()) {
        std::ofstream file(args.dot, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << args.dot << '\n';
            return kUsage;
        }
        file << graph::export_dot(g);
        if (!file.flush()) {
            err << "error: cannot write " << args.dot << '\n';
            return kUsage;
        }
    }
    std::optional<graph::Analysis> analysis;
    if (args.analyze) analysis = graph::analyze(g, graph::ExactBounds::from_environment());

    if (args.json) {
        out << serialize::print(serialize::to_json(serialize::GraphDocument::of(g, analysis)));
        return kOk;
    }
    out << "G_" << args.n << ": " << args.n << " vertices, " << g.simple_edges().size() << " edges, "
        << g.loops().size() << " loops\n";
    if (analysis) {
        const auto& a = *analysis;
        std::string triangle = "null";
        if (a.triangle) {
            triangle = "(";
            for (std::size_t i = 0; i < a.triangle->size(); ++i)
                triangle += (i ? "," : "") + std::to_string((*a.triangle)[i]);
            triangle += ")";
        }
        out << "connected: " << std::boolalpha << a.connected << '\n'
            << "gamma: " << show(a.gamma) << '\n'
            << "triangle: " << triangle << '\n'
            << "traceable: " << a.traceable << '\n'
            << "hamiltonian: " << a.hamiltonian << '\n'
            << "clique_number: " << show(a.clique_number) << '\n'
            << "chromatic_number: " << show(a.chromatic_number) << '\n'
            << "planar: " << a.planar << '\n';
        for (const auto& note : a.notes) out << "note: " << note << '\n';
    }
    return kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    verify::Options options;
    options.max_n = args.max_n;
    options.filter = args.claim;
    options.parallel = !args.serial;
    options.bounds = graph::ExactBounds::from_environment();
    auto report = verify::run(options);
    if (report.entries.empty()) throw DomainError("no claim id contains '" + args.claim + "'");

    if (args.json) {
        out << serialize::print(serialize::to_json(report));
    } else {
        std::size_t width = 0;
        for (const auto& e : report.entries) width = std::max(width, e.id.size());
        std::size_t tally[4] = {};
        for (const auto& e : report.entries) {
            ++tally[static_cast<int>(e.status)];
            out << e.id << std::string(width + 2 - e.id.size(), ' ') << verify::to_string(e.status)
                << std::string(13 - verify::to_string(e.status).size(), ' ') << e.range << '\n';
            out << "    " << e.statement << '\n';
            out << "    " << e.details << '\n';
            if (e.claimed) out << "    claimed:  " << *e.claimed << '\n';
            if (e.observed) out << "    observed: " << *e.observed << '\n';
        }
        out << report.entries.size() << " claims: " << tally[0] << " Pass, " << tally[1] << " Fail, " << tally[2]
            << " Discrepancy, " << tally[3] << " Noted\n";
    }
    return report.has_failures() ? kVerificationFailed : kOk;
}

std::string bounds_footer() {
    return "Exact-search bounds: clique n <= " + std::to_string(graph::ExactBounds{}.clique) +
           ", chromatic n <= " + std::to_string(graph::ExactBounds{}.chromatic) +
           " (override with GCDPAIRS_MAX_EXACT=N or clique=N,chromatic=M).\n"
           "Brute-force oracles: clique n <= " + std::to_string(oracle::kMaxCliqueOrder) +
           ", chromatic n <= " + std::to_string(oracle::kMaxChromaticOrder) +
           ", cycles n <= " + std::to_string(oracle::kMaxHamiltonianOrder) +
           ", domination n <= " + std::to_string(oracle::kMaxDominationOrder) + ".";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gcd-pairs in Z_n and the graphs G_n", "gcdpairs"};
    app.require_subcommand(1);
    app.footer(bounds_footer());

    ListArgs list;
    auto* list_cmd = app.add_subcommand("list", "List the gcd-pairs of Z_n");
    list_cmd->add_option("n", list.n, "modulus (>= 1)")->required();
    list_cmd->add_option("--subset", list.subset, "all, units, zero-divisors or a comma-separated list of residues");
    list_cmd->add_flag("--json", list.json, "emit JSON");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Decide whether {a mod n, b mod n} is a gcd-pair");
    check_cmd->add_option("n", check.n, "modulus (>= 1)")->required();
    check_cmd->add_option("a", check.a, "any signed integer")->required();
    check_cmd->add_option("b", check.b, "any signed integer")->required();
    check_cmd->add_flag("--json", check.json, "emit JSON");

    CountArgs count;
    auto* count_cmd = app.add_subcommand("count", "Count gcd-pairs by enumeration and by closed form");
    count_cmd->add_option("n", count.n, "modulus (>= 1)")->required();
    count_cmd->add_option("--method", count.method, "enumerate, formula or both")
        ->check(CLI::IsMember({"enumerate", "formula", "both"}));
    count_cmd->add_flag("--json", count.json, "emit JSON");

    GraphArgs graph_args;
    auto* graph_cmd = app.add_subcommand("graph", "Build G_n, analyse it or export it");
    graph_cmd->add_option("n", graph_args.n, "modulus (>= 1)")->required();
    graph_cmd->add_flag("--analyze", graph_args.analyze, "compute the graph invariants");
    graph_cmd->add_option("--dot", graph_args.dot, "write Graphviz DOT to PATH");
    graph_cmd->add_flag("--json", graph_args.json, "emit JSON");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check every claim against brute force");
    verify_cmd->add_option("--max-n", verify_args.max_n, "upper end of every claim family's range");
    verify_cmd->add_option("--claim", verify_args.claim, "only claims whose id contains this text");
    verify_cmd->add_flag("--json", verify_args.json, "emit JSON");
    verify_cmd->add_flag("--serial", verify_args.serial, "run claim families one after another");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*list_cmd) return cmd_list(list, out);
        if (*check_cmd) return cmd_check(check, out);
        if (*count_cmd) return cmd_count(count, out, err);
        if (*graph_cmd) return cmd_graph(graph_args, out, err);
        if (*verify_cmd) return cmd_verify(verify_args, out);
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace gcdpairs::cli
