#include "midspec_cli.hpp"

#include "midcube/certify.hpp"
#include "midcube/hamiltonian.hpp"
#include "midcube/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace midspec {

using namespace midcube;
using nlohmann::json;

namespace {

/// Usage problems detected after parsing (bad ranges, bad environment).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checked by cmd_table --oeis against the computed sequence.
const std::vector<long> kA050166Prefix = {1, 2, 1, 4, 5, 1, 6, 14, 14};

struct GlobalOptions {
    std::string format = "table";
    std::string out_path;
    bool quiet = false;
    std::optional<int> max_k;
    std::optional<std::uint64_t> budget;
};

template <typename T>
std::optional<T> env_number(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    const std::string text(raw);
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError(std::string(name) + " must be a non-negative integer, got '" + text + "'");
    return value;
}

// flag > MIDSPEC_MAX_K > built-in default, clamped to the hard cap.
int resolve_max_k(const GlobalOptions& g) {
    int value = GraphCaps{}.max_middle_k;
    if (auto env = env_number<int>("MIDSPEC_MAX_K")) value = *env;
    if (g.max_k) value = *g.max_k;
    if (value < 1 || value > kMiddleCubeHardCap)
        throw UsageError("max k must be in [1, " + std::to_string(kMiddleCubeHardCap) + "]");
    return value;
}

std::uint64_t resolve_budget(const GlobalOptions& g) {
    std::uint64_t value = kDefaultSearchBudget;
    if (auto env = env_number<std::uint64_t>("MIDSPEC_BUDGET")) value = *env;
    if (g.budget) value = *g.budget;
    if (value == 0) throw UsageError("budget must be positive");
    return value;
}

GraphCaps graph_caps(const GlobalOptions& g) {
    GraphCaps caps;
    caps.max_middle_k = resolve_max_k(g);
    return caps;
}

void require(bool condition, const std::string& message) {
    if (!condition) throw UsageError(message);
}

void check_format(const GlobalOptions& g, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (g.format == f) return;
    std::string list;
    for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
    throw UsageError("--format must be one of: " + list);
}

/// Writes to --out when given, otherwise to stdout.
void emit(const GlobalOptions& g, std::ostream& out, const std::string& text) {
    if (g.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + g.out_path + " for writing");
    file << text;
    if (!file) throw std::runtime_error("write to " + g.out_path + " failed");
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// ---------------------------------------------------------------------------
// RunReport

struct Check {
    std::string name;
    std::string status;  // pass | fail | skipped
    std::string detail;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Check> checks;
    std::chrono::duration<double> elapsed{};
    std::optional<json> payload;
    std::string trailer;  // extra text for table output

    bool all_passed(bool allow_skip) const {
        return std::all_of(checks.begin(), checks.end(), [&](const Check& c) {
            return c.status == "pass" || (allow_skip && c.status == "skipped");
        });
    }
};

std::string render_report(const RunReport& report, const std::string& format, bool passed) {
    std::ostringstream s;
    if (format == "json") {
        json j;
        j["command"] = report.command;
        json params = json::object();
        for (const auto& [key, value] : report.parameters) params[key] = value;
        j["parameters"] = std::move(params);
        json checks = json::array();
        for (const Check& c : report.checks)
            checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
        j["checks"] = std::move(checks);
        j["passed"] = passed;
        j["elapsed_ms"] = static_cast<std::int64_t>(report.elapsed.count() * 1000.0);
        if (report.payload) j["result"] = *report.payload;
        s << j.dump(2) << '\n';
    } else if (format == "csv") {
        s << "check,status,detail\n";
        for (const Check& c : report.checks) s << c.name << ',' << c.status << ",\"" << c.detail << "\"\n";
    } else {
        s << report.command;
        for (const auto& [key, value] : report.parameters) s << ' ' << key << '=' << value;
        s << '\n';
        std::size_t width = 0;
        for (const Check& c : report.checks) width = std::max(width, c.name.size());
        for (const Check& c : report.checks)
            s << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(7) << c.status
              << "  " << c.detail << '\n';
        s << report.trailer << "result: " << (passed ? "pass" : "fail") << '\n';
    }
    return s.str();
}

int finish_report(const GlobalOptions& g, RunReport& report, std::chrono::steady_clock::time_point started,
                  bool allow_skip, std::ostream& out, std::ostream& err) {
    report.elapsed = std::chrono::steady_clock::now() - started;
    const bool passed = report.all_passed(allow_skip);
    emit(g, out, render_report(report, g.format, passed));
    if (!g.quiet && g.format != "json")
        err << "elapsed: " << std::fixed << std::setprecision(3) << report.elapsed.count() << " s\n";
    return passed ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------
// spectrum

std::string render_spectrum(const SpectrumTable& table, const std::string& format) {
    std::ostringstream s;
    if (format == "json") {
        s << spectrum_to_json(table).dump(2) << '\n';
    } else if (format == "csv") {
        s << "eigenvalue,multiplicity\n";
        for (const auto& [value, mult] : table.entries()) s << value << ',' << mult.get_str() << '\n';
    } else {
        std::size_t width = std::string("multiplicity").size();
        for (const auto& [value, mult] : table.entries()) width = std::max(width, mult.get_str().size());
        s << pad_left("eigenvalue", 10) << "  " << pad_left("multiplicity", width) << '\n';
        for (const auto& [value, mult] : table.entries())
            s << pad_left(std::to_string(value), 10) << "  " << pad_left(mult.get_str(), width) << '\n';
        s << "order " << table.order().get_str() << '\n';
    }
    return s.str();
}

struct SpectrumArgs {
    std::string family = "middle";
    int k = 0;
    int n = 0;
    int m = 0;
};

int cmd_spectrum(const GlobalOptions& g, const SpectrumArgs& a, std::ostream& out) {
    check_format(g, {"table", "csv", "json"});
    SpectrumTable table;
    if (a.family == "middle") {
        require(a.k >= 1, "spectrum: --k must be >= 1");
        table = middle_cube_spectrum(a.k);
    } else {
        require(a.m >= 1 && a.m <= a.n, "spectrum: johnson needs 1 <= --m <= --n");
        table = johnson_spectrum(a.n, a.m);
    }
    emit(g, out, render_spectrum(table, g.format));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const GlobalOptions& g, int k_max, bool oeis, std::ostream& out) {
    check_format(g, {"table", "csv", "json"});
    require(k_max >= 1, "table: --kmax must be >= 1");
    std::vector<long> columns;
    for (long v = -(k_max + 1); v <= k_max + 1; ++v)
        if (v != 0) columns.push_back(v);

    // cells[row][col]; empty string marks an absent eigenvalue.
    std::vector<long> orders;
    std::vector<std::vector<std::string>> cells;
    for (int k = 1; k <= k_max; ++k) {
        const SpectrumTable t = middle_cube_spectrum(k);
        orders.push_back(2L * k + 1);
        std::vector<std::string> row;
        for (long v : columns) {
            const BigInt m = t.multiplicity(v);
            row.push_back(sgn(m) == 0 ? std::string() : m.get_str());
        }
        cells.push_back(std::move(row));
    }

    std::vector<BigInt> sequence;
    bool prefix_match = false;
    if (oeis) {
        sequence = multiplicity_sequence(k_max);
        const std::vector<BigInt> check = multiplicity_sequence(std::max(k_max, 3));
        prefix_match = std::equal(kA050166Prefix.begin(), kA050166Prefix.end(), check.begin(),
                                  [](long expected, const BigInt& got) { return got == expected; });
    }

    std::ostringstream s;
    if (g.format == "json") {
        json j;
        j["columns"] = columns;
        json rows = json::array();
        for (std::size_t r = 0; r < cells.size(); ++r) {
            json mult = json::object();
            for (std::size_t c = 0; c < columns.size(); ++c)
                if (!cells[r][c].empty()) mult[std::to_string(columns[c])] = cells[r][c];
            rows.push_back({{"n", orders[r]}, {"multiplicities", std::move(mult)}});
        }
        j["rows"] = std::move(rows);
        if (oeis) {
            json seq = json::array();
            for (const BigInt& v : sequence) seq.push_back(v.get_str());
            j["oeis"] = {{"sequence", "A050166"}, {"values", std::move(seq)}, {"prefix_match", prefix_match}};
        }
        s << j.dump(2) << '\n';
    } else if (g.format == "csv") {
        s << 'n';
        for (long v : columns) s << ',' << v;
        s << '\n';
        for (std::size_t r = 0; r < cells.size(); ++r) {
            s << orders[r];
            for (const std::string& cell : cells[r]) s << ',' << cell;
            s << '\n';
        }
    } else {
        std::size_t width = std::to_string(orders.back()).size();
        for (long v : columns) width = std::max(width, std::to_string(v).size());
        for (const auto& row : cells)
            for (const auto& cell : row) width = std::max(width, cell.size());
        s << pad_left("n", width);
        for (long v : columns) s << " | " << pad_left(std::to_string(v), width);
        s << '\n';
        for (std::size_t r = 0; r < cells.size(); ++r) {
            s << pad_left(std::to_string(orders[r]), width);
            for (const std::string& cell : cells[r]) s << " | " << pad_left(cell, width);
            s << '\n';
        }
    }
    if (oeis && g.format != "json") {
        s << "A050166:";
        for (std::size_t i = 0; i < sequence.size(); ++i) s << (i == 0 ? " " : ", ") << sequence[i].get_str();
        s << "\nprefix match: " << (prefix_match ? "true" : "false") << '\n';
    }
    emit(g, out, s.str());
    return oeis && !prefix_match ? kExitFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    int k = 0;
    std::vector<std::string> checks;
    bool allow_skip = false;
};

Check check_eigen(int k) {
    const int n = 2 * k + 1;
    const SparseGraph g = build_middle_cube(k, GraphCaps{.max_middle_k = k});
    std::size_t total = 0;
    std::string failure;
    for (const EigenbasisBlock& block : full_eigenbasis(k)) {
        const BigInt expected_rows = binomial(n, block.r) - binomial(n, block.r - 1);
        if (expected_rows != static_cast<unsigned long>(block.vectors.rows()) && failure.empty())
            failure = "block r=" + std::to_string(block.r) + " has " + std::to_string(block.vectors.rows()) +
                      " rows, expected " + expected_rows.get_str();
        if (!verify_block(g, block) && failure.empty())
            failure = "block r=" + std::to_string(block.r) + " eigenvalue " + std::to_string(block.eigenvalue) +
                      " has a non-eigenvector row";
        total += block.vectors.rows();
    }
    if (total != g.num_vertices() && failure.empty())
        failure = std::to_string(total) + " vectors, expected " + std::to_string(g.num_vertices());
    if (!failure.empty()) return {"eigen", "fail", failure};
    return {"eigen", "pass",
            std::to_string(total) + " eigenvectors certified in " + std::to_string(2 * (k + 1)) + " blocks"};
}

Check check_msq(int k) {
    const MSquaredReport r = check_m_squared(k);
    std::string detail = std::to_string(r.order) + "x" + std::to_string(r.order) + " square";
    if (!r.complement_isomorphism) detail += "; lower block is not J(n,k+1) under complement";
    if (!r.square_matches) detail += "; M^2 differs from blockdiag(J, J) + (k+1)I";
    return {"msq", r.passed() ? "pass" : "fail", detail};
}

Check check_moments(int k, const GraphCaps& caps) {
    const MomentReport r = moment_report(build_middle_cube(k, caps), middle_cube_spectrum(k));
    std::string detail = "p = 0.." + std::to_string(r.moments.empty() ? 0 : r.moments.back().power) + " matched";
    for (const MomentCheck& m : r.moments)
        if (m.observed != m.expected) {
            detail = "trace(A^" + std::to_string(m.power) + ") = " + m.observed.get_str() + ", claimed " +
                     m.expected.get_str();
            break;
        }
    if (!r.order_matches) detail += "; multiplicities do not sum to the vertex count";
    return {"moments", r.passed ? "pass" : "fail", detail};
}

Check check_rank(int k) {
    const int n = 2 * k + 1;
    for (int r = 1; r <= k; ++r)
        if (!incidence_has_full_rank(n, r))
            return {"rank", "fail", "M_{" + std::to_string(r) + "," + std::to_string(r - 1) + "} is rank deficient"};
    return {"rank", "pass", "M_{r,r-1} full rank for r = 1.." + std::to_string(k) + ", n = " + std::to_string(n)};
}

Check check_charpoly(int k) {
    const SparseGraph g = build_middle_cube(k, GraphCaps{.max_middle_k = k});
    const bool ok = characteristic_polynomial_oracle(g) == polynomial_from_spectrum(middle_cube_spectrum(k));
    return {"charpoly", ok ? "pass" : "fail",
            "degree " + std::to_string(g.num_vertices()) + (ok ? " coefficients equal" : " coefficients differ")};
}

int cmd_verify(const GlobalOptions& g, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    check_format(g, {"table", "csv", "json"});
    require(a.k >= 1, "verify: --k must be >= 1");
    const auto started = std::chrono::steady_clock::now();
    const GraphCaps caps = graph_caps(g);
    const int n = 2 * a.k + 1;

    RunReport report;
    report.command = "verify";
    report.parameters = {{"k", std::to_string(a.k)}, {"n", std::to_string(n)}};

    const auto half = binomial(n, a.k);
    for (const std::string& name : a.checks) {
        auto skip = [&](const std::string& cap) { report.checks.push_back({name, "skipped", "over cap: " + cap}); };
        if (name == "eigen") {
            if (a.k > kDefaultEigenbasisMaxK) skip("k <= " + std::to_string(kDefaultEigenbasisMaxK));
            else report.checks.push_back(check_eigen(a.k));
        } else if (name == "msq") {
            if (a.k > kMSquaredMaxK) skip("k <= " + std::to_string(kMSquaredMaxK));
            else report.checks.push_back(check_msq(a.k));
        } else if (name == "moments") {
            if (a.k > caps.max_middle_k) skip("k <= " + std::to_string(caps.max_middle_k));
            else report.checks.push_back(check_moments(a.k, caps));
        } else if (name == "rank") {
            if (a.k > kDefaultEigenbasisMaxK) skip("k <= " + std::to_string(kDefaultEigenbasisMaxK));
            else report.checks.push_back(check_rank(a.k));
        } else if (name == "charpoly") {
            if (2 * half > static_cast<unsigned long>(kCharpolyMaxVertices))
                skip(std::to_string(kCharpolyMaxVertices) + " vertices, M_" + std::to_string(n) + " has " +
                     BigInt(2 * half).get_str());
            else report.checks.push_back(check_charpoly(a.k));
        } else {
            throw UsageError("verify: unknown check '" + name + "'");
        }
    }
    require(!report.checks.empty(), "verify: no checks requested");
    return finish_report(g, report, started, a.allow_skip, out, err);
}

// ---------------------------------------------------------------------------
// eigenbasis

int cmd_eigenbasis(const GlobalOptions& g, int k, int r, bool negative, std::ostream& out, std::ostream& err) {
    check_format(g, {"table"});
    require(k >= 1 && k <= kDefaultEigenbasisMaxK,
            "eigenbasis: --k must be in [1, " + std::to_string(kDefaultEigenbasisMaxK) + "]");
    require(r >= 0 && r <= k, "eigenbasis: --r must be in [0, k]");
    EigenbasisBlock block = lift_block(k, r);
    if (negative) block = sign_flip(block);
    std::ostringstream text;
    write_block(text, block);
    std::ostringstream summary;
    summary << "eigenvalue " << block.eigenvalue << ", dimension " << block.vectors.rows() << ", vector length "
            << block.vectors.cols() << '\n';
    if (g.out_path.empty()) {
        out << text.str();
        if (!g.quiet) err << summary.str();
    } else {
        emit(g, out, text.str());
        if (!g.quiet) out << summary.str();
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// hamilton

int cmd_hamilton(const GlobalOptions& g, int k, std::ostream& out, std::ostream& err) {
    check_format(g, {"table", "csv", "json"});
    require(k >= 1, "hamilton: --k must be >= 1");
    const auto started = std::chrono::steady_clock::now();
    const GraphCaps caps = graph_caps(g);
    require(k <= caps.max_middle_k, "hamilton: k exceeds max k " + std::to_string(caps.max_middle_k));
    const std::uint64_t budget = resolve_budget(g);
    const SparseGraph graph = build_middle_cube(k, caps);
    const SearchResult result = find_hamiltonian_cycle(graph, budget);

    RunReport report;
    report.command = "hamilton";
    report.parameters = {{"k", std::to_string(k)}, {"budget", std::to_string(budget)}};
    if (result.cycle) {
        const bool ok = verify_cycle(graph, *result.cycle);
        report.checks.push_back({"cycle", ok ? "pass" : "fail",
                                 "length " + std::to_string(result.cycle->vertices.size()) + ", " +
                                     (ok ? "verified" : "REJECTED by verify_cycle") + ", " +
                                     std::to_string(result.expansions) + " expansions"});
        const json cert = certificate_to_json(*result.cycle, graph);
        if (!g.out_path.empty()) {
            std::ofstream file(g.out_path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open " + g.out_path + " for writing");
            file << cert.dump() << '\n';
        } else if (g.format == "json") {
            report.payload = cert;
        } else {
            report.trailer = "certificate: " + cert.at("cycle").dump() + "\n";
        }
    } else {
        report.checks.push_back(
            {"cycle", "fail", "unknown: " + result.note + " after " + std::to_string(result.expansions) + " expansions"});
    }
    GlobalOptions to_stdout = g;
    to_stdout.out_path.clear();
    return finish_report(to_stdout, report, started, false, out, err);
}

// ---------------------------------------------------------------------------
// export

struct ExportArgs {
    std::string family;
    int n = 0;
    int k = 0;
    int m = 0;
};

int cmd_export(const GlobalOptions& g, const ExportArgs& a, std::ostream& out) {
    check_format(g, {"table", "json"});
    const GraphCaps caps = graph_caps(g);
    SparseGraph graph;
    if (a.family == "hypercube") {
        require(a.n >= 1, "export: hypercube needs --n >= 1");
        graph = build_hypercube(a.n, caps);
    } else if (a.family == "middle") {
        require(a.k >= 1 && a.k <= caps.max_middle_k,
                "export: middle needs 1 <= --k <= " + std::to_string(caps.max_middle_k));
        graph = build_middle_cube(a.k, caps);
    } else {
        require(a.m >= 1 && a.m <= a.n, "export: johnson needs 1 <= --m <= --n");
        graph = build_johnson(a.n, a.m, caps);
    }
    std::ostringstream s;
    if (g.format == "json")
        s << graph_to_json(graph).dump() << '\n';
    else
        write_edge_list(s, graph);
    emit(g, out, s.str());
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra, eigenbases and Hamiltonian cycles of middle-cube graphs", "midspec"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--format", g.format, "Output format: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--out", g.out_path, "Write the main output to PATH");
    app.add_flag("--quiet", g.quiet, "Suppress diagnostics on stderr");
    app.add_option("--max-k", g.max_k, "Largest middle-cube k to generate (env MIDSPEC_MAX_K)");
    app.fallthrough();

    SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand("spectrum", "Closed-form spectrum of M_{2k+1} or J(n,m)");
    spectrum->add_option("--family", spectrum_args.family)->check(CLI::IsMember({"middle", "johnson"}));
    spectrum->add_option("--k", spectrum_args.k, "Middle-cube half size");
    spectrum->add_option("--n", spectrum_args.n, "Johnson ground set size");
    spectrum->add_option("--m", spectrum_args.m, "Johnson subset size");

    int table_kmax = 0;
    bool table_oeis = false;
    auto* table = app.add_subcommand("table", "Multiplicity table for n = 3, 5, ..., 2 kmax + 1");
    table->add_option("--kmax", table_kmax)->required();
    table->add_flag("--oeis", table_oeis, "Append the multiplicity sequence and check its known prefix");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Certify spectrum claims for M_{2k+1}");
    verify->add_option("--k", verify_args.k)->required();
    verify->add_option("--checks", verify_args.checks, "Comma-separated: eigen,msq,moments,rank,charpoly")
        ->delimiter(',')
        ->default_str("eigen,msq,moments,rank,charpoly");
    verify->add_flag("--allow-skip", verify_args.allow_skip, "Do not fail on checks skipped for size");

    int eig_k = 0;
    int eig_r = 0;
    bool eig_negative = false;
    auto* eigenbasis = app.add_subcommand("eigenbasis", "Write the exact eigenvector block for eigenvalue k+1-r");
    eigenbasis->add_option("--k", eig_k)->required();
    eigenbasis->add_option("--r", eig_r)->required();
    eigenbasis->add_flag("--negative", eig_negative, "Emit the sign-flipped block for eigenvalue r-k-1");

    int ham_k = 0;
    auto* hamilton = app.add_subcommand("hamilton", "Search for a Hamiltonian cycle in M_{2k+1}");
    hamilton->add_option("--k", ham_k)->required();
    hamilton->add_option("--budget", g.budget, "Node expansion budget (env MIDSPEC_BUDGET)");

    ExportArgs export_args;
    auto* exporter = app.add_subcommand("export", "Write a graph as an edge list (or JSON)");
    exporter->add_option("--family", export_args.family)
        ->required()
        ->check(CLI::IsMember({"hypercube", "middle", "johnson"}));
    exporter->add_option("--n", export_args.n);
    exporter->add_option("--k", export_args.k);
    exporter->add_option("--m", export_args.m);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    if (verify_args.checks.empty()) verify_args.checks = {"eigen", "msq", "moments", "rank", "charpoly"};

    try {
        if (*spectrum) return cmd_spectrum(g, spectrum_args, out);
        if (*table) return cmd_table(g, table_kmax, table_oeis, out);
        if (*verify) return cmd_verify(g, verify_args, out, err);
        if (*eigenbasis) return cmd_eigenbasis(g, eig_k, eig_r, eig_negative, out, err);
        if (*hamilton) return cmd_hamilton(g, ham_k, out, err);
        if (*exporter) return cmd_export(g, export_args, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.get_subcommands().front()->help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace midspec
