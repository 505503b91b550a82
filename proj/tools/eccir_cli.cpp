// Command-line front end: construct, profile, verify, simulate, search-piret.
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include "eccir/constructions.hpp"
#include "eccir/eccir.hpp"
#include "eccir/serialize.hpp"
#include "eccir/sim.hpp"
#include "eccir/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace {

using namespace eccir;
namespace cs = eccir::constructions;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

std::uint64_t to_u64(const std::string& s) {
    std::size_t pos = 0;
    std::string t = s;
    t.erase(0, t.find_first_not_of(' '));
    t.erase(t.find_last_not_of(' ') + 1);
    if (t.empty()) throw UsageError("empty number");
    const auto v = std::stoull(t, &pos);
    if (pos != t.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

std::vector<std::uint64_t> parse_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    for (const auto& part : split(s, ','))
        if (part.find_first_not_of(' ') != std::string::npos) out.push_back(to_u64(part));
    return out;
}

// "1,3;5,15;7,11"
std::vector<std::vector<std::uint64_t>> parse_parts(const std::string& s) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& part : split(s, ';')) out.push_back(parse_list(part));
    return out;
}

Subset parse_subset(const std::string& s) {
    std::vector<std::size_t> idx;
    for (auto v : parse_list(s)) idx.push_back(static_cast<std::size_t>(v));
    return subset_from_indices(idx);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

Eccir load_eccir(const std::string& path) { return io::eccir_from_json(io::parse(read_file(path))); }

cyclic::CyclicCodeSpec inner_spec(std::uint64_t n, const std::string& reps) {
    const auto r = parse_list(reps);
    return cyclic::CyclicCodeSpec(n, 2, cyclic::coset_union(r, n, 2));
}

struct Common {
    int threads = 0;
    int dim_limit = 0;

    code::MinDistanceConfig config() const {
        auto cfg = code::config_from_env();
        if (dim_limit > 0) cfg.exhaustive_dim_limit = static_cast<unsigned>(dim_limit);
        cfg.threads = static_cast<unsigned>(threads);
        return cfg;
    }
};

nlohmann::json piret_json(const cs::PiretResult& r) {
    return {{"inner", io::to_json(r.inner)},
            {"beta", r.beta},
            {"d1", r.d1},
            {"d_inner", r.d_inner},
            {"maximizers", r.maximizers},
            {"eccir", io::to_json(r.eccir)}};
}

void print_verify_table(const std::vector<verify::SuiteReport>& reports) {
    for (const auto& rep : reports) {
        std::cout << "== " << rep.name << " (" << std::fixed << std::setprecision(2) << rep.seconds << " s) "
                  << (rep.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : rep.checks)
            std::cout << "  " << (c.pass ? "ok  " : "FAIL") << "  " << std::left << std::setw(58) << c.locus << " expected "
                      << c.expected << ", got " << c.actual << " [" << verify::to_string(c.feasibility) << "]\n";
        if (!rep.error.empty()) std::cout << "  error: " << rep.error << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codes for informed receivers: construction, distance profiles, reproduction checks, simulation"};
    app.require_subcommand(1);
    Common common;

    // construct
    auto* construct = app.add_subcommand("construct", "Build a code collection and write it as JSON");
    std::string family, out_path, parts, inner_reps = "1", keep, in_path;
    std::uint64_t q = 0, n = 0, L = 0, m = 0, inner_n = 0, k_split = 0, beta = 0, d_split = 0;
    construct->add_option("family", family, "grs-mdsir | concat | piret | primitive-pair | qr | cr | coset-partition | dbt-split")
        ->required()
        ->check(CLI::IsMember({"grs-mdsir", "concat", "piret", "primitive-pair", "qr", "cr", "coset-partition", "dbt-split"}));
    construct->add_option("--q", q, "Field order");
    construct->add_option("--n", n, "Length (outer length for concat)");
    construct->add_option("--L", L, "Number of components");
    construct->add_option("--m", m, "Degree for primitive-pair");
    construct->add_option("--parts", parts, "Coset representatives per component, e.g. \"1,3;5,15;7,11\"");
    construct->add_option("--inner-n", inner_n, "Length of the binary cyclic inner code (concat, piret)");
    construct->add_option("--inner-reps", inner_reps, "Coset representatives of the inner nonzeroes")->capture_default_str();
    construct->add_option("--beta", beta, "Piret beta; searched when omitted");
    construct->add_option("--keep", keep, "cr: keep only these components, e.g. \"1,2\"");
    construct->add_option("--in", in_path, "dbt-split: systematic generator matrix JSON {\"q\",\"rows\"}");
    construct->add_option("--k", k_split, "dbt-split: message size k");
    construct->add_option("--d", d_split, "dbt-split: distance of the systematic code (computed when omitted)");
    construct->add_option("--out,-o", out_path, "Output file (stdout when omitted)");
    construct->add_option("--threads", common.threads, "Worker threads (0 = available parallelism)");

    // profile
    auto* profile = app.add_subcommand("profile", "Distance profile of every subset-sum code");
    std::string format = "json";
    bool use_eq = false;
    profile->add_option("--in,-i", in_path, "Code collection JSON")->required();
    profile->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    profile->add_option("--dim-limit", common.dim_limit, "Exhaustive enumeration limit in bits (default 28 or ECCIR_DIM_LIMIT)");
    profile->add_flag("--use-equivalences", use_eq, "Reuse distances across recorded, re-verified equivalences");
    profile->add_option("--threads", common.threads, "Worker threads (0 = available parallelism)");
    profile->add_option("--out,-o", out_path, "Output file (stdout when omitted)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Reproduce the stored tables and examples");
    std::vector<std::string> suites;
    bool verify_json = false;
    verify_cmd->add_option("suites", suites, "Suite names or 'all'")->required();
    verify_cmd->add_option("--dim-limit", common.dim_limit, "Exhaustive enumeration limit in bits");
    verify_cmd->add_option("--threads", common.threads, "Worker threads (0 = available parallelism)");
    verify_cmd->add_flag("--json", verify_json, "Print results as JSON");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Channel trials with informed receivers");
    std::string side_info = "";
    std::size_t errors = 0, trials = 1000;
    std::uint64_t seed = 1;
    double bsc = -1;
    simulate->add_option("--in,-i", in_path, "Code collection JSON")->required();
    simulate->add_option("--side-info", side_info, "Known message indices, e.g. \"1,2\"; empty for none; 'all' cycles every proper subset");
    simulate->add_option("--errors", errors, "Exact error weight t");
    simulate->add_option("--bsc", bsc, "Independent symbol error probability (replaces --errors)");
    simulate->add_option("--trials", trials, "Number of trials")->capture_default_str();
    simulate->add_option("--seed", seed, "Seed; trial i uses seed + i")->capture_default_str();
    simulate->add_option("--dim-limit", common.dim_limit, "Exhaustive enumeration limit in bits");
    simulate->add_option("--threads", common.threads, "Worker threads (0 = available parallelism)");
    simulate->add_option("--out,-o", out_path, "Output file (stdout when omitted)");

    // search-piret
    auto* search = app.add_subcommand("search-piret", "Search beta maximizing d(C_1) for an irreducible inner code");
    bool reference = false;
    search->add_option("--inner-n", inner_n, "Length of the binary cyclic inner code")->required();
    search->add_option("--inner-reps", inner_reps, "Coset representatives of the inner nonzeroes")->capture_default_str();
    search->add_flag("--reference", reference, "Enumerate C_1 for every beta instead of using the weight table");
    search->add_option("--threads", common.threads, "Worker threads (0 = available parallelism)");
    search->add_option("--out,-o", out_path, "Output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) {
            auto need = [&](std::uint64_t v, const char* name) {
                if (v == 0) throw UsageError(std::string("construct ") + family + ": --" + name + " is required");
                return v;
            };
            std::optional<Eccir> e;
            if (family == "grs-mdsir") {
                e = cs::mdsir_from_grs(need(q, "q"), need(n, "n"), need(L, "L"));
            } else if (family == "concat") {
                const auto outer = cs::mdsir_from_grs(need(q, "q"), need(n, "n"), need(L, "L"));
                e = cs::concatenate({outer, cyclic::generator_matrix_of(inner_spec(need(inner_n, "inner-n"), inner_reps))});
            } else if (family == "piret") {
                const auto spec = inner_spec(need(inner_n, "inner-n"), inner_reps);
                e = beta ? cs::piret_pair(spec, beta, static_cast<unsigned>(common.threads)).eccir
                         : cs::piret_search(spec, static_cast<unsigned>(common.threads)).eccir;
            } else if (family == "primitive-pair") {
                e = cs::primitive_pair(static_cast<unsigned>(need(m, "m")));
            } else if (family == "qr") {
                e = cs::quadratic_residue_pair(need(n, "n"));
            } else if (family == "cr") {
                e = cs::cubic_residue_triple(need(n, "n"));
                if (!keep.empty()) e = cs::sub_collection(*e, parse_subset(keep));
            } else if (family == "coset-partition") {
                if (parts.empty()) throw UsageError("construct coset-partition: --parts is required");
                e = cs::coset_partition_eccir(need(n, "n"), q ? q : 2, parse_parts(parts));
            } else if (family == "dbt-split") {
                if (in_path.empty()) throw UsageError("construct dbt-split: --in is required");
                const auto g = io::generator_from_json(io::parse(read_file(in_path)));
                e = dbt_baseline_split(g, need(k_split, "k"), need(L, "L"),
                                       d_split ? std::optional<std::size_t>(d_split) : std::nullopt, common.config())
                        .eccir;
            }
            write_output(out_path, io::dump(io::to_json(*e)));
            return 0;
        }
        if (profile->parsed()) {
            const Eccir e = load_eccir(in_path);
            const auto p = distance_profile(e, {common.config(), use_eq});
            write_output(out_path, format == "csv" ? io::profile_csv(p) : io::dump(io::to_json(p)));
            return 0;
        }
        if (verify_cmd->parsed()) {
            std::vector<std::string> names;
            for (const auto& s : suites) {
                if (s == "all") {
                    names.insert(names.end(), verify::suite_names().begin(), verify::suite_names().end());
                } else {
                    if (std::find(verify::suite_names().begin(), verify::suite_names().end(), s) == verify::suite_names().end())
                        throw UsageError("unknown suite '" + s + "'");
                    names.push_back(s);
                }
            }
            std::vector<verify::SuiteReport> reports;
            bool ok = true;
            for (const auto& name : names) {
                reports.push_back(verify::run_suite(name, {common.config()}));
                ok &= reports.back().passed();
            }
            if (verify_json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& r : reports) {
                    nlohmann::json checks = nlohmann::json::array();
                    for (const auto& c : r.checks)
                        checks.push_back({{"locus", c.locus},
                                          {"expected", c.expected},
                                          {"actual", c.actual},
                                          {"feasibility", verify::to_string(c.feasibility)},
                                          {"pass", c.pass}});
                    out.push_back({{"suite", r.name}, {"pass", r.passed()}, {"seconds", r.seconds}, {"error", r.error}, {"checks", checks}});
                }
                std::cout << io::dump(out);
            } else {
                print_verify_table(reports);
            }
            return ok ? 0 : 1;
        }
        if (simulate->parsed()) {
            const Eccir e = load_eccir(in_path);
            std::vector<Subset> sets;
            if (side_info == "all")
                sets = sim::all_side_info_sets(e.L());
            else
                sets.push_back(parse_subset(side_info));
            sim::ChannelConfig channel;
            channel.error_weight = errors;
            if (bsc >= 0) channel.flip_probability = bsc;
            const auto report = sim::run_trials(e, sets, channel, trials, seed, common.config());
            write_output(out_path, io::dump(io::to_json(report)));
            return 0;
        }
        if (search->parsed()) {
            const auto spec = inner_spec(inner_n, inner_reps);
            const auto r = reference ? cs::piret_search_reference(spec, static_cast<unsigned>(common.threads))
                                     : cs::piret_search(spec, static_cast<unsigned>(common.threads));
            write_output(out_path, io::dump(piret_json(r)));
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
