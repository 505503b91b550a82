#include "eccir/verify.hpp"

#include "eccir/constructions.hpp"
#include "eccir/cyclic.hpp"
#include "eccir/eccir.hpp"
#include "eccir/numtheory.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace eccir::verify {

std::string_view to_string(Feasibility f) {
    switch (f) {
        case Feasibility::exact: return "exact";
        case Feasibility::structural: return "structural";
        case Feasibility::bounds_only: return "bounds-only";
    }
    return "unknown";
}

bool SuiteReport::passed() const {
    if (!error.empty() || checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

using code::DistanceResult;
namespace cs = constructions;

std::string show(const DistanceResult& d) {
    if (d.is_exact()) return std::to_string(d.value()) + " (" + std::string(code::to_string(d.method)) + ")";
    return "[" + std::to_string(d.lower) + "," + std::to_string(d.upper) + "] (" + std::string(code::to_string(d.method)) + ")";
}

struct Recorder {
    SuiteReport& report;

    void exact(std::string locus, std::size_t expected, const DistanceResult& d) {
        report.checks.push_back({std::move(locus), std::to_string(expected), show(d),
                                 d.method == code::DistanceMethod::exhaustive ? Feasibility::exact : Feasibility::structural,
                                 d.is_exact() && d.value() == expected});
    }
    void at_least(std::string locus, std::size_t bound, const DistanceResult& d) {
        report.checks.push_back({std::move(locus), ">= " + std::to_string(bound), show(d),
                                 d.is_exact() ? Feasibility::exact : Feasibility::bounds_only, d.lower >= bound});
    }
    void within(std::string locus, std::size_t claimed, const DistanceResult& d) {
        report.checks.push_back({std::move(locus), std::to_string(claimed) + " inside interval", show(d), Feasibility::bounds_only,
                                 d.lower <= claimed && claimed <= d.upper});
    }
    void equal(std::string locus, std::size_t expected, std::size_t actual, Feasibility f = Feasibility::structural) {
        report.checks.push_back({std::move(locus), std::to_string(expected), std::to_string(actual), f, expected == actual});
    }
    void flag(std::string locus, std::string expected, bool ok, Feasibility f = Feasibility::structural) {
        report.checks.push_back({std::move(locus), expected, ok ? expected : "not " + expected, f, ok});
    }
};

std::string bracket(std::size_t n, std::size_t k, std::size_t d) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

bool multiplier_maps(const Eccir& e, Subset from, Subset to, std::uint64_t a) {
    const auto perm = cyclic::multiplier_permutation(e.n(), a);
    return code::equal_up_to_permutation(e.stacked(from), e.stacked(to), perm);
}

// ---------------------------------------------------------------------------

void suite_example1(Recorder& r, const VerifyOptions& opt) {
    const Eccir e = cs::example1_triple();
    r.equal("example1 L", 3, e.L());
    r.equal("example1 k", 10, e.k());
    const auto profile = distance_profile(e, {opt.distance, false});
    const std::size_t expected_by_size[] = {12, 6, 2};
    for (const auto& entry : profile.entries) {
        const std::size_t s = subset_size(entry.subset);
        r.exact("example1 d(C_" + subset_label(entry.subset) + ")", expected_by_size[s - 1], entry.distance);
    }
    // Lemma 2 style equivalences: mu_5 maps C_2 onto C_1 and mu_7 maps C_3 onto C_1.
    r.flag("example1 mu_5(C_2) = C_1", "row spaces equal", multiplier_maps(e, 2, 1, 5), Feasibility::exact);
    r.flag("example1 mu_7(C_3) = C_1", "row spaces equal", multiplier_maps(e, 4, 1, 7), Feasibility::exact);
}

struct Table1Row {
    std::uint64_t n;
    std::size_t k, d_inner, d1;
};
constexpr Table1Row kTable1[] = {
    {9, 6, 2, 6},     {17, 8, 6, 14},    {21, 6, 8, 20},    {39, 12, 12, 32},
    {41, 20, 10, 26}, {55, 20, 16, 40}, {65, 12, 26, 56},
};

void suite_table1(Recorder& r, const VerifyOptions& opt) {
    for (const auto& row : kTable1) {
        const cyclic::CyclicCodeSpec inner(row.n, 2, cyclic::coset(1, row.n, 2).members);
        const std::string tag = "table1 inner " + bracket(row.n, row.k, row.d_inner);
        r.equal(tag + " dimension", row.k, inner.dimension());
        const auto res = cs::piret_search(inner, opt.distance.threads);
        r.equal(tag + " d(inner)", row.d_inner, res.d_inner, Feasibility::exact);
        r.equal(tag + " max d(C_1) over beta", row.d1, res.d1, Feasibility::exact);
        const auto profile = distance_profile(res.eccir, {opt.distance, true});
        r.exact(tag + " d(C_1) beta=" + std::to_string(res.beta), row.d1, profile.at(1).distance);
        r.exact(tag + " d(C_2)", row.d1, profile.at(2).distance);
        r.exact(tag + " d(C_1+C_2)", row.d_inner, profile.at(3).distance);
    }
}

constexpr std::size_t kTable2D2[] = {4, 6, 16, 24, 64, 120};
constexpr std::size_t kTable2Bound[] = {2, 4, 12, 24, 54, 112};

void suite_table2(Recorder& r, const VerifyOptions& opt) {
    for (unsigned m = 3; m <= 8; ++m) {
        const Eccir e = cs::primitive_pair(m);
        const std::string tag = "table2 m=" + std::to_string(m) + " n=" + std::to_string(e.n());
        r.equal(tag + " k", m, e.k());
        const auto profile = distance_profile(e, {opt.distance, false});
        r.exact(tag + " d(C_1)", std::size_t{1} << (m - 1), profile.at(1).distance);
        r.exact(tag + " d(C_2)", kTable2D2[m - 3], profile.at(2).distance);
        r.equal(tag + " printed lower bound on d(C)", kTable2Bound[m - 3], code::carlitz_uchiyama_even_bound(m));
        const auto& sum = profile.at(3).distance;
        r.at_least(tag + " d(C) vs lower bound", kTable2Bound[m - 3], sum);
        r.flag(tag + " d(C) even", "even", sum.is_exact() && sum.value() % 2 == 0, Feasibility::exact);
    }
}

struct Table3Row {
    std::uint64_t n;
    std::size_t k, d_comp, d_pair;
    bool exact;
};
constexpr Table3Row kTable3[] = {
    {31, 10, 10, 6, true}, {43, 14, 14, 6, true}, {109, 36, 24, 10, false}, {127, 42, 28, 14, false}};

void suite_table3(Recorder& r, const VerifyOptions& opt) {
    for (const auto& row : kTable3) {
        const Eccir e = cs::cubic_residue_triple(row.n);
        const std::string tag = "table3 n=" + std::to_string(row.n);
        r.equal(tag + " k", row.k, e.k());

        // Nonzero sets partition Z_n^*.
        std::vector<int> hits(row.n, 0);
        for (const auto& s : e.provenance().component_specs)
            for (std::uint64_t t : s->nonzeroes()) ++hits[t];
        bool partition = hits[0] == 0;
        for (std::uint64_t t = 1; t < row.n; ++t) partition &= hits[t] == 1;
        r.flag(tag + " nonzeroes partition Z_n^*", "partition", partition);

        const std::uint64_t b = e.provenance().parameters.at("b").get<std::uint64_t>();
        const std::uint64_t binv = nt::invmod(b, row.n), binv2 = nt::mulmod(binv, binv, row.n);
        r.flag(tag + " C_1 = mu(C_2) with T_1 = b T_2", "row spaces equal", multiplier_maps(e, 2, 1, binv));
        r.flag(tag + " C_1 = mu(C_3) with T_1 = b^2 T_3", "row spaces equal", multiplier_maps(e, 4, 1, binv2));
        r.flag(tag + " C_1+C_2 = mu(C_2+C_3)", "row spaces equal", multiplier_maps(e, 6, 3, binv));
        r.flag(tag + " C_1+C_2 = mu(C_1+C_3)", "row spaces equal", multiplier_maps(e, 5, 3, binv2));

        const auto profile = distance_profile(e, {opt.distance, true});
        r.equal(tag + " dim(C_1+C_2+C_3)", row.n - 1, profile.at(7).dimension);
        r.exact(tag + " d(C_1+C_2+C_3)", 2, profile.at(7).distance);
        for (Subset s : {Subset{1}, Subset{2}, Subset{4}}) {
            const auto& d = profile.at(s).distance;
            if (row.exact)
                r.exact(tag + " d(C_" + subset_label(s) + ")", row.d_comp, d);
            else
                r.within(tag + " d(C_" + subset_label(s) + ")", row.d_comp, d);
        }
        for (Subset s : {Subset{3}, Subset{5}, Subset{6}}) {
            const auto& d = profile.at(s).distance;
            if (row.exact)
                r.exact(tag + " d(C_" + subset_label(s) + ")", row.d_pair, d);
            else
                r.within(tag + " d(C_" + subset_label(s) + ")", row.d_pair, d);
        }
    }
}

struct QrRow {
    std::uint64_t n;
    std::size_t d;
};
constexpr QrRow kQr[] = {{7, 4}, {17, 6}, {23, 8}, {31, 8}, {41, 10}, {47, 12}};

void suite_qr_list(Recorder& r, const VerifyOptions& opt) {
    for (const auto& row : kQr) {
        const Eccir e = cs::quadratic_residue_pair(row.n);
        const std::string tag = "qr_list n=" + std::to_string(row.n);
        r.equal(tag + " k", (row.n - 1) / 2, e.k());
        const auto profile = distance_profile(e, {opt.distance, false});
        for (Subset s : {Subset{1}, Subset{2}}) {
            const auto& d = profile.at(s).distance;
            r.exact(tag + " d(C_" + subset_label(s) + ")", row.d, d);
            r.flag(tag + " d(C_" + subset_label(s) + ") even and >= sqrt(n)", "even, >= sqrt(n)",
                   d.is_exact() && d.value() % 2 == 0 && static_cast<double>(d.value()) >= std::sqrt(static_cast<double>(row.n)),
                   Feasibility::exact);
        }
        r.equal(tag + " dim(C_1+C_2)", row.n - 1, profile.at(3).dimension);
        r.exact(tag + " d(C_1+C_2)", 2, profile.at(3).distance);
    }
}

void suite_concat_example(Recorder& r, const VerifyOptions& opt) {
    const Eccir outer = cs::mdsir_from_grs(8, 3, 2);
    const cyclic::CyclicCodeSpec simplex(7, 2, cyclic::coset(1, 7, 2).members);
    const auto inner = cyclic::generator_matrix_of(simplex);
    r.equal("concat_example d(inner)", 4, code::exhaustive_min_weight(inner), Feasibility::exact);
    const Eccir e = cs::concatenate({outer, inner});
    r.equal("concat_example n", 21, e.n());
    r.equal("concat_example k", 3, e.k());
    const auto profile = distance_profile(e, {opt.distance, false});
    r.exact("concat_example d(C_{1})", 12, profile.at(1).distance);
    r.exact("concat_example d(C_{2})", 12, profile.at(2).distance);
    r.exact("concat_example d(C_{1,2})", 8, profile.at(3).distance);
    const auto bounds = cs::concatenation_bounds(4, 3, 2);
    for (const auto& entry : profile.entries)
        r.at_least("concat_example concatenation bound for " + subset_label(entry.subset), bounds[subset_size(entry.subset) - 1],
                   entry.distance);
}

void suite_mdsir_small(Recorder& r, const VerifyOptions& opt) {
    const Eccir e = cs::mdsir_from_grs(11, 6, 4);
    r.flag("mdsir_small q=11 n=6 L=4 square submatrices", "all nonsingular",
           cs::verify_all_square_submatrices(e.stacked()), Feasibility::exact);
    const auto profile = distance_profile(e, {opt.distance, false});
    for (const auto& entry : profile.entries)
        r.exact("mdsir_small d(C_" + subset_label(entry.subset) + ") = Singleton", entry.singleton, entry.distance);
    r.flag("mdsir_small verdict", "mdsir", is_mdsir(e, profile) == MdsirVerdict::mdsir, Feasibility::exact);

    const Eccir grouped = group_messages(e, 2);
    const auto gp = distance_profile(grouped, {opt.distance, false});
    r.flag("mdsir_small grouped k0=2 verdict", "mdsir", is_mdsir(grouped, gp) == MdsirVerdict::mdsir, Feasibility::exact);

    bool refused = false;
    try {
        (void)cs::mdsir_from_grs(7, 6, 2);
    } catch (const std::invalid_argument&) {
        refused = true;
    }
    r.flag("mdsir_small q=7 n=6 L=2 rejected", "rejected", refused);
}

void suite_dbt_comparison(Recorder& r, const VerifyOptions& opt) {
    // k = 10, L = 3 from a [61, 30, 12] code: guarantees by |S̄| = 1, 2, 3.
    const auto bounds = dbt_guaranteed_bounds(12, 10, 3);
    const std::size_t expected[] = {2, 0, 0};
    for (std::size_t s = 1; s <= 3; ++s)
        r.equal("dbt_comparison baseline bound |S|=" + std::to_string(3 - s), expected[s - 1], bounds[s - 1]);

    const Eccir ex = cs::example1_triple();
    const auto profile = distance_profile(ex, {opt.distance, true});
    for (std::size_t s = 1; s <= 3; ++s) {
        const auto& d = profile.by_size[s - 1].min_distance;
        r.report.checks.push_back({"dbt_comparison example1 |S|=" + std::to_string(3 - s) + " beats baseline",
                                   "> " + std::to_string(bounds[s - 1]), show(d), Feasibility::exact,
                                   d.is_exact() && d.value() > bounds[s - 1]});
    }

    // The split applied to a real systematic code: the [17, 8, 6] residue code with
    // k = 2, L = 4, n = 9.
    const auto qr = cs::quadratic_residue_pair(17);
    std::vector<std::size_t> pivots;
    const auto rref = code::row_reduce(qr.component(0), &pivots);
    std::vector<std::size_t> perm(17), order(pivots);
    std::vector<bool> is_pivot(17, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < 17; ++c)
        if (!is_pivot[c]) order.push_back(c);
    for (std::size_t i = 0; i < 17; ++i) perm[order[i]] = i;
    const auto systematic = code::permute_columns(rref, perm);
    const auto split = dbt_baseline_split(systematic, 2, 4, std::nullopt, opt.distance);
    r.equal("dbt_comparison [17,8] systematic d", 6, split.d, Feasibility::exact);
    const auto sp = distance_profile(split.eccir, {opt.distance, false});
    for (const auto& entry : sp.entries)
        r.at_least("dbt_comparison split guarantee for " + subset_label(entry.subset), split.bounds[subset_size(entry.subset) - 1],
                   entry.distance);
}

const std::map<std::string, std::function<void(Recorder&, const VerifyOptions&)>, std::less<>>& registry() {
    static const std::map<std::string, std::function<void(Recorder&, const VerifyOptions&)>, std::less<>> suites{
        {"example1", suite_example1},       {"table1", suite_table1},           {"table2", suite_table2},
        {"table3", suite_table3},           {"qr_list", suite_qr_list},         {"concat_example", suite_concat_example},
        {"mdsir_small", suite_mdsir_small}, {"dbt_comparison", suite_dbt_comparison},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"example1", "table1",         "table2",      "table3",
                                                "qr_list",  "concat_example", "mdsir_small", "dbt_comparison"};
    return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    SuiteReport report;
    report.name = std::string(name);
    Recorder rec{report};
    const auto start = std::chrono::steady_clock::now();
    try {
        it->second(rec, options);
    } catch (const std::exception& ex) {
        report.error = ex.what();
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace eccir::verify
