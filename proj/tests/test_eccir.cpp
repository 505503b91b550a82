#include "doctest.h"

#include "eccir/constructions.hpp"
#include "eccir/eccir.hpp"
#include "oracles.hpp"

#include <stdexcept>

using namespace eccir;
using code::GeneratorMatrix;

namespace {

GeneratorMatrix stack_oracle(const std::vector<GeneratorMatrix>& comps, Subset s) {
    std::vector<std::vector<gf::Elem>> rows;
    for (std::size_t l = 0; l < comps.size(); ++l)
        if (s >> l & 1)
            for (auto& r : comps[l].to_rows()) rows.push_back(r);
    return GeneratorMatrix(comps.front().field(), rows, comps.front().cols());
}

Eccir random_eccir(std::mt19937_64& rng, std::uint64_t q, std::size_t L, std::size_t k, std::size_t n) {
    const auto g = oracle::random_full_rank(rng, q, L * k, n);
    std::vector<GeneratorMatrix> comps;
    for (std::size_t l = 0; l < L; ++l) {
        std::vector<std::size_t> rows;
        for (std::size_t j = 0; j < k; ++j) rows.push_back(l * k + j);
        comps.push_back(g.select_rows(rows));
    }
    return Eccir::create(comps);
}

}  // namespace

TEST_CASE("subset helpers") {
    CHECK(subset_members(0b1011) == std::vector<std::size_t>{0, 1, 3});
    CHECK(subset_size(0b1011) == 3);
    CHECK(subset_label(0b101) == "{1,3}");
    CHECK(subset_from_indices(std::vector<std::size_t>{3, 1}) == 0b101);
    CHECK(full_subset(4) == 0b1111);
    for (std::size_t L = 1; L <= 6; ++L) {
        const auto subs = enumerate_subsets(L);
        CHECK(subs.size() == (std::size_t{1} << L) - 1);
        for (std::size_t i = 1; i < subs.size(); ++i) {
            const auto a = subset_members(subs[i - 1]), b = subset_members(subs[i]);
            CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
        }
    }
    CHECK(enumerate_subsets(3) == std::vector<Subset>{0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111});
}

TEST_CASE("validation rejects dependent and malformed collections") {
    const auto f = gf::field_of_order(2);
    const GeneratorMatrix a(f, {{1, 0, 0, 1}}, 4), b(f, {{0, 1, 0, 1}}, 4), c(f, {{1, 1, 0, 0}}, 4);
    CHECK_NOTHROW(Eccir::create({a, b}));
    CHECK_THROWS_AS(Eccir::create({a, b, c}), std::invalid_argument);
    const std::vector<GeneratorMatrix> comps = {a, b, c};
    const auto report = validate_components(comps);
    CHECK_FALSE(report.valid);
    CHECK(report.offending == Subset{0b111});
    CHECK_THROWS_AS(Eccir::create({a, a}), std::invalid_argument);
    CHECK_THROWS_AS(Eccir::create({}), std::invalid_argument);
    CHECK_THROWS_AS(Eccir::create({a, GeneratorMatrix(f, {{1, 0, 0}}, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(Eccir::create({a, GeneratorMatrix(f, {{0, 0, 0, 0}}, 4)}), std::invalid_argument);
    CHECK_THROWS_AS(Eccir::create({a, GeneratorMatrix(gf::field_of_order(3), {{1, 0, 0, 1}}, 4)}), std::invalid_argument);

    const auto e = constructions::example1_triple();
    const auto rep = eccir_validate(e);
    CHECK(rep.valid);
    CHECK(rep.nonzeroes_disjoint == true);
}

TEST_CASE("stacked subset codes") {
    std::mt19937_64 rng(21);
    const auto e = random_eccir(rng, 3, 3, 2, 9);
    for (Subset s : enumerate_subsets(3)) {
        CHECK(e.stacked(s) == stack_oracle(e.components(), s));
        CHECK(subcode(e, s).k() == 2 * subset_size(s));
    }
    CHECK(e.stacked() == e.stacked(full_subset(3)));
}

TEST_CASE("profile matches brute force and is monotone") {
    std::mt19937_64 rng(22);
    for (std::uint64_t q : {2u, 3u, 4u}) {
        for (int rep = 0; rep < 3; ++rep) {
            const std::size_t L = 2 + rng() % 2, k = 1 + rng() % 2, n = L * k + 2 + rng() % 6;
            const auto e = random_eccir(rng, q, L, k, n);
            const auto prof = distance_profile(e);
            CHECK(prof.entries.size() == enumerate_subsets(L).size());
            for (const auto& entry : prof.entries) {
                const auto truth = oracle::naive_min_distance(stack_oracle(e.components(), entry.subset));
                CHECK(entry.distance.is_exact());
                CHECK(entry.distance.value() == truth);
                CHECK(entry.singleton == n - k * subset_size(entry.subset) + 1);
                CHECK(entry.dimension == k * subset_size(entry.subset));
            }
            // Adding components can only lower the distance.
            for (const auto& a : prof.entries)
                for (const auto& b : prof.entries)
                    if ((a.subset & b.subset) == a.subset) CHECK(b.distance.value() <= a.distance.value());
            for (const auto& s : prof.by_size) {
                std::size_t best = n + 1;
                for (const auto& entry : prof.entries)
                    if (subset_size(entry.subset) == s.size) best = std::min(best, entry.distance.value());
                CHECK(s.min_distance.value() == best);
            }
        }
    }
}

TEST_CASE("reusing verified equivalences changes nothing") {
    for (const auto& e : {constructions::example1_triple(), constructions::quadratic_residue_pair(17),
                          constructions::cubic_residue_triple(31)}) {
        ProfileConfig plain, reuse;
        reuse.use_equivalences = true;
        const auto a = distance_profile(e, plain), b = distance_profile(e, reuse);
        REQUIRE(a.entries.size() == b.entries.size());
        bool any_reused = false;
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            CHECK(a.entries[i].distance.value() == b.entries[i].distance.value());
            CHECK_FALSE(a.entries[i].reused_from);
            any_reused = any_reused || b.entries[i].reused_from.has_value();
        }
        CHECK(any_reused);
    }
}

TEST_CASE("a false equivalence claim is not trusted") {
    auto e = constructions::example1_triple();
    Provenance p = e.provenance();
    EquivalenceClaim bogus;
    bogus.source = 0b001;
    bogus.target = 0b010;
    bogus.permutation.resize(e.n());
    for (std::size_t i = 0; i < e.n(); ++i) bogus.permutation[i] = i;
    p.equivalences = {bogus};
    const auto forged = Eccir::create(e.components(), p);
    ProfileConfig reuse;
    reuse.use_equivalences = true;
    const auto prof = distance_profile(forged, reuse);
    const auto honest = distance_profile(e);
    CHECK_FALSE(prof.at(0b010).reused_from);
    for (std::size_t i = 0; i < prof.entries.size(); ++i)
        CHECK(prof.entries[i].distance == honest.entries[i].distance);
}

TEST_CASE("MDSIR verdicts") {
    const auto grs = constructions::mdsir_from_grs(11, 6, 4);
    CHECK(is_mdsir(grs, distance_profile(grs)) == MdsirVerdict::mdsir);
    const auto ex1 = constructions::example1_triple();
    CHECK(is_mdsir(ex1, distance_profile(ex1)) == MdsirVerdict::not_mdsir);

    ProfileConfig tiny;
    tiny.distance.exhaustive_dim_limit = 3;
    tiny.distance.sample_trials = 16;
    const auto bounded = distance_profile(ex1, tiny);
    bool all_exact = true;
    for (const auto& entry : bounded.entries) all_exact = all_exact && entry.distance.is_exact();
    if (!all_exact) CHECK(is_mdsir(ex1, bounded) != MdsirVerdict::mdsir);
    CHECK(to_string(MdsirVerdict::undecidable) == "undecidable");
}

TEST_CASE("grouping messages") {
    const auto grs = constructions::mdsir_from_grs(11, 6, 4);
    const auto g = group_messages(grs, 2);
    CHECK(g.L() == 2);
    CHECK(g.k() == 2);
    CHECK(code::row_space_equal(g.component(0), grs.stacked(0b0011)));
    CHECK(code::row_space_equal(g.component(1), grs.stacked(0b1100)));
    CHECK(is_mdsir(g, distance_profile(g)) == MdsirVerdict::mdsir);
    CHECK_THROWS_AS(group_messages(grs, 3), std::invalid_argument);
    CHECK_THROWS_AS(group_messages(g, 1), std::invalid_argument);
}

TEST_CASE("generator-split baseline") {
    CHECK(dbt_guaranteed_bounds(6, 2, 4) == std::vector<std::size_t>{4, 2, 0, 0});
    CHECK(dbt_guaranteed_bounds(12, 3, 3) == std::vector<std::size_t>{9, 6, 3});

    // Systematic form of a random [kL + n, kL] code; the guarantees hold for every subset.
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 6; ++rep) {
        const std::size_t k = 1 + rng() % 2, L = 2 + rng() % 2, n = k * L + 1 + rng() % 5;
        const auto g = oracle::random_full_rank(rng, 2, k * L, n);
        const auto f = gf::field_of_order(2);
        GeneratorMatrix a(f, k * L, k * L + n);
        for (std::size_t r = 0; r < k * L; ++r) {
            a.set(r, r, 1);
            for (std::size_t c = 0; c < n; ++c) a.set(r, k * L + c, g.at(r, c));
        }
        const std::size_t d = oracle::naive_min_distance(a);
        const auto split = dbt_baseline_split(a, k, L);
        CHECK(split.d == d);
        CHECK(split.bounds == dbt_guaranteed_bounds(d, k, L));
        const auto prof = distance_profile(split.eccir);
        for (const auto& entry : prof.entries)
            CHECK(entry.distance.value() >= split.bounds[subset_size(entry.subset) - 1]);
    }
    const auto f = gf::field_of_order(2);
    CHECK_THROWS_AS(dbt_baseline_split(GeneratorMatrix(f, {{0, 1, 1}, {1, 0, 1}}, 3), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(dbt_baseline_split(GeneratorMatrix(f, {{1, 0}, {0, 1}}, 2), 1, 2), std::invalid_argument);
}
