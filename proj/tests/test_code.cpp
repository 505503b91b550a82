#include "doctest.h"

#include "eccir/code.hpp"
#include "eccir/numtheory.hpp"
#include "oracles.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>

using namespace eccir;
using code::GeneratorMatrix;

using oracle::all_codewords;
using oracle::naive_min_distance;
const auto& random_matrix = oracle::random_full_rank;

TEST_CASE("Gray enumeration matches naive re-encoding") {
    std::mt19937_64 rng(11);
    // Lengths straddle word boundaries of the packed representation.
    const std::size_t lengths[] = {5, 17, 63, 64, 65, 100, 130};
    for (std::size_t n : lengths) {
        for (int rep = 0; rep < 4; ++rep) {
            const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 10);
            const auto g = random_matrix(rng, 2, k, n);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(code::exhaustive_min_weight(g) == naive_min_distance(g));
            CHECK(code::exhaustive_min_weight(g, 3) == naive_min_distance(g));
            const auto d = code::min_distance(code::LinearCode(g));
            CHECK(d.is_exact());
            CHECK(d.value() == naive_min_distance(g));
        }
    }
}

TEST_CASE("q-ary minimum distance") {
    std::mt19937_64 rng(12);
    for (std::uint64_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
        for (int rep = 0; rep < 5; ++rep) {
            const std::size_t n = 3 + rng() % 10;
            const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 4);
            const auto g = random_matrix(rng, q, k, n);
            CAPTURE(q);
            CHECK(code::exhaustive_min_weight(g) == naive_min_distance(g));
        }
    }
}

TEST_CASE("nearest codeword agrees with brute force") {
    std::mt19937_64 rng(13);
    for (std::uint64_t q : {2u, 3u, 4u}) {
        for (int rep = 0; rep < 10; ++rep) {
            const std::size_t n = 4 + rng() % 8, k = 1 + rng() % 4;
            const auto g = random_matrix(rng, q, k, n);
            std::vector<gf::Elem> y(n);
            for (auto& v : y) v = rng() % q;
            const auto words = all_codewords(g);
            std::size_t best = n + 1, count = 0;
            for (const auto& w : words) {
                std::size_t dist = 0;
                for (std::size_t i = 0; i < n; ++i) dist += w[i] != y[i];
                if (dist < best) {
                    best = dist;
                    count = 1;
                } else if (dist == best) {
                    ++count;
                }
            }
            const auto r = code::nearest_codeword(g, y);
            CHECK(r.distance == best);
            CHECK(r.tie == (count > 1));
            CHECK(r.codeword == code::encode(g, r.message));
            std::size_t dist = 0;
            for (std::size_t i = 0; i < n; ++i) dist += r.codeword[i] != y[i];
            CHECK(dist == best);
        }
    }
}

TEST_CASE("bounded results bracket the true distance") {
    std::mt19937_64 rng(14);
    code::MinDistanceConfig cfg;
    cfg.exhaustive_dim_limit = 4;
    cfg.sample_trials = 64;
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t n = 20 + rng() % 30, k = 6 + rng() % 6;
        const auto g = random_matrix(rng, 2, k, n);
        const auto d = code::min_distance(code::LinearCode(g), cfg);
        const std::size_t truth = naive_min_distance(g);
        CHECK_FALSE(d.is_exact());
        CHECK(d.lower <= truth);
        CHECK(truth <= d.upper);
        CHECK(d.upper <= code::singleton_bound(n, k));
        CHECK_THROWS_AS(d.value(), std::logic_error);
    }
    // Cyclic codes pick up the BCH bound.
    for (std::uint64_t n : {15u, 17u, 21u, 23u, 31u}) {
        for (const auto& c : cyclic::coset_partition(n, 2)) {
            if (c.representative == 0) continue;
            const cyclic::CyclicCodeSpec spec(n, 2, cyclic::coset_union(std::vector<std::uint64_t>{c.representative, 0}, n, 2));
            const auto gm = cyclic::generator_matrix_of(spec);
            const auto d = code::min_distance(code::LinearCode(gm, spec), cfg);
            const std::size_t truth = naive_min_distance(gm);
            CHECK(d.lower <= truth);
            CHECK(truth <= d.upper);
        }
    }
}

TEST_CASE("BCH bound never exceeds the minimum distance") {
    for (std::uint64_t n : {7u, 9u, 15u, 17u, 21u, 23u, 31u}) {
        const auto parts = cyclic::coset_partition(n, 2);
        // Every union of at most three cosets.
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a; b < parts.size(); ++b)
                for (std::size_t c = b; c < parts.size(); ++c) {
                    const std::vector<std::uint64_t> reps = {parts[a].representative, parts[b].representative, parts[c].representative};
                    const cyclic::CyclicCodeSpec spec(n, 2, cyclic::coset_union(reps, n, 2));
                    if (spec.dimension() > 16) continue;
                    const std::size_t d = code::exhaustive_min_weight(cyclic::generator_matrix_of(spec));
                    CAPTURE(n);
                    CAPTURE(reps);
                    CHECK(code::bch_bound(spec) <= d);
                }
    }
    // Zeroes {0,3,5,6} hold the run 5,6,0; the [7,4] Hamming code has zeroes {3,5,6}.
    CHECK(code::bch_bound(cyclic::CyclicCodeSpec(7, 2, {1, 2, 4})) == 4);
    CHECK(code::bch_bound(cyclic::CyclicCodeSpec(7, 2, {0, 1, 2, 4})) == 3);
}

TEST_CASE("Carlitz-Uchiyama bound") {
    const std::size_t expect[] = {2, 4, 12, 24, 54, 112};
    for (unsigned m = 3; m <= 8; ++m) {
        // Smallest even integer at least 2^(m-1) - 2^(m/2), computed in floating point.
        const double raw = std::ldexp(1.0, m - 1) - std::pow(2.0, m / 2.0);
        std::size_t e = static_cast<std::size_t>(std::ceil(raw - 1e-9));
        if (e % 2) ++e;
        CHECK(code::carlitz_uchiyama_even_bound(m) == e);
        CHECK(e == expect[m - 3]);
    }
    for (unsigned m = 4; m <= 7; ++m) {
        const std::uint64_t n = (1u << m) - 1;
        const cyclic::CyclicCodeSpec spec(n, 2, cyclic::coset_union(std::vector<std::uint64_t>{1, 3}, n, 2));
        CHECK(code::carlitz_uchiyama_degree(spec) == m);
        if (m <= 6) CHECK(code::exhaustive_min_weight(cyclic::generator_matrix_of(spec)) >= code::carlitz_uchiyama_even_bound(m));
    }
    CHECK_FALSE(code::carlitz_uchiyama_degree(cyclic::CyclicCodeSpec(31, 2, cyclic::coset_union(std::vector<std::uint64_t>{1}, 31, 2))));
}

TEST_CASE("structural shortcuts agree with enumeration") {
    const auto f = gf::field_of_order(2);
    // Repetition-sum pair of the [7,3,4] simplex code.
    const cyclic::CyclicCodeSpec simplex(7, 2, {3, 5, 6});
    const auto inner = cyclic::generator_matrix_of(simplex);
    GeneratorMatrix pair(f, 6, 14);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 7; ++c) {
            pair.set(r, c, inner.at(r, c));
            pair.set(r + 3, c + 7, inner.at(r, c));
        }
    code::MinDistanceConfig small;
    small.exhaustive_dim_limit = 3;  // enough for the inner code only
    const auto d = code::min_distance(code::LinearCode(pair, std::nullopt, inner), small);
    CHECK(d.is_exact());
    CHECK(d.method == code::DistanceMethod::structural_product);
    CHECK(d.value() == 4);

    // Full-length code whose nonzeroes are all of Z_n: the whole space, d = 1;
    // dropping 0 leaves the even-weight code, d = 2.
    std::vector<std::uint64_t> all(9);
    for (std::uint64_t i = 0; i < 9; ++i) all[i] = i;
    const cyclic::CyclicCodeSpec full(9, 2, all);
    all.erase(all.begin());
    const cyclic::CyclicCodeSpec even(9, 2, all);
    CHECK(code::min_distance(code::LinearCode(cyclic::generator_matrix_of(even), even), small).value() == 2);
    CHECK(code::min_distance(code::LinearCode(cyclic::generator_matrix_of(full), full), small).value() == 1);

    CHECK_THROWS_AS(code::LinearCode(inner, cyclic::CyclicCodeSpec(7, 2, {1, 2, 4})), std::invalid_argument);
    CHECK_THROWS_AS(code::LinearCode(inner.stacked(inner)), std::invalid_argument);
}

TEST_CASE("distance enums round-trip through strings") {
    using M = code::DistanceMethod;
    for (M m : {M::exhaustive, M::structural_parity, M::structural_product, M::carlitz_uchiyama, M::bch, M::singleton, M::sampled})
        CHECK(code::distance_method_from_string(code::to_string(m)) == m);
    CHECK(code::distance_kind_from_string("bounded") == code::DistanceKind::bounded);
    CHECK_THROWS(code::distance_method_from_string("guess"));
}

TEST_CASE("dimension limit from the environment") {
    ::setenv("ECCIR_DIM_LIMIT", "9", 1);
    CHECK(code::config_from_env().exhaustive_dim_limit == 9);
    ::setenv("ECCIR_DIM_LIMIT", "0", 1);
    CHECK_THROWS_AS(code::config_from_env(), std::invalid_argument);
    ::setenv("ECCIR_DIM_LIMIT", "", 1);
    CHECK(code::config_from_env().exhaustive_dim_limit == code::MinDistanceConfig{}.exhaustive_dim_limit);
    ::unsetenv("ECCIR_DIM_LIMIT");
    CHECK(code::exhaustive_feasible(28, 2, 28));
    CHECK_FALSE(code::exhaustive_feasible(29, 2, 28));
    CHECK(code::exhaustive_feasible(14, 4, 28));
    CHECK_FALSE(code::exhaustive_feasible(15, 4, 28));
}

TEST_CASE("known distance table") {
    const auto e = code::known_distance(62, 10);
    if (e) CHECK(e->d_star_low <= e->d_star_high);
    for (const auto& row : code::known_distance_table()) {
        CHECK(row.d_star_low <= row.d_star_high);
        CHECK(row.d_star_high <= code::singleton_bound(row.n, row.k));
    }
    CHECK_FALSE(code::known_distance(3, 1000));
}
