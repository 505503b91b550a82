#include "doctest.h"

#include "eccir/constructions.hpp"
#include "eccir/sim.hpp"
#include "oracles.hpp"

#include <stdexcept>

using namespace eccir;
namespace cs = eccir::constructions;

namespace {

sim::Message random_message(sim::Rng& rng, const Eccir& e) {
    sim::Message w(e.L(), std::vector<gf::Elem>(e.k()));
    for (auto& block : w)
        for (auto& x : block) x = rng() % e.q();
    return w;
}

// Sum of the component codewords of the selected blocks, with field ops only.
std::vector<gf::Elem> naive_partial(const Eccir& e, const sim::Message& w, Subset s) {
    const auto& f = *e.field();
    std::vector<gf::Elem> c(e.n(), 0);
    for (std::size_t l = 0; l < e.L(); ++l) {
        if (!(s >> l & 1)) continue;
        const auto part = oracle::naive_encode(e.component(l), w[l]);
        for (std::size_t i = 0; i < e.n(); ++i) c[i] = f.add(c[i], part[i]);
    }
    return c;
}

}  // namespace

TEST_CASE("bounded sampling") {
    sim::Rng rng(5);
    std::vector<std::size_t> counts(7, 0);
    for (int i = 0; i < 70000; ++i) {
        const auto v = sim::uniform_below(rng, 7);
        REQUIRE(v < 7);
        ++counts[v];
    }
    for (auto c : counts) CHECK((c > 9500 && c < 10500));
    for (int i = 0; i < 1000; ++i) {
        const double u = sim::uniform_unit(rng);
        CHECK((u >= 0.0 && u < 1.0));
    }
    CHECK(sim::uniform_below(rng, 1) == 0);
    sim::Rng a(99), b(99);
    CHECK(sim::uniform_below(a, 1000003) == sim::uniform_below(b, 1000003));
}

TEST_CASE("encoding and receiver reduction") {
    for (const auto& e : {cs::example1_triple(), cs::mdsir_from_grs(7, 4, 2), cs::mdsir_from_grs(8, 3, 3)}) {
        sim::Rng rng(6);
        for (int t = 0; t < 10; ++t) {
            const auto w = random_message(rng, e);
            const auto y = sim::encode_message(e, w);
            CHECK(y == naive_partial(e, w, full_subset(e.L())));
            for (Subset s : sim::all_side_info_sets(e.L())) {
                sim::Message known;
                for (auto l : subset_members(s)) known.push_back(w[l]);
                const Subset comp = full_subset(e.L()) & ~s;
                CHECK(sim::receiver_reduce(e, y, s, known) == naive_partial(e, w, comp));
                if (e.k() * subset_size(comp) > 20) continue;
                const auto dec = sim::ml_decode(e, comp, sim::receiver_reduce(e, y, s, known));
                CHECK(dec.distance == 0);
                CHECK_FALSE(dec.tie);
                sim::Message expect;
                for (auto l : subset_members(comp)) expect.push_back(w[l]);
                CHECK(dec.blocks == expect);
            }
        }
    }
    const auto e = cs::example1_triple();
    const std::vector<gf::Elem> y(e.n(), 0);
    CHECK_THROWS_AS(sim::receiver_reduce(e, y, full_subset(3), sim::Message(3, std::vector<gf::Elem>(e.k()))), std::invalid_argument);
    CHECK_THROWS_AS(sim::receiver_reduce(e, y, 0b001, {}), std::invalid_argument);
    CHECK_THROWS_AS(sim::receiver_reduce(e, std::vector<gf::Elem>(5), 0b001, sim::Message(1, std::vector<gf::Elem>(e.k()))),
                    std::invalid_argument);
    code::MinDistanceConfig small;
    small.exhaustive_dim_limit = 12;
    CHECK_THROWS(sim::ml_decode(e, 0b011, y, small));
}

TEST_CASE("side-information sets") {
    const auto sets = sim::all_side_info_sets(3);
    CHECK(sets == std::vector<Subset>{0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110});
}

TEST_CASE("trials are deterministic and noiseless trials succeed") {
    const auto e = cs::example1_triple();
    // With no side information the decoder would face a 2^30-word code.
    const std::vector<Subset> sets = {0b001, 0b010, 0b100, 0b011, 0b101, 0b110};
    sim::ChannelConfig clean;
    const auto r0 = sim::run_trials(e, sets, clean, 21, 1);
    CHECK(r0.successes == 21);
    CHECK(r0.ties == 0);

    sim::ChannelConfig noisy;
    noisy.error_weight = 4;
    const auto a = sim::run_trials(e, sets, noisy, 40, 77);
    const auto b = sim::run_trials(e, sets, noisy, 40, 77);
    CHECK(a == b);
    CHECK(a.rng == "mt19937_64");
    CHECK(a.seed == 77);
    std::size_t total = 0;
    for (const auto& [size, st] : a.by_side_info_size) total += st.trials;
    CHECK(total == 40);
    CHECK(a.distances.size() == sets.size());
    CHECK(a.radius[0] == 2);  // S = {1}: C_2 + C_3 has distance 6
    CHECK(a.radius[5] == 5);  // S = {2,3}: C_1 has distance 12

    CHECK_THROWS_AS(sim::run_trials(e, std::vector<Subset>{0b111}, clean, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sim::run_trials(e, std::vector<Subset>{}, clean, 1, 0), std::invalid_argument);
}

TEST_CASE("errors within the guaranteed radius are always corrected") {
    for (const auto& e : {cs::example1_triple(), cs::mdsir_from_grs(11, 6, 4), cs::quadratic_residue_pair(23)}) {
        for (Subset s : sim::all_side_info_sets(e.L())) {
            if (e.k() * (e.L() - subset_size(s)) > 20) continue;
            const std::vector<Subset> one = {s};
            const auto probe = sim::run_trials(e, one, {}, 1, 0);
            const std::size_t t = probe.radius[0];
            if (t == 0) continue;
            sim::ChannelConfig ch;
            ch.error_weight = t;
            const auto r = sim::run_trials(e, one, ch, 60, 1234);
            CAPTURE(subset_label(s));
            CHECK(r.successes == r.trials);
            CHECK(r.ties == 0);
        }
    }
}

TEST_CASE("binary symmetric channel mode") {
    const auto e = cs::example1_triple();
    sim::ChannelConfig ch;
    ch.flip_probability = 0.0;
    const std::vector<Subset> sets = {0b011};
    CHECK(sim::run_trials(e, sets, ch, 30, 3).successes == 30);
    ch.flip_probability = 0.5;
    const auto r = sim::run_trials(e, sets, ch, 200, 3);
    CHECK(r.successes < 200);
    CHECK(r.flip_probability == 0.5);
}
