#include "doctest.h"

#include "eccir/constructions.hpp"
#include "eccir/serialize.hpp"

#include <algorithm>
#include <stdexcept>

using namespace eccir;
namespace cs = eccir::constructions;

namespace {

std::vector<Eccir> samples() {
    const cyclic::CyclicCodeSpec inner(17, 2, cyclic::coset_union(std::vector<std::uint64_t>{1}, 17, 2));
    const auto outer = cs::mdsir_from_grs(8, 3, 2);
    return {
        cs::example1_triple(),
        cs::mdsir_from_grs(11, 6, 4),
        cs::mdsir_from_grs(16, 5, 3),
        cs::concatenate({outer, cyclic::generator_matrix_of(cyclic::CyclicCodeSpec(7, 2, {3, 5, 6}))}),
        cs::piret_search(inner).eccir,
        cs::primitive_pair(5),
        cs::quadratic_residue_pair(23),
        cs::cubic_residue_triple(31),
        cs::coset_partition_eccir(13, 3, {{1}, {2}}),
        group_messages(cs::mdsir_from_grs(11, 6, 4), 2),
        cs::sub_collection(cs::cubic_residue_triple(43), 0b011),
    };
}

// Count the lines of a CSV document.
std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("Eccir documents round-trip byte for byte") {
    for (const auto& e : samples()) {
        CAPTURE(e.provenance().construction);
        const std::string text = io::dump(io::to_json(e));
        const auto back = io::eccir_from_json(io::parse(text));
        CHECK(back == e);
        CHECK(io::dump(io::to_json(back)) == text);
        CHECK(text.back() == '\n');
    }
}

TEST_CASE("small value round-trips") {
    const cyclic::CyclicCodeSpec spec(31, 2, cyclic::coset_union(std::vector<std::uint64_t>{1, 3}, 31, 2));
    CHECK(io::spec_from_json(io::to_json(spec)) == spec);
    const auto g = cyclic::generator_matrix_of(spec);
    CHECK(io::generator_from_json(io::to_json(g)) == g);
    for (const auto& d : {code::DistanceResult::exact_value(12, code::DistanceMethod::exhaustive),
                          code::DistanceResult::bounded(18, 24, code::DistanceMethod::bch)})
        CHECK(io::distance_from_json(io::to_json(d)) == d);
    CHECK(io::subset_to_json(0b101) == io::json::array({1, 3}));
    CHECK(io::subset_from_json(io::json::array({3, 1})) == 0b101);
    CHECK_THROWS(io::subset_from_json(io::json::array({0})));
}

TEST_CASE("profile formats") {
    const auto e = cs::example1_triple();
    const auto prof = distance_profile(e);
    const auto j = io::to_json(prof);
    CHECK(j.at("L") == 3);
    CHECK(j.at("n") == 31);
    CHECK(j.at("entries").size() == 7);
    CHECK(j.at("by_size").size() == 3);
    const auto& first = j.at("entries").at(0);
    CHECK(first.at("subset") == io::json::array({1}));
    CHECK(first.at("distance").at("value") == 12);
    CHECK(first.at("distance").at("kind") == "exact");
    CHECK(first.at("singleton") == 22);

    const std::string csv = io::profile_csv(prof);
    CHECK(csv.rfind("subset,size,dim,kind,lower,upper,method,singleton,d_star_low,d_star_high\n", 0) == 0);
    CHECK(lines(csv) == 8);
    CHECK(csv.find("\"{1,2,3}\",3,30,exact,2,2,") != std::string::npos);
}

TEST_CASE("trial reports serialize") {
    const auto e = cs::example1_triple();
    const std::vector<Subset> sets = {0b011};
    sim::ChannelConfig ch;
    ch.error_weight = 3;
    const auto r = sim::run_trials(e, sets, ch, 10, 9);
    const auto j = io::to_json(r);
    CHECK(j.at("rng") == "mt19937_64");
    CHECK(j.at("seed") == 9);
    CHECK(j.at("trials") == 10);
    CHECK(j.at("successes") == r.successes);
    CHECK(j.at("side_info_sets").at(0).at("side_info") == io::json::array({1, 2}));
    CHECK(j.at("side_info_sets").at(0).at("radius") == 5);
    CHECK(j.at("channel").at("error_weight") == 3);
}

TEST_CASE("malformed documents are rejected") {
    const auto good = io::to_json(cs::example1_triple());
    CHECK_THROWS(io::parse("{not json"));
    CHECK_THROWS_AS(io::eccir_from_json(io::json::object()), std::invalid_argument);

    auto bad = good;
    bad["L"] = 4;
    CHECK_THROWS_AS(io::eccir_from_json(bad), std::invalid_argument);

    bad = good;
    bad["components"][0][0][0] = 5;  // not a binary symbol
    CHECK_THROWS(io::eccir_from_json(bad));

    bad = good;
    bad["components"][1] = bad["components"][0];  // dependent
    CHECK_THROWS_AS(io::eccir_from_json(bad), std::invalid_argument);

    bad = good;
    bad["provenance"]["component_specs"][0]["nonzeroes"] = io::json::array({5, 9, 10, 15, 18, 20, 23, 27, 29, 30});
    CHECK_THROWS_AS(io::eccir_from_json(bad), std::invalid_argument);

    bad = good;
    bad["provenance"]["equivalences"][0]["permutation"] = io::json::array({0, 0});
    CHECK_THROWS_AS(io::eccir_from_json(bad), std::invalid_argument);

    bad = good;
    bad["q"] = 6;
    CHECK_THROWS(io::eccir_from_json(bad));
}
