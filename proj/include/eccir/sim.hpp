#pragma once

// Informed-receiver channel simulation.
//
// A transmitter sends c = sum_l w_l G_l; the receiver sees y = c + z, subtracts the
// contribution of the messages it already knows and decodes the rest by exhaustive
// nearest-codeword search.

#include "eccir/code.hpp"
#include "eccir/eccir.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace eccir::sim {

using gf::Elem;
using Message = std::vector<std::vector<Elem>>;  // one block of k symbols per component

inline constexpr std::string_view kRngName = "mt19937_64";
using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection; independent of the standard library's
// distribution implementations so reports reproduce across toolchains.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
// Uniform double in [0, 1) from the top 53 bits.
double uniform_unit(Rng& rng);

std::vector<Elem> encode_message(const Eccir& e, const Message& w);

// y - sum_{l in S} w_l G_l. `known` holds the blocks of the members of S in increasing order.
std::vector<Elem> receiver_reduce(const Eccir& e, std::span<const Elem> y, Subset side_info, const Message& known);

struct Decoded {
    Message blocks;               // blocks of the members of the complement, increasing order
    std::vector<Elem> codeword;
    std::size_t distance = 0;
    bool tie = false;
};

// Nearest codeword of C_{S̄} where S̄ = members(complement). The block split follows
// the stacking order of subcode(). Refuses codes above the exhaustive limit.
Decoded ml_decode(const Eccir& e, Subset complement, std::span<const Elem> y_reduced,
                  const code::MinDistanceConfig& config = {});

struct ChannelConfig {
    std::size_t error_weight = 0;        // exact-weight errors
    std::optional<double> flip_probability;  // when set, each symbol is corrupted independently instead
};

struct SideInfoStats {
    std::size_t trials = 0;
    std::size_t successes = 0;
    bool operator==(const SideInfoStats&) const = default;
};

struct TrialReport {
    std::string rng{kRngName};
    std::uint64_t seed = 0;
    std::size_t L = 0, k = 0, n = 0;
    std::uint64_t q = 2;
    std::vector<Subset> side_info;  // trial i uses side_info[i % size]
    std::size_t error_weight = 0;
    std::optional<double> flip_probability;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t ties = 0;
    // Per side-information set: distance of C_{S̄} and floor((d - 1) / 2) from its
    // lower end (the guaranteed radius).
    std::vector<code::DistanceResult> distances;
    std::vector<std::size_t> radius;
    std::map<std::size_t, SideInfoStats> by_side_info_size;  // keyed by |S|

    bool operator==(const TrialReport&) const = default;
};

// Runs trials with per-trial generators seeded seed + i. Each side-information set
// must be a proper subset of {1..L}.
TrialReport run_trials(const Eccir& e, std::span<const Subset> side_info, const ChannelConfig& channel,
                       std::size_t trials, std::uint64_t seed, const code::MinDistanceConfig& config = {});

// Every proper subset of {1..L}, including the empty set, by size.
std::vector<Subset> all_side_info_sets(std::size_t L);

}  // namespace eccir::sim
