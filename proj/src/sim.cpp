#include "eccir/sim.hpp"

#include "eccir/parallel.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace eccir::sim {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    // Largest multiple of bound that fits; reject draws above it.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Elem> encode_message(const Eccir& e, const Message& w) {
    if (w.size() != e.L()) throw std::invalid_argument("encode_message: expected one block per component");
    const auto& f = *e.field();
    std::vector<Elem> c(e.n(), 0);
    for (std::size_t l = 0; l < e.L(); ++l) {
        const auto part = code::encode(e.component(l), w[l]);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(c[i], part[i]);
    }
    return c;
}

std::vector<Elem> receiver_reduce(const Eccir& e, std::span<const Elem> y, Subset side_info, const Message& known) {
    if ((side_info & ~full_subset(e.L())) != 0) throw std::invalid_argument("receiver_reduce: side information outside {1..L}");
    if (side_info == full_subset(e.L())) throw std::invalid_argument("receiver_reduce: every message is known, nothing to decode");
    if (y.size() != e.n()) throw std::invalid_argument("receiver_reduce: received word has the wrong length");
    const auto members = subset_members(side_info);
    if (known.size() != members.size())
        throw std::invalid_argument("receiver_reduce: expected " + std::to_string(members.size()) + " known blocks");
    const auto& f = *e.field();
    std::vector<Elem> out(y.begin(), y.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto part = code::encode(e.component(members[i]), known[i]);
        for (std::size_t t = 0; t < out.size(); ++t) out[t] = f.sub(out[t], part[t]);
    }
    return out;
}

namespace {

Decoded decode_with(const code::GeneratorMatrix& g, std::size_t k, std::span<const Elem> y) {
    const auto nearest = code::nearest_codeword(g, y);
    Decoded out;
    for (std::size_t b = 0; b < g.rows() / k; ++b)
        out.blocks.emplace_back(nearest.message.begin() + static_cast<std::ptrdiff_t>(b * k),
                                nearest.message.begin() + static_cast<std::ptrdiff_t>((b + 1) * k));
    out.codeword = nearest.codeword;
    out.distance = nearest.distance;
    out.tie = nearest.tie;
    return out;
}

void require_decodable(std::size_t dim, std::uint64_t q, const code::MinDistanceConfig& config) {
    if (!code::exhaustive_feasible(dim, q, config.exhaustive_dim_limit))
        throw std::invalid_argument("ml_decode: dimension " + std::to_string(dim) + " is above the exhaustive limit");
}

}  // namespace

Decoded ml_decode(const Eccir& e, Subset complement, std::span<const Elem> y_reduced, const code::MinDistanceConfig& config) {
    const auto g = e.stacked(complement);
    require_decodable(g.rows(), g.q(), config);
    return decode_with(g, e.k(), y_reduced);
}

std::vector<Subset> all_side_info_sets(std::size_t L) {
    std::vector<Subset> out{0};
    for (Subset s : enumerate_subsets(L))
        if (s != full_subset(L)) out.push_back(s);
    return out;
}

TrialReport run_trials(const Eccir& e, std::span<const Subset> side_info, const ChannelConfig& channel,
                       std::size_t trials, std::uint64_t seed, const code::MinDistanceConfig& config) {
    if (side_info.empty()) throw std::invalid_argument("run_trials: no side-information sets");
    const Subset full = full_subset(e.L());
    for (Subset s : side_info)
        if ((s & ~full) != 0 || s == full)
            throw std::invalid_argument("run_trials: side information must be a proper subset of {1..L}");
    if (channel.flip_probability && (*channel.flip_probability < 0.0 || *channel.flip_probability > 1.0))
        throw std::invalid_argument("run_trials: flip probability outside [0, 1]");
    if (!channel.flip_probability && channel.error_weight > e.n())
        throw std::invalid_argument("run_trials: error weight exceeds the length");

    TrialReport report;
    report.seed = seed;
    report.L = e.L();
    report.k = e.k();
    report.n = e.n();
    report.q = e.q();
    report.side_info.assign(side_info.begin(), side_info.end());
    report.error_weight = channel.flip_probability ? 0 : channel.error_weight;
    report.flip_probability = channel.flip_probability;
    report.trials = trials;

    std::vector<code::GeneratorMatrix> decoders;
    for (Subset s : side_info) {
        decoders.push_back(e.stacked(full ^ s));
        require_decodable(decoders.back().rows(), e.q(), config);
        const auto d = code::min_distance(subcode(e, full ^ s), config);
        report.distances.push_back(d);
        report.radius.push_back(d.lower == 0 ? 0 : (d.lower - 1) / 2);
    }

    const auto& f = *e.field();
    const std::uint64_t q = e.q();
    std::vector<unsigned char> success(trials, 0), tie(trials, 0);
    parallel_for(trials, config.threads, [&](std::size_t i) {
        Rng rng(seed + i);
        const std::size_t which = i % side_info.size();
        const Subset s = side_info[which];
        Message w(e.L(), std::vector<Elem>(e.k()));
        for (auto& block : w)
            for (auto& x : block) x = uniform_below(rng, q);
        std::vector<Elem> y = encode_message(e, w);

        if (channel.flip_probability) {
            for (auto& x : y)
                if (uniform_unit(rng) < *channel.flip_probability) x = f.add(x, 1 + uniform_below(rng, q - 1));
        } else {
            std::vector<std::size_t> pos(e.n());
            std::iota(pos.begin(), pos.end(), std::size_t{0});
            for (std::size_t j = 0; j < channel.error_weight; ++j) {
                std::swap(pos[j], pos[j + uniform_below(rng, e.n() - j)]);
                y[pos[j]] = f.add(y[pos[j]], 1 + uniform_below(rng, q - 1));
            }
        }

        Message known, unknown;
        for (std::size_t l = 0; l < e.L(); ++l) ((s >> l) & 1 ? known : unknown).push_back(w[l]);
        const auto reduced = receiver_reduce(e, y, s, known);
        const auto decoded = decode_with(decoders[which], e.k(), reduced);
        success[i] = decoded.blocks == unknown;
        tie[i] = decoded.tie;
    });

    for (std::size_t i = 0; i < trials; ++i) {
        auto& stats = report.by_side_info_size[subset_size(side_info[i % side_info.size()])];
        ++stats.trials;
        stats.successes += success[i];
        report.successes += success[i];
        report.ties += tie[i];
    }
    return report;
}

}  // namespace eccir::sim
