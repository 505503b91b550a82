#pragma once

// Linear codes and minimum-distance computation.
//
// Exact distances come from a Gray-code walk over all nonzero messages: each step
// adds a single generator row to the running codeword, so one pass costs one
// XOR and one popcount per word per codeword for binary codes. Codes too large to
// enumerate get an interval [lower, upper] built from structural facts and
// sampled codeword weights.

#include "eccir/cyclic.hpp"
#include "eccir/matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eccir::code {

enum class DistanceKind { exact, bounded };

enum class DistanceMethod {
    exhaustive,
    structural_parity,
    structural_product,
    carlitz_uchiyama,
    bch,
    singleton,
    sampled,
};

std::string_view to_string(DistanceKind kind);
std::string_view to_string(DistanceMethod method);
DistanceKind distance_kind_from_string(std::string_view s);
DistanceMethod distance_method_from_string(std::string_view s);

struct DistanceResult {
    DistanceKind kind = DistanceKind::exact;
    std::size_t lower = 0;
    std::size_t upper = 0;
    DistanceMethod method = DistanceMethod::exhaustive;

    static DistanceResult exact_value(std::size_t d, DistanceMethod method);
    static DistanceResult bounded(std::size_t lower, std::size_t upper, DistanceMethod method);

    bool is_exact() const noexcept { return kind == DistanceKind::exact; }
    // Throws std::logic_error for bounded results.
    std::size_t value() const;

    bool operator==(const DistanceResult&) const = default;
};

struct MinDistanceConfig {
    // Exhaustive enumeration when k * log2(q) <= this many bits.
    unsigned exhaustive_dim_limit = 28;
    std::size_t sample_trials = 4096;
    std::uint64_t sample_seed = 0x5eed;
    unsigned threads = 0;
};

// Defaults with ECCIR_DIM_LIMIT applied when set.
MinDistanceConfig config_from_env();

// A full-rank generator matrix plus optional structural descriptions. Each hint is
// checked against the row space at construction, so min_distance may rely on it.
class LinearCode {
public:
    explicit LinearCode(GeneratorMatrix generator, std::optional<cyclic::CyclicCodeSpec> cyclic_spec = std::nullopt,
                        std::optional<GeneratorMatrix> product_inner = std::nullopt);

    const GeneratorMatrix& generator() const noexcept { return generator_; }
    std::size_t n() const noexcept { return generator_.cols(); }
    std::size_t k() const noexcept { return generator_.rows(); }
    std::uint64_t q() const noexcept { return generator_.q(); }

    const std::optional<cyclic::CyclicCodeSpec>& cyclic_spec() const noexcept { return cyclic_; }
    // When set, the code equals {(a, b) : a, b in C_inner}.
    const std::optional<GeneratorMatrix>& product_inner() const noexcept { return product_inner_; }

private:
    GeneratorMatrix generator_;
    std::optional<cyclic::CyclicCodeSpec> cyclic_;
    std::optional<GeneratorMatrix> product_inner_;
};

bool exhaustive_feasible(std::size_t k, std::uint64_t q, unsigned dim_limit);

DistanceResult min_distance(const LinearCode& code, const MinDistanceConfig& config = {});

// Minimum nonzero weight by Gray-code enumeration, regardless of size.
std::size_t exhaustive_min_weight(const GeneratorMatrix& g, unsigned threads = 0);

// Nearest codeword search over the whole code.
struct NearestCodeword {
    std::vector<Elem> message;
    std::vector<Elem> codeword;
    std::size_t distance = 0;
    bool tie = false;  // another codeword is at the same distance
};
NearestCodeword nearest_codeword(const GeneratorMatrix& g, std::span<const Elem> received);

// Smallest even integer >= 2^(m-1) - 2^(m/2).
std::size_t carlitz_uchiyama_even_bound(unsigned m);

// m when the code is, up to a multiplier, the dual of the double-error-correcting
// primitive BCH code of length 2^m - 1 (nonzeroes C_b U C_3b, |C_b| = |C_3b| = m).
std::optional<unsigned> carlitz_uchiyama_degree(const cyclic::CyclicCodeSpec& spec);

// BCH bound: 1 + the longest run of zeroes a, a + b, a + 2b, ... (mod n) over steps b
// coprime to n.
std::size_t bch_bound(const cyclic::CyclicCodeSpec& spec);

std::size_t singleton_bound(std::size_t n, std::size_t k);

// Best-known distances d*(n, k) for binary linear codes, as quoted alongside the
// constructions reproduced here. Ranges are stored as [low, high].
struct KnownDistanceEntry {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d_star_low = 0;
    std::size_t d_star_high = 0;
    std::string_view source;

    bool exact() const noexcept { return d_star_low == d_star_high; }
};

std::span<const KnownDistanceEntry> known_distance_table();
std::optional<KnownDistanceEntry> known_distance(std::size_t n, std::size_t k);

}  // namespace eccir::code
