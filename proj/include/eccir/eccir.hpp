#pragma once

// Codes for informed receivers.
//
// An Eccir is a linearly independent collection of L component codes C_1..C_L of
// common length n and dimension k. A receiver that already knows the messages in
// S decodes the subcode C_{S̄} = sum of C_l over l not in S, so every one of the
// 2^L - 1 nonempty subset sums matters.

#include "eccir/code.hpp"
#include "eccir/cyclic.hpp"
#include "eccir/matrix.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eccir {

// Set of component indices; bit l is component l + 1.
using Subset = std::uint32_t;

std::vector<std::size_t> subset_members(Subset s);
std::size_t subset_size(Subset s);
// "{1,3}" style label with 1-based indices.
std::string subset_label(Subset s);
Subset subset_from_indices(std::span<const std::size_t> one_based);
Subset full_subset(std::size_t L);
// All nonempty subsets of {1..L}, ordered by size, then lexicographically.
std::vector<Subset> enumerate_subsets(std::size_t L);

// Claim that permuting the coordinates of C_source by `permutation` gives C_target.
struct EquivalenceClaim {
    Subset source = 0;
    Subset target = 0;
    std::vector<std::size_t> permutation;
    std::optional<std::uint64_t> multiplier;  // set when the permutation is i -> a i mod n

    bool operator==(const EquivalenceClaim&) const = default;
};

// C_subset = {(a, b) : a, b in C_inner}.
struct ProductHint {
    Subset subset = 0;
    code::GeneratorMatrix inner;

    bool operator==(const ProductHint&) const = default;
};

struct Provenance {
    std::string construction;
    nlohmann::json parameters = nlohmann::json::object();
    // Either empty or one entry per component.
    std::vector<std::optional<cyclic::CyclicCodeSpec>> component_specs;
    std::vector<EquivalenceClaim> equivalences;
    std::vector<ProductHint> products;
    std::vector<std::string> notes;

    bool operator==(const Provenance&) const = default;
};

class Eccir {
public:
    // Validates full rank of every component and independence of the collection;
    // throws std::invalid_argument with the validation reason otherwise.
    static Eccir create(std::vector<code::GeneratorMatrix> components, Provenance provenance = {});

    std::size_t L() const noexcept { return components_.size(); }
    std::size_t k() const noexcept { return components_.front().rows(); }
    std::size_t n() const noexcept { return components_.front().cols(); }
    std::uint64_t q() const noexcept { return components_.front().q(); }
    const gf::FieldPtr& field() const noexcept { return components_.front().field(); }

    const std::vector<code::GeneratorMatrix>& components() const noexcept { return components_; }
    const code::GeneratorMatrix& component(std::size_t index0) const { return components_.at(index0); }
    const Provenance& provenance() const noexcept { return provenance_; }

    // Rows of all components in order: G = (G_1; ...; G_L).
    code::GeneratorMatrix stacked() const;
    code::GeneratorMatrix stacked(Subset s) const;

    bool operator==(const Eccir&) const = default;

private:
    Eccir(std::vector<code::GeneratorMatrix> components, Provenance provenance)
        : components_(std::move(components)), provenance_(std::move(provenance)) {}

    std::vector<code::GeneratorMatrix> components_;
    Provenance provenance_;
};

struct ValidationReport {
    bool valid = true;
    std::string reason;
    std::optional<Subset> offending;  // smallest dependent subset, when dependence is the problem
    // Cyclic components: nonzero sets disjoint (independence criterion for cyclic codes).
    std::optional<bool> nonzeroes_disjoint;
};

ValidationReport validate_components(std::span<const code::GeneratorMatrix> components,
                                     std::span<const std::optional<cyclic::CyclicCodeSpec>> specs = {});
ValidationReport eccir_validate(const Eccir& e);

// The subset-sum code, carrying any cyclic or product description the provenance supports.
code::LinearCode subcode(const Eccir& e, Subset s);

struct ProfileEntry {
    Subset subset = 0;
    std::size_t dimension = 0;
    code::DistanceResult distance;
    std::size_t singleton = 0;
    std::optional<code::KnownDistanceEntry> d_star;
    std::optional<Subset> reused_from;  // distance copied from a verified equivalent subset
};

struct SizeSummary {
    std::size_t size = 0;  // |S̄|
    std::size_t dimension = 0;
    code::DistanceResult min_distance;  // minimum over all subsets of this size
    std::size_t singleton = 0;
};

struct DistanceProfile {
    std::size_t L = 0, k = 0, n = 0;
    std::uint64_t q = 0;
    std::vector<ProfileEntry> entries;  // enumerate_subsets order
    std::vector<SizeSummary> by_size;   // |S̄| = 1..L

    const ProfileEntry& at(Subset s) const;
};

struct ProfileConfig {
    code::MinDistanceConfig distance;
    // Reuse distances across provenance equivalence claims after re-verifying them.
    bool use_equivalences = false;
};

DistanceProfile distance_profile(const Eccir& e, const ProfileConfig& config = {});

enum class MdsirVerdict { mdsir, not_mdsir, undecidable };
std::string_view to_string(MdsirVerdict v);

// Every subset sum meets the Singleton bound n - k|S̄| + 1. Undecidable when
// some entry is only bounded.
MdsirVerdict is_mdsir(const Eccir& e, const DistanceProfile& profile);

// From a k = 1 Eccir, component m becomes the sum of originals (m-1)k0+1 .. m k0.
Eccir group_messages(const Eccir& e, std::size_t k0);

// Guaranteed distances max(d - k s, 0) for s = |S̄| = 1..L of the generator-split
// construction from a systematic [n + kL, kL, d] code.
std::vector<std::size_t> dbt_guaranteed_bounds(std::size_t d, std::size_t k, std::size_t L);

struct BaselineSplit {
    Eccir eccir;
    std::size_t d = 0;                  // distance of the systematic code used for the bounds
    std::vector<std::size_t> bounds;    // index s - 1 for |S̄| = s
};

// A = [I | G] of size kL x (kL + n). When d is not supplied it is computed from A
// (the lower end of the interval when A is too large to enumerate).
BaselineSplit dbt_baseline_split(const code::GeneratorMatrix& systematic, std::size_t k, std::size_t L,
                                 std::optional<std::size_t> d = std::nullopt,
                                 const code::MinDistanceConfig& config = {});

}  // namespace eccir
