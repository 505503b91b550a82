#include "eccir/eccir.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace eccir {

std::vector<std::size_t> subset_members(Subset s) {
    std::vector<std::size_t> out;
    while (s) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

std::size_t subset_size(Subset s) { return static_cast<std::size_t>(std::popcount(s)); }

std::string subset_label(Subset s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : subset_members(s)) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

Subset subset_from_indices(std::span<const std::size_t> one_based) {
    Subset s = 0;
    for (std::size_t i : one_based) {
        if (i < 1 || i > 31) throw std::out_of_range("subset index " + std::to_string(i) + " out of range");
        s |= Subset{1} << (i - 1);
    }
    return s;
}

Subset full_subset(std::size_t L) {
    if (L > 31) throw std::invalid_argument("at most 31 components are supported");
    return L == 0 ? 0 : static_cast<Subset>((std::uint64_t{1} << L) - 1);
}

std::vector<Subset> enumerate_subsets(std::size_t L) {
    std::vector<Subset> all;
    for (Subset s = 1; s <= full_subset(L) && s != 0; ++s) {
        all.push_back(s);
        if (s == full_subset(L)) break;
    }
    std::sort(all.begin(), all.end(), [](Subset a, Subset b) {
        if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
        return subset_members(a) < subset_members(b);
    });
    return all;
}

Eccir Eccir::create(std::vector<code::GeneratorMatrix> components, Provenance provenance) {
    if (!provenance.component_specs.empty() && provenance.component_specs.size() != components.size())
        throw std::invalid_argument("Eccir: provenance lists the wrong number of component specs");
    auto report = validate_components(components, provenance.component_specs);
    if (!report.valid) throw std::invalid_argument("Eccir: " + report.reason);
    return Eccir(std::move(components), std::move(provenance));
}

code::GeneratorMatrix Eccir::stacked() const { return stacked(full_subset(L())); }

code::GeneratorMatrix Eccir::stacked(Subset s) const {
    if (s == 0 || (s & ~full_subset(L())) != 0) throw std::invalid_argument("Eccir: subset must be a nonempty subset of {1..L}");
    auto members = subset_members(s);
    code::GeneratorMatrix g = components_[members.front()];
    for (std::size_t i = 1; i < members.size(); ++i) g = g.stacked(components_[members[i]]);
    return g;
}

ValidationReport validate_components(std::span<const code::GeneratorMatrix> components,
                                     std::span<const std::optional<cyclic::CyclicCodeSpec>> specs) {
    ValidationReport report;
    auto fail = [&](std::string why) {
        report.valid = false;
        report.reason = std::move(why);
        return report;
    };
    if (components.empty()) return fail("no components");
    if (components.size() > 31) return fail("more than 31 components");
    const std::size_t k = components.front().rows(), n = components.front().cols();
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& g = components[i];
        if (g.rows() != k || g.cols() != n)
            return fail("component " + std::to_string(i + 1) + " has shape " + std::to_string(g.rows()) + "x" +
                        std::to_string(g.cols()) + ", expected " + std::to_string(k) + "x" + std::to_string(n));
        code::require_same_field(g, components.front());
    }
    if (k == 0) return fail("components have dimension 0");
    if (k * components.size() > n) return fail("kL exceeds n");

    if (!specs.empty() && std::all_of(specs.begin(), specs.end(), [](const auto& s) { return s.has_value(); })) {
        std::set<std::uint64_t> seen;
        bool disjoint = true;
        for (const auto& s : specs)
            for (std::uint64_t t : s->nonzeroes()) disjoint &= seen.insert(t).second;
        report.nonzeroes_disjoint = disjoint;
    }

    for (std::size_t i = 0; i < components.size(); ++i)
        if (code::rank(components[i]) != k) {
            report.offending = Subset{1} << i;
            return fail("component " + std::to_string(i + 1) + " is not full rank");
        }

    const std::size_t L = components.size();
    // Smallest dependent subset, in profile order.
    for (Subset s : enumerate_subsets(L)) {
        if (subset_size(s) < 2) continue;
        auto members = subset_members(s);
        code::GeneratorMatrix g = components[members.front()];
        for (std::size_t i = 1; i < members.size(); ++i) g = g.stacked(components[members[i]]);
        if (code::rank(g) != k * members.size()) {
            report.offending = s;
            return fail("components " + subset_label(s) + " are linearly dependent");
        }
        if (s == full_subset(L)) break;
    }
    return report;
}

ValidationReport eccir_validate(const Eccir& e) { return validate_components(e.components(), e.provenance().component_specs); }

code::LinearCode subcode(const Eccir& e, Subset s) {
    code::GeneratorMatrix g = e.stacked(s);
    std::optional<cyclic::CyclicCodeSpec> spec;
    const auto& specs = e.provenance().component_specs;
    if (!specs.empty()) {
        std::vector<std::uint64_t> t;
        bool all = true;
        for (std::size_t i : subset_members(s)) {
            if (!specs[i]) {
                all = false;
                break;
            }
            t.insert(t.end(), specs[i]->nonzeroes().begin(), specs[i]->nonzeroes().end());
        }
        if (all) spec.emplace(specs.front()->n(), specs.front()->q(), std::move(t));
    }
    std::optional<code::GeneratorMatrix> inner;
    for (const auto& p : e.provenance().products)
        if (p.subset == s) inner = p.inner;
    return code::LinearCode(std::move(g), std::move(spec), std::move(inner));
}

const ProfileEntry& DistanceProfile::at(Subset s) const {
    for (const auto& e : entries)
        if (e.subset == s) return e;
    throw std::out_of_range("DistanceProfile: no entry for " + subset_label(s));
}

DistanceProfile distance_profile(const Eccir& e, const ProfileConfig& config) {
    if (e.L() > 20) throw std::invalid_argument("distance_profile: at most 20 components");
    DistanceProfile profile;
    profile.L = e.L();
    profile.k = e.k();
    profile.n = e.n();
    profile.q = e.q();

    std::map<Subset, std::size_t> index;
    for (Subset s : enumerate_subsets(e.L())) {
        ProfileEntry entry;
        entry.subset = s;
        entry.dimension = e.k() * subset_size(s);
        entry.singleton = code::singleton_bound(e.n(), entry.dimension);
        if (e.q() == 2) entry.d_star = code::known_distance(e.n(), entry.dimension);

        bool done = false;
        if (config.use_equivalences) {
            for (const auto& claim : e.provenance().equivalences) {
                // Claims work in both directions; invert the permutation when needed.
                Subset other = 0;
                std::vector<std::size_t> perm;
                if (claim.target == s && index.count(claim.source)) {
                    other = claim.source;
                    perm = claim.permutation;
                } else if (claim.source == s && index.count(claim.target)) {
                    other = claim.target;
                    perm.assign(claim.permutation.size(), 0);
                    for (std::size_t i = 0; i < perm.size(); ++i) perm[claim.permutation[i]] = i;
                } else {
                    continue;
                }
                const auto& prev = profile.entries[index.at(other)];
                if (!prev.distance.is_exact()) continue;
                if (!code::equal_up_to_permutation(e.stacked(other), e.stacked(s), perm)) continue;
                entry.distance = prev.distance;
                entry.reused_from = other;
                done = true;
                break;
            }
        }
        if (!done) entry.distance = code::min_distance(subcode(e, s), config.distance);
        if (entry.distance.is_exact() && entry.distance.value() > entry.singleton)
            throw std::logic_error("distance_profile: distance exceeds the Singleton bound");
        index[s] = profile.entries.size();
        profile.entries.push_back(std::move(entry));
    }

    // Equivalent codes share one distance, so bounded intervals can be intersected.
    if (config.use_equivalences) {
        std::vector<std::pair<std::size_t, std::size_t>> linked;
        for (const auto& claim : e.provenance().equivalences) {
            if (!index.count(claim.source) || !index.count(claim.target)) continue;
            const std::size_t a = index.at(claim.source), b = index.at(claim.target);
            if (profile.entries[a].distance.is_exact() && profile.entries[b].distance.is_exact()) continue;
            if (code::equal_up_to_permutation(e.stacked(claim.source), e.stacked(claim.target), claim.permutation))
                linked.emplace_back(a, b);
        }
        for (bool changed = true; changed;) {
            changed = false;
            for (auto [a, b] : linked) {
                auto& da = profile.entries[a].distance;
                auto& db = profile.entries[b].distance;
                const std::size_t lo = std::max(da.lower, db.lower), hi = std::min(da.upper, db.upper);
                if (lo > hi) throw std::logic_error("distance_profile: equivalent codes have disjoint distance intervals");
                for (auto* d : {&da, &db})
                    if (d->lower != lo || d->upper != hi) {
                        d->lower = lo;
                        d->upper = hi;
                        if (lo == hi) d->kind = code::DistanceKind::exact;
                        changed = true;
                    }
            }
        }
    }

    for (std::size_t size = 1; size <= e.L(); ++size) {
        SizeSummary sum;
        sum.size = size;
        sum.dimension = e.k() * size;
        sum.singleton = code::singleton_bound(e.n(), sum.dimension);
        bool first = true, all_exact = true;
        std::size_t lo = 0, hi = 0;
        for (const auto& entry : profile.entries) {
            if (subset_size(entry.subset) != size) continue;
            all_exact &= entry.distance.is_exact();
            lo = first ? entry.distance.lower : std::min(lo, entry.distance.lower);
            if (first || entry.distance.upper < hi) {
                hi = entry.distance.upper;
                sum.min_distance.method = entry.distance.method;
            }
            first = false;
        }
        sum.min_distance.kind = all_exact ? code::DistanceKind::exact : code::DistanceKind::bounded;
        sum.min_distance.lower = lo;
        sum.min_distance.upper = hi;
        if (lo == hi) sum.min_distance.kind = code::DistanceKind::exact;
        profile.by_size.push_back(sum);
    }
    return profile;
}

std::string_view to_string(MdsirVerdict v) {
    switch (v) {
        case MdsirVerdict::mdsir: return "mdsir";
        case MdsirVerdict::not_mdsir: return "not-mdsir";
        case MdsirVerdict::undecidable: return "undecidable";
    }
    return "unknown";
}

MdsirVerdict is_mdsir(const Eccir& e, const DistanceProfile& profile) {
    if (profile.entries.size() != enumerate_subsets(e.L()).size() || profile.n != e.n() || profile.k != e.k())
        throw std::invalid_argument("is_mdsir: profile does not belong to this code");
    bool meets = true;
    for (const auto& entry : profile.entries) {
        if (!entry.distance.is_exact()) return MdsirVerdict::undecidable;
        meets &= entry.distance.value() == entry.singleton;
    }
    return meets ? MdsirVerdict::mdsir : MdsirVerdict::not_mdsir;
}

Eccir group_messages(const Eccir& e, std::size_t k0) {
    if (e.k() != 1) throw std::invalid_argument("group_messages: components must have dimension 1");
    if (k0 == 0 || e.L() % k0 != 0)
        throw std::invalid_argument("group_messages: k0 = " + std::to_string(k0) + " does not divide L = " + std::to_string(e.L()));
    std::vector<code::GeneratorMatrix> grouped;
    for (std::size_t m = 0; m < e.L() / k0; ++m) {
        code::GeneratorMatrix g = e.component(m * k0);
        for (std::size_t j = 1; j < k0; ++j) g = g.stacked(e.component(m * k0 + j));
        grouped.push_back(std::move(g));
    }
    Provenance p;
    p.construction = "grouped";
    p.parameters = {{"k0", k0}, {"source", e.provenance().construction}, {"source_parameters", e.provenance().parameters}};
    return Eccir::create(std::move(grouped), std::move(p));
}

std::vector<std::size_t> dbt_guaranteed_bounds(std::size_t d, std::size_t k, std::size_t L) {
    std::vector<std::size_t> out;
    for (std::size_t s = 1; s <= L; ++s) out.push_back(d > k * s ? d - k * s : 0);
    return out;
}

BaselineSplit dbt_baseline_split(const code::GeneratorMatrix& systematic, std::size_t k, std::size_t L,
                                 std::optional<std::size_t> d, const code::MinDistanceConfig& config) {
    const std::size_t kl = k * L;
    if (k == 0 || L == 0) throw std::invalid_argument("dbt_baseline_split: k and L must be positive");
    if (systematic.rows() != kl || systematic.cols() <= kl)
        throw std::invalid_argument("dbt_baseline_split: expected a kL x (kL + n) matrix");
    for (std::size_t r = 0; r < kl; ++r)
        for (std::size_t c = 0; c < kl; ++c)
            if (systematic.at(r, c) != (r == c ? 1u : 0u))
                throw std::invalid_argument("dbt_baseline_split: matrix is not systematic [I | G]");

    std::vector<std::size_t> info(kl);
    for (std::size_t i = 0; i < kl; ++i) info[i] = i;
    const code::GeneratorMatrix g = code::puncture(systematic, info);
    std::vector<code::GeneratorMatrix> blocks;
    for (std::size_t l = 0; l < L; ++l) {
        std::vector<std::size_t> rows(k);
        for (std::size_t j = 0; j < k; ++j) rows[j] = l * k + j;
        blocks.push_back(g.select_rows(rows));
    }

    std::size_t dist = 0;
    if (d) {
        dist = *d;
    } else {
        dist = code::min_distance(code::LinearCode(systematic), config).lower;
    }
    Provenance p;
    p.construction = "dbt-split";
    p.parameters = {{"k", k}, {"L", L}, {"d", dist}};
    auto bounds = dbt_guaranteed_bounds(dist, k, L);
    return {Eccir::create(std::move(blocks), std::move(p)), dist, std::move(bounds)};
}

}  // namespace eccir
