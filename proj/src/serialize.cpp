#include "eccir/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace eccir::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

json to_json(const cyclic::CyclicCodeSpec& spec) {
    return {{"n", spec.n()}, {"q", spec.q()}, {"nonzeroes", spec.nonzeroes()}};
}

cyclic::CyclicCodeSpec spec_from_json(const json& j) {
    return cyclic::CyclicCodeSpec(field(j, "n").get<std::uint64_t>(), field(j, "q").get<std::uint64_t>(),
                                  field(j, "nonzeroes").get<std::vector<std::uint64_t>>());
}

json to_json(const code::GeneratorMatrix& g) { return {{"q", g.q()}, {"rows", g.to_rows()}}; }

namespace {

code::GeneratorMatrix matrix_from_rows(const gf::FieldPtr& f, const json& rows) {
    const auto r = rows.get<std::vector<std::vector<gf::Elem>>>();
    if (r.empty()) throw std::invalid_argument("generator matrix has no rows");
    return code::GeneratorMatrix(f, r, r.front().size());
}

}  // namespace

code::GeneratorMatrix generator_from_json(const json& j) {
    return matrix_from_rows(gf::field_of_order(field(j, "q").get<std::uint64_t>()), field(j, "rows"));
}

json to_json(const code::DistanceResult& d) {
    json j{{"kind", code::to_string(d.kind)}, {"method", code::to_string(d.method)}};
    if (d.is_exact()) {
        j["value"] = d.lower;
    } else {
        j["lower"] = d.lower;
        j["upper"] = d.upper;
    }
    return j;
}

code::DistanceResult distance_from_json(const json& j) {
    const auto kind = code::distance_kind_from_string(field(j, "kind").get<std::string>());
    const auto method = code::distance_method_from_string(field(j, "method").get<std::string>());
    if (kind == code::DistanceKind::exact) return code::DistanceResult::exact_value(field(j, "value").get<std::size_t>(), method);
    return code::DistanceResult::bounded(field(j, "lower").get<std::size_t>(), field(j, "upper").get<std::size_t>(), method);
}

json subset_to_json(Subset s) {
    json out = json::array();
    for (std::size_t i : subset_members(s)) out.push_back(i + 1);
    return out;
}

Subset subset_from_json(const json& j) {
    const auto idx = j.get<std::vector<std::size_t>>();
    return subset_from_indices(idx);
}

json to_json(const Eccir& e) {
    json comps = json::array();
    for (const auto& g : e.components()) comps.push_back(g.to_rows());

    const auto& p = e.provenance();
    json specs = json::array();
    for (const auto& s : p.component_specs) specs.push_back(s ? to_json(*s) : json(nullptr));
    json eqs = json::array();
    for (const auto& c : p.equivalences) {
        json item{{"source", subset_to_json(c.source)}, {"target", subset_to_json(c.target)}, {"permutation", c.permutation}};
        item["multiplier"] = c.multiplier ? json(*c.multiplier) : json(nullptr);
        eqs.push_back(std::move(item));
    }
    json products = json::array();
    for (const auto& h : p.products) products.push_back({{"subset", subset_to_json(h.subset)}, {"inner", to_json(h.inner)}});

    return {{"L", e.L()},
            {"k", e.k()},
            {"n", e.n()},
            {"q", e.q()},
            {"components", std::move(comps)},
            {"provenance",
             {{"construction", p.construction},
              {"parameters", p.parameters},
              {"component_specs", std::move(specs)},
              {"equivalences", std::move(eqs)},
              {"products", std::move(products)},
              {"notes", p.notes}}}};
}

Eccir eccir_from_json(const json& j) {
    const auto q = field(j, "q").get<std::uint64_t>();
    const auto f = gf::field_of_order(q);
    std::vector<code::GeneratorMatrix> comps;
    for (const auto& rows : field(j, "components")) comps.push_back(matrix_from_rows(f, rows));
    if (comps.empty()) throw std::invalid_argument("no components");

    Provenance p;
    if (j.contains("provenance")) {
        const auto& pj = j.at("provenance");
        p.construction = pj.value("construction", std::string{});
        if (pj.contains("parameters")) p.parameters = pj.at("parameters");
        if (pj.contains("component_specs"))
            for (const auto& s : pj.at("component_specs"))
                p.component_specs.push_back(s.is_null() ? std::nullopt : std::optional(spec_from_json(s)));
        if (pj.contains("equivalences"))
            for (const auto& c : pj.at("equivalences")) {
                EquivalenceClaim claim;
                claim.source = subset_from_json(field(c, "source"));
                claim.target = subset_from_json(field(c, "target"));
                claim.permutation = field(c, "permutation").get<std::vector<std::size_t>>();
                if (c.contains("multiplier") && !c.at("multiplier").is_null()) claim.multiplier = c.at("multiplier").get<std::uint64_t>();
                if (!code::is_permutation(claim.permutation) || claim.permutation.size() != comps.front().cols())
                    throw std::invalid_argument("equivalence claim carries an invalid permutation");
                p.equivalences.push_back(std::move(claim));
            }
        if (pj.contains("products"))
            for (const auto& h : pj.at("products"))
                p.products.push_back({subset_from_json(field(h, "subset")), generator_from_json(field(h, "inner"))});
        if (pj.contains("notes")) p.notes = pj.at("notes").get<std::vector<std::string>>();
    }

    for (std::size_t i = 0; i < p.component_specs.size() && i < comps.size(); ++i)
        if (p.component_specs[i] &&
            (p.component_specs[i]->n() != comps[i].cols() || p.component_specs[i]->q() != q ||
             !code::row_space_equal(comps[i], cyclic::generator_matrix_of(*p.component_specs[i]))))
            throw std::invalid_argument("cyclic description of component " + std::to_string(i + 1) +
                                        " does not match its generator matrix");
    Eccir e = Eccir::create(std::move(comps), std::move(p));
    if (j.contains("L") && field(j, "L").get<std::size_t>() != e.L()) throw std::invalid_argument("field 'L' disagrees with components");
    if (j.contains("k") && field(j, "k").get<std::size_t>() != e.k()) throw std::invalid_argument("field 'k' disagrees with components");
    if (j.contains("n") && field(j, "n").get<std::size_t>() != e.n()) throw std::invalid_argument("field 'n' disagrees with components");
    return e;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) { return json::parse(text); }

json to_json(const DistanceProfile& p) {
    json entries = json::array();
    for (const auto& e : p.entries) {
        json item{{"subset", subset_to_json(e.subset)},
                  {"size", subset_size(e.subset)},
                  {"dim", e.dimension},
                  {"distance", to_json(e.distance)},
                  {"singleton", e.singleton},
                  {"bounds_only", !e.distance.is_exact()}};
        item["d_star"] = e.d_star ? json{{"low", e.d_star->d_star_low}, {"high", e.d_star->d_star_high}} : json(nullptr);
        item["reused_from"] = e.reused_from ? subset_to_json(*e.reused_from) : json(nullptr);
        entries.push_back(std::move(item));
    }
    json sizes = json::array();
    for (const auto& s : p.by_size)
        sizes.push_back({{"size", s.size}, {"dim", s.dimension}, {"distance", to_json(s.min_distance)}, {"singleton", s.singleton}});
    return {{"L", p.L}, {"k", p.k}, {"n", p.n}, {"q", p.q}, {"entries", std::move(entries)}, {"by_size", std::move(sizes)}};
}

std::string profile_csv(const DistanceProfile& p) {
    std::ostringstream out;
    out << "subset,size,dim,kind,lower,upper,method,singleton,d_star_low,d_star_high\n";
    for (const auto& e : p.entries) {
        out << '"' << subset_label(e.subset) << "\"," << subset_size(e.subset) << ',' << e.dimension << ','
            << code::to_string(e.distance.kind) << ',' << e.distance.lower << ',' << e.distance.upper << ','
            << code::to_string(e.distance.method) << ',' << e.singleton << ',';
        if (e.d_star)
            out << e.d_star->d_star_low << ',' << e.d_star->d_star_high;
        else
            out << ',';
        out << '\n';
    }
    return out.str();
}

json to_json(const sim::TrialReport& r) {
    json sets = json::array();
    for (std::size_t i = 0; i < r.side_info.size(); ++i)
        sets.push_back({{"side_info", subset_to_json(r.side_info[i])},
                        {"decoded", subset_to_json(full_subset(r.L) ^ r.side_info[i])},
                        {"distance", to_json(r.distances[i])},
                        {"radius", r.radius[i]}});
    json by_size = json::array();
    for (const auto& [size, stats] : r.by_side_info_size)
        by_size.push_back({{"side_info_size", size},
                           {"trials", stats.trials},
                           {"successes", stats.successes},
                           {"success_rate", stats.trials ? static_cast<double>(stats.successes) / static_cast<double>(stats.trials) : 1.0}});
    json j{{"rng", r.rng},
           {"seed", r.seed},
           {"L", r.L},
           {"k", r.k},
           {"n", r.n},
           {"q", r.q},
           {"trials", r.trials},
           {"successes", r.successes},
           {"ties", r.ties},
           {"side_info_sets", std::move(sets)},
           {"by_side_info_size", std::move(by_size)}};
    if (r.flip_probability)
        j["channel"] = {{"model", "symmetric"}, {"flip_probability", *r.flip_probability}};
    else
        j["channel"] = {{"model", "exact-weight"}, {"error_weight", r.error_weight}};
    return j;
}

}  // namespace eccir::io
