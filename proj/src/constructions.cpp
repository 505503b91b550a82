#include "eccir/constructions.hpp"

#include "eccir/numtheory.hpp"
#include "eccir/parallel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace eccir::constructions {

using code::GeneratorMatrix;
using cyclic::CyclicCodeSpec;
using gf::Elem;

namespace {

nlohmann::json spec_json(const CyclicCodeSpec& s) {
    return {{"n", s.n()}, {"q", s.q()}, {"nonzeroes", s.nonzeroes()}};
}

Provenance cyclic_provenance(std::string construction, nlohmann::json params, std::vector<CyclicCodeSpec> specs) {
    Provenance p;
    p.construction = std::move(construction);
    p.parameters = std::move(params);
    for (auto& s : specs) p.component_specs.emplace_back(std::move(s));
    p.equivalences = multiplier_equivalences(p.component_specs);
    return p;
}

Eccir cyclic_eccir(std::string construction, nlohmann::json params, std::vector<CyclicCodeSpec> specs) {
    std::vector<GeneratorMatrix> comps;
    for (const auto& s : specs) comps.push_back(cyclic::generator_matrix_of(s));
    return Eccir::create(std::move(comps), cyclic_provenance(std::move(construction), std::move(params), std::move(specs)));
}

// Determinant is nonzero; destroys m (s x s, row-major).
bool nonsingular(const gf::Field& f, std::vector<Elem>& m, std::size_t s) {
    for (std::size_t c = 0; c < s; ++c) {
        std::size_t p = c;
        while (p < s && m[p * s + c] == 0) ++p;
        if (p == s) return false;
        if (p != c)
            for (std::size_t j = c; j < s; ++j) std::swap(m[p * s + j], m[c * s + j]);
        const Elem inv = f.inv(m[c * s + c]);
        for (std::size_t r = c + 1; r < s; ++r) {
            const Elem factor = f.mul(m[r * s + c], inv);
            if (factor == 0) continue;
            for (std::size_t j = c; j < s; ++j) m[r * s + j] = f.sub(m[r * s + j], f.mul(factor, m[c * s + j]));
        }
    }
    return true;
}

// Advances a sorted index combination of [0, n); false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t s = idx.size();
    for (std::size_t i = s; i-- > 0;) {
        if (idx[i] < n - s + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<std::size_t> half_swap(std::size_t half) {
    std::vector<std::size_t> perm(2 * half);
    for (std::size_t i = 0; i < 2 * half; ++i) perm[i] = (i + half) % (2 * half);
    return perm;
}

}  // namespace

GeneratorMatrix grs_systematic_part(std::uint64_t q, std::size_t n, std::size_t L) {
    if (n == 0 || L == 0) throw std::invalid_argument("grs: n and L must be positive");
    if (q <= n + L)
        throw std::invalid_argument("grs: need q > n + L, got q = " + std::to_string(q) + ", n + L = " +
                                    std::to_string(n + L));
    const auto field = gf::field_of_order(q);
    const std::size_t len = n + L;
    std::vector<Elem> points{0};
    Elem x = 1;
    while (points.size() < len) {
        points.push_back(x);
        x = field->mul(x, field->primitive());
    }
    GeneratorMatrix rs(field, L, len);
    for (std::size_t j = 0; j < L; ++j)
        for (std::size_t i = 0; i < len; ++i) rs.set(j, i, field->pow(points[i], j));
    std::vector<std::size_t> pivots;
    const GeneratorMatrix sys = code::row_reduce(rs, &pivots);
    for (std::size_t j = 0; j < L; ++j)
        if (pivots.at(j) != j) throw std::logic_error("grs: leading columns are not an information set");
    std::vector<std::size_t> info(L);
    std::iota(info.begin(), info.end(), std::size_t{0});
    return code::puncture(sys, info);
}

Eccir mdsir_from_grs(std::uint64_t q, std::size_t n, std::size_t L) {
    const GeneratorMatrix g = grs_systematic_part(q, n, L);
    std::vector<GeneratorMatrix> comps;
    for (std::size_t l = 0; l < L; ++l) {
        const std::size_t row[] = {l};
        comps.push_back(g.select_rows(row));
    }
    Provenance p;
    p.construction = "grs-mdsir";
    p.parameters = {{"q", q}, {"n", n}, {"L", L}};
    p.notes.push_back("rows of G from the systematic form [I | G] of a Reed-Solomon code on the points 0, 1, g, g^2, ...");
    return Eccir::create(std::move(comps), std::move(p));
}

std::uint64_t square_submatrix_count(std::size_t rows, std::size_t cols) {
    std::uint64_t total = 0;
    for (std::size_t s = 1; s <= std::min(rows, cols); ++s) {
        const std::uint64_t a = binomial(rows, s), b = binomial(cols, s);
        if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t c = a * b;
        if (total > std::numeric_limits<std::uint64_t>::max() - c) return std::numeric_limits<std::uint64_t>::max();
        total += c;
    }
    return total;
}

bool verify_all_square_submatrices(const GeneratorMatrix& g, std::uint64_t budget) {
    const std::uint64_t count = square_submatrix_count(g.rows(), g.cols());
    if (count > budget)
        throw std::length_error("verify_all_square_submatrices: " + std::to_string(count) +
                                " determinants exceed the budget of " + std::to_string(budget));
    const gf::Field& f = *g.field();
    for (std::size_t s = 1; s <= std::min(g.rows(), g.cols()); ++s) {
        std::vector<std::size_t> rows(s);
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        std::vector<Elem> m(s * s);
        do {
            std::vector<std::size_t> cols(s);
            std::iota(cols.begin(), cols.end(), std::size_t{0});
            do {
                for (std::size_t i = 0; i < s; ++i)
                    for (std::size_t j = 0; j < s; ++j) m[i * s + j] = g.at(rows[i], cols[j]);
                if (!nonsingular(f, m, s)) return false;
            } while (next_combination(cols, g.cols()));
        } while (next_combination(rows, g.rows()));
    }
    return true;
}

Eccir concatenate(const ConcatConfig& cfg) {
    const auto& outer = cfg.outer;
    const auto& field = outer.field();
    if (field->characteristic() != 2) throw std::invalid_argument("concatenate: outer code must be over F_{2^k}");
    const std::size_t k = field->degree();
    if (cfg.inner.q() != 2) throw std::invalid_argument("concatenate: inner code must be binary");
    if (cfg.inner.rows() != k)
        throw std::invalid_argument("concatenate: inner dimension " + std::to_string(cfg.inner.rows()) +
                                    " differs from the extension degree " + std::to_string(k));
    if (code::rank(cfg.inner) != k) throw std::invalid_argument("concatenate: inner generator is not full rank");

    const std::size_t n_in = cfg.inner.cols(), n_out = outer.n();
    const auto inner_rows = cfg.inner.packed_rows();
    std::vector<GeneratorMatrix> comps;
    for (const auto& g : outer.components()) {
        std::vector<BitVec> rows;
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t t = 0; t < k; ++t) {
                BitVec row(n_out * n_in);
                for (std::size_t i = 0; i < n_out; ++i) {
                    const Elem sym = field->mul(Elem{1} << t, g.at(r, i));
                    for (std::size_t b = 0; b < k; ++b)
                        if ((sym >> b) & 1)
                            for (std::size_t c = 0; c < n_in; ++c)
                                if (inner_rows[b].get(c)) row.flip(i * n_in + c);
                }
                rows.push_back(std::move(row));
            }
        comps.push_back(GeneratorMatrix::from_bits(rows, n_out * n_in));
    }
    Provenance p;
    p.construction = "concat";
    p.parameters = {{"outer", {{"construction", outer.provenance().construction},
                               {"parameters", outer.provenance().parameters},
                               {"q", outer.q()},
                               {"n", n_out},
                               {"L", outer.L()}}},
                    {"inner", cfg.inner.to_rows()}};
    p.notes.push_back("symbols expanded in the polynomial basis of F_{2^k}, then encoded by the inner code");
    p.notes.push_back("d(C_S) >= d_in (n_out - |S| + 1) when the outer collection is MDS for informed receivers");
    return Eccir::create(std::move(comps), std::move(p));
}

std::vector<std::size_t> concatenation_bounds(std::size_t d_in, std::size_t n_out, std::size_t L) {
    std::vector<std::size_t> out;
    for (std::size_t s = 1; s <= L; ++s) out.push_back(s <= n_out ? d_in * (n_out - s + 1) : 0);
    return out;
}

namespace {

Eccir piret_eccir(const cyclic::CodeFieldIso& iso, Elem beta) {
    const auto& f = *iso.field();
    const std::size_t k = iso.dimension(), n = iso.spec().n();
    std::vector<BitVec> c1, c2;
    Elem a = 1;
    for (std::size_t i = 0; i < k; ++i) {
        const BitVec u = iso.apply(a), v = iso.apply(f.mul(beta, a));
        BitVec r1(2 * n), r2(2 * n);
        for (std::size_t c = 0; c < n; ++c) {
            r1.set(c, u.get(c));
            r1.set(n + c, v.get(c));
            r2.set(c, v.get(c));
            r2.set(n + c, u.get(c));
        }
        c1.push_back(std::move(r1));
        c2.push_back(std::move(r2));
        a = f.mul(a, iso.gamma());
    }
    Provenance p;
    p.construction = "piret";
    p.parameters = {{"inner", spec_json(iso.spec())}, {"beta", beta}, {"gamma", iso.gamma()}};
    p.products.push_back({Subset{3}, cyclic::generator_matrix_of(iso.spec())});
    p.equivalences.push_back({Subset{1}, Subset{2}, half_swap(n), std::nullopt});
    p.notes.push_back("C_1 = {(phi(a), phi(beta a))}, C_2 = {(phi(beta a), phi(a))}; phi(gamma^i) = theta^i");
    p.notes.push_back("C_1 + C_2 = {(a, b) : a, b in the inner code}");
    return Eccir::create({GeneratorMatrix::from_bits(c1, 2 * n), GeneratorMatrix::from_bits(c2, 2 * n)}, std::move(p));
}

void check_beta(const gf::Field& f, Elem beta) {
    if (!f.contains(beta) || beta == 0 || beta == 1)
        throw std::invalid_argument("piret: beta must be an element of F_{2^k} outside {0, 1}, got " + std::to_string(beta));
}

std::size_t inner_distance(const CyclicCodeSpec& inner, unsigned threads) {
    return code::exhaustive_min_weight(cyclic::generator_matrix_of(inner), threads);
}

}  // namespace

PiretResult piret_pair(const CyclicCodeSpec& inner, Elem beta, unsigned threads) {
    const auto iso = cyclic::code_field_iso(inner);
    check_beta(*iso.field(), beta);
    Eccir e = piret_eccir(iso, beta);
    const std::size_t d1 = code::exhaustive_min_weight(e.component(0), threads);
    return PiretResult{inner, beta, d1, inner_distance(inner, threads), {beta}, std::move(e)};
}

std::vector<std::size_t> piret_weight_table(const cyclic::CodeFieldIso& iso) {
    const BitVec& e = iso.idempotent();
    const std::size_t n = iso.spec().n();
    std::size_t t = 1;
    while (t < n && !(e.rotated(t) == e)) ++t;
    const std::uint64_t group = iso.field()->order() - 1;
    if (group % t != 0) throw std::logic_error("piret: rotation order of the idempotent does not divide 2^k - 1");
    const std::size_t period = static_cast<std::size_t>(group / t);

    std::vector<std::size_t> w(period);
    BitVec cur = e;
    for (std::size_t i = 0; i < period; ++i) {
        w[i] = cur.popcount();
        cur = iso.multiply(cur, iso.theta());
    }
    // theta^P must be a cyclic shift of e for the table to be periodic.
    bool shift = false;
    for (std::size_t s = 0; s < n && !shift; ++s) shift = e.rotated(s) == cur;
    if (!shift) throw std::logic_error("piret: theta^P is not a shift of the idempotent");
    return w;
}

PiretResult piret_search(const CyclicCodeSpec& inner, unsigned threads) {
    const auto iso = cyclic::code_field_iso(inner);
    const auto& f = *iso.field();
    if (f.order() <= 2) throw std::invalid_argument("piret: F_2 has no admissible beta");
    const auto w = piret_weight_table(iso);
    const std::size_t P = w.size();
    const std::uint64_t group = f.order() - 1;

    // d(C_1) for beta = gamma^j depends on j mod P and is constant on orbits of j -> 2j.
    std::vector<std::size_t> reps;
    std::vector<std::size_t> orbit_of(P, std::numeric_limits<std::size_t>::max());
    for (std::size_t r = 0; r < P; ++r) {
        if (orbit_of[r] != std::numeric_limits<std::size_t>::max()) continue;
        std::size_t x = r;
        do {
            orbit_of[x] = reps.size();
            x = (2 * x) % P;
        } while (x != r);
        reps.push_back(r);
    }
    std::vector<std::size_t> d_rep(reps.size());
    parallel_for(reps.size(), threads, [&](std::size_t o) {
        const std::size_t r = reps[o];
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0, j = r; i < P; ++i) {
            best = std::min(best, w[i] + w[j]);
            if (++j == P) j = 0;
        }
        d_rep[o] = best;
    });

    // Residue 0 is admissible only through j = P, which exists when P < 2^k - 1.
    std::size_t best = 0;
    for (std::size_t r = 0; r < P; ++r) {
        if (r == 0 && P == group) continue;
        best = std::max(best, d_rep[orbit_of[r]]);
    }
    std::vector<Elem> maximizers;
    Elem beta = 1;
    for (std::uint64_t j = 1; j < group; ++j) {
        beta = f.mul(beta, iso.gamma());
        if (d_rep[orbit_of[j % P]] == best) maximizers.push_back(beta);
    }
    std::sort(maximizers.begin(), maximizers.end());
    if (maximizers.empty()) throw std::logic_error("piret: no admissible beta");

    Eccir e = piret_eccir(iso, maximizers.front());
    const std::size_t d1 = code::exhaustive_min_weight(e.component(0), threads);
    if (d1 != best)
        throw std::logic_error("piret: weight-table distance " + std::to_string(best) +
                               " disagrees with enumeration " + std::to_string(d1));
    const Elem chosen = maximizers.front();
    return PiretResult{inner, chosen, d1, inner_distance(inner, threads), std::move(maximizers), std::move(e)};
}

PiretResult piret_search_reference(const CyclicCodeSpec& inner, unsigned threads) {
    const auto iso = cyclic::code_field_iso(inner);
    const auto& f = *iso.field();
    if (f.order() <= 2) throw std::invalid_argument("piret: F_2 has no admissible beta");
    const std::size_t count = static_cast<std::size_t>(f.order() - 2);
    std::vector<std::size_t> d(count);
    parallel_for(count, threads, [&](std::size_t i) {
        d[i] = code::exhaustive_min_weight(piret_eccir(iso, static_cast<Elem>(i + 2)).component(0), 1);
    });
    const std::size_t best = *std::max_element(d.begin(), d.end());
    std::vector<Elem> maximizers;
    for (std::size_t i = 0; i < count; ++i)
        if (d[i] == best) maximizers.push_back(static_cast<Elem>(i + 2));
    Eccir e = piret_eccir(iso, maximizers.front());
    const Elem chosen = maximizers.front();
    return PiretResult{inner, chosen, best, inner_distance(inner, threads), std::move(maximizers), std::move(e)};
}

Eccir primitive_pair(unsigned m) {
    if (m < 3) throw std::invalid_argument("primitive_pair: need m >= 3, got " + std::to_string(m));
    if (m > 30) throw std::invalid_argument("primitive_pair: m above 30 is not supported");
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    const auto c1 = cyclic::coset(1, n, 2), c3 = cyclic::coset(3, n, 2);
    if (c1.size() != m || c3.size() != m) throw std::logic_error("primitive_pair: cosets C_1, C_3 do not have size m");
    Eccir e = cyclic_eccir("primitive-pair", {{"m", m}, {"n", n}},
                           {CyclicCodeSpec(n, 2, c1.members), CyclicCodeSpec(n, 2, c3.members)});
    Provenance p = e.provenance();
    p.notes.push_back("C_1 is the [" + std::to_string(n) + "," + std::to_string(m) + "," +
                      std::to_string(std::uint64_t{1} << (m - 1)) + "] simplex code");
    if (nt::gcd(3, n) == 1) p.notes.push_back("gcd(3, n) = 1: C_1 = mu_3(C_2)");
    p.notes.push_back("mu_{-1}(C_1 + C_2) is the dual of the double-error-correcting BCH code; d(C_1 + C_2) is even and >= " +
                      std::to_string(code::carlitz_uchiyama_even_bound(m)));
    return Eccir::create(e.components(), std::move(p));
}

Eccir quadratic_residue_pair(std::uint64_t n) {
    if (!nt::is_prime(n) || n < 7 || (n % 8 != 1 && n % 8 != 7))
        throw std::invalid_argument("quadratic_residue_pair: n must be a prime = +-1 mod 8, got " + std::to_string(n));
    std::set<std::uint64_t> sq;
    for (std::uint64_t a = 1; a < n; ++a) sq.insert(nt::mulmod(a, a, n));
    if (!sq.count(2)) throw std::logic_error("quadratic_residue_pair: 2 is not a residue");
    std::vector<std::uint64_t> t1(sq.begin(), sq.end()), t2;
    for (std::uint64_t a = 1; a < n; ++a)
        if (!sq.count(a)) t2.push_back(a);
    Eccir e = cyclic_eccir("qr", {{"n", n}}, {CyclicCodeSpec(n, 2, t1), CyclicCodeSpec(n, 2, t2)});
    Provenance p = e.provenance();
    p.notes.push_back("C_1 + C_2 is the [" + std::to_string(n) + "," + std::to_string(n - 1) + ",2] even-weight code");
    return Eccir::create(e.components(), std::move(p));
}

std::uint64_t smallest_cubic_nonresidue(std::uint64_t n) {
    std::set<std::uint64_t> cubes;
    for (std::uint64_t a = 1; a < n; ++a) cubes.insert(nt::mulmod(nt::mulmod(a, a, n), a, n));
    for (std::uint64_t b = 2; b < n; ++b)
        if (!cubes.count(b)) return b;
    throw std::invalid_argument("no cubic non-residue modulo " + std::to_string(n));
}

Eccir cubic_residue_triple(std::uint64_t n) {
    if (!nt::is_prime(n) || n < 7 || (n - 1) % 3 != 0)
        throw std::invalid_argument("cubic_residue_triple: n must be a prime = 1 mod 3, got " + std::to_string(n));
    std::set<std::uint64_t> cubes;
    for (std::uint64_t a = 1; a < n; ++a) cubes.insert(nt::mulmod(nt::mulmod(a, a, n), a, n));
    if (!cubes.count(2))
        throw std::invalid_argument("cubic_residue_triple: 2 is not a cubic residue modulo " + std::to_string(n));
    const std::uint64_t b = smallest_cubic_nonresidue(n), binv = nt::invmod(b, n);
    std::vector<std::uint64_t> t1(cubes.begin(), cubes.end()), t2, t3;
    for (std::uint64_t x : t1) {
        t2.push_back(nt::mulmod(binv, x, n));
        t3.push_back(nt::mulmod(nt::mulmod(binv, binv, n), x, n));
    }
    Eccir e = cyclic_eccir("cr", {{"n", n}, {"b", b}},
                           {CyclicCodeSpec(n, 2, t1), CyclicCodeSpec(n, 2, t2), CyclicCodeSpec(n, 2, t3)});
    Provenance p = e.provenance();
    p.notes.push_back("T_1 = b T_2 = b^2 T_3 with b = " + std::to_string(b));
    p.notes.push_back("C_1 + C_2 + C_3 is the [" + std::to_string(n) + "," + std::to_string(n - 1) + ",2] even-weight code");
    return Eccir::create(e.components(), std::move(p));
}

Eccir coset_partition_eccir(std::uint64_t n, std::uint64_t q, const std::vector<std::vector<std::uint64_t>>& parts) {
    if (parts.empty()) throw std::invalid_argument("coset_partition: no parts given");
    std::vector<CyclicCodeSpec> specs;
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) throw std::invalid_argument("coset_partition: part " + std::to_string(i + 1) + " is empty");
        for (std::uint64_t r : parts[i])
            if (r >= n) throw std::invalid_argument("coset_partition: representative " + std::to_string(r) + " >= n");
        auto t = cyclic::coset_union(parts[i], n, q);
        for (std::uint64_t x : t)
            if (!seen.insert(x).second)
                throw std::invalid_argument("coset_partition: parts overlap at " + std::to_string(x) +
                                            "; nonzero sets must be disjoint");
        specs.emplace_back(n, q, std::move(t));
    }
    return cyclic_eccir("coset-partition", {{"n", n}, {"q", q}, {"parts", parts}}, std::move(specs));
}

Eccir example1_triple() { return coset_partition_eccir(31, 2, {{1, 3}, {5, 15}, {7, 11}}); }

Eccir sub_collection(const Eccir& e, Subset keep) {
    if (keep == 0 || (keep & ~full_subset(e.L())) != 0) throw std::invalid_argument("sub_collection: invalid subset");
    std::vector<GeneratorMatrix> comps;
    Provenance p;
    p.construction = e.provenance().construction;
    p.parameters = e.provenance().parameters;
    std::vector<std::size_t> kept;
    for (std::size_t i : subset_members(keep)) {
        comps.push_back(e.component(i));
        if (!e.provenance().component_specs.empty()) p.component_specs.push_back(e.provenance().component_specs[i]);
        kept.push_back(i + 1);
    }
    p.parameters["components"] = kept;
    p.equivalences = multiplier_equivalences(p.component_specs);
    p.notes = e.provenance().notes;
    return Eccir::create(std::move(comps), std::move(p));
}

std::optional<std::uint64_t> find_multiplier(std::uint64_t n, const std::vector<std::uint64_t>& from,
                                             const std::vector<std::uint64_t>& to) {
    if (from.size() != to.size()) return std::nullopt;
    std::vector<bool> target(n, false);
    for (std::uint64_t x : to) target.at(x) = true;
    for (std::uint64_t a = 1; a < std::max<std::uint64_t>(n, 2); ++a) {
        if (nt::gcd(a, n) != 1) continue;
        const std::uint64_t ainv = nt::invmod(a, n);
        bool ok = true;
        for (std::uint64_t x : from)
            if (!target[nt::mulmod(ainv, x, n)]) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
    return std::nullopt;
}

std::vector<EquivalenceClaim> multiplier_equivalences(std::span<const std::optional<CyclicCodeSpec>> specs) {
    std::vector<EquivalenceClaim> claims;
    if (specs.empty() || !std::all_of(specs.begin(), specs.end(), [](const auto& s) { return s.has_value(); }))
        return claims;
    const std::uint64_t n = specs.front()->n();
    const auto subsets = enumerate_subsets(specs.size());
    auto nonzeroes = [&](Subset s) {
        std::vector<std::uint64_t> t;
        for (std::size_t i : subset_members(s)) t.insert(t.end(), specs[i]->nonzeroes().begin(), specs[i]->nonzeroes().end());
        std::sort(t.begin(), t.end());
        return t;
    };
    for (std::size_t b = 0; b < subsets.size(); ++b) {
        const auto to = nonzeroes(subsets[b]);
        for (std::size_t a = 0; a < b; ++a) {
            if (subset_size(subsets[a]) != subset_size(subsets[b])) continue;
            if (auto m = find_multiplier(n, nonzeroes(subsets[a]), to)) {
                claims.push_back({subsets[a], subsets[b], cyclic::multiplier_permutation(n, *m), *m});
                break;
            }
        }
    }
    return claims;
}

}  // namespace eccir::constructions
