#include "eccir/code.hpp"

#include "eccir/numtheory.hpp"
#include "eccir/parallel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace eccir::code {

std::string_view to_string(DistanceKind kind) { return kind == DistanceKind::exact ? "exact" : "bounded"; }

std::string_view to_string(DistanceMethod method) {
    switch (method) {
        case DistanceMethod::exhaustive: return "exhaustive";
        case DistanceMethod::structural_parity: return "structural-parity";
        case DistanceMethod::structural_product: return "structural-product";
        case DistanceMethod::carlitz_uchiyama: return "carlitz-uchiyama";
        case DistanceMethod::bch: return "bch";
        case DistanceMethod::singleton: return "singleton";
        case DistanceMethod::sampled: return "sampled";
    }
    return "unknown";
}

DistanceKind distance_kind_from_string(std::string_view s) {
    if (s == "exact") return DistanceKind::exact;
    if (s == "bounded") return DistanceKind::bounded;
    throw std::invalid_argument("unknown distance kind '" + std::string(s) + "'");
}

DistanceMethod distance_method_from_string(std::string_view s) {
    for (auto m : {DistanceMethod::exhaustive, DistanceMethod::structural_parity, DistanceMethod::structural_product,
                   DistanceMethod::carlitz_uchiyama, DistanceMethod::bch, DistanceMethod::singleton, DistanceMethod::sampled})
        if (to_string(m) == s) return m;
    throw std::invalid_argument("unknown distance method '" + std::string(s) + "'");
}

DistanceResult DistanceResult::exact_value(std::size_t d, DistanceMethod method) {
    return {DistanceKind::exact, d, d, method};
}

DistanceResult DistanceResult::bounded(std::size_t lower, std::size_t upper, DistanceMethod method) {
    if (lower > upper) throw std::logic_error("DistanceResult: lower bound exceeds upper bound");
    return {DistanceKind::bounded, lower, upper, method};
}

std::size_t DistanceResult::value() const {
    if (!is_exact()) throw std::logic_error("DistanceResult: distance is only bounded");
    return lower;
}

MinDistanceConfig config_from_env() {
    MinDistanceConfig cfg;
    if (const char* env = std::getenv("ECCIR_DIM_LIMIT"); env && *env) {
        const long v = std::strtol(env, nullptr, 10);
        if (v <= 0 || v > 62) throw std::invalid_argument("ECCIR_DIM_LIMIT must be in [1, 62]");
        cfg.exhaustive_dim_limit = static_cast<unsigned>(v);
    }
    return cfg;
}

namespace {

GeneratorMatrix block_diagonal_pair(const GeneratorMatrix& inner) {
    const std::size_t k = inner.rows(), n = inner.cols();
    GeneratorMatrix out(inner.field(), 2 * k, 2 * n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            out.set(r, c, inner.at(r, c));
            out.set(k + r, n + c, inner.at(r, c));
        }
    return out;
}

}  // namespace

LinearCode::LinearCode(GeneratorMatrix generator, std::optional<cyclic::CyclicCodeSpec> cyclic_spec,
                       std::optional<GeneratorMatrix> product_inner)
    : generator_(std::move(generator)), cyclic_(std::move(cyclic_spec)), product_inner_(std::move(product_inner)) {
    if (generator_.rows() == 0) throw std::invalid_argument("LinearCode: dimension must be at least 1");
    if (rank(generator_) != generator_.rows())
        throw std::invalid_argument("LinearCode: generator matrix is not full rank");
    if (cyclic_) {
        if (cyclic_->n() != n() || cyclic_->q() != q() ||
            !row_space_equal(generator_, cyclic::generator_matrix_of(*cyclic_)))
            throw std::invalid_argument("LinearCode: cyclic description does not match the generator matrix");
    }
    if (product_inner_) {
        if (2 * product_inner_->cols() != n() || !row_space_equal(generator_, block_diagonal_pair(*product_inner_)))
            throw std::invalid_argument("LinearCode: product description does not match the generator matrix");
    }
}

bool exhaustive_feasible(std::size_t k, std::uint64_t q, unsigned dim_limit) {
    if (k == 0) return true;
    const double bits = static_cast<double>(k) * std::log2(static_cast<double>(q));
    return bits <= static_cast<double>(std::min(dim_limit, 62u)) + 1e-9;
}

namespace {

constexpr std::size_t kNoWeight = std::numeric_limits<std::size_t>::max();

std::vector<std::uint64_t> flatten(const std::vector<BitVec>& rows, std::size_t words) {
    std::vector<std::uint64_t> flat(rows.size() * words, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        std::copy(rows[r].words().begin(), rows[r].words().end(), flat.begin() + static_cast<std::ptrdiff_t>(r * words));
    return flat;
}

// Minimum weight over Gray indices [begin, end), excluding index 0.
template <std::size_t W>
std::size_t gray_segment_min(const std::vector<std::uint64_t>& flat, std::size_t k, std::uint64_t begin, std::uint64_t end) {
    std::array<std::uint64_t, W> c{};
    const std::uint64_t g = begin ^ (begin >> 1);
    for (std::size_t j = 0; j < k; ++j)
        if ((g >> j) & 1)
            for (std::size_t t = 0; t < W; ++t) c[t] ^= flat[j * W + t];
    std::size_t best = kNoWeight;
    if (begin != 0) {
        std::size_t w = 0;
        for (std::size_t t = 0; t < W; ++t) w += static_cast<std::size_t>(std::popcount(c[t]));
        best = w;
    }
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        const std::uint64_t* row = flat.data() + static_cast<std::size_t>(std::countr_zero(i)) * W;
        std::size_t w = 0;
        for (std::size_t t = 0; t < W; ++t) {
            c[t] ^= row[t];
            w += static_cast<std::size_t>(std::popcount(c[t]));
        }
        best = w < best ? w : best;
    }
    return best;
}

std::size_t gray_segment_min_dynamic(const std::vector<std::uint64_t>& flat, std::size_t words, std::size_t k,
                                     std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> c(words, 0);
    const std::uint64_t g = begin ^ (begin >> 1);
    for (std::size_t j = 0; j < k; ++j)
        if ((g >> j) & 1)
            for (std::size_t t = 0; t < words; ++t) c[t] ^= flat[j * words + t];
    auto wt = [&] {
        std::size_t w = 0;
        for (std::uint64_t x : c) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    };
    std::size_t best = begin != 0 ? wt() : kNoWeight;
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        const std::uint64_t* row = flat.data() + static_cast<std::size_t>(std::countr_zero(i)) * words;
        for (std::size_t t = 0; t < words; ++t) c[t] ^= row[t];
        best = std::min(best, wt());
    }
    return best;
}

std::size_t binary_exhaustive(const GeneratorMatrix& g, unsigned threads) {
    const std::size_t k = g.rows();
    if (k > 62) throw std::invalid_argument("exhaustive enumeration limited to k <= 62");
    const std::size_t words = (g.cols() + 63) / 64;
    const auto flat = flatten(g.packed_rows(), words);
    const std::uint64_t total = std::uint64_t{1} << k;

    const unsigned workers = resolve_threads(threads);
    const std::uint64_t segments = workers <= 1 ? 1 : std::min<std::uint64_t>(total, std::uint64_t{workers} * 16);
    std::vector<std::size_t> best(segments, kNoWeight);
    parallel_for(static_cast<std::size_t>(segments), workers, [&](std::size_t s) {
        const std::uint64_t begin = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * s / segments);
        const std::uint64_t end = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * (s + 1) / segments);
        switch (words) {
            case 1: best[s] = gray_segment_min<1>(flat, k, begin, end); break;
            case 2: best[s] = gray_segment_min<2>(flat, k, begin, end); break;
            case 3: best[s] = gray_segment_min<3>(flat, k, begin, end); break;
            case 4: best[s] = gray_segment_min<4>(flat, k, begin, end); break;
            default: best[s] = gray_segment_min_dynamic(flat, words, k, begin, end); break;
        }
    });
    return *std::min_element(best.begin(), best.end());
}

// Modular q-ary Gray order: step i -> i+1 adds one to the digit at position
// (number of trailing zero base-q digits of i+1), cycling through field elements
// in integer order. deltas[j][t] = (v_{t+1} - v_t) * row_j with v_q = v_0 = 0.
struct QaryWalker {
    const gf::Field& f;
    std::size_t k, n;
    std::uint64_t q;
    std::vector<std::vector<std::vector<Elem>>> deltas;

    QaryWalker(const GeneratorMatrix& g, int sign) : f(*g.field()), k(g.rows()), n(g.cols()), q(g.q()) {
        deltas.assign(k, std::vector<std::vector<Elem>>(q, std::vector<Elem>(n, 0)));
        for (std::size_t j = 0; j < k; ++j)
            for (std::uint64_t t = 0; t < q; ++t) {
                const Elem step = f.sub((t + 1) % q, t);
                const Elem scale = sign > 0 ? step : f.neg(step);
                for (std::size_t c = 0; c < n; ++c) deltas[j][t][c] = f.mul(scale, g.at(j, c));
            }
    }

    template <typename Visit>
    void walk(std::vector<Elem> c, Visit&& visit) const {
        std::vector<Elem> digits(k, 0);
        std::size_t w = weight(c);
        visit(std::uint64_t{0}, digits, c, w);
        const std::uint64_t total = nt::checked_pow(q, static_cast<unsigned>(k));
        for (std::uint64_t i = 1; i < total; ++i) {
            std::size_t j = 0;
            for (std::uint64_t x = i; x % q == 0; x /= q) ++j;
            const auto& d = deltas[j][digits[j]];
            for (std::size_t t = 0; t < n; ++t) {
                if (d[t] == 0) continue;
                const bool was = c[t] != 0;
                c[t] = f.add(c[t], d[t]);
                const bool now = c[t] != 0;
                w = w + static_cast<std::size_t>(now) - static_cast<std::size_t>(was);
            }
            digits[j] = (digits[j] + 1) % q;
            visit(i, digits, c, w);
        }
    }
};

}  // namespace

std::size_t exhaustive_min_weight(const GeneratorMatrix& g, unsigned threads) {
    if (g.rows() == 0) throw std::invalid_argument("exhaustive_min_weight: empty code");
    if (g.q() == 2) return binary_exhaustive(g, threads);
    QaryWalker walker(g, +1);
    std::size_t best = kNoWeight;
    walker.walk(std::vector<Elem>(g.cols(), 0), [&](std::uint64_t i, const auto&, const auto&, std::size_t w) {
        if (i != 0) best = std::min(best, w);
    });
    return best;
}

NearestCodeword nearest_codeword(const GeneratorMatrix& g, std::span<const Elem> received) {
    if (received.size() != g.cols()) throw std::invalid_argument("nearest_codeword: length mismatch");
    const std::size_t k = g.rows();
    NearestCodeword out;
    out.distance = kNoWeight;
    if (g.q() == 2) {
        if (k > 62) throw std::invalid_argument("nearest_codeword: dimension too large");
        const auto rows = g.packed_rows();
        BitVec c(g.cols());
        for (std::size_t t = 0; t < received.size(); ++t)
            if (received[t]) c.set(t);
        const BitVec start = c;
        const std::uint64_t total = std::uint64_t{1} << k;
        std::uint64_t best_index = 0;
        std::size_t ties = 0;
        for (std::uint64_t i = 0; i < total; ++i) {
            if (i != 0) c ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
            const std::size_t w = c.popcount();
            if (w < out.distance) {
                out.distance = w;
                best_index = i;
                ties = 0;
            } else if (w == out.distance) {
                ++ties;
            }
        }
        const std::uint64_t msg = best_index ^ (best_index >> 1);
        out.message.assign(k, 0);
        for (std::size_t j = 0; j < k; ++j) out.message[j] = (msg >> j) & 1;
        out.tie = ties > 0;
    } else {
        QaryWalker walker(g, -1);
        std::size_t ties = 0;
        walker.walk(std::vector<Elem>(received.begin(), received.end()),
                    [&](std::uint64_t, const std::vector<Elem>& digits, const std::vector<Elem>&, std::size_t w) {
                        if (w < out.distance) {
                            out.distance = w;
                            out.message = digits;
                            ties = 0;
                        } else if (w == out.distance) {
                            ++ties;
                        }
                    });
        out.tie = ties > 0;
    }
    out.codeword = encode(g, out.message);
    return out;
}

std::size_t carlitz_uchiyama_even_bound(unsigned m) {
    if (m < 3) throw std::invalid_argument("carlitz_uchiyama_even_bound: m must be at least 3");
    const double bound = std::ldexp(1.0, static_cast<int>(m) - 1) - std::pow(2.0, m / 2.0);
    auto d = static_cast<std::size_t>(std::ceil(bound - 1e-12));
    if (d % 2) ++d;
    return std::max<std::size_t>(d, 2);
}

std::optional<unsigned> carlitz_uchiyama_degree(const cyclic::CyclicCodeSpec& spec) {
    if (spec.q() != 2) return std::nullopt;
    const std::uint64_t n = spec.n();
    if (!std::has_single_bit(n + 1)) return std::nullopt;
    const auto m = static_cast<unsigned>(std::countr_zero(n + 1));
    if (m < 3 || spec.dimension() != 2 * m) return std::nullopt;
    for (std::uint64_t b : spec.nonzeroes()) {
        if (nt::gcd(b, n) != 1) continue;
        const auto cb = cyclic::coset(b, n, 2);
        const auto c3b = cyclic::coset(nt::mulmod(3, b, n), n, 2);
        if (cb.size() != m || c3b.size() != m || cb.representative == c3b.representative) continue;
        const std::uint64_t reps[] = {b, nt::mulmod(3, b, n)};
        if (cyclic::coset_union(reps, n, 2) == spec.nonzeroes()) return m;
    }
    return std::nullopt;
}

std::size_t bch_bound(const cyclic::CyclicCodeSpec& spec) {
    const std::uint64_t n = spec.n();
    std::vector<bool> zero(n, true);
    for (std::uint64_t t : spec.nonzeroes()) zero[t] = false;
    std::size_t best = 0;
    for (std::uint64_t b = 1; b <= std::max<std::uint64_t>(n - 1, 1); ++b) {
        if (nt::gcd(b, n) != 1) continue;
        // Walk the cycle 0, b, 2b, ... twice to catch runs that wrap around.
        std::size_t run = 0;
        for (std::uint64_t i = 0, x = 0; i < 2 * n; ++i, x = (x + b) % n) {
            run = zero[x] ? run + 1 : 0;
            best = std::max(best, std::min<std::size_t>(run, n));
        }
    }
    return best + 1;
}

std::size_t singleton_bound(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw std::invalid_argument("singleton_bound: need 1 <= k <= n");
    return n - k + 1;
}

namespace {

bool all_rows_even(const GeneratorMatrix& g) {
    if (g.q() != 2) return false;
    for (const auto& r : g.packed_rows())
        if (r.popcount() % 2) return false;
    return true;
}

// Upper bound from low-weight combinations of the row-reduced basis and random messages.
std::size_t sampled_upper_bound(const GeneratorMatrix& g, const MinDistanceConfig& config) {
    std::size_t best = kNoWeight;
    const GeneratorMatrix r = row_reduce(g);
    const std::size_t k = r.rows();
    std::mt19937_64 rng(config.sample_seed);
    if (g.q() == 2) {
        const auto rows = r.packed_rows();
        for (std::size_t a = 0; a < k; ++a) {
            best = std::min(best, rows[a].popcount());
            for (std::size_t b = a + 1; b < k; ++b) {
                const BitVec ab = rows[a] ^ rows[b];
                best = std::min(best, ab.popcount());
                if (k <= 128)
                    for (std::size_t c = b + 1; c < k; ++c) best = std::min(best, (ab ^ rows[c]).popcount());
            }
        }
        for (std::size_t t = 0; t < config.sample_trials; ++t) {
            BitVec c(g.cols());
            bool any = false;
            for (std::size_t j = 0; j < k; ++j)
                if (rng() & 1) {
                    c ^= rows[j];
                    any = true;
                }
            if (any) best = std::min(best, c.popcount());
        }
    } else {
        for (std::size_t a = 0; a < k; ++a) best = std::min(best, weight(r.row(a)));
        std::vector<Elem> msg(k);
        for (std::size_t t = 0; t < config.sample_trials; ++t) {
            bool any = false;
            for (auto& x : msg) {
                x = rng() % g.q();
                any |= x != 0;
            }
            if (any) best = std::min(best, weight(encode(r, msg)));
        }
    }
    return best;
}

}  // namespace

DistanceResult min_distance(const LinearCode& code, const MinDistanceConfig& config) {
    const GeneratorMatrix& g = code.generator();
    const std::size_t n = code.n(), k = code.k();
    if (exhaustive_feasible(k, code.q(), config.exhaustive_dim_limit))
        return DistanceResult::exact_value(exhaustive_min_weight(g, config.threads), DistanceMethod::exhaustive);

    // Even-weight code of dimension n - 1: every pair of coordinates supports a codeword.
    const bool parity_by_spec = code.cyclic_spec() && code.cyclic_spec()->zeroes() == std::vector<std::uint64_t>{0};
    if (n >= 2 && k == n - 1 && (parity_by_spec || all_rows_even(g)))
        return DistanceResult::exact_value(2, DistanceMethod::structural_parity);

    if (code.product_inner()) {
        const DistanceResult inner = min_distance(LinearCode(*code.product_inner()), config);
        if (inner.is_exact()) return DistanceResult::exact_value(inner.value(), DistanceMethod::structural_product);
        return DistanceResult::bounded(inner.lower, inner.upper, DistanceMethod::structural_product);
    }

    std::size_t lower = 1;
    DistanceMethod method = DistanceMethod::sampled;
    const bool even = all_rows_even(g);
    if (even) lower = 2;
    if (code.cyclic_spec()) {
        if (const std::size_t bch = bch_bound(*code.cyclic_spec()); bch > lower) {
            lower = even && bch % 2 ? bch + 1 : bch;
            method = DistanceMethod::bch;
        }
        if (auto m = carlitz_uchiyama_degree(*code.cyclic_spec()); m && carlitz_uchiyama_even_bound(*m) >= lower) {
            lower = std::max(lower, carlitz_uchiyama_even_bound(*m));
            method = DistanceMethod::carlitz_uchiyama;
        }
    }
    const std::size_t singleton = singleton_bound(n, k);
    const std::size_t upper = std::min(singleton, sampled_upper_bound(g, config));
    if (lower == upper) {
        // Lower bound met by a sampled codeword, or by the Singleton bound itself.
        return DistanceResult::exact_value(lower, upper == singleton ? DistanceMethod::singleton : method);
    }
    return DistanceResult::bounded(lower, upper, method);
}

namespace {

constexpr KnownDistanceEntry kKnown[] = {
    {31, 10, 12, 12, "example1"},      {31, 20, 6, 6, "example1"},       {31, 30, 2, 2, "example1"},
    {21, 3, 12, 12, "concat_example"}, {21, 6, 8, 8, "concat_example"},
    {18, 6, 6, 6, "table1"},           {18, 12, 4, 4, "table1"},         {34, 8, 14, 14, "table1"},
    {34, 16, 8, 9, "table1"},          {42, 6, 20, 20, "table1"},        {42, 12, 15, 16, "table1"},
    {78, 12, 32, 33, "table1"},        {78, 24, 22, 26, "table1"},       {82, 20, 26, 30, "table1"},
    {82, 40, 16, 20, "table1"},        {110, 20, 40, 44, "table1"},      {110, 40, 24, 32, "table1"},
    {130, 12, 56, 60, "table1"},       {130, 24, 45, 51, "table1"},
    {7, 3, 4, 4, "table2"},            {7, 6, 2, 2, "table2"},           {15, 4, 8, 8, "table2"},
    {15, 8, 4, 4, "table2"},           {31, 5, 16, 16, "table2"},        {63, 6, 32, 32, "table2"},
    {63, 12, 24, 26, "table2"},        {127, 7, 64, 64, "table2"},       {127, 14, 56, 56, "table2"},
    {255, 8, 128, 128, "table2"},      {255, 16, 112, 120, "table2"},
    {43, 14, 14, 14, "table3"},        {43, 28, 6, 7, "table3"},         {109, 36, 26, 34, "table3"},
    {109, 72, 12, 16, "table3"},       {127, 42, 32, 40, "table3"},      {127, 84, 14, 18, "table3"},
    {17, 8, 6, 6, "qr_list"},          {23, 11, 8, 8, "qr_list"},        {31, 15, 8, 8, "qr_list"},
    {41, 20, 10, 10, "qr_list"},       {47, 23, 12, 12, "qr_list"},      {17, 16, 2, 2, "qr_list"},
    {23, 22, 2, 2, "qr_list"},         {41, 40, 2, 2, "qr_list"},        {47, 46, 2, 2, "qr_list"},
};

}  // namespace

std::span<const KnownDistanceEntry> known_distance_table() { return kKnown; }

std::optional<KnownDistanceEntry> known_distance(std::size_t n, std::size_t k) {
    for (const auto& e : kKnown)
        if (e.n == n && e.k == k) return e;
    return std::nullopt;
}

}  // namespace eccir::code
