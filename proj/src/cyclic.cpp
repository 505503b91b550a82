#include "eccir/cyclic.hpp"

#include "eccir/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace eccir::cyclic {

namespace {

void require_valid_params(std::uint64_t n, std::uint64_t q) {
    if (n < 1) throw std::invalid_argument("cyclic: length must be positive");
    if (!nt::is_prime(q)) throw std::invalid_argument("cyclic: alphabet size " + std::to_string(q) + " must be prime");
    if (nt::gcd(n, q) != 1)
        throw std::invalid_argument("cyclic: gcd(n, q) != 1 for n = " + std::to_string(n) + ", q = " + std::to_string(q));
}

void trim(std::vector<std::uint64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Polynomial make_poly(std::uint64_t q, std::vector<std::uint64_t> c) {
    trim(c);
    return {q, std::move(c)};
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    std::vector<std::uint64_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::uint64_t x = i < a.coeffs.size() ? a.coeffs[i] : 0;
        const std::uint64_t y = i < b.coeffs.size() ? b.coeffs[i] : 0;
        c[i] = (x + a.q - y) % a.q;
    }
    return make_poly(a.q, std::move(c));
}

Polynomial poly_scale(const Polynomial& a, std::uint64_t s) {
    std::vector<std::uint64_t> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = nt::mulmod(a.coeffs[i], s, a.q);
    return make_poly(a.q, std::move(c));
}

Polynomial product_of_minimal_polynomials(const CyclicCodeSpec& spec, bool over_nonzeroes) {
    Polynomial acc{spec.q(), {1}};
    for (const auto& c : coset_partition(spec.n(), spec.q())) {
        if (spec.has_nonzero(c.representative) == over_nonzeroes)
            acc = poly_mul(acc, minimal_polynomial(c.representative, spec.n(), spec.q()));
    }
    return acc;
}

}  // namespace

bool CyclotomicCoset::contains(std::uint64_t i) const { return std::binary_search(members.begin(), members.end(), i); }

CyclotomicCoset coset(std::uint64_t i, std::uint64_t n, std::uint64_t q) {
    require_valid_params(n, q);
    CyclotomicCoset c;
    c.n = n;
    c.q = q;
    std::uint64_t x = i % n;
    do {
        c.members.push_back(x);
        x = nt::mulmod(x, q, n);
    } while (x != i % n);
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    return c;
}

std::vector<CyclotomicCoset> coset_partition(std::uint64_t n, std::uint64_t q) {
    require_valid_params(n, q);
    std::vector<bool> seen(n, false);
    std::vector<CyclotomicCoset> out;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        out.push_back(coset(i, n, q));
        for (std::uint64_t m : out.back().members) seen[m] = true;
    }
    return out;
}

std::vector<std::uint64_t> coset_union(std::span<const std::uint64_t> reps, std::uint64_t n, std::uint64_t q) {
    std::set<std::uint64_t> all;
    for (std::uint64_t r : reps) {
        auto c = coset(r, n, q);
        all.insert(c.members.begin(), c.members.end());
    }
    return {all.begin(), all.end()};
}

CyclicCodeSpec::CyclicCodeSpec(std::uint64_t n, std::uint64_t q, std::vector<std::uint64_t> nonzeroes)
    : n_(n), q_(q), nonzeroes_(std::move(nonzeroes)) {
    require_valid_params(n, q);
    std::sort(nonzeroes_.begin(), nonzeroes_.end());
    nonzeroes_.erase(std::unique(nonzeroes_.begin(), nonzeroes_.end()), nonzeroes_.end());
    for (std::uint64_t t : nonzeroes_) {
        if (t >= n) throw std::invalid_argument("CyclicCodeSpec: nonzero " + std::to_string(t) + " outside Z_" + std::to_string(n));
        if (!has_nonzero(nt::mulmod(t, q, n)))
            throw std::invalid_argument("CyclicCodeSpec: nonzero set is not a union of cyclotomic cosets (" +
                                        std::to_string(t) + " present, " + std::to_string(nt::mulmod(t, q, n)) + " missing)");
    }
}

bool CyclicCodeSpec::has_nonzero(std::uint64_t i) const {
    return std::binary_search(nonzeroes_.begin(), nonzeroes_.end(), i);
}

std::vector<std::uint64_t> CyclicCodeSpec::zeroes() const {
    std::vector<std::uint64_t> z;
    for (std::uint64_t i = 0; i < n_; ++i)
        if (!has_nonzero(i)) z.push_back(i);
    return z;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.q != b.q) throw std::invalid_argument("poly_mul: different fields");
    if (a.coeffs.empty() || b.coeffs.empty()) return {a.q, {}};
    std::vector<std::uint64_t> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = (c[i + j] + nt::mulmod(a.coeffs[i], b.coeffs[j], a.q)) % a.q;
    }
    return make_poly(a.q, std::move(c));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.coeffs.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    const std::uint64_t q = a.q;
    std::vector<std::uint64_t> rem = a.coeffs;
    const std::size_t db = b.coeffs.size() - 1;
    std::vector<std::uint64_t> quot(rem.size() >= b.coeffs.size() ? rem.size() - db : 0, 0);
    const std::uint64_t lead_inv = nt::invmod(b.coeffs.back(), q);
    trim(rem);
    while (rem.size() >= b.coeffs.size()) {
        const std::size_t shift = rem.size() - 1 - db;
        const std::uint64_t c = nt::mulmod(rem.back(), lead_inv, q);
        quot[shift] = c;
        for (std::size_t i = 0; i <= db; ++i) rem[shift + i] = (rem[shift + i] + q - nt::mulmod(c, b.coeffs[i], q)) % q;
        trim(rem);
    }
    return {make_poly(q, std::move(quot)), make_poly(q, std::move(rem))};
}

Polynomial x_n_minus_1(std::uint64_t n, std::uint64_t q) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = q - 1;
    c[n] = 1;
    return make_poly(q, std::move(c));
}

bool RingPolynomial::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint64_t c) { return c == 0; });
}

RingPolynomial ring_reduce(const Polynomial& p, std::uint64_t n) {
    RingPolynomial r{n, p.q, std::vector<std::uint64_t>(n, 0)};
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) r.coeffs[i % n] = (r.coeffs[i % n] + p.coeffs[i]) % p.q;
    return r;
}

RingPolynomial ring_mul(const RingPolynomial& a, const RingPolynomial& b) {
    if (a.n != b.n || a.q != b.q) throw std::invalid_argument("ring_mul: operands from different rings");
    RingPolynomial r{a.n, a.q, std::vector<std::uint64_t>(a.n, 0)};
    for (std::size_t i = 0; i < a.n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < a.n; ++j) {
            const std::size_t t = (i + j) % a.n;
            r.coeffs[t] = (r.coeffs[t] + nt::mulmod(a.coeffs[i], b.coeffs[j], a.q)) % a.q;
        }
    }
    return r;
}

BitVec ring_mul_binary(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("ring_mul_binary: length mismatch");
    BitVec r(a.size());
    for (std::size_t w = 0; w < a.word_count(); ++w) {
        std::uint64_t bits = a.word(w);
        while (bits) {
            const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            r ^= b.rotated(i);
        }
    }
    return r;
}

BitVec to_bits(const RingPolynomial& p) {
    if (p.q != 2) throw std::invalid_argument("to_bits: polynomial is not binary");
    BitVec v(p.n);
    for (std::size_t i = 0; i < p.n; ++i)
        if (p.coeffs[i]) v.set(i);
    return v;
}

Polynomial minimal_polynomial(std::uint64_t i, std::uint64_t n, std::uint64_t q) {
    const auto root = gf::nth_root_of_unity(n, q);
    const auto& f = *root.field;
    std::vector<gf::Elem> acc{1};
    for (std::uint64_t j : coset(i, n, q).members) {
        const gf::Elem r = f.pow(root.alpha, j);
        std::vector<gf::Elem> next(acc.size() + 1, 0);
        for (std::size_t t = 0; t < acc.size(); ++t) {
            next[t + 1] = f.add(next[t + 1], acc[t]);
            next[t] = f.sub(next[t], f.mul(r, acc[t]));
        }
        acc = std::move(next);
    }
    std::vector<std::uint64_t> coeffs(acc.size());
    for (std::size_t t = 0; t < acc.size(); ++t) {
        if (acc[t] >= q)
            throw std::logic_error("minimal_polynomial: coefficient outside the base field (coset " + std::to_string(i) + ")");
        coeffs[t] = acc[t];
    }
    return make_poly(q, std::move(coeffs));
}

Polynomial generator_polynomial(const CyclicCodeSpec& spec) { return product_of_minimal_polynomials(spec, false); }

Polynomial check_polynomial(const CyclicCodeSpec& spec) { return product_of_minimal_polynomials(spec, true); }

CyclicCodeSpec multiplier_transform(const CyclicCodeSpec& spec, std::uint64_t a) {
    const std::uint64_t n = spec.n();
    const std::uint64_t a_inv = nt::invmod(a % n, n);  // throws when gcd(a, n) != 1
    std::vector<std::uint64_t> t;
    t.reserve(spec.dimension());
    for (std::uint64_t x : spec.nonzeroes()) t.push_back(nt::mulmod(a_inv, x, n));
    return {n, spec.q(), std::move(t)};
}

std::vector<std::size_t> multiplier_permutation(std::uint64_t n, std::uint64_t a) {
    if (nt::gcd(a % n, n) != 1 && n > 1) throw std::domain_error("multiplier_permutation: gcd(a, n) != 1");
    std::vector<std::size_t> perm(n);
    for (std::uint64_t i = 0; i < n; ++i) perm[i] = static_cast<std::size_t>(nt::mulmod(a, i, n));
    return perm;
}

CyclicCodeSpec even_weight_subcode(const CyclicCodeSpec& spec) {
    if (spec.q() != 2) throw std::invalid_argument("even_weight_subcode: code is not binary");
    if (!spec.has_nonzero(0)) throw std::domain_error("even_weight_subcode: 0 is not a nonzero; the code is already even-weight");
    std::vector<std::uint64_t> t(spec.nonzeroes().begin() + 1, spec.nonzeroes().end());
    return {spec.n(), spec.q(), std::move(t)};
}

bool is_irreducible_code(const CyclicCodeSpec& spec) {
    if (spec.nonzeroes().empty()) return false;
    return coset(spec.nonzeroes().front(), spec.n(), spec.q()).members == spec.nonzeroes();
}

RingPolynomial primitive_idempotent(const CyclicCodeSpec& spec) {
    if (spec.nonzeroes().empty()) throw std::domain_error("primitive_idempotent: zero code has no idempotent");
    const std::uint64_t q = spec.q();
    const Polynomial g = generator_polynomial(spec);
    const Polynomial h = check_polynomial(spec);

    // Extended Euclid: s g + t h = gcd, and gcd is a nonzero constant since x^n - 1 is squarefree.
    Polynomial r0 = g, r1 = h;
    Polynomial s0{q, {1}}, s1{q, {}};
    while (!r1.coeffs.empty()) {
        auto [quot, rem] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Polynomial next = poly_sub(s0, poly_mul(quot, s1));
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    if (r0.degree() != 0) throw std::logic_error("primitive_idempotent: g and h are not coprime");
    const Polynomial a = poly_scale(s0, nt::invmod(r0.coeffs[0], q));
    return ring_reduce(poly_mul(a, g), spec.n());
}

code::GeneratorMatrix generator_matrix_of(const CyclicCodeSpec& spec) {
    const Polynomial g = generator_polynomial(spec);
    const std::size_t n = spec.n();
    code::GeneratorMatrix m(gf::field_create(spec.q(), 1), spec.dimension(), n);
    for (std::size_t j = 0; j < spec.dimension(); ++j)
        for (std::size_t i = 0; i < g.coeffs.size(); ++i) m.set(j, i + j, g.coeffs[i]);
    return m;
}

bool contains_word(const CyclicCodeSpec& spec, std::span<const std::uint64_t> word) {
    if (word.size() != spec.n()) throw std::invalid_argument("contains_word: length mismatch");
    const Polynomial c = make_poly(spec.q(), {word.begin(), word.end()});
    return poly_divmod(c, generator_polynomial(spec)).second.coeffs.empty();
}

std::uint64_t CodeFieldIso::gamma_coordinates(gf::Elem a) const {
    std::uint64_t u = 0;
    for (std::size_t i = 0; i < coord_rows_.size(); ++i)
        if (std::popcount(coord_rows_[i] & a) & 1) u |= std::uint64_t{1} << i;
    return u;
}

BitVec CodeFieldIso::apply(gf::Elem a) const {
    if (!field_->contains(a)) throw std::invalid_argument("CodeFieldIso::apply: element outside F_2^k");
    BitVec out(spec_.n());
    std::uint64_t u = gamma_coordinates(a);
    while (u) {
        out ^= basis_images_[static_cast<std::size_t>(std::countr_zero(u))];
        u &= u - 1;
    }
    return out;
}

CodeFieldIso code_field_iso(const CyclicCodeSpec& spec) {
    if (spec.q() != 2) throw std::invalid_argument("code_field_iso: binary codes only");
    if (!is_irreducible_code(spec)) throw std::invalid_argument("code_field_iso: code is not irreducible");
    const auto k = static_cast<unsigned>(spec.dimension());
    if (k > 63) throw std::invalid_argument("code_field_iso: dimension above 63");

    CodeFieldIso iso(spec);
    iso.field_ = gf::field_create(2, k);
    const auto& f = *iso.field_;
    iso.gamma_ = f.primitive();

    // Minimal polynomial of gamma: product over its Frobenius conjugates.
    {
        std::vector<gf::Elem> acc{1};
        gf::Elem conj = iso.gamma_;
        for (unsigned i = 0; i < k; ++i) {
            std::vector<gf::Elem> next(acc.size() + 1, 0);
            for (std::size_t t = 0; t < acc.size(); ++t) {
                next[t + 1] ^= acc[t];
                next[t] ^= f.mul(conj, acc[t]);
            }
            acc = std::move(next);
            conj = f.mul(conj, conj);
        }
        for (std::size_t t = 0; t < acc.size(); ++t) {
            if (acc[t] > 1) throw std::logic_error("code_field_iso: minimal polynomial not binary");
            if (acc[t]) iso.minpoly_ |= std::uint64_t{1} << t;
        }
    }

    iso.idempotent_ = to_bits(primitive_idempotent(spec));
    const BitVec& e = iso.idempotent_;

    auto is_root = [&](const BitVec& theta) {
        BitVec acc = e;  // leading coefficient of a monic polynomial
        for (int t = static_cast<int>(k) - 1; t >= 0; --t) {
            acc = ring_mul_binary(acc, theta);
            if ((iso.minpoly_ >> t) & 1) acc ^= e;
        }
        return acc.none();
    };

    bool found = false;
    for (std::size_t j = 0; j < spec.n() && !found; ++j) {
        BitVec cand = e.rotated(j);
        if (is_root(cand)) {
            iso.theta_ = std::move(cand);
            found = true;
        }
    }
    if (!found) {
        // Gray-code walk over all nonzero ideal elements.
        const auto rows = generator_matrix_of(spec).packed_rows();
        BitVec cand(spec.n());
        const std::uint64_t total = std::uint64_t{1} << k;
        for (std::uint64_t i = 1; i < total && !found; ++i) {
            cand ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
            if (is_root(cand)) {
                iso.theta_ = cand;
                found = true;
            }
        }
    }
    if (!found) throw std::logic_error("code_field_iso: no root of the minimal polynomial in the code");

    iso.basis_images_.reserve(k);
    iso.basis_images_.push_back(e);
    for (unsigned i = 1; i < k; ++i) iso.basis_images_.push_back(ring_mul_binary(iso.basis_images_.back(), iso.theta_));

    // Invert the matrix whose column i is gamma^i in the polynomial basis.
    std::vector<std::uint64_t> a(k, 0), b(k, 0);
    gf::Elem pw = 1;
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned r = 0; r < k; ++r)
            if ((pw >> r) & 1) a[r] |= std::uint64_t{1} << i;
        pw = f.mul(pw, iso.gamma_);
    }
    for (unsigned r = 0; r < k; ++r) b[r] = std::uint64_t{1} << r;
    for (unsigned c = 0; c < k; ++c) {
        unsigned p = c;
        while (p < k && !((a[p] >> c) & 1)) ++p;
        if (p == k) throw std::logic_error("code_field_iso: powers of gamma are not a basis");
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        for (unsigned r = 0; r < k; ++r) {
            if (r != c && ((a[r] >> c) & 1)) {
                a[r] ^= a[c];
                b[r] ^= b[c];
            }
        }
    }
    iso.coord_rows_ = std::move(b);
    return iso;
}

}  // namespace eccir::cyclic
