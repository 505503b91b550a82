#include "eccir/gf.hpp"

#include "eccir/numtheory.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace eccir::gf {

namespace {

// Dense polynomials over F_p, coefficients low degree first, used only for
// modulus selection.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = nt::invmod(f.back(), p);
    while (a.size() >= f.size()) {
        const std::uint64_t c = nt::mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + p - nt::mulmod(c, f[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + nt::mulmod(a[i], b[j], p)) % p;
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic_poly) {
    Poly f(monic_poly.begin(), monic_poly.end());
    trim(f);
    if (f.size() < 2 || f.back() != 1) throw std::invalid_argument("is_irreducible: polynomial must be monic of degree >= 1");
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    if (m == 1) return true;
    if (f[0] == 0) return false;

    // x^(p^i) mod f for i = 0..m
    std::vector<Poly> frob(m + 1);
    frob[0] = poly_mod(Poly{0, 1}, f, p);
    for (unsigned i = 1; i <= m; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);

    auto minus_x = [&](Poly a) {
        if (a.size() < 2) a.resize(2, 0);
        a[1] = (a[1] + p - 1) % p;
        trim(a);
        return a;
    };
    if (!minus_x(frob[m]).empty()) return false;
    for (auto [r, e] : nt::factorize(m)) {
        Poly g = poly_gcd(minus_x(frob[m / r]), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Field::Field(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus)
    : p_(p), m_(m), q_(nt::checked_pow(p, m)), modulus_(std::move(modulus)) {
    if (binary()) {
        for (unsigned i = 0; i < m_; ++i)
            if (modulus_[i]) modulus_bits_ |= Elem{1} << i;
    }
}

Elem Field::add(Elem a, Elem b) const {
    if (binary()) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (binary()) return a;
    if (m_ == 1) return (p_ - a % p_) % p_;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_binary(Elem a, Elem b) const noexcept {
    const Elem top = Elem{1} << (m_ - 1);
    Elem r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        const bool carry = (a & top) != 0;
        a = (a << 1) & (q_ - 1);
        if (carry) a ^= modulus_bits_;
    }
    return r;
}

Elem Field::mul_generic(Elem a, Elem b) const {
    if (m_ == 1) return nt::mulmod(a, b, p_);
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    Poly r(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) r[i + j] = (r[i + j] + nt::mulmod(ca[i], cb[j], p_)) % p_;
    r = poly_mod(std::move(r), modulus_, p_);
    r.resize(m_, 0);
    return from_coefficients(r);
}

Elem Field::mul(Elem a, Elem b) const { return binary() ? mul_binary(a, b) : mul_generic(a, b); }

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("gf: inverse of zero");
    return pow(a, q_ - 2);
}

std::uint64_t Field::element_order(Elem a) const {
    if (a == 0) throw std::domain_error("gf: zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (auto [r, e] : group_factors_) {
        for (unsigned i = 0; i < e && ord % r == 0 && pow(a, ord / r) == 1; ++i) ord /= r;
    }
    return ord;
}

std::vector<std::uint64_t> Field::coefficients(Elem a) const {
    std::vector<std::uint64_t> c(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::from_coefficients(std::span<const std::uint64_t> coeffs) const {
    if (coeffs.size() > m_) throw std::invalid_argument("gf: too many coefficients");
    Elem r = 0, scale = 1;
    for (std::uint64_t c : coeffs) {
        if (c >= p_) throw std::invalid_argument("gf: coefficient out of range");
        r += c * scale;
        scale *= p_;
    }
    return r;
}

FieldPtr field_create(std::uint64_t p, unsigned m) {
    if (!nt::is_prime(p)) throw std::invalid_argument("field_create: " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("field_create: extension degree must be >= 1");
    if (p == 2 && m > 63) throw std::invalid_argument("field_create: GF(2^m) supports m <= 63");
    const std::uint64_t q = nt::checked_pow(p, m);

    static std::mutex cache_mutex;
    static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
    }

    // Lexicographic order with c_0 most significant: digit i of the counter
    // (from the top) is c_i.
    // A constant term of zero makes x a factor, so for m > 1 start at c_0 = 1.
    std::vector<std::uint64_t> modulus;
    for (std::uint64_t t = m > 1 ? q / p : 0; t < q; ++t) {
        std::vector<std::uint64_t> f(m + 1, 0);
        std::uint64_t rest = t;
        for (unsigned i = 0; i < m; ++i) {
            f[m - 1 - i] = rest % p;
            rest /= p;
        }
        f[m] = 1;
        if (is_irreducible(p, f)) {
            modulus = std::move(f);
            break;
        }
    }
    if (modulus.empty()) throw std::logic_error("field_create: no irreducible polynomial found");

    auto field = std::make_shared<Field>(p, m, std::move(modulus));
    if (q > 2) field->group_factors_ = nt::factorize(q - 1);
    for (Elem g = 1; g < q; ++g) {
        if (field->element_order(g) == q - 1) {
            field->primitive_ = g;
            break;
        }
    }

    std::lock_guard lock(cache_mutex);
    auto [it, inserted] = cache.emplace(std::make_pair(p, m), std::move(field));
    return it->second;
}

FieldPtr field_of_order(std::uint64_t q) {
    auto [p, m] = nt::prime_power(q);
    return field_create(p, m);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw std::invalid_argument("FieldElement: null field");
    if (!field_->contains(value_)) throw std::invalid_argument("FieldElement: value outside field");
}

const Field& FieldElement::same_field(const FieldElement& rhs) const {
    if (field_ != rhs.field_ && (field_->characteristic() != rhs.field_->characteristic() ||
                                 field_->modulus() != rhs.field_->modulus()))
        throw std::invalid_argument("FieldElement: operands belong to different fields");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    return {field_, same_field(rhs).add(value_, rhs.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    return {field_, same_field(rhs).sub(value_, rhs.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    return {field_, same_field(rhs).mul(value_, rhs.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    return {field_, same_field(rhs).div(value_, rhs.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& rhs) const {
    return value_ == rhs.value_ && same_field(rhs).order() == rhs.field_->order();
}

FieldElement primitive_element(const FieldPtr& field) { return {field, field->primitive()}; }

RootOfUnity nth_root_of_unity(std::uint64_t n, std::uint64_t q) {
    if (n == 0) throw std::invalid_argument("nth_root_of_unity: n must be positive");
    if (nt::gcd(n, q) != 1) throw std::domain_error("nth_root_of_unity: gcd(n, q) != 1");
    auto [p, s] = nt::prime_power(q);
    const auto m = static_cast<unsigned>(nt::multiplicative_order(q % n, n));
    auto field = field_create(p, s * m);
    const Elem alpha = field->pow(field->primitive(), (field->order() - 1) / n);
    return {std::move(field), alpha, m};
}

}  // namespace eccir::gf
