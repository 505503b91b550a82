#pragma once

// Arithmetic in GF(p^m).
//
// Elements are encoded as integers in [0, q): the base-p digits of the value are
// the coefficients of the residue polynomial, lowest degree first. For p = 2 this
// is the usual bit-string representation and all arithmetic is carryless.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace eccir::gf {

using Elem = std::uint64_t;

class Field {
public:
    // Use field_create(); the constructor is public only for make_shared.
    Field(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return q_; }
    bool binary() const noexcept { return p_ == 2; }

    // Monic modulus, coefficients low degree first (size m + 1).
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    bool contains(Elem a) const noexcept { return a < q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    // Smallest element (in integer order) of multiplicative order q - 1.
    Elem primitive() const noexcept { return primitive_; }
    std::uint64_t element_order(Elem a) const;

    std::vector<std::uint64_t> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const std::uint64_t> coeffs) const;

    // Embedding of the prime subfield: integer c in [0, p) maps to the constant c.
    Elem from_int(std::uint64_t c) const { return c % p_; }

    const std::vector<std::pair<std::uint64_t, unsigned>>& order_factors() const noexcept { return group_factors_; }

private:
    friend std::shared_ptr<const Field> field_create(std::uint64_t, unsigned);

    Elem mul_binary(Elem a, Elem b) const noexcept;
    Elem mul_generic(Elem a, Elem b) const;

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    Elem modulus_bits_ = 0;  // binary fields: modulus without the leading term
    Elem primitive_ = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> group_factors_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Field of order p^m with the lexicographically smallest monic irreducible modulus
// (coefficients compared lowest degree first). Results are cached per (p, m).
FieldPtr field_create(std::uint64_t p, unsigned m);

// Convenience: the field of order q = p^m.
FieldPtr field_of_order(std::uint64_t q);

// Rabin irreducibility test for a monic polynomial over F_p (coefficients low first).
bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic_poly);

// Field element bound to its field; arithmetic between different fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& rhs) const;

private:
    const Field& same_field(const FieldElement& rhs) const;

    FieldPtr field_;
    Elem value_;
};

FieldElement primitive_element(const FieldPtr& field);

struct RootOfUnity {
    FieldPtr field;       // F_{q^m}
    Elem alpha;           // multiplicative order exactly n
    unsigned extension;   // m = ord_n(q)
};

// Primitive n-th root of unity in the smallest extension of F_q containing one.
RootOfUnity nth_root_of_unity(std::uint64_t n, std::uint64_t q);

}  // namespace eccir::gf
