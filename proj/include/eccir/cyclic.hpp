#pragma once

// Cyclotomic cosets and cyclic-code algebra over a prime field F_q.
//
// A cyclic code of length n is identified by its set of nonzeroes T, a union of
// q-cyclotomic cosets modulo n; the generator polynomial vanishes on alpha^i for
// every i outside T, where alpha is a primitive n-th root of unity.

#include "eccir/bitvec.hpp"
#include "eccir/gf.hpp"
#include "eccir/matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace eccir::cyclic {

struct CyclotomicCoset {
    std::uint64_t representative = 0;   // smallest member
    std::vector<std::uint64_t> members;  // sorted
    std::uint64_t n = 0;
    std::uint64_t q = 0;

    std::size_t size() const noexcept { return members.size(); }
    bool contains(std::uint64_t i) const;
};

CyclotomicCoset coset(std::uint64_t i, std::uint64_t n, std::uint64_t q);

// Pairwise-disjoint cosets covering Z_n, sorted by representative.
std::vector<CyclotomicCoset> coset_partition(std::uint64_t n, std::uint64_t q);

class CyclicCodeSpec {
public:
    // Throws std::invalid_argument unless q is prime, gcd(n, q) = 1 and T is closed
    // under multiplication by q mod n. T is stored sorted and deduplicated.
    CyclicCodeSpec(std::uint64_t n, std::uint64_t q, std::vector<std::uint64_t> nonzeroes);

    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t q() const noexcept { return q_; }
    const std::vector<std::uint64_t>& nonzeroes() const noexcept { return nonzeroes_; }
    std::vector<std::uint64_t> zeroes() const;
    std::size_t dimension() const noexcept { return nonzeroes_.size(); }
    bool has_nonzero(std::uint64_t i) const;

    bool operator==(const CyclicCodeSpec&) const = default;

private:
    std::uint64_t n_;
    std::uint64_t q_;
    std::vector<std::uint64_t> nonzeroes_;
};

// Union of the cosets of the given representatives.
std::vector<std::uint64_t> coset_union(std::span<const std::uint64_t> reps, std::uint64_t n, std::uint64_t q);

// Polynomial over the prime field F_q, coefficients low degree first, no trailing zeros.
struct Polynomial {
    std::uint64_t q = 2;
    std::vector<std::uint64_t> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const Polynomial&) const = default;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
// Quotient and remainder of a / b.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);
Polynomial x_n_minus_1(std::uint64_t n, std::uint64_t q);

// Element of R_n = F_q[x]/(x^n - 1); coeffs has exactly n entries.
struct RingPolynomial {
    std::uint64_t n = 0;
    std::uint64_t q = 2;
    std::vector<std::uint64_t> coeffs;

    bool is_zero() const;
    bool operator==(const RingPolynomial&) const = default;
};

RingPolynomial ring_reduce(const Polynomial& p, std::uint64_t n);
RingPolynomial ring_mul(const RingPolynomial& a, const RingPolynomial& b);

// Binary ring product via rotations; both operands have length n.
BitVec ring_mul_binary(const BitVec& a, const BitVec& b);
BitVec to_bits(const RingPolynomial& p);

// Minimal polynomial over F_q of alpha^i, as prod_{j in C_i} (x - alpha^j).
Polynomial minimal_polynomial(std::uint64_t i, std::uint64_t n, std::uint64_t q);

Polynomial generator_polynomial(const CyclicCodeSpec& spec);
Polynomial check_polynomial(const CyclicCodeSpec& spec);

// a^{-1} T (mod n); the code image under the coordinate map i -> a i mod n.
CyclicCodeSpec multiplier_transform(const CyclicCodeSpec& spec, std::uint64_t a);
// perm[i] = a i mod n, for use with code::permute_columns.
std::vector<std::size_t> multiplier_permutation(std::uint64_t n, std::uint64_t a);

// Binary only: nonzeroes T \ {0}. Throws std::domain_error when 0 is not a nonzero.
CyclicCodeSpec even_weight_subcode(const CyclicCodeSpec& spec);

bool is_irreducible_code(const CyclicCodeSpec& spec);

// Idempotent generator e of the ideal (g): e^2 = e and e c = c for every codeword.
RingPolynomial primitive_idempotent(const CyclicCodeSpec& spec);

// Rows x^j g(x), j = 0 .. |T| - 1.
code::GeneratorMatrix generator_matrix_of(const CyclicCodeSpec& spec);

// Membership test against the generator polynomial (remainder of c mod g is zero).
bool contains_word(const CyclicCodeSpec& spec, std::span<const std::uint64_t> word);

// Field isomorphism phi: F_{2^k} -> C for a binary irreducible cyclic code C of
// dimension k. phi maps a primitive element gamma of F_{2^k} to theta, a root of the
// minimal polynomial of gamma inside the code viewed as a field under R_n product.
class CodeFieldIso {
public:
    const CyclicCodeSpec& spec() const noexcept { return spec_; }
    const gf::FieldPtr& field() const noexcept { return field_; }
    gf::Elem gamma() const noexcept { return gamma_; }
    // Minimal polynomial of gamma over F_2 as a bit mask (bit i = coefficient of x^i).
    std::uint64_t gamma_minpoly() const noexcept { return minpoly_; }
    const BitVec& idempotent() const noexcept { return idempotent_; }
    const BitVec& theta() const noexcept { return theta_; }
    // phi(gamma^i), i = 0 .. k-1.
    const std::vector<BitVec>& basis_images() const noexcept { return basis_images_; }
    std::size_t dimension() const noexcept { return basis_images_.size(); }

    // Coordinates of a in the basis {gamma^i}, as a bit mask.
    std::uint64_t gamma_coordinates(gf::Elem a) const;
    BitVec apply(gf::Elem a) const;
    BitVec multiply(const BitVec& a, const BitVec& b) const { return ring_mul_binary(a, b); }

private:
    friend CodeFieldIso code_field_iso(const CyclicCodeSpec& spec);
    explicit CodeFieldIso(CyclicCodeSpec spec) : spec_(std::move(spec)) {}

    CyclicCodeSpec spec_;
    gf::FieldPtr field_;
    gf::Elem gamma_ = 1;
    std::uint64_t minpoly_ = 0;
    BitVec idempotent_;
    BitVec theta_;
    std::vector<BitVec> basis_images_;
    std::vector<std::uint64_t> coord_rows_;  // inverse change of basis, one mask per output bit
};

CodeFieldIso code_field_iso(const CyclicCodeSpec& spec);

}  // namespace eccir::cyclic
