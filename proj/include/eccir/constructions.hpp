#pragma once

// Code families for informed receivers: MDS collections from Reed-Solomon codes,
// concatenation with a binary inner code, Piret pairs, and the cyclic families built
// from disjoint unions of cyclotomic cosets.

#include "eccir/code.hpp"
#include "eccir/cyclic.hpp"
#include "eccir/eccir.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace eccir::constructions {

// Systematic [n + L, L, n + 1] Reed-Solomon code on the points 0, 1, g, g^2, ...
// (g primitive); returns the L x n matrix G of [I | G].
code::GeneratorMatrix grs_systematic_part(std::uint64_t q, std::size_t n, std::size_t L);

// Component l is row l of G. Requires q > n + L.
Eccir mdsir_from_grs(std::uint64_t q, std::size_t n, std::size_t L);

// Total number of square submatrices of an L x n matrix.
std::uint64_t square_submatrix_count(std::size_t rows, std::size_t cols);

// True iff every square submatrix of g is nonsingular. Throws std::length_error when
// more than `budget` determinants would be needed.
bool verify_all_square_submatrices(const code::GeneratorMatrix& g, std::uint64_t budget = 5'000'000);

struct ConcatConfig {
    Eccir outer;                  // over F_{2^k}
    code::GeneratorMatrix inner;  // binary, k rows
};

// Each outer symbol is written in the polynomial basis of F_{2^k} (bit t = coefficient
// of x^t) and encoded with the inner code. Component l gets k rows per outer row:
// the images of x^t * (outer row), t = 0 .. k-1.
Eccir concatenate(const ConcatConfig& cfg);

// Guaranteed distances d_in (n_out - s + 1) for s = |S̄| = 1..L.
std::vector<std::size_t> concatenation_bounds(std::size_t d_in, std::size_t n_out, std::size_t L);

struct PiretResult {
    cyclic::CyclicCodeSpec inner;
    gf::Elem beta = 0;
    std::size_t d1 = 0;                // d(C_1) = d(C_2)
    std::size_t d_inner = 0;
    std::vector<gf::Elem> maximizers;  // every beta reaching d1, ascending
    Eccir eccir;
};

// C_1 = {(phi(a), phi(beta a))}, C_2 = {(phi(beta a), phi(a))}. d1 is computed by
// enumeration of C_1; maximizers holds only beta.
PiretResult piret_pair(const cyclic::CyclicCodeSpec& inner, gf::Elem beta, unsigned threads = 0);

// Scans every beta outside {0, 1} and returns the smallest maximizer of d(C_1).
//
// With theta = phi(gamma), the nonzero codewords of C_1 for beta = gamma^j are
// (theta^i, theta^(i+j)), so d(C_1) = min_i W(i) + W(i + j) with W(i) = wt(theta^i).
// Multiplication by x permutes coordinates and x e generates the unique subgroup of
// order ord(x e), so W has period P = (2^k - 1) / ord(x e) and the search reduces to
// residues j mod P. The chosen beta is re-checked by enumerating C_1.
PiretResult piret_search(const cyclic::CyclicCodeSpec& inner, unsigned threads = 0);

// Same result computed by enumerating C_1 for every beta; feasible for small k only.
PiretResult piret_search_reference(const cyclic::CyclicCodeSpec& inner, unsigned threads = 0);

// Exponent weight table W(i) = wt(theta^i), i = 0 .. P - 1.
std::vector<std::size_t> piret_weight_table(const cyclic::CodeFieldIso& iso);

// Components with nonzeroes C_1 and C_3 modulo 2^m - 1.
Eccir primitive_pair(unsigned m);

// Nonzeroes: quadratic residues and non-residues modulo a prime n = +-1 mod 8.
Eccir quadratic_residue_pair(std::uint64_t n);

// Nonzeroes T_1 (nonzero cubes), T_2 = b^-1 T_1, T_3 = b^-2 T_1 with b the smallest
// cubic non-residue, so that T_1 = b T_2 = b^2 T_3.
Eccir cubic_residue_triple(std::uint64_t n);
std::uint64_t smallest_cubic_nonresidue(std::uint64_t n);

// Cyclic collection whose components have the given nonzero sets; each part lists coset
// representatives and is expanded to the union of their cosets.
Eccir coset_partition_eccir(std::uint64_t n, std::uint64_t q, const std::vector<std::vector<std::uint64_t>>& parts);

// n = 31, parts C_1 u C_3, C_5 u C_15, C_7 u C_11.
Eccir example1_triple();

// Keep only the listed components (in order); cyclic descriptions and multiplier
// equivalences are carried over.
Eccir sub_collection(const Eccir& e, Subset keep);

// Smallest unit a mod n with a^-1 * from = to, if any.
std::optional<std::uint64_t> find_multiplier(std::uint64_t n, const std::vector<std::uint64_t>& from,
                                             const std::vector<std::uint64_t>& to);

// For every subset whose nonzero set is the multiplier image of an earlier subset of
// the same size, record one claim from the earliest such source.
std::vector<EquivalenceClaim> multiplier_equivalences(std::span<const std::optional<cyclic::CyclicCodeSpec>> specs);

}  // namespace eccir::constructions
