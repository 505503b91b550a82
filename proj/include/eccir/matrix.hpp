#pragma once

#include "eccir/bitvec.hpp"
#include "eccir/gf.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace eccir::code {

using gf::Elem;

// Dense k x n matrix over F_q, row-major. Full rank is not enforced here (puncturing
// may drop rank); LinearCode and Eccir check it where the definition requires it.
class GeneratorMatrix {
public:
    GeneratorMatrix() = default;
    GeneratorMatrix(gf::FieldPtr field, std::size_t rows, std::size_t cols);
    GeneratorMatrix(gf::FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols);

    static GeneratorMatrix from_bits(const std::vector<BitVec>& rows, std::size_t cols);
    static GeneratorMatrix identity(gf::FieldPtr field, std::size_t k);

    const gf::FieldPtr& field() const noexcept { return field_; }
    std::uint64_t q() const noexcept { return field_->order(); }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v);
    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::vector<std::vector<Elem>> to_rows() const;

    // Binary matrices only.
    std::vector<BitVec> packed_rows() const;

    GeneratorMatrix stacked(const GeneratorMatrix& below) const;
    GeneratorMatrix select_rows(std::span<const std::size_t> indices) const;

    bool operator==(const GeneratorMatrix& rhs) const;

private:
    gf::FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

void require_same_field(const GeneratorMatrix& a, const GeneratorMatrix& b);

std::size_t rank(const GeneratorMatrix& g);
bool row_space_equal(const GeneratorMatrix& a, const GeneratorMatrix& b);

// Reduced row echelon form with zero rows removed; pivots lists the pivot column of each row.
GeneratorMatrix row_reduce(const GeneratorMatrix& g, std::vector<std::size_t>* pivots = nullptr);

// True when the word lies in the row space of g.
bool in_row_space(const GeneratorMatrix& g, std::span<const Elem> word);

std::vector<Elem> encode(const GeneratorMatrix& g, std::span<const Elem> message);

bool linearly_independent(std::span<const GeneratorMatrix> codes);

// Remove the listed columns.
GeneratorMatrix puncture(const GeneratorMatrix& g, std::span<const std::size_t> coords);

// Coordinate permutation: entry in column i moves to column perm[i].
GeneratorMatrix permute_columns(const GeneratorMatrix& g, std::span<const std::size_t> perm);
bool is_permutation(std::span<const std::size_t> perm);

// True iff applying perm to every row of a yields the row space of b.
bool equal_up_to_permutation(const GeneratorMatrix& a, const GeneratorMatrix& b, std::span<const std::size_t> perm);

// Hamming weight of a word.
std::size_t weight(std::span<const Elem> word);

}  // namespace eccir::code
