#include "eccir/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eccir::code {

GeneratorMatrix::GeneratorMatrix(gf::FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("GeneratorMatrix: null field");
}

GeneratorMatrix::GeneratorMatrix(gf::FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols)
    : GeneratorMatrix(std::move(field), rows.size(), cols) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("GeneratorMatrix: row " + std::to_string(r) + " has length " +
                                        std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) set(r, c, rows[r][c]);
    }
}

GeneratorMatrix GeneratorMatrix::from_bits(const std::vector<BitVec>& rows, std::size_t cols) {
    GeneratorMatrix g(gf::field_create(2, 1), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("GeneratorMatrix: packed row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) g.data_[r * cols + c] = rows[r].get(c) ? 1 : 0;
    }
    return g;
}

GeneratorMatrix GeneratorMatrix::identity(gf::FieldPtr field, std::size_t k) {
    GeneratorMatrix g(std::move(field), k, k);
    for (std::size_t i = 0; i < k; ++i) g.data_[i * k + i] = 1;
    return g;
}

void GeneratorMatrix::set(std::size_t r, std::size_t c, Elem v) {
    if (!field_->contains(v)) throw std::invalid_argument("GeneratorMatrix: entry " + std::to_string(v) + " outside F_" + std::to_string(q()));
    data_[r * cols_ + c] = v;
}

std::vector<std::vector<Elem>> GeneratorMatrix::to_rows() const {
    std::vector<std::vector<Elem>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

std::vector<BitVec> GeneratorMatrix::packed_rows() const {
    if (q() != 2) throw std::invalid_argument("packed_rows: matrix is not binary");
    std::vector<BitVec> out(rows_, BitVec(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c)) out[r].set(c);
    return out;
}

GeneratorMatrix GeneratorMatrix::stacked(const GeneratorMatrix& below) const {
    require_same_field(*this, below);
    if (below.cols_ != cols_) throw std::invalid_argument("stacked: column count mismatch");
    GeneratorMatrix out(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

GeneratorMatrix GeneratorMatrix::select_rows(std::span<const std::size_t> indices) const {
    GeneratorMatrix out(field_, indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= rows_) throw std::out_of_range("select_rows: row index out of range");
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(indices[i] * cols_), cols_,
                    out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
    }
    return out;
}

bool GeneratorMatrix::operator==(const GeneratorMatrix& rhs) const {
    return q() == rhs.q() && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

void require_same_field(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    if (a.field() != b.field() && (a.q() != b.q() || a.field()->modulus() != b.field()->modulus()))
        throw std::invalid_argument("matrices are over different fields");
}

namespace {

std::size_t binary_rank(std::vector<BitVec> rows, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].get(c)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i)
            if (rows[i].get(c)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

}  // namespace

GeneratorMatrix row_reduce(const GeneratorMatrix& g, std::vector<std::size_t>* pivots) {
    const auto& f = *g.field();
    auto m = g.to_rows();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < g.cols() && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        const Elem inv = f.inv(m[r][c]);
        if (inv != 1)
            for (auto& x : m[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Elem factor = m[i][c];
            for (std::size_t j = 0; j < g.cols(); ++j)
                if (m[r][j]) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        piv.push_back(c);
        ++r;
    }
    m.resize(r);
    if (pivots) *pivots = std::move(piv);
    return GeneratorMatrix(g.field(), m, g.cols());
}

std::size_t rank(const GeneratorMatrix& g) {
    if (g.q() == 2) return binary_rank(g.packed_rows(), g.cols());
    return row_reduce(g).rows();
}

bool row_space_equal(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) return false;
    const std::size_t ra = rank(a);
    return ra == rank(b) && rank(a.stacked(b)) == ra;
}

bool in_row_space(const GeneratorMatrix& g, std::span<const Elem> word) {
    if (word.size() != g.cols()) throw std::invalid_argument("in_row_space: length mismatch");
    GeneratorMatrix w(g.field(), 1, g.cols());
    for (std::size_t c = 0; c < word.size(); ++c) w.set(0, c, word[c]);
    return rank(g.stacked(w)) == rank(g);
}

std::vector<Elem> encode(const GeneratorMatrix& g, std::span<const Elem> message) {
    if (message.size() != g.rows())
        throw std::invalid_argument("encode: message length " + std::to_string(message.size()) + " != k = " +
                                    std::to_string(g.rows()));
    const auto& f = *g.field();
    std::vector<Elem> c(g.cols(), 0);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const Elem w = message[r];
        if (!f.contains(w)) throw std::invalid_argument("encode: message symbol outside field");
        if (w == 0) continue;
        for (std::size_t j = 0; j < g.cols(); ++j) c[j] = f.add(c[j], f.mul(w, g.at(r, j)));
    }
    return c;
}

bool linearly_independent(std::span<const GeneratorMatrix> codes) {
    if (codes.empty()) return true;
    GeneratorMatrix all = codes.front();
    std::size_t total = rank(codes.front());
    for (std::size_t i = 1; i < codes.size(); ++i) {
        if (codes[i].cols() != all.cols()) throw std::invalid_argument("linearly_independent: length mismatch");
        all = all.stacked(codes[i]);
        total += rank(codes[i]);
    }
    return rank(all) == total;
}

GeneratorMatrix puncture(const GeneratorMatrix& g, std::span<const std::size_t> coords) {
    std::vector<bool> drop(g.cols(), false);
    for (std::size_t c : coords) {
        if (c >= g.cols()) throw std::out_of_range("puncture: coordinate " + std::to_string(c) + " out of range");
        drop[c] = true;
    }
    const auto kept = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), false));
    GeneratorMatrix out(g.field(), g.rows(), kept);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::size_t j = 0;
        for (std::size_t c = 0; c < g.cols(); ++c)
            if (!drop[c]) out.set(r, j++, g.at(r, c));
    }
    return out;
}

bool is_permutation(std::span<const std::size_t> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t p : perm) {
        if (p >= perm.size() || seen[p]) return false;
        seen[p] = true;
    }
    return true;
}

GeneratorMatrix permute_columns(const GeneratorMatrix& g, std::span<const std::size_t> perm) {
    if (perm.size() != g.cols() || !is_permutation(perm)) throw std::invalid_argument("permute_columns: not a bijection on the coordinates");
    GeneratorMatrix out(g.field(), g.rows(), g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) out.set(r, perm[c], g.at(r, c));
    return out;
}

bool equal_up_to_permutation(const GeneratorMatrix& a, const GeneratorMatrix& b, std::span<const std::size_t> perm) {
    require_same_field(a, b);
    if (a.cols() != b.cols() || a.rows() != b.rows()) throw std::invalid_argument("equal_up_to_permutation: parameter mismatch");
    return row_space_equal(permute_columns(a, perm), b);
}

std::size_t weight(std::span<const Elem> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem x) { return x != 0; }));
}

}  // namespace eccir::code
