#include "cocyc/gf2.hpp"

#include <bit>
#include <string>
#include <utility>

#include "cocyc/types.hpp"

namespace cocyc::gf2 {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

Vector::Vector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

Vector::Vector(std::initializer_list<int> bits) : Vector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
}

void Vector::set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

bool Vector::is_zero() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

std::size_t Vector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

Vector& Vector::operator^=(const Vector& other) {
    if (other.len_ != len_) throw ContractViolation("gf2::Vector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

bool Vector::dot(const Vector& other) const {
    if (other.len_ != len_) throw ContractViolation("gf2::Vector dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, Vector(cols)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ContractViolation("gf2::Matrix: ragged initializer");
        data_.emplace_back(r);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto& words = data_[r].words();
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            while (bits != 0) {
                const auto c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

Matrix Matrix::with_columns(const std::vector<Vector>& extra) const {
    Matrix out(rows_, cols_ + extra.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(r, c);
        for (std::size_t j = 0; j < extra.size(); ++j) {
            if (extra[j].size() != rows_)
                throw ContractViolation("gf2::Matrix::with_columns: height mismatch");
            if (extra[j].get(r)) out.set(r, cols_ + j);
        }
    }
    return out;
}

Vector multiply(const Matrix& m, const Vector& x) {
    if (x.size() != m.cols()) throw ContractViolation("gf2::multiply: dimension mismatch");
    Vector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m.row(r).dot(x)) out.set(r);
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ContractViolation("gf2::multiply: dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Vector acc(b.cols());
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(r, k)) acc ^= b.row(k);
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (acc.get(c)) out.set(r, c);
    }
    return out;
}

namespace {

// Forward elimination with first-nonzero pivoting over the first `pivot_cols`
// columns. Rows are permuted in place; returns the pivot column of each of the
// leading `rank` rows.
std::vector<std::size_t> eliminate(std::vector<Vector>& rows, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < pivot_cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        const std::size_t first_word = c >> 6;
        const auto& pivot = rows[rank].words();
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (!rows[r].get(c)) continue;
            auto& target = rows[r].words();
            for (std::size_t w = first_word; w < target.size(); ++w) target[w] ^= pivot[w];
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return eliminate(rows, m.cols()).size();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows())
        throw ContractViolation("gf2::solve: rhs length " + std::to_string(b.size()) +
                                " != rows " + std::to_string(m.rows()));
    const std::size_t n = m.cols();
    // Augmented rows [m | b].
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vector aug(n + 1);
        for (std::size_t c = 0; c < n; ++c)
            if (m.get(r, c)) aug.set(c);
        if (b.get(r)) aug.set(n);
        rows.push_back(std::move(aug));
    }
    const auto pivots = eliminate(rows, n);
    for (std::size_t r = pivots.size(); r < rows.size(); ++r)
        if (rows[r].get(n)) return std::nullopt;

    // Back substitution; free variables are zero. `x` carries a spare zero bit
    // in the augmented position so whole-row dot products can be used.
    Vector x(n + 1);
    for (std::size_t i = pivots.size(); i-- > 0;) x.set(pivots[i], rows[i].get(n) ^ rows[i].dot(x));
    Vector out(n);
    for (std::size_t c = 0; c < n; ++c)
        if (x.get(c)) out.set(c);
    return out;
}

bool in_column_span(const Matrix& m, const Vector& b) { return solve(m, b).has_value(); }

}  // namespace cocyc::gf2
