#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace cocyc::gf2 {

/// Bit-packed vector over the two-element field. Addition is XOR.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t len);
    Vector(std::initializer_list<int> bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool v = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const;
    std::size_t popcount() const;

    Vector& operator^=(const Vector& other);
    friend Vector operator^(Vector lhs, const Vector& rhs) { return lhs ^= rhs; }
    friend bool operator==(const Vector&, const Vector&) = default;

    /// Parity of the bitwise AND, i.e. the GF(2) inner product.
    bool dot(const Vector& other) const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix stored as packed rows. Dimensions are fixed at
/// construction.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { data_[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

    const Vector& row(std::size_t r) const { return data_[r]; }
    Vector column(std::size_t c) const;

    Matrix transpose() const;

    /// Returns a copy with the given columns appended on the right.
    Matrix with_columns(const std::vector<Vector>& extra) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Vector> data_;
};

Vector multiply(const Matrix& m, const Vector& x);
Matrix multiply(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& m);

/// Some x with m*x = b, or nullopt when the system is inconsistent.
/// Throws ContractViolation when b.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, const Vector& b);

bool in_column_span(const Matrix& m, const Vector& b);

}  // namespace cocyc::gf2
