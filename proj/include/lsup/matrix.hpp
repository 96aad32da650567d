#ifndef LSUP_MATRIX_HPP
#define LSUP_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lsup/field.hpp"

namespace lsup {

using Vector = std::vector<FieldElement>;

Vector zero_vector(Field f, std::size_t n);
Vector unit_vector(Field f, std::size_t n, std::size_t k);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const FieldElement& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const FieldElement& s, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);
    /// Rows must all have `cols` entries.
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);
    static Matrix identity(Field f, std::size_t n);

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_row(std::size_t r, const Vector& v);
    void set_column(std::size_t c, const Vector& v);
    void append_row(const Vector& v);
    void swap_rows(std::size_t a, std::size_t b);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const FieldElement& s) const;
    Vector apply(const Vector& v) const;

    FieldElement trace() const;
    bool is_zero() const;
    bool is_scalar() const;

    /// Brings the matrix to reduced row echelon form (leading entries 1) in place.
    /// Returns the pivot column of each nonzero row; zero rows are dropped.
    std::vector<std::size_t> rref_in_place();
    Matrix rref() const;
    std::size_t rank() const;
    FieldElement determinant() const;

    /// Restriction of the entries to Q(theta) for a rational matrix.
    Matrix lifted(Field target) const;
    /// Flattened row-major entries.
    Vector flatten() const;
    static Matrix unflatten(Field f, std::size_t rows, std::size_t cols, const Vector& v);

    friend bool operator==(const Matrix& a, const Matrix& b);
    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

/// Some solution of M x = b, if one exists.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& b);

/// Reduces vectors against a growing echelon basis; used for incremental span building.
class EchelonBasis {
public:
    EchelonBasis(Field f, std::size_t n) : field_(f), n_(n) {}

    /// Reduces `v` against the basis; returns the residual.
    Vector reduce(Vector v) const;
    /// Adds `v` if it is not already in the span; returns true on growth.
    bool insert(Vector v);
    bool contains(const Vector& v) const;
    std::size_t size() const noexcept { return rows_.size(); }
    std::size_t ambient() const noexcept { return n_; }
    const std::vector<Vector>& rows() const noexcept { return rows_; }

private:
    Field field_;
    std::size_t n_;
    std::vector<Vector> rows_;        // leading entry 1 at pivots_[k]
    std::vector<std::size_t> pivots_;
};

}  // namespace lsup

#endif  // LSUP_MATRIX_HPP
