#include "lsup/matrix.hpp"

#include <sstream>

#include "lsup/error.hpp"

namespace lsup {

Vector zero_vector(Field f, std::size_t n) { return Vector(n, FieldElement::zero(f)); }

Vector unit_vector(Field f, std::size_t n, std::size_t k) {
    Vector v = zero_vector(f, n);
    v.at(k) = FieldElement::one(f);
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

Vector scale(const FieldElement& s, const Vector& v) {
    Vector r = v;
    for (auto& x : r) x *= s;
    return r;
}

void axpy(Vector& a, const FieldElement& s, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    if (s.is_zero()) return;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!b[k].is_zero()) a[k] += s * b[k];
    }
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ", ";
        out += v[k].to_string();
    }
    return out + ")";
}

// ---------------------------------------------------------------------------

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(f)) {}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = FieldElement::one(f);
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
    if (v.size() != cols_) throw DimensionMismatch("row length " + std::to_string(v.size()) + " != " + std::to_string(cols_));
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::append_row(const Vector& v) {
    if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix p(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const FieldElement& b = o(k, c);
                if (!b.is_zero()) p(r, c) += a * b;
            }
        }
    }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] += o.data_[k];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] -= o.data_[k];
    return s;
}

Matrix Matrix::scaled(const FieldElement& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const FieldElement& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

FieldElement Matrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
    FieldElement t = FieldElement::zero(field_);
    for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_scalar() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && !(*this)(r, c).is_zero()) return false;
            if (r == c && !((*this)(r, c) == (*this)(0, 0))) return false;
        }
    return true;
}

std::vector<std::size_t> Matrix::rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
        std::size_t p = lead_row;
        while (p < rows_ && (*this)(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        swap_rows(p, lead_row);
        const FieldElement inv = (*this)(lead_row, c).inverse();
        for (std::size_t k = c; k < cols_; ++k) {
            if (!(*this)(lead_row, k).is_zero()) (*this)(lead_row, k) *= inv;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead_row || (*this)(r, c).is_zero()) continue;
            const FieldElement t = (*this)(r, c);
            for (std::size_t k = c; k < cols_; ++k) {
                const FieldElement& a = (*this)(lead_row, k);
                if (!a.is_zero()) (*this)(r, k) -= t * a;
            }
        }
        pivots.push_back(c);
        ++lead_row;
    }
    data_.resize(lead_row * cols_);
    rows_ = lead_row;
    return pivots;
}

Matrix Matrix::rref() const {
    Matrix m = *this;
    m.rref_in_place();
    return m;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref_in_place().size();
}

FieldElement Matrix::determinant() const {
    if (!is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix m = *this;
    FieldElement det = FieldElement::one(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && m(p, c).is_zero()) ++p;
        if (p == rows_) return FieldElement::zero(field_);
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        const FieldElement inv = m(c, c).inverse();
        for (std::size_t r = c + 1; r < rows_; ++r) {
            if (m(r, c).is_zero()) continue;
            const FieldElement t = m(r, c) * inv;
            for (std::size_t k = c; k < cols_; ++k) {
                if (!m(c, k).is_zero()) m(r, k) -= t * m(c, k);
            }
        }
    }
    return det;
}

Matrix Matrix::lifted(Field target) const {
    Matrix m(target, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].lifted(target);
    return m;
}

Vector Matrix::flatten() const { return data_; }

Matrix Matrix::unflatten(Field f, std::size_t rows, std::size_t cols, const Vector& v) {
    if (v.size() != rows * cols) throw DimensionMismatch("unflatten size mismatch");
    Matrix m(f, rows, cols);
    m.data_ = v;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
        if (!(a.data_[k] == b.data_[k])) return false;
    }
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << lsup::to_string(row(r));
    }
    os << "]";
    return os.str();
}

std::optional<Vector> solve_linear(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
    const std::size_t n = m.cols();
    Matrix aug(m.field(), m.rows(), n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n) = b[r];
    }
    const auto pivots = aug.rref_in_place();
    Vector x = zero_vector(m.field(), n);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == n) return std::nullopt;
        x[pivots[k]] = aug(k, n);
    }
    return x;
}

// ---------------------------------------------------------------------------

Vector EchelonBasis::reduce(Vector v) const {
    if (v.size() != n_) throw DimensionMismatch("vector does not live in the ambient space");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const FieldElement t = v[pivots_[k]];
        if (t.is_zero()) continue;
        const Vector& row = rows_[k];
        for (std::size_t c = 0; c < n_; ++c) {
            if (!row[c].is_zero()) v[c] -= t * row[c];
        }
    }
    return v;
}

bool EchelonBasis::insert(Vector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    const FieldElement inv = v[p].inverse();
    for (auto& x : v) {
        if (!x.is_zero()) x *= inv;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    (void)field_;
    return true;
}

bool EchelonBasis::contains(const Vector& v) const { return lsup::is_zero(reduce(v)); }

}  // namespace lsup
