#ifndef LIEALG_MATRIX_HPP
#define LIEALG_MATRIX_HPP

#include "liealg/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace liealg {

/// Coordinate vector; every entry is expected to share one field.
using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldDesc& field, std::size_t n);
Vector unit_vector(const FieldDesc& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector& axpy(Vector& y, const Scalar& a, const Vector& x); // y += a x

/// Dense row-major matrix over a single FieldDesc.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldDesc& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldDesc& field, std::size_t n);
    static Matrix from_rows(const FieldDesc& field,
                            std::initializer_list<std::initializer_list<std::int64_t>> rows);
    /// Stacks the given vectors as rows; every vector must have `cols` entries.
    static Matrix from_vectors(const FieldDesc& field, std::size_t cols, const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDesc& field() const { return field_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void swap_rows(std::size_t a, std::size_t b);

    /// M v for a column vector v.
    Vector apply(const Vector& v) const;
    Matrix transpose() const;

    bool is_zero() const;
    bool is_symmetric() const;

    /// Throws FieldMismatch if an entry has drifted to another field.
    void check_uniform_field() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    FieldDesc field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace liealg

#endif // LIEALG_MATRIX_HPP
