#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace xent {

using cx = std::complex<double>;

/// Dense square complex matrix, row major. Small dimensions only (the
/// reference path works on full 2^n x 2^n operators, n <= 5 or so); no
/// attempt at blocking or vectorization is made.
class DenseOperator {
public:
    DenseOperator() = default;
    explicit DenseOperator(std::size_t dim) : dim_(dim), a_(dim * dim, cx{0.0, 0.0}) {}

    static DenseOperator identity(std::size_t dim);
    static DenseOperator from_rows(std::initializer_list<std::initializer_list<cx>> rows);

    std::size_t dim() const { return dim_; }

    cx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const cx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    DenseOperator operator+(const DenseOperator& o) const;
    DenseOperator operator-(const DenseOperator& o) const;
    DenseOperator operator*(const DenseOperator& o) const;  // matrix product
    DenseOperator& operator*=(cx s);
    friend DenseOperator operator*(cx s, DenseOperator m) { m *= s; return m; }

    DenseOperator adjoint() const;
    DenseOperator transpose() const;
    DenseOperator conjugate() const;

    cx trace() const;

    /// max_{ij} |a_ij|
    double max_abs() const;
    /// max_{ij} |a_ij - b_ij|
    double max_abs_diff(const DenseOperator& o) const;
    /// max_{ij} |a_ij - conj(a_ji)|; zero for exactly Hermitian input
    double hermiticity_defect() const;

private:
    std::size_t dim_ = 0;
    std::vector<cx> a_;
};

/// Kronecker product, a (x) b.
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

}  // namespace xent
