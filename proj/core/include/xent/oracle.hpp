#pragma once

#include <vector>

#include "xent/dense.hpp"

namespace xent::oracle {

/// Reference numerics: everything here works on full dense operators with no
/// knowledge of the X-shaped representation or any closed form. The fast
/// paths elsewhere in the library are validated against these routines, so
/// they intentionally share no code with them.

struct Eigensystem {
    std::vector<double> values;  // ascending
    DenseOperator vectors;       // column k pairs with values[k]
};

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi;
/// converges quadratically for the small dimensions used here.
std::vector<double> hermitian_eigenvalues(const DenseOperator& m);

/// Eigenvalues plus an orthonormal eigenbasis.
Eigensystem hermitian_eigensystem(const DenseOperator& m);

/// Hermitian PSD square root via eigendecomposition. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything lower throws.
DenseOperator sqrt_psd(const DenseOperator& m);

/// Partial transpose on one qubit, 1-based, qubit 1 = most significant bit
/// of the basis index.
DenseOperator partial_transpose(const DenseOperator& m, int qubit);

/// Partial trace over one qubit (same labeling), result has half the dimension.
DenseOperator partial_trace(const DenseOperator& m, int qubit);

/// Eigenvalues of sqrt(rho) s conj(rho) s^dagger sqrt(rho), descending,
/// tiny negatives (>= -1e-12) clamped to zero. For Hermitian s this is the
/// usual spin-flipped product spectrum; for anti-Hermitian s it returns the
/// magnitudes of the (nonpositive real) eigenvalues of rho s rho* s.
std::vector<double> psd_product_eigenvalues(const DenseOperator& rho, const DenseOperator& s);

/// Tr(a b).
cx trace_product(const DenseOperator& a, const DenseOperator& b);

}  // namespace xent::oracle
