#pragma once

#include <array>
#include <string>
#include <vector>

#include "xent/dense.hpp"

namespace xent {

struct ValidationCheck {
    std::string name;
    bool pass;
    double residual;  // measured violation; 0 when exactly satisfied
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const;
    double max_residual() const;
    std::string summary() const;
};

/// n-qubit density matrix whose only allowed non-zero entries lie on the
/// diagonal and the anti-diagonal. Stored as the real diagonal d_0..d_{N-1}
/// plus the top half of the anti-diagonal; the bottom half is implied by
/// e_{N-1-m} = conj(e_m), so the representation is Hermitian by construction.
///
/// Basis indices are big endian: qubit 1 is the most significant bit.
/// Block l (0-based, l < N/2) couples |l> with its bitwise complement
/// |N-1-l>; its entries are a = d_l, b = d_{N-1-l}, c = e_l.
class XState {
public:
    XState(int n, std::vector<double> diag, std::vector<cx> anti_top);

    int qubits() const { return n_; }
    std::size_t dim() const { return d_.size(); }
    std::size_t blocks() const { return e_.size(); }

    double d(std::size_t m) const { return d_[m]; }
    cx anti(std::size_t m) const;
    const std::vector<double>& diag() const { return d_; }
    const std::vector<cx>& anti_top() const { return e_; }

    double block_a(std::size_t l) const { return d_[l]; }
    double block_b(std::size_t l) const { return d_[dim() - 1 - l]; }
    cx block_c(std::size_t l) const { return e_[l]; }

    /// Eigenvalues {lo, hi} of the 2x2 block l.
    std::array<double, 2> block_eigenvalues(std::size_t l) const;
    /// All 2^n eigenvalues, ascending, assembled blockwise.
    std::vector<double> eigenvalues() const;

    double trace() const;
    double purity() const;  // Tr rho^2

private:
    int n_;
    std::vector<double> d_;
    std::vector<cx> e_;
};

/// Checks trace one, diagonal nonnegativity, blockwise positive
/// semidefiniteness and finiteness (structural tolerance 1e-12). Hermiticity
/// holds by representation and is reported as such.
ValidationReport validate(const XState& s);

/// One GHZ-type block: weights a, b on a basis state and its bitwise
/// complement, coherence c between them. `block` is 1-based to match the
/// usual j = 1..4 labeling of three-qubit X-states.
struct GhzTypeSpec {
    int n;
    int block;
    double a;
    double b;
    cx c;
};

/// Convex mixture of GHZ-type blocks. Weights must be nonnegative and sum
/// to one, block indices distinct; the result is validated before return.
XState from_ghz_mixture(const std::vector<GhzTypeSpec>& specs,
                        const std::vector<double>& weights);

/// Mixture weights over the 2^{n+1} states alpha|k> +- beta|k-bar>,
/// k = 0..2^n-1. lambda_plus/lambda_minus each hold 2^n nonnegative
/// entries and jointly sum to one; |alpha|^2 + |beta|^2 = 1.
struct GeneralizedGhzDiagonalSpec {
    int n;
    cx alpha;
    cx beta;
    std::vector<double> lambda_plus;
    std::vector<double> lambda_minus;
};

/// Assembles the X-state of a generalized GHZ-diagonal mixture. The output
/// is always a valid density matrix.
XState from_generalized_ghz_diagonal(const GeneralizedGhzDiagonalSpec& spec);

DenseOperator to_dense(const XState& s);

/// Extracts the X entries of a dense Hermitian matrix. When off_x_residual
/// is null, entries off the X pattern (or Hermiticity defects) above 1e-12
/// throw; otherwise the largest such magnitude is written there and the
/// X part is returned regardless.
XState x_from_dense(const DenseOperator& m, double* off_x_residual = nullptr);

}  // namespace xent
