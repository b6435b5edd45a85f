#pragma once

#include <optional>
#include <vector>

#include "xent/xstate.hpp"

namespace xent {

/// Partial transpose on one qubit (1-based, qubit 1 = most significant bit).
/// For an X-state this only permutes the anti-diagonal: the entry at row m
/// moves to row m XOR mask. The result is Hermitian and X-shaped but in
/// general not positive semidefinite; it is returned in the same compact
/// representation.
XState partial_transpose_x(const XState& s, int qubit);

struct PTSpectrum {
    int qubit;
    std::vector<double> eigenvalues;  // ascending, 2^n values, sum 1
    double min_eigenvalue;
};

/// Blockwise closed-form spectrum of the partial transpose.
PTSpectrum pt_spectrum(const XState& s, int qubit);

struct NegativitySummary {
    /// Signed minimal PT eigenvalue per qubit (may be positive when the
    /// partial transpose is PSD).
    std::vector<double> per_qubit;
    /// Signed cube root of N_1 N_2 N_3; present only for n = 3. Negative
    /// values certify tri-partite entanglement under this sign convention.
    std::optional<double> tri_partite;
};

NegativitySummary negativities(const XState& s);

/// Conventional nonnegative negativity: sum of |negative PT eigenvalues|.
double standard_negativity(const XState& s, int qubit);

}  // namespace xent
