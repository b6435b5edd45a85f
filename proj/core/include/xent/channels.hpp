#pragma once

#include <vector>

#include "xent/dense.hpp"
#include "xent/xstate.hpp"

namespace xent {

enum class ChannelKind { dephasing, depolarizing };

struct ChannelSpec {
    ChannelKind kind;
    double p;  // strength, 0 <= p <= 1
};

/// Single-qubit Kraus operators of the channel.
struct KrausSet {
    std::vector<DenseOperator> operators;
    /// max-norm of (sum K^dagger K) - identity; 0 for a trace-preserving set.
    double completeness_defect() const;
};

KrausSet single_qubit_kraus(const ChannelSpec& spec);

/// Dephasing by strength p on every qubit: diagonal unchanged, every
/// anti-diagonal element scaled by (1-p)^{n/2}.
XState apply_dephasing(const XState& s, double p);

/// Three-qubit depolarizing by strength p on every qubit: anti-diagonal
/// scaled by (1-p)^3; diagonal entries mixed over Hamming distance with
/// per-bit flip weight p/2.
XState apply_depolarizing3(const XState& s, double p);

/// Closed-form dispatch. Depolarizing is only available here for n = 3;
/// other qubit counts must go through apply_kraus_dense.
XState apply_channel(const XState& s, const ChannelSpec& spec);

/// Reference path: sum_l A_l rho A_l^dagger over all per-qubit Kraus tensor
/// products (2^n terms for dephasing, 4^n for depolarizing).
DenseOperator apply_kraus_dense(const DenseOperator& rho, const ChannelSpec& spec);

/// Exponential-relaxation reparametrization p = 1 - exp(-kappa t).
double p_of_time(double kappa, double t);

}  // namespace xent
