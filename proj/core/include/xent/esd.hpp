#pragma once

#include <optional>
#include <vector>

#include "xent/channels.hpp"
#include "xent/dense.hpp"
#include "xent/xstate.hpp"

namespace xent {

/// Where the minimal partial-transpose eigenvalue of a three-qubit X-state
/// dies under increasing channel strength.
struct EsdResult {
    int qubit;
    /// p values where the minimal PT eigenvalue changes sign, ascending.
    std::vector<double> crossings;
    /// Smallest p after which the eigenvalue stays >= -1e-12 up to p = 1;
    /// empty when it is still negative arbitrarily close to p = 1.
    std::optional<double> dies_at;
    bool negative_at_zero;
};

/// Closed-form treatment: every negative block branch has its root at
/// p = 1 - cbrt(a b / |c|^2); branches are monotone in p, so the minimum
/// crosses zero at most once.
EsdResult esd_dephasing(const XState& s, int qubit);

/// Grid scan (1024 subdivisions of [0,1]) of the closed-form minimal PT
/// eigenvalue of the depolarized state, with each sign change refined by
/// bisection to |dp| <= 1e-10.
EsdResult esd_depolarizing(const XState& s, int qubit);

/// W = (3/4) I - |ghz(k)><ghz(k)| with |ghz(k)> = (|k-1> + |2^n-k>)/sqrt(2);
/// k is 1-based. Negative expectation certifies GHZ-class entanglement.
struct WitnessSpec {
    int k;
    DenseOperator matrix;
};

WitnessSpec make_witness(int n, int k);

struct WitnessValue {
    /// Exact expectation; the coherence enters as Re c_k.
    double value;
    /// Variant with |c_k| in place of Re c_k (the form usually quoted for
    /// real nonnegative coherences).
    double printed_value;
    bool printed_matches;
};

/// Closed-form Tr[W_k rho(p)] for the channel-evolved state, n = 3.
WitnessValue witness_expectation(const XState& s, int k, const ChannelSpec& channel);

struct WitnessThreshold {
    /// Strength at which detection is lost; empty when the expectation is
    /// already nonnegative at p = 0.
    std::optional<double> p;
    /// Set when a closed-form root fell outside [0,1] and was clamped.
    bool clamped;
};

WitnessThreshold witness_threshold_dephasing(const XState& s, int k);
WitnessThreshold witness_threshold_depolarizing(const XState& s, int k);

struct WitnessMinimum {
    int k;
    double expectation;
};

/// Most sensitive witness: argmin over k of the exact expectation, ties
/// resolved toward the smallest k.
WitnessMinimum minimize_witness(const XState& s, const ChannelSpec& channel);

}  // namespace xent
