#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xent/xstate.hpp"

namespace xent {

/// Two-block GHZ mixture whose third-qubit negativity dies near p = 0.366
/// under dephasing while qubits 1 and 2 stay negative for every p < 1.
/// CLI name "fig1".
XState demo_two_block();

/// Four-block mixture under depolarizing noise: one per-qubit minimum stays
/// positive, the other two cross zero near p = 0.0585 and 0.0317, and the
/// tri-partite negativity runs positive, negative, positive. CLI name "fig2".
XState demo_four_block();

/// Family with third-block weight eps: for eps = 0 the concurrence bound
/// tau3 stays positive under dephasing for all p < 1; any eps > 0 lets it
/// reach zero. CLI names "fig3" (eps = 0), "fig3b" (1/128), "fig3c" (1/32),
/// "fig3d" (1/16).
XState demo_tau3_family(double eps);

/// Pure n-qubit GHZ state (|0...0> + |1...1>)/sqrt(2). CLI name "ghz" (n=3).
XState ghz_state(int n);

/// Identity / 2^n. CLI name "maxmixed" (n=3).
XState maximally_mixed_state(int n);

/// Lookup by CLI name; empty optional when the name is unknown.
std::optional<XState> builtin_state(const std::string& name);

const std::vector<std::string>& builtin_state_names();

}  // namespace xent
