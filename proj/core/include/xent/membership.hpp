#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xent/xstate.hpp"

namespace xent {

enum class MembershipStatus { member_by_construction, excluded, undecided };

/// Outcome of the generalized GHZ-diagonal membership test.
///
/// member_by_construction: an explicit (alpha, beta, lambda) assignment was
/// found and certified by rebuilding the state from it.
/// excluded: no assignment exists. `violated_conditions` lists which of the
/// three coherence-cancellation conditions fail when the exclusion follows
/// from them; it is empty when the exclusion instead comes from exhausting
/// the weight search (all-real or all-imaginary coherences admit an exact
/// feasibility decision).
/// undecided: no certificate found and no proof of exclusion.
struct MembershipReport {
    MembershipStatus status;
    std::vector<int> violated_conditions;
    std::optional<GeneralizedGhzDiagonalSpec> witness;
    std::string note;
};

/// Decides whether a valid 2- or 3-qubit X-state is a mixture of
/// generalized GHZ states for some common (alpha, beta).
MembershipReport is_generalized_ghz_diagonal(const XState& s);

/// The two-qubit X-state with diagonal (a1, a2, b2, 0) and a single
/// coherence r e^{i phi} in the inner block. Preconditions: entries
/// nonnegative, a1+a2+b2 = 1, r^2 < a2 b2 strictly, purity
/// a1^2+a2^2+b2^2+2r^2 <= 1. With generic phi it violates all three
/// membership conditions at once.
XState counterexample_state(double a1, double a2, double b2, double r, double phi);

}  // namespace xent
