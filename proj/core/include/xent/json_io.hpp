#pragma once

#include <stdexcept>
#include <string>

#include "xent/channels.hpp"
#include "xent/xstate.hpp"

namespace xent {

/// Unreadable, unparsable, or semantically invalid input. The CLI maps this
/// to its input-error exit code, distinct from flag/config errors.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// State document: {"n": qubits, "diag": [2^n reals],
/// "anti": [[re, im] x 2^{n-1}]} where "anti" holds the top half of the
/// anti-diagonal. The parsed state must be a valid density matrix.
XState parse_state_json(const std::string& text);
std::string state_to_json(const XState& s);
XState read_state_json(const std::string& path);
void write_state_json(const XState& s, const std::string& path);

/// Channel document: {"kind": "dephasing" | "depolarizing", "p": strength}.
ChannelSpec parse_channel_json(const std::string& text);
ChannelSpec read_channel_json(const std::string& path);

/// Fixed 15-significant-digit formatting with "-0" normalized to "0";
/// used for every numeric CSV cell so output is bitwise reproducible.
std::string format_number(double v);

}  // namespace xent
