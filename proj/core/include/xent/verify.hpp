#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xent {

struct PropertyResult {
    std::string name;
    double max_residual;
    double tolerance;
    bool pass;
};

struct VerifyReport {
    std::vector<PropertyResult> properties;
    int trials;
    bool ok() const;
};

/// Cross-checks every closed-form path against the dense reference
/// implementation on `trials` random three-qubit states drawn from `seed`:
/// channel evolution vs Kraus composition, partial-transpose spectra and
/// state spectra vs the dense eigensolver, witness expectations vs dense
/// traces, concurrence terms vs the product-eigenvalue oracle, channel
/// composition, X-shape preservation and membership certification of
/// constructor outputs. Zero trials passes vacuously.
VerifyReport run_verification(std::uint64_t seed, int trials);

}  // namespace xent
