#pragma once

#include <cstdint>
#include <random>

#include "xent/dense.hpp"
#include "xent/xstate.hpp"

namespace xent {

/// Deterministic random-state source. Draws go through a fixed 53-bit
/// extraction from mt19937_64 so a given seed produces the same states on
/// every platform and standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);
    /// Uniform integer in [0, bound), bound >= 1.
    std::uint64_t integer(std::uint64_t bound);
    /// Unit-modulus complex number with uniform argument.
    cx phase();

    /// Valid n-qubit X-state: strictly positive diagonal, every block
    /// strictly inside the positive-semidefinite cone.
    XState random_xstate(int n);

    /// X-state supported on exactly `nblocks` GHZ-type blocks, each with
    /// a, b > 0 and c != 0.
    XState random_block_mixture(int n, int nblocks);

    /// Generalized GHZ-diagonal mixture with |alpha|^2 in [0.15, 0.85],
    /// generic relative phase and strictly positive weights.
    GeneralizedGhzDiagonalSpec random_ggd_spec(int n);

    /// Dense Hermitian matrix with entries of magnitude <= scale.
    DenseOperator random_hermitian(std::size_t dim, double scale = 1.0);

private:
    std::mt19937_64 eng_;
};

}  // namespace xent
