#pragma once

#include <array>
#include <string>
#include <vector>

#include "xent/dense.hpp"
#include "xent/xstate.hpp"

namespace xent {

enum class Partition { q12_3, q13_2, q23_1 };

const char* partition_name(Partition p);

/// One spin-flip style generator for three qubits: a rotation generator
/// L_ell on the qubit pair of the partition, sigma_y on the remaining
/// qubit, embedded in the physical qubit order.
struct GeneratorSpec {
    Partition partition;
    int ell;  // 1..6; 1 and 2 are the anti-diagonal generators
    DenseOperator matrix;
};

/// All 18 generators (3 partitions x 6), ell-major within each partition.
std::vector<GeneratorSpec> build_generators();

struct ConcurrenceReport {
    /// terms[partition][ell-1]; partitions ordered q12_3, q13_2, q23_1.
    std::array<std::array<double, 6>, 3> terms;
    double tau3;
    int nonzero_term_count;
};

/// Closed-form path: for each partition the two anti-diagonal generators
/// couple two 2x2 blocks each, contributing eigenvalue magnitudes
/// (sqrt(a b) +- |c|)^2 per block; the remaining generators provably
/// contribute zero for X-states.
ConcurrenceReport concurrence_terms_x(const XState& s);

/// Dense reference: every term from actual generator matrices and the
/// PSD-product eigensolver; shares no tables with the closed form.
ConcurrenceReport concurrence_terms_oracle(const XState& s);

/// Single GHZ-type block (weights a, 1-a, coherence c >= 0) dephased by p.
double tau3_dephasing_single_ghz(double a, double c, double p);

/// Same state depolarized by p.
double tau3_depolarizing_single_ghz(double a, double c, double p);

enum class Balance { balanced, unbalanced };

/// Inspects rho_tilde = rho S rho* S: balanced iff every non-vanishing
/// diagonal entry has a non-vanishing anti-diagonal partner in its row.
/// Unbalanced products have doubly degenerate spectra and contribute zero.
Balance classify_balance(const XState& s, const GeneratorSpec& g);

struct TermClassCount {
    std::string partition;
    std::string generator_class;
    int count;
};

/// Term bookkeeping for the n-qubit extension (counts only, no values):
/// n = 3 gives 6 contributing terms, n = 4 gives 28.
std::vector<TermClassCount> enumerate_nqubit_terms(int n);

int total_term_count(int n);

}  // namespace xent
