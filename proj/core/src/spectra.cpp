#include "xent/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xent {

XState partial_transpose_x(const XState& s, int qubit) {
    if (qubit < 1 || qubit > s.qubits())
        throw std::invalid_argument("partial_transpose_x: qubit out of range");
    const std::size_t mask = std::size_t{1} << (s.qubits() - qubit);
    std::vector<cx> e(s.blocks());
    for (std::size_t l = 0; l < s.blocks(); ++l) e[l] = s.anti(l ^ mask);
    return XState(s.qubits(), s.diag(), std::move(e));
}

PTSpectrum pt_spectrum(const XState& s, int qubit) {
    const XState pt = partial_transpose_x(s, qubit);
    PTSpectrum out;
    out.qubit = qubit;
    out.eigenvalues = pt.eigenvalues();
    out.min_eigenvalue = out.eigenvalues.front();
    return out;
}

NegativitySummary negativities(const XState& s) {
    NegativitySummary out;
    out.per_qubit.reserve(s.qubits());
    for (int q = 1; q <= s.qubits(); ++q)
        out.per_qubit.push_back(pt_spectrum(s, q).min_eigenvalue);
    if (s.qubits() == 3) {
        out.tri_partite =
            std::cbrt(out.per_qubit[0] * out.per_qubit[1] * out.per_qubit[2]);
    }
    return out;
}

double standard_negativity(const XState& s, int qubit) {
    double sum = 0.0;
    for (double ev : pt_spectrum(s, qubit).eigenvalues)
        if (ev < 0.0) sum -= ev;
    return sum;
}

}  // namespace xent
