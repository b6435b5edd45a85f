#include "xent/esd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xent/spectra.hpp"

namespace xent {

namespace {

constexpr double kNegTol = 1e-12;
constexpr int kScanSubdivisions = 1024;
constexpr double kRootTol = 1e-10;

void require_three_qubits(const XState& s, const char* where) {
    if (s.qubits() != 3) throw std::invalid_argument(std::string(where) + ": three qubits required");
}

// Minimal PT block eigenvalue of the depolarized state as a function of p.
double min_pt_eigenvalue_depolarized(const XState& s, int qubit, double p) {
    const XState pt = partial_transpose_x(apply_depolarizing3(s, p), qubit);
    double m = pt.block_eigenvalues(0)[0];
    for (std::size_t l = 1; l < pt.blocks(); ++l)
        m = std::min(m, pt.block_eigenvalues(l)[0]);
    return m;
}

template <class F>
double bisect(F f, double lo, double hi) {
    double flo = f(lo);
    while (hi - lo > kRootTol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

template <class F>
EsdResult scan_for_crossings(F f, int qubit) {
    EsdResult out;
    out.qubit = qubit;

    std::vector<double> grid(kScanSubdivisions + 1);
    std::vector<double> val(kScanSubdivisions + 1);
    for (int i = 0; i <= kScanSubdivisions; ++i) {
        grid[i] = double(i) / kScanSubdivisions;
        val[i] = f(grid[i]);
    }
    out.negative_at_zero = val[0] < -kNegTol;

    for (int i = 0; i < kScanSubdivisions; ++i)
        if ((val[i] < 0.0) != (val[i + 1] < 0.0))
            out.crossings.push_back(bisect(f, grid[i], grid[i + 1]));

    int last_neg = -1;
    for (int i = 0; i <= kScanSubdivisions; ++i)
        if (val[i] < -kNegTol) last_neg = i;

    if (last_neg < 0) {
        out.dies_at = 0.0;
    } else if (last_neg >= kScanSubdivisions - 1) {
        out.dies_at = std::nullopt;  // still negative next to p = 1
    } else {
        double at = grid[last_neg + 1];
        for (double c : out.crossings)
            if (c > grid[last_neg] && c <= at) { at = c; break; }
        out.dies_at = at;
    }
    return out;
}

}  // namespace

EsdResult esd_dephasing(const XState& s, int qubit) {
    require_three_qubits(s, "esd_dephasing");
    const XState pt = partial_transpose_x(s, qubit);

    EsdResult out;
    out.qubit = qubit;
    out.negative_at_zero = false;
    bool immortal = false;  // some branch stays negative for every p < 1
    double latest_root = 0.0;
    bool any_root = false;

    for (std::size_t l = 0; l < pt.blocks(); ++l) {
        if (pt.block_eigenvalues(l)[0] >= -kNegTol) continue;
        out.negative_at_zero = true;
        const double ab = pt.block_a(l) * pt.block_b(l);
        const double c2 = std::norm(pt.block_c(l));
        // Branch eigenvalue (sigma - sqrt(delta^2 + 4|c|^2 (1-p)^3))/2 is
        // monotone in p; it reaches zero where (1-p)^3 = ab/|c|^2.
        const double root = 1.0 - std::cbrt(ab / c2);
        if (root < 1.0) {
            any_root = true;
            latest_root = std::max(latest_root, root);
        } else {
            immortal = true;
        }
    }

    if (!out.negative_at_zero) {
        out.dies_at = 0.0;
    } else if (immortal) {
        out.dies_at = std::nullopt;
    } else if (any_root) {
        out.crossings.push_back(latest_root);
        out.dies_at = latest_root;
    }
    return out;
}

EsdResult esd_depolarizing(const XState& s, int qubit) {
    require_three_qubits(s, "esd_depolarizing");
    return scan_for_crossings(
        [&](double p) { return min_pt_eigenvalue_depolarized(s, qubit, p); }, qubit);
}

WitnessSpec make_witness(int n, int k) {
    const std::size_t dim = std::size_t{1} << n;
    if (k < 1 || std::size_t(k) > dim / 2)
        throw std::invalid_argument("make_witness: k out of range");
    const std::size_t x = std::size_t(k) - 1;
    const std::size_t xb = dim - 1 - x;
    DenseOperator w(dim);
    for (std::size_t i = 0; i < dim; ++i) w(i, i) = cx{0.75, 0.0};
    w(x, x) -= cx{0.5, 0.0};
    w(xb, xb) -= cx{0.5, 0.0};
    w(x, xb) -= cx{0.5, 0.0};
    w(xb, x) -= cx{0.5, 0.0};
    return WitnessSpec{k, std::move(w)};
}

WitnessValue witness_expectation(const XState& s, int k, const ChannelSpec& channel) {
    require_three_qubits(s, "witness_expectation");
    if (k < 1 || k > 4) throw std::invalid_argument("witness_expectation: k out of range");
    const double p = channel.p;
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("witness_expectation: strength out of range");

    const std::size_t l = std::size_t(k) - 1;
    const double sigma_k = s.block_a(l) + s.block_b(l);
    const double sigma_rest = s.trace() - sigma_k;
    const double re_c = s.block_c(l).real();
    const double abs_c = std::abs(s.block_c(l));

    double base, factor;
    if (channel.kind == ChannelKind::dephasing) {
        base = 0.25 * (3.0 * sigma_rest + sigma_k);
        factor = std::pow(1.0 - p, 1.5);
    } else {
        base = 0.125 * (p * p - 2.0 * p + 6.0) * sigma_rest +
               0.125 * (2.0 + 6.0 * p - 3.0 * p * p) * sigma_k;
        factor = (1.0 - p) * (1.0 - p) * (1.0 - p);
    }

    WitnessValue out;
    out.value = base - factor * re_c;
    out.printed_value = base - factor * abs_c;
    out.printed_matches = std::abs(out.value - out.printed_value) <= 1e-12;
    return out;
}

WitnessThreshold witness_threshold_dephasing(const XState& s, int k) {
    require_three_qubits(s, "witness_threshold_dephasing");
    const WitnessValue at_zero = witness_expectation(s, k, {ChannelKind::dephasing, 0.0});
    if (at_zero.value >= 0.0) return {std::nullopt, false};

    const std::size_t l = std::size_t(k) - 1;
    const double sigma_k = s.block_a(l) + s.block_b(l);
    const double big = 3.0 * (s.trace() - sigma_k) + sigma_k;
    const double re_c = s.block_c(l).real();  // > big/4 here
    double root = 1.0 - std::pow(big / (4.0 * re_c), 2.0 / 3.0);

    WitnessThreshold out{root, false};
    if (root < 0.0 || root > 1.0) {
        out.p = std::clamp(root, 0.0, 1.0);
        out.clamped = true;
    }
    return out;
}

WitnessThreshold witness_threshold_depolarizing(const XState& s, int k) {
    require_three_qubits(s, "witness_threshold_depolarizing");
    auto f = [&](double p) {
        return witness_expectation(s, k, {ChannelKind::depolarizing, p}).value;
    };
    double prev = f(0.0);
    for (int i = 0; i < kScanSubdivisions; ++i) {
        const double lo = double(i) / kScanSubdivisions;
        const double hi = double(i + 1) / kScanSubdivisions;
        const double next = f(hi);
        if ((prev < 0.0) != (next < 0.0)) return {bisect(f, lo, hi), false};
        prev = next;
    }
    return {std::nullopt, false};
}

WitnessMinimum minimize_witness(const XState& s, const ChannelSpec& channel) {
    require_three_qubits(s, "minimize_witness");
    WitnessMinimum best{1, witness_expectation(s, 1, channel).value};
    for (int k = 2; k <= 4; ++k) {
        const double v = witness_expectation(s, k, channel).value;
        if (v < best.expectation) best = {k, v};
    }
    return best;
}

}  // namespace xent
