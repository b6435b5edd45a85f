#include "xent/channels.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace xent {

namespace {

void check_strength(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("channel strength must lie in [0,1]");
}

}  // namespace

double KrausSet::completeness_defect() const {
    if (operators.empty()) return 1.0;
    const std::size_t dim = operators.front().dim();
    DenseOperator sum(dim);
    for (const auto& k : operators) sum = sum + k.adjoint() * k;
    return sum.max_abs_diff(DenseOperator::identity(dim));
}

KrausSet single_qubit_kraus(const ChannelSpec& spec) {
    check_strength(spec.p);
    const double p = spec.p;
    KrausSet set;
    if (spec.kind == ChannelKind::dephasing) {
        set.operators.push_back(DenseOperator::from_rows(
            {{cx{1.0, 0.0}, cx{0.0, 0.0}}, {cx{0.0, 0.0}, cx{std::sqrt(1.0 - p), 0.0}}}));
        set.operators.push_back(DenseOperator::from_rows(
            {{cx{0.0, 0.0}, cx{0.0, 0.0}}, {cx{0.0, 0.0}, cx{std::sqrt(p), 0.0}}}));
    } else {
        const double w = 0.5 * std::sqrt(p);
        set.operators.push_back(DenseOperator::from_rows(
            {{cx{std::sqrt(1.0 - 0.75 * p), 0.0}, cx{0.0, 0.0}},
             {cx{0.0, 0.0}, cx{std::sqrt(1.0 - 0.75 * p), 0.0}}}));
        set.operators.push_back(DenseOperator::from_rows(
            {{cx{0.0, 0.0}, cx{w, 0.0}}, {cx{w, 0.0}, cx{0.0, 0.0}}}));
        set.operators.push_back(DenseOperator::from_rows(
            {{cx{0.0, 0.0}, cx{0.0, -w}}, {cx{0.0, w}, cx{0.0, 0.0}}}));
        set.operators.push_back(DenseOperator::from_rows(
            {{cx{w, 0.0}, cx{0.0, 0.0}}, {cx{0.0, 0.0}, cx{-w, 0.0}}}));
    }
    return set;
}

XState apply_dephasing(const XState& s, double p) {
    check_strength(p);
    const double factor = std::pow(1.0 - p, 0.5 * s.qubits());
    std::vector<cx> e = s.anti_top();
    for (cx& c : e) c *= factor;
    return XState(s.qubits(), s.diag(), std::move(e));
}

XState apply_depolarizing3(const XState& s, double p) {
    if (s.qubits() != 3)
        throw std::invalid_argument("apply_depolarizing3: three qubits required");
    check_strength(p);
    // Independent depolarizing acts on each diagonal bit as a binary
    // symmetric channel with flip weight q = p/2; the X coherences pick up
    // exactly (1-p) per qubit because the sigma_x/sigma_y transport terms
    // cancel against the sigma_z sign flips.
    const double q = 0.5 * p;
    const double keep = 1.0 - q;
    const double wh[4] = {keep * keep * keep, q * keep * keep, q * q * keep, q * q * q};

    std::vector<double> d(8, 0.0);
    for (unsigned x = 0; x < 8; ++x)
        for (unsigned y = 0; y < 8; ++y)
            d[x] += wh[std::popcount(x ^ y)] * s.d(y);

    const double factor = (1.0 - p) * (1.0 - p) * (1.0 - p);
    std::vector<cx> e = s.anti_top();
    for (cx& c : e) c *= factor;
    return XState(3, std::move(d), std::move(e));
}

XState apply_channel(const XState& s, const ChannelSpec& spec) {
    if (spec.kind == ChannelKind::dephasing) return apply_dephasing(s, spec.p);
    return apply_depolarizing3(s, spec.p);
}

DenseOperator apply_kraus_dense(const DenseOperator& rho, const ChannelSpec& spec) {
    const std::size_t dim = rho.dim();
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim || n < 1)
        throw std::invalid_argument("apply_kraus_dense: dimension is not 2^n");

    const KrausSet set = single_qubit_kraus(spec);
    if (set.completeness_defect() > 1e-12)
        throw std::invalid_argument("apply_kraus_dense: Kraus set is not trace preserving");

    const std::size_t k = set.operators.size();
    std::size_t terms = 1;
    for (int i = 0; i < n; ++i) terms *= k;

    DenseOperator out(dim);
    for (std::size_t t = 0; t < terms; ++t) {
        // Digits of t in base k select the factor for each qubit, qubit 1
        // (most significant bit) first.
        std::size_t rem = t;
        DenseOperator a = DenseOperator::identity(1);
        for (int i = 0; i < n; ++i) {
            a = kron(a, set.operators[rem % k]);
            rem /= k;
        }
        out = out + a * rho * a.adjoint();
    }
    return out;
}

double p_of_time(double kappa, double t) {
    if (kappa < 0.0 || t < 0.0)
        throw std::invalid_argument("p_of_time: kappa and t must be nonnegative");
    return 1.0 - std::exp(-kappa * t);
}

}  // namespace xent
