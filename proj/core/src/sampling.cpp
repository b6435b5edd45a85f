#include "xent/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace xent {

double Sampler::uniform() {
    return double(eng_() >> 11) * 0x1.0p-53;
}

double Sampler::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::uint64_t Sampler::integer(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Sampler::integer: zero bound");
    return std::uint64_t((unsigned __int128)(eng_()) * bound >> 64);
}

cx Sampler::phase() {
    const double t = uniform(-std::numbers::pi, std::numbers::pi);
    return cx{std::cos(t), std::sin(t)};
}

XState Sampler::random_xstate(int n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> d(dim);
    double sum = 0.0;
    for (double& x : d) {
        x = 0.05 - std::log(1.0 - uniform());
        sum += x;
    }
    for (double& x : d) x /= sum;

    std::vector<cx> e(dim / 2);
    for (std::size_t l = 0; l < dim / 2; ++l) {
        const double cap = std::sqrt(d[l] * d[dim - 1 - l]);
        e[l] = uniform(0.0, 0.95) * cap * phase();
    }
    return XState(n, std::move(d), std::move(e));
}

XState Sampler::random_block_mixture(int n, int nblocks) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t half = dim / 2;
    if (nblocks < 1 || std::size_t(nblocks) > half)
        throw std::invalid_argument("random_block_mixture: block count out of range");

    std::vector<std::size_t> chosen;
    while (chosen.size() < std::size_t(nblocks)) {
        const std::size_t l = integer(half);
        bool seen = false;
        for (std::size_t x : chosen) seen = seen || x == l;
        if (!seen) chosen.push_back(l);
    }

    std::vector<double> w(chosen.size());
    double wsum = 0.0;
    for (double& x : w) {
        x = 0.1 - std::log(1.0 - uniform());
        wsum += x;
    }

    std::vector<double> d(dim, 0.0);
    std::vector<cx> e(half, cx{0.0, 0.0});
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        const std::size_t l = chosen[i];
        const double weight = w[i] / wsum;
        const double split = uniform(0.15, 0.85);
        d[l] = weight * split;
        d[dim - 1 - l] = weight * (1.0 - split);
        e[l] = uniform(0.2, 0.95) * std::sqrt(d[l] * d[dim - 1 - l]) * phase();
    }
    return XState(n, std::move(d), std::move(e));
}

GeneralizedGhzDiagonalSpec Sampler::random_ggd_spec(int n) {
    const std::size_t dim = std::size_t{1} << n;
    GeneralizedGhzDiagonalSpec spec;
    spec.n = n;
    const double big = uniform(0.15, 0.85);
    spec.alpha = cx{std::sqrt(big), 0.0};
    spec.beta = std::sqrt(1.0 - big) * phase();
    spec.lambda_plus.resize(dim);
    spec.lambda_minus.resize(dim);
    double sum = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        spec.lambda_plus[k] = 0.01 - std::log(1.0 - uniform());
        spec.lambda_minus[k] = 0.01 - std::log(1.0 - uniform());
        sum += spec.lambda_plus[k] + spec.lambda_minus[k];
    }
    for (std::size_t k = 0; k < dim; ++k) {
        spec.lambda_plus[k] /= sum;
        spec.lambda_minus[k] /= sum;
    }
    return spec;
}

DenseOperator Sampler::random_hermitian(std::size_t dim, double scale) {
    DenseOperator m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = cx{uniform(-scale, scale), 0.0};
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cx z{uniform(-scale, scale), uniform(-scale, scale)};
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

}  // namespace xent
