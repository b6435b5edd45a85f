#include "xent/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "xent/channels.hpp"
#include "xent/concurrence.hpp"
#include "xent/esd.hpp"
#include "xent/membership.hpp"
#include "xent/oracle.hpp"
#include "xent/parallel.hpp"
#include "xent/sampling.hpp"
#include "xent/spectra.hpp"
#include "xent/xstate.hpp"

namespace xent {

namespace {

constexpr std::size_t kProperties = 12;

struct PropertySpec {
    const char* name;
    double tolerance;
};

constexpr std::array<PropertySpec, kProperties> kSpecs{{
    {"evolved state validity", 1e-12},
    {"closed-form channel vs kraus composition", 1e-12},
    {"pt spectrum vs dense eigensolver", 1e-10},
    {"pt eigenvalue sum equals one", 1e-12},
    {"state spectrum vs dense eigensolver", 1e-10},
    {"witness closed form vs dense trace", 1e-10},
    {"contributing concurrence terms vs oracle", 1e-10},
    {"excluded concurrence terms vanish", 1e-10},
    {"tau3 closed form vs oracle", 1e-9},
    {"channel composition (semigroup)", 1e-12},
    {"kraus output stays x-shaped", 1e-13},
    {"constructor output certified as member", 0.5},
}};

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

double state_diff(const XState& a, const XState& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        worst = std::max(worst, std::abs(a.d(i) - b.d(i)));
    for (std::size_t l = 0; l < a.blocks(); ++l)
        worst = std::max(worst, std::abs(a.block_c(l) - b.block_c(l)));
    return worst;
}

std::array<double, kProperties> run_trial(std::uint64_t seed, int trial) {
    std::array<double, kProperties> r{};
    Sampler rng(seed + 0x9E3779B97F4A7C15ULL * std::uint64_t(trial + 1));

    const XState initial = rng.random_xstate(3);
    const ChannelKind kind =
        (trial % 2 == 0) ? ChannelKind::dephasing : ChannelKind::depolarizing;
    double p = rng.uniform();
    if (trial % 14 == 0) p = 0.0;
    else if (trial % 7 == 0) p = 1.0;
    const ChannelSpec channel{kind, p};

    const XState evolved = apply_channel(initial, channel);
    r[0] = validate(evolved).max_residual();

    const DenseOperator dense_evolved = apply_kraus_dense(to_dense(initial), channel);
    r[1] = dense_evolved.max_abs_diff(to_dense(evolved));

    double off_x = 0.0;
    (void)x_from_dense(dense_evolved, &off_x);
    r[10] = off_x;

    for (int q = 1; q <= 3; ++q) {
        const PTSpectrum spectrum = pt_spectrum(evolved, q);
        const std::vector<double> reference =
            oracle::hermitian_eigenvalues(oracle::partial_transpose(dense_evolved, q));
        r[2] = std::max(r[2], max_abs_diff(spectrum.eigenvalues, reference));
        double sum = 0.0;
        for (double ev : spectrum.eigenvalues) sum += ev;
        r[3] = std::max(r[3], std::abs(sum - 1.0));
    }

    r[4] = max_abs_diff(evolved.eigenvalues(),
                        oracle::hermitian_eigenvalues(to_dense(evolved)));

    for (int k = 1; k <= 4; ++k) {
        const WitnessValue w = witness_expectation(initial, k, channel);
        const cx tr = oracle::trace_product(make_witness(3, k).matrix, dense_evolved);
        r[5] = std::max({r[5], std::abs(w.value - tr.real()), std::abs(tr.imag())});
    }

    const ConcurrenceReport closed = concurrence_terms_x(evolved);
    const ConcurrenceReport reference = concurrence_terms_oracle(evolved);
    for (std::size_t part = 0; part < 3; ++part)
        for (std::size_t ell = 0; ell < 6; ++ell) {
            const double diff = std::abs(closed.terms[part][ell] - reference.terms[part][ell]);
            if (ell < 2)
                r[6] = std::max(r[6], diff);
            else
                r[7] = std::max({r[7], std::abs(reference.terms[part][ell]), diff});
        }
    r[8] = std::abs(closed.tau3 - reference.tau3);

    const double p1 = 0.9 * rng.uniform();
    const double p2 = 0.9 * rng.uniform();
    const double composed = 1.0 - (1.0 - p1) * (1.0 - p2);
    const XState two_step =
        apply_channel(apply_channel(initial, {kind, p1}), {kind, p2});
    r[9] = state_diff(two_step, apply_channel(initial, {kind, composed}));

    if (trial % 5 == 0) {
        const int n = (trial % 10 == 0) ? 3 : 2;
        const XState member = from_generalized_ghz_diagonal(rng.random_ggd_spec(n));
        const MembershipReport report = is_generalized_ghz_diagonal(member);
        r[11] = report.status == MembershipStatus::member_by_construction ? 0.0 : 1.0;
    }
    return r;
}

}  // namespace

bool VerifyReport::ok() const {
    for (const PropertyResult& p : properties)
        if (!p.pass) return false;
    return true;
}

VerifyReport run_verification(std::uint64_t seed, int trials) {
    std::vector<std::array<double, kProperties>> results(
        std::size_t(std::max(trials, 0)));
    parallel_for_index(results.size(),
                       [&](std::size_t t) { results[t] = run_trial(seed, int(t)); });

    VerifyReport report;
    report.trials = std::max(trials, 0);
    for (std::size_t i = 0; i < kProperties; ++i) {
        double worst = 0.0;
        for (const auto& r : results) worst = std::max(worst, r[i]);
        report.properties.push_back(
            {kSpecs[i].name, worst, kSpecs[i].tolerance, worst <= kSpecs[i].tolerance});
    }
    return report;
}

}  // namespace xent
