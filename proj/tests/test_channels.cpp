#include <doctest.h>

#include <bit>
#include <cmath>

#include "xent/builtin_states.hpp"
#include "xent/channels.hpp"
#include "xent/dense.hpp"
#include "xent/sampling.hpp"
#include "xent/xstate.hpp"

using xent::ChannelKind;
using xent::ChannelSpec;
using xent::cx;
using xent::XState;

TEST_CASE("single-qubit Kraus sets are trace preserving") {
    for (ChannelKind kind : {ChannelKind::dephasing, ChannelKind::depolarizing}) {
        for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
            const xent::KrausSet set = xent::single_qubit_kraus(ChannelSpec{kind, p});
            CHECK(set.completeness_defect() <= 1e-12);
        }
        CHECK_THROWS_AS(xent::single_qubit_kraus(ChannelSpec{kind, -0.1}), std::invalid_argument);
        CHECK_THROWS_AS(xent::single_qubit_kraus(ChannelSpec{kind, 1.2}), std::invalid_argument);
    }
    CHECK(xent::single_qubit_kraus(ChannelSpec{ChannelKind::dephasing, 0.5}).operators.size() == 2);
    CHECK(xent::single_qubit_kraus(ChannelSpec{ChannelKind::depolarizing, 0.5}).operators.size() ==
          4);
}

TEST_CASE("frozen Kraus entries at p = 0.36") {
    const double p = 0.36;
    const auto deph = xent::single_qubit_kraus(ChannelSpec{ChannelKind::dephasing, p}).operators;
    CHECK(deph[0](0, 0) == cx{1.0, 0.0});
    CHECK(deph[0](1, 1).real() == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(deph[1](1, 1).real() == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(deph[1](0, 0) == cx{0.0, 0.0});

    const auto depo =
        xent::single_qubit_kraus(ChannelSpec{ChannelKind::depolarizing, p}).operators;
    CHECK(depo[0](0, 0).real() == doctest::Approx(std::sqrt(0.73)).epsilon(1e-15));
    CHECK(depo[1](0, 1).real() == doctest::Approx(0.3).epsilon(1e-15));  // 0.5 sqrt(p)
    CHECK(depo[2](0, 1).imag() == doctest::Approx(-0.3).epsilon(1e-15));
    CHECK(depo[2](0, 1).real() == 0.0);
    CHECK(depo[2](1, 0).imag() == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(depo[3](1, 1).real() == doctest::Approx(-0.3).epsilon(1e-15));
}

TEST_CASE("dephasing scales the anti-diagonal exactly") {
    xent::Sampler rng(21);
    for (int n : {2, 3, 4}) {
        const XState s = rng.random_xstate(n);
        const double p = 0.37;
        const XState out = xent::apply_dephasing(s, p);
        const double factor = std::pow(1.0 - p, 0.5 * n);
        for (std::size_t i = 0; i < s.dim(); ++i) CHECK(out.d(i) == s.d(i));
        for (std::size_t l = 0; l < s.blocks(); ++l)
            CHECK(std::abs(out.block_c(l) - factor * s.block_c(l)) == 0.0);
    }
}

TEST_CASE("strength composition under repeated application") {
    xent::Sampler rng(22);
    const XState s = rng.random_xstate(3);
    for (ChannelKind kind : {ChannelKind::dephasing, ChannelKind::depolarizing}) {
        for (auto [p1, p2] : {std::pair{0.2, 0.3}, std::pair{0.05, 0.8}, std::pair{0.5, 0.5}}) {
            const XState twice =
                xent::apply_channel(xent::apply_channel(s, {kind, p1}), {kind, p2});
            const double combined = 1.0 - (1.0 - p1) * (1.0 - p2);
            const XState once = xent::apply_channel(s, {kind, combined});
            CHECK(xent::to_dense(twice).max_abs_diff(xent::to_dense(once)) < 1e-12);
        }
    }
}

TEST_CASE("full-strength depolarizing yields the maximally mixed state") {
    xent::Sampler rng(23);
    const XState out = xent::apply_depolarizing3(rng.random_xstate(3), 1.0);
    const XState mixed = xent::maximally_mixed_state(3);
    CHECK(xent::to_dense(out).max_abs_diff(xent::to_dense(mixed)) < 1e-15);
}

TEST_CASE("diagonal mixing weights follow Hamming distance") {
    // start from a basis state: the output diagonal reads off the weights
    std::vector<double> d(8, 0.0);
    d[0] = 1.0;
    const XState basis(3, d, std::vector<cx>(4, cx{0.0, 0.0}));
    const double p = 0.3, q = 0.5 * p, keep = 1.0 - q;
    const XState out = xent::apply_depolarizing3(basis, p);
    for (unsigned x = 0; x < 8; ++x) {
        const int h = int(std::popcount(x));
        const double expected = std::pow(q, h) * std::pow(keep, 3 - h);
        CHECK(out.d(x) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("expanded depolarizing diagonal formula for the first entry") {
    // a1' = a1 (1 - 3p/2 + 3p^2/4 - p^3/8)
    //     + (a2 + a3 + b4) (p/2 - p^2/2 + p^3/8)
    //     + (a4 + b2 + b3) (p^2/4 - p^3/8)
    //     + b1 p^3/8
    // with blocks j = 1..4 holding a_j = d[j-1], b_j = d[8-j].
    xent::Sampler rng(24);
    const XState s = rng.random_xstate(3);
    const double a1 = s.d(0), a2 = s.d(1), a3 = s.d(2), a4 = s.d(3);
    const double b4 = s.d(4), b3 = s.d(5), b2 = s.d(6), b1 = s.d(7);
    for (double p : {0.0, 0.1, 0.37, 0.8, 1.0}) {
        const double p2 = p * p, p3 = p2 * p;
        const double expected = a1 * (1.0 - 1.5 * p + 0.75 * p2 - 0.125 * p3) +
                                (a2 + a3 + b4) * (0.5 * p - 0.5 * p2 + 0.125 * p3) +
                                (a4 + b2 + b3) * (0.25 * p2 - 0.125 * p3) + b1 * 0.125 * p3;
        const XState out = xent::apply_depolarizing3(s, p);
        CHECK(std::abs(out.d(0) - expected) < 1e-14);
    }
}

TEST_CASE("closed forms match the dense Kraus reference") {
    xent::Sampler rng(25);
    for (double p : {0.0, 0.15, 0.6, 1.0}) {
        for (int n : {2, 3, 4}) {
            const XState s = rng.random_xstate(n);
            const ChannelSpec spec{ChannelKind::dephasing, p};
            const xent::DenseOperator ref = xent::apply_kraus_dense(xent::to_dense(s), spec);
            CHECK(xent::to_dense(xent::apply_channel(s, spec)).max_abs_diff(ref) < 1e-12);
        }
        const XState s = rng.random_xstate(3);
        const ChannelSpec spec{ChannelKind::depolarizing, p};
        const xent::DenseOperator ref = xent::apply_kraus_dense(xent::to_dense(s), spec);
        CHECK(xent::to_dense(xent::apply_channel(s, spec)).max_abs_diff(ref) < 1e-12);
    }
}

TEST_CASE("kraus reference output stays X-shaped") {
    xent::Sampler rng(26);
    for (ChannelKind kind : {ChannelKind::dephasing, ChannelKind::depolarizing}) {
        const XState s = rng.random_xstate(3);
        const xent::DenseOperator out =
            xent::apply_kraus_dense(xent::to_dense(s), ChannelSpec{kind, 0.4});
        double resid = -1.0;
        (void)xent::x_from_dense(out, &resid);
        CHECK(resid < 1e-14);
    }
}

TEST_CASE("channel preserves validity") {
    xent::Sampler rng(27);
    for (ChannelKind kind : {ChannelKind::dephasing, ChannelKind::depolarizing}) {
        for (double p : {0.0, 0.25, 0.75, 1.0}) {
            const XState out = xent::apply_channel(rng.random_xstate(3), ChannelSpec{kind, p});
            CHECK(xent::validate(out).ok());
        }
    }
}

TEST_CASE("closed-form depolarizing requires three qubits") {
    xent::Sampler rng(28);
    const XState s2 = rng.random_xstate(2);
    CHECK_THROWS_AS(xent::apply_depolarizing3(s2, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(xent::apply_channel(s2, ChannelSpec{ChannelKind::depolarizing, 0.2}),
                    std::invalid_argument);
    CHECK_NOTHROW(xent::apply_channel(s2, ChannelSpec{ChannelKind::dephasing, 0.2}));
}

TEST_CASE("time reparametrization") {
    CHECK(xent::p_of_time(0.5, 0.0) == 0.0);
    CHECK(xent::p_of_time(0.0, 3.0) == 0.0);
    CHECK(xent::p_of_time(1.0, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(xent::p_of_time(2.0, 50.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(xent::p_of_time(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(xent::p_of_time(1.0, -1.0), std::invalid_argument);
}
