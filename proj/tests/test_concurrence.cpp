#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "xent/builtin_states.hpp"
#include "xent/channels.hpp"
#include "xent/concurrence.hpp"
#include "xent/dense.hpp"
#include "xent/oracle.hpp"
#include "xent/sampling.hpp"
#include "xent/xstate.hpp"

using xent::cx;
using xent::GeneratorSpec;
using xent::Partition;
using xent::XState;

namespace {

XState single_block(double a, double c) {
    std::vector<double> d(8, 0.0);
    d[0] = a;
    d[7] = 1.0 - a;
    std::vector<cx> e(4, cx{0.0, 0.0});
    e[0] = cx{c, 0.0};
    return XState(3, d, e);
}

template <class F>
double bisect_to_zero(F f, double lo, double hi) {
    // f(lo) > 0, f(hi) == 0; returns the boundary of the positive region
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("generator set structure") {
    const std::vector<GeneratorSpec> gens = xent::build_generators();
    REQUIRE(gens.size() == 18);

    int idx = 0;
    for (Partition part : {Partition::q12_3, Partition::q13_2, Partition::q23_1}) {
        for (int ell = 1; ell <= 6; ++ell, ++idx) {
            const GeneratorSpec& g = gens[std::size_t(idx)];
            CHECK(g.partition == part);
            CHECK(g.ell == ell);
            REQUIRE(g.matrix.dim() == 8);
            // anti-Hermitian with exactly four unit-magnitude entries
            CHECK((g.matrix.adjoint() + g.matrix).max_abs() == 0.0);
            int nonzero = 0;
            for (std::size_t r = 0; r < 8; ++r)
                for (std::size_t c = 0; c < 8; ++c)
                    if (g.matrix(r, c) != cx{0.0, 0.0}) {
                        ++nonzero;
                        CHECK(std::abs(g.matrix(r, c)) == 1.0);
                    }
            CHECK(nonzero == 4);
        }
    }
}

TEST_CASE("frozen entries of the first anti-diagonal generator") {
    const std::vector<GeneratorSpec> gens = xent::build_generators();
    const GeneratorSpec& s1 = gens[0];
    REQUIRE(s1.partition == Partition::q12_3);
    REQUIRE(s1.ell == 1);
    CHECK(s1.matrix(7, 0) == cx{0.0, 1.0});
    CHECK(s1.matrix(0, 7) == cx{0.0, 1.0});
    CHECK(s1.matrix(6, 1) == cx{0.0, -1.0});
    CHECK(s1.matrix(1, 6) == cx{0.0, -1.0});
}

TEST_CASE("partition names") {
    CHECK(std::string(xent::partition_name(Partition::q12_3)) == "12|3");
    CHECK(std::string(xent::partition_name(Partition::q13_2)) == "13|2");
    CHECK(std::string(xent::partition_name(Partition::q23_1)) == "23|1");
}

TEST_CASE("balance classification") {
    const std::vector<GeneratorSpec> gens = xent::build_generators();
    const XState ghz = xent::ghz_state(3);

    // GHZ against an anti-diagonal generator: coherence partners everywhere
    CHECK(xent::classify_balance(ghz, gens[0]) == xent::Balance::balanced);

    // diagonal state against the same generator: occupied diagonal, no partner
    xent::Sampler rng(51);
    std::vector<double> d(8);
    double sum = 0.0;
    for (double& v : d) {
        v = 0.1 + rng.uniform();
        sum += v;
    }
    for (double& v : d) v /= sum;
    const XState diag(3, d, std::vector<cx>(4, cx{0.0, 0.0}));
    CHECK(xent::classify_balance(diag, gens[0]) == xent::Balance::unbalanced);
}

TEST_CASE("pure GHZ saturates the bound") {
    const xent::ConcurrenceReport rep = xent::concurrence_terms_x(xent::ghz_state(3));
    CHECK(rep.tau3 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rep.nonzero_term_count == 3);
    for (int part = 0; part < 3; ++part) {
        CHECK(rep.terms[std::size_t(part)][0] == doctest::Approx(1.0).epsilon(1e-14));
        for (int ell = 2; ell <= 6; ++ell)
            CHECK(rep.terms[std::size_t(part)][std::size_t(ell - 1)] == 0.0);
    }
}

TEST_CASE("closed form agrees with the dense oracle term by term") {
    xent::Sampler rng(52);
    for (int trial = 0; trial < 12; ++trial) {
        const XState s = trial % 3 == 0 ? rng.random_block_mixture(3, 1 + int(rng.integer(4)))
                                        : rng.random_xstate(3);
        const xent::ConcurrenceReport fast = xent::concurrence_terms_x(s);
        const xent::ConcurrenceReport ref = xent::concurrence_terms_oracle(s);
        for (int part = 0; part < 3; ++part) {
            for (int ell = 1; ell <= 6; ++ell) {
                const double f = fast.terms[std::size_t(part)][std::size_t(ell - 1)];
                const double r = ref.terms[std::size_t(part)][std::size_t(ell - 1)];
                CHECK(std::abs(f - r) < 1e-10);
                if (ell >= 3) CHECK(r < 1e-10);  // provably vanishing classes
            }
        }
        CHECK(std::abs(fast.tau3 - ref.tau3) < 1e-9);
    }
}

TEST_CASE("product spectrum identity for the anti-diagonal generators") {
    xent::Sampler rng(53);
    const XState s = rng.random_xstate(3);
    const xent::DenseOperator rho = xent::to_dense(s);
    constexpr int kBlockPair[3][2][2] = {
        {{0, 1}, {2, 3}},
        {{0, 2}, {1, 3}},
        {{0, 3}, {1, 2}},
    };
    for (const GeneratorSpec& g : xent::build_generators()) {
        if (g.ell > 2) continue;
        std::array<double, 4> expected{};
        for (int i = 0; i < 2; ++i) {
            const auto m = std::size_t(kBlockPair[int(g.partition)][g.ell - 1][i]);
            const double root = std::sqrt(s.block_a(m) * s.block_b(m));
            const double c = std::abs(s.block_c(m));
            expected[std::size_t(2 * i)] = (root + c) * (root + c);
            expected[std::size_t(2 * i + 1)] = (root - c) * (root - c);
        }
        std::sort(expected.begin(), expected.end(), std::greater<double>{});
        const std::vector<double> vals = xent::oracle::psd_product_eigenvalues(rho, g.matrix);
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(vals[std::size_t(i)] - expected[std::size_t(i)]) < 5e-13);
        for (std::size_t i = 4; i < 8; ++i) CHECK(std::abs(vals[i]) < 1e-13);
    }
}

TEST_CASE("single-block dephasing closed form") {
    for (double a : {0.3, 0.5, 0.7}) {
        const double cap = std::sqrt(a * (1.0 - a));
        for (double frac : {0.4, 0.9}) {
            const double c = frac * cap;
            const XState s = single_block(a, c);
            REQUIRE(xent::validate(s).ok());
            for (double p : {0.0, 0.3, 0.6, 0.95, 0.999}) {
                const double direct = xent::tau3_dephasing_single_ghz(a, c, p);
                const double full =
                    xent::concurrence_terms_x(xent::apply_dephasing(s, p)).tau3;
                CHECK(std::abs(direct - full) < 1e-12);
                CHECK(std::abs(direct - 2.0 * std::min(cap, c * std::pow(1.0 - p, 1.5))) <
                      1e-12);
                CHECK(direct > 0.0);  // survives every strength below one
            }
            CHECK(xent::tau3_dephasing_single_ghz(a, c, 1.0) == 0.0);
        }
    }
    CHECK_THROWS_AS(xent::tau3_dephasing_single_ghz(0.5, 0.6, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(xent::tau3_dephasing_single_ghz(-0.1, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("single-block depolarizing closed form") {
    for (double a : {0.35, 0.5, 0.65}) {
        const double c = 0.85 * std::sqrt(a * (1.0 - a));
        const XState s = single_block(a, c);
        for (double p : {0.0, 0.05, 0.2, 0.5, 0.9, 1.0}) {
            const double direct = xent::tau3_depolarizing_single_ghz(a, c, p);
            const double full =
                xent::concurrence_terms_x(xent::apply_depolarizing3(s, p)).tau3;
            CHECK(std::abs(direct - full) < 1e-9);
        }
    }
    CHECK_THROWS_AS(xent::tau3_depolarizing_single_ghz(0.5, 0.7, 0.0), std::invalid_argument);
}

TEST_CASE("balanced-block depolarizing death point solves the cubic") {
    // for a = b = 1/2 the bound hits zero where p (p - 2) + 8 c (1-p)^3 = 0
    for (double c : {0.2, 0.35, 0.5}) {
        const double from_tau3 = bisect_to_zero(
            [&](double p) { return xent::tau3_depolarizing_single_ghz(0.5, c, p); }, 0.0, 1.0);
        const double from_cubic = bisect_to_zero(
            [&](double p) { return p * (p - 2.0) + 8.0 * c * (1.0 - p) * (1.0 - p) * (1.0 - p); },
            0.0, 1.0);
        CHECK(std::abs(from_tau3 - from_cubic) < 1e-6);
    }
}

TEST_CASE("states missing a block keep a positive bound under dephasing") {
    xent::Sampler rng(54);
    for (int nb : {1, 2, 3}) {
        for (int trial = 0; trial < 4; ++trial) {
            const XState s = rng.random_block_mixture(3, nb);
            const double late =
                xent::concurrence_terms_x(xent::apply_dephasing(s, 0.995)).tau3;
            CHECK(late > 0.0);
        }
    }
}

TEST_CASE("term bookkeeping for three and four qubits") {
    CHECK(xent::total_term_count(3) == 6);
    CHECK(xent::total_term_count(4) == 28);

    const std::vector<xent::TermClassCount> three = xent::enumerate_nqubit_terms(3);
    REQUIRE(three.size() == 3);
    for (const auto& t : three) CHECK(t.count == 2);

    const std::vector<xent::TermClassCount> four = xent::enumerate_nqubit_terms(4);
    int pair_rows = 0, solo_rows = 0;
    for (const auto& t : four) {
        CHECK(t.count == 4);
        if (t.generator_class.find("SO(4)xSO(4)") != std::string::npos) ++pair_rows;
        if (t.generator_class.find("SO(8)xSO(2)") != std::string::npos) ++solo_rows;
    }
    CHECK(pair_rows == 3);
    CHECK(solo_rows == 4);

    CHECK_THROWS_AS(xent::enumerate_nqubit_terms(2), std::invalid_argument);
    CHECK_THROWS_AS(xent::enumerate_nqubit_terms(5), std::invalid_argument);
}

TEST_CASE("concurrence paths require three qubits") {
    xent::Sampler rng(55);
    const XState s2 = rng.random_xstate(2);
    CHECK_THROWS_AS(xent::concurrence_terms_x(s2), std::invalid_argument);
    CHECK_THROWS_AS(xent::concurrence_terms_oracle(s2), std::invalid_argument);
}
