#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

#include "xent/builtin_states.hpp"
#include "xent/json_io.hpp"
#include "xent/parallel.hpp"
#include "xent/sampling.hpp"
#include "xent/xstate.hpp"

using xent::cx;
using xent::XState;

TEST_CASE("state JSON round trip") {
    xent::Sampler rng(71);
    for (int n : {1, 2, 3, 4}) {
        const XState s = rng.random_xstate(n);
        const XState back = xent::parse_state_json(xent::state_to_json(s));
        CHECK(back.qubits() == n);
        for (std::size_t i = 0; i < s.dim(); ++i)
            CHECK(std::abs(back.d(i) - s.d(i)) < 1e-15);
        for (std::size_t l = 0; l < s.blocks(); ++l)
            CHECK(std::abs(back.block_c(l) - s.block_c(l)) < 1e-15);
    }
}

TEST_CASE("state JSON parse failures") {
    CHECK_THROWS_AS(xent::parse_state_json("not json at all"), xent::IoError);
    CHECK_THROWS_AS(xent::parse_state_json("[1, 2, 3]"), xent::IoError);
    CHECK_THROWS_AS(xent::parse_state_json("{\"n\": 2, \"diag\": [1, 0, 0, 0]}"), xent::IoError);
    CHECK_THROWS_AS(
        xent::parse_state_json("{\"n\": 2.5, \"diag\": [], \"anti\": []}"), xent::IoError);
    CHECK_THROWS_AS(
        xent::parse_state_json("{\"n\": 0, \"diag\": [1], \"anti\": []}"), xent::IoError);
    // wrong diag length
    CHECK_THROWS_AS(
        xent::parse_state_json(
            "{\"n\": 2, \"diag\": [0.5, 0.5], \"anti\": [[0, 0], [0, 0]]}"),
        xent::IoError);
    // anti entry not a pair
    CHECK_THROWS_AS(
        xent::parse_state_json(
            "{\"n\": 2, \"diag\": [0.25, 0.25, 0.25, 0.25], \"anti\": [[0, 0], [0]]}"),
        xent::IoError);
    // parses but fails density-matrix validation (trace 2)
    CHECK_THROWS_AS(
        xent::parse_state_json(
            "{\"n\": 2, \"diag\": [0.5, 0.5, 0.5, 0.5], \"anti\": [[0, 0], [0, 0]]}"),
        xent::IoError);
    // block not PSD
    CHECK_THROWS_AS(
        xent::parse_state_json(
            "{\"n\": 2, \"diag\": [0.25, 0.25, 0.25, 0.25], \"anti\": [[0.4, 0], [0, 0]]}"),
        xent::IoError);
}

TEST_CASE("state JSON accepts a handwritten document") {
    const XState s = xent::parse_state_json(
        "{\"n\": 3,"
        " \"diag\": [0.4, 0.1, 0, 0, 0, 0, 0.1, 0.4],"
        " \"anti\": [[0.1, -0.05], [0, 0.02], [0, 0], [0, 0]]}");
    CHECK(s.qubits() == 3);
    CHECK(s.d(0) == 0.4);
    CHECK(s.block_c(0) == cx{0.1, -0.05});
    CHECK(s.block_c(1) == cx{0.0, 0.02});
}

TEST_CASE("state file IO") {
    const std::string path = "io_sampling_state_tmp.json";
    const XState s = xent::demo_two_block();
    xent::write_state_json(s, path);
    const XState back = xent::read_state_json(path);
    CHECK(xent::to_dense(back).max_abs_diff(xent::to_dense(s)) < 1e-15);
    std::remove(path.c_str());

    CHECK_THROWS_AS(xent::read_state_json("definitely/not/a/real/path.json"), xent::IoError);
}

TEST_CASE("channel JSON") {
    const xent::ChannelSpec deph = xent::parse_channel_json("{\"kind\": \"dephasing\", \"p\": 0.25}");
    CHECK(deph.kind == xent::ChannelKind::dephasing);
    CHECK(deph.p == 0.25);

    const xent::ChannelSpec depo =
        xent::parse_channel_json("{\"kind\": \"depolarizing\", \"p\": 1}");
    CHECK(depo.kind == xent::ChannelKind::depolarizing);
    CHECK(depo.p == 1.0);

    CHECK_THROWS_AS(xent::parse_channel_json("{\"kind\": \"thermal\", \"p\": 0.1}"),
                    xent::IoError);
    CHECK_THROWS_AS(xent::parse_channel_json("{\"kind\": \"dephasing\", \"p\": 1.5}"),
                    xent::IoError);
    CHECK_THROWS_AS(xent::parse_channel_json("{\"kind\": \"dephasing\", \"p\": -0.1}"),
                    xent::IoError);
    CHECK_THROWS_AS(xent::parse_channel_json("{\"kind\": \"dephasing\"}"), xent::IoError);
    CHECK_THROWS_AS(xent::parse_channel_json("{{{"), xent::IoError);
}

TEST_CASE("number formatting") {
    CHECK(xent::format_number(0.0) == "0");
    CHECK(xent::format_number(-0.0) == "0");
    CHECK(xent::format_number(1.0) == "1");
    CHECK(xent::format_number(0.5) == "0.5");
    CHECK(xent::format_number(-0.25) == "-0.25");
    CHECK(xent::format_number(1.0 / 3.0) == "0.333333333333333");
    CHECK(xent::format_number(1e-17) == "1e-17");
    CHECK(xent::format_number(0.36569478241498) == "0.36569478241498");
}

TEST_CASE("sampler determinism and ranges") {
    xent::Sampler a(12345);
    xent::Sampler b(12345);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }

    xent::Sampler c(12345);
    xent::Sampler d(54321);
    int same = 0;
    for (int i = 0; i < 100; ++i) same += c.uniform() == d.uniform() ? 1 : 0;
    CHECK(same < 5);

    xent::Sampler e(7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t v = e.integer(6);
        CHECK(v < 6);
        seen.insert(v);
    }
    CHECK(seen.size() == 6);
    CHECK_THROWS_AS(e.integer(0), std::invalid_argument);

    for (int i = 0; i < 50; ++i)
        CHECK(std::abs(std::abs(e.phase()) - 1.0) < 1e-15);
}

TEST_CASE("sampled states satisfy their advertised structure") {
    xent::Sampler rng(72);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 5; ++trial) {
            const XState s = rng.random_xstate(n);
            CHECK(xent::validate(s).ok());
            for (std::size_t i = 0; i < s.dim(); ++i) CHECK(s.d(i) > 0.0);
        }
    }

    for (int nb = 1; nb <= 4; ++nb) {
        const XState s = rng.random_block_mixture(3, nb);
        CHECK(xent::validate(s).ok());
        int occupied = 0;
        for (std::size_t l = 0; l < s.blocks(); ++l) {
            const bool has_diag = s.block_a(l) > 0.0 || s.block_b(l) > 0.0;
            if (!has_diag) {
                CHECK(s.block_c(l) == cx{0.0, 0.0});
                continue;
            }
            ++occupied;
            CHECK(s.block_a(l) > 0.0);
            CHECK(s.block_b(l) > 0.0);
            CHECK(std::abs(s.block_c(l)) > 0.0);
        }
        CHECK(occupied == nb);
    }
    CHECK_THROWS_AS(rng.random_block_mixture(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(rng.random_block_mixture(3, 0), std::invalid_argument);

    for (int n : {2, 3}) {
        const xent::GeneralizedGhzDiagonalSpec spec = rng.random_ggd_spec(n);
        CHECK(std::abs(std::norm(spec.alpha) + std::norm(spec.beta) - 1.0) < 1e-12);
        double sum = 0.0;
        for (std::size_t k = 0; k < spec.lambda_plus.size(); ++k) {
            CHECK(spec.lambda_plus[k] > 0.0);
            CHECK(spec.lambda_minus[k] > 0.0);
            sum += spec.lambda_plus[k] + spec.lambda_minus[k];
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }

    const xent::DenseOperator h = rng.random_hermitian(4, 2.0);
    CHECK(h.hermiticity_defect() == 0.0);
    CHECK(h.max_abs() <= 2.0 * std::sqrt(2.0));
}

TEST_CASE("worker count respects the environment cap") {
    unsetenv("XENT_THREADS");
    const int hw = xent::worker_count();
    CHECK(hw >= 1);

    setenv("XENT_THREADS", "1", 1);
    CHECK(xent::worker_count() == 1);
    setenv("XENT_THREADS", "2", 1);
    CHECK(xent::worker_count() <= 2);
    CHECK(xent::worker_count() >= 1);
    setenv("XENT_THREADS", "0", 1);
    CHECK(xent::worker_count() >= 1);  // invalid values fall back
    setenv("XENT_THREADS", "banana", 1);
    CHECK(xent::worker_count() >= 1);
    unsetenv("XENT_THREADS");
    CHECK(xent::worker_count() == hw);
}

TEST_CASE("parallel loop covers every index once and propagates errors") {
    const std::size_t count = 1000;
    std::vector<std::atomic<int>> hits(count);
    for (auto& h : hits) h = 0;
    xent::parallel_for_index(count, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) CHECK(h.load() == 1);

    xent::parallel_for_index(0, [&](std::size_t) { CHECK(false); });

    CHECK_THROWS_AS(
        xent::parallel_for_index(64,
                                 [](std::size_t i) {
                                     if (i == 13) throw std::runtime_error("boom");
                                 }),
        std::runtime_error);
}
