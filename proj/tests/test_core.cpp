#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcwalk/combinatorics.hpp"
#include "mcwalk/walk_state.hpp"

#include <cmath>
#include <random>

using namespace mcwalk;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

WalkState random_state(int m_coins, long rows, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t dim = std::size_t{1} << m_coins;
    std::vector<Amplitude> amps(static_cast<std::size_t>(rows) * dim);
    double norm = 0.0;
    for (Amplitude& a : amps) {
        a = {gauss(rng), gauss(rng)};
        norm += std::norm(a);
    }
    for (Amplitude& a : amps) a /= std::sqrt(norm);
    return WalkState(-rows / 2, m_coins, 0, std::move(amps));
}

}  // namespace

TEST_CASE("initial states are the expected product states") {
    const auto one = initial_state(CoinSpec::uniform(1, CoinState::right()), 0);
    CHECK(one.amp(0, 0) == Amplitude{1.0, 0.0});
    CHECK(one.amp(0, 1) == Amplitude{0.0, 0.0});
    CHECK(one.norm_sq() == doctest::Approx(1.0));

    const auto two = initial_state(CoinSpec::uniform(2, CoinState::right()), 0);
    CHECK(two.amp(0, 0) == Amplitude{1.0, 0.0});  // RR column
    for (std::size_t c = 1; c < 4; ++c) CHECK(std::norm(two.amp(0, c)) == 0.0);

    CoinSpec plus = CoinSpec::uniform(1, CoinState{{kInvSqrt2, 0.0},
                                                   {kInvSqrt2, 0.0}});
    const auto superposed = initial_state(plus, 0);
    CHECK(superposed.amp(0, 0).real() == doctest::Approx(kInvSqrt2));
    CHECK(superposed.amp(0, 1).real() == doctest::Approx(kInvSqrt2));

    // Coin 1 is the most significant bit: [R, L] lands on index 0b01.
    CoinSpec mixed;
    mixed.m_coins = 2;
    mixed.initial = {CoinState::right(), CoinState::left()};
    const auto rl = initial_state(mixed, 5);
    CHECK(rl.amp(5, 1) == Amplitude{1.0, 0.0});
    CHECK(std::norm(rl.amp(5, 0)) == 0.0);
}

TEST_CASE("direct simulation cap rejects oversized coin registers") {
    CHECK_THROWS_AS(
        initial_state(CoinSpec::uniform(17, CoinState::right()), 0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        initial_state(CoinSpec::uniform(5, CoinState::right()), 0, 4),
        std::invalid_argument);
    CHECK_NOTHROW(initial_state(CoinSpec::uniform(5, CoinState::right()), 0));
}

TEST_CASE("single steps reproduce the worked one-coin states") {
    auto state = initial_state(CoinSpec::uniform(1, CoinState::right()), 0);

    state = step(state, 1);
    CHECK(state.amp(1, 0).real() == doctest::Approx(kInvSqrt2));
    CHECK(state.amp(-1, 1).real() == doctest::Approx(kInvSqrt2));
    CHECK(std::norm(state.amp(1, 1)) == 0.0);
    CHECK(std::norm(state.amp(-1, 0)) == 0.0);

    state = step(state, 1);
    CHECK(state.amp(2, 0).real() == doctest::Approx(0.5));
    CHECK(state.amp(0, 1).real() == doctest::Approx(0.5));
    CHECK(state.amp(0, 0).real() == doctest::Approx(0.5));
    CHECK(state.amp(-2, 1).real() == doctest::Approx(-0.5));
}

TEST_CASE("four steps match the hand-expanded amplitude table") {
    // Expanding step by step from |0,R>:
    // Psi(4) = (|4,R> + |2,L> + 3|2,R> + |0,L> - |0,R> - |-2,L> + |-2,R>
    //           - |-4,L>)/4
    auto state = evolve(initial_state(CoinSpec::uniform(1, CoinState::right()),
                                      0),
                        4, Schedule::Cyclic);
    CHECK(state.amp(4, 0).real() == doctest::Approx(0.25));
    CHECK(state.amp(2, 1).real() == doctest::Approx(0.25));
    CHECK(state.amp(2, 0).real() == doctest::Approx(0.75));
    CHECK(state.amp(0, 1).real() == doctest::Approx(0.25));
    CHECK(state.amp(0, 0).real() == doctest::Approx(-0.25));
    CHECK(state.amp(-2, 1).real() == doctest::Approx(-0.25));
    CHECK(state.amp(-2, 0).real() == doctest::Approx(0.25));
    CHECK(state.amp(-4, 1).real() == doctest::Approx(-0.25));

    // And against the brute-force path oracle.
    for (long x = -4; x <= 4; x += 2) {
        const auto oracle = brute_force_paths(x, 4, CoinBasis::Right);
        CHECK(state.amp(x, 1).real() ==
              doctest::Approx(oracle.ends_left.to_double()).epsilon(1e-14));
        CHECK(state.amp(x, 0).real() ==
              doctest::Approx(oracle.ends_right.to_double()).epsilon(1e-14));
    }
}

TEST_CASE("steps preserve the norm of random states") {
    for (unsigned seed : {7u, 11u, 23u}) {
        auto state = random_state(2, 9, seed);
        const double before = state.norm_sq();
        for (int coin : {1, 2, 1}) {
            state = step(state, coin);
            CHECK(state.norm_sq() == doctest::Approx(before).epsilon(1e-13));
        }
    }
}

TEST_CASE("norm drift stays below 1e-10 after ten thousand steps") {
    auto state = initial_state(CoinSpec::uniform(1, CoinState::symmetric()), 0);
    state = evolve(std::move(state), 10000, Schedule::Cyclic);
    CHECK(std::abs(state.norm_sq() - 1.0) < 1e-10);
}

TEST_CASE("evolution respects parity and the light cone") {
    auto state = initial_state(CoinSpec::uniform(2, CoinState::right()), 0);
    state = evolve(std::move(state), 21, Schedule::Cyclic);
    const auto dist = measure_positions(state);
    CHECK(dist.time == 21);
    for (long x = dist.min_position() - 3; x <= dist.max_position() + 3; ++x) {
        if (((x + 21) & 1L) != 0 || std::labs(x) > 21)
            CHECK(dist.at(x) == 0.0);
    }
    CHECK(dist.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero steps is the identity") {
    const auto start = initial_state(CoinSpec::uniform(3, CoinState::right()),
                                     2);
    const auto same = evolve(start, 0, Schedule::Cyclic);
    CHECK(same.time() == 0);
    CHECK(same.amp(2, 0) == Amplitude{1.0, 0.0});
    const auto dist = measure_positions(same);
    CHECK(dist.at(2) == doctest::Approx(1.0));
}

TEST_CASE("cyclic and block orders give the same distribution") {
    const auto spec = CoinSpec::uniform(2, CoinState::right());
    const auto cyclic =
        measure_positions(evolve(initial_state(spec, 0), 100,
                                 Schedule::Cyclic));
    const auto block =
        measure_positions(evolve(initial_state(spec, 0), 100,
                                 Schedule::Block));
    for (long x = -100; x <= 100; ++x)
        CHECK(cyclic.at(x) == doctest::Approx(block.at(x)).epsilon(1e-12));

    CHECK_THROWS_AS(evolve(initial_state(spec, 0), 101, Schedule::Block),
                    std::invalid_argument);
}

TEST_CASE("mirrored |L> start reproduces the |R> distribution") {
    for (long t : {25L, 60L}) {
        const auto from_r = measure_positions(
            evolve(initial_state(CoinSpec::uniform(1, CoinState::right()), 0),
                   t, Schedule::Cyclic));
        const auto from_l = measure_positions(
            evolve(initial_state(CoinSpec::uniform(1, CoinState::left()), 0),
                   t, Schedule::Cyclic));
        for (long x = -t; x <= t; ++x)
            CHECK(from_r.at(x) ==
                  doctest::Approx(from_l.at(-x)).epsilon(1e-12));
    }
}

TEST_CASE("direct evolution matches the closed-form amplitudes") {
    auto state = initial_state(CoinSpec::uniform(1, CoinState::right()), 0);
    state = evolve(std::move(state), 100, Schedule::Cyclic);
    for (long x = -100; x <= 100; x += 2) {
        const auto exact = amp_from_R(x, 100);
        CHECK(state.amp(x, 1).real() ==
              doctest::Approx(exact.ends_left.to_double()).epsilon(1e-10));
        CHECK(state.amp(x, 0).real() ==
              doctest::Approx(exact.ends_right.to_double()).epsilon(1e-10));
        CHECK(std::abs(state.amp(x, 0).imag()) < 1e-15);
    }

    // Distribution drifts left for a |R> start.
    const auto dist = measure_positions(state);
    double mean = 0.0;
    for (long x = -100; x <= 100; ++x) mean += x * dist.at(x);
    CHECK(mean < -20.0);
}

TEST_CASE("complex coin start matches the combined closed form") {
    const CoinState start{{kInvSqrt2, 0.0}, {0.0, kInvSqrt2}};
    auto state = initial_state(CoinSpec::uniform(1, start), 0);
    state = evolve(std::move(state), 20, Schedule::Cyclic);
    for (long x = -20; x <= 20; x += 2) {
        const auto [g_left, g_right] =
            amp_general(x, 20, start.alpha, start.beta);
        CHECK(std::abs(state.amp(x, 1) - g_left) < 1e-12);
        CHECK(std::abs(state.amp(x, 0) - g_right) < 1e-12);
    }
}

TEST_CASE("measurement of the two-step state") {
    auto state = initial_state(CoinSpec::uniform(1, CoinState::right()), 0);
    state = evolve(std::move(state), 2, Schedule::Cyclic);
    const auto dist = measure_positions(state);
    CHECK(dist.at(2) == doctest::Approx(0.25));
    CHECK(dist.at(0) == doctest::Approx(0.5));
    CHECK(dist.at(-2) == doctest::Approx(0.25));
    CHECK(dist.at(1) == 0.0);
}
