// types.hpp
// Shared domain types for the multicoin quantum walk library.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcwalk {

using Amplitude = std::complex<double>;

inline constexpr double kNormTol = 1e-10;
inline constexpr double kCoinNormTol = 1e-12;

// Hard limit on coins for direct state-vector simulation (2^M coin dims).
inline constexpr int kDefaultDirectSimCap = 16;

enum class Schedule { Cyclic, Block };

enum class CoinBasis { Right, Left };

// Single two-level coin state alpha|R> + beta|L>.
struct CoinState {
    Amplitude alpha{1.0, 0.0};
    Amplitude beta{0.0, 0.0};

    double norm_sq() const { return std::norm(alpha) + std::norm(beta); }

    bool is_normalized(double tol = kCoinNormTol) const {
        return std::abs(norm_sq() - 1.0) <= tol;
    }

    static CoinState right() { return {{1.0, 0.0}, {0.0, 0.0}}; }
    static CoinState left() { return {{0.0, 0.0}, {1.0, 0.0}}; }
    // (|R> + i|L>)/sqrt(2): the drift-free start of the Hadamard walk.
    static CoinState symmetric();
    static CoinState basis(CoinBasis b) {
        return b == CoinBasis::Right ? right() : left();
    }
};

// M coins, their initial states, and the flip order.
// Cyclic flips coin 1,2,...,M,1,2,...; Block flips coin 1 for t/M steps,
// then coin 2, and so on.  The two give identical distributions whenever
// t is a multiple of M because the per-coin step operators commute.
struct CoinSpec {
    int m_coins = 1;
    std::vector<CoinState> initial;
    Schedule schedule = Schedule::Cyclic;

    static CoinSpec uniform(int m, CoinState start,
                            Schedule sched = Schedule::Cyclic);
    void validate() const;
};

// Probability over positions offset, offset+1, ... at a fixed time.
struct Distribution {
    long offset = 0;
    std::vector<double> probs;
    long time = 0;

    long min_position() const { return offset; }
    long max_position() const {
        return offset + static_cast<long>(probs.size()) - 1;
    }
    double at(long x) const {
        if (x < min_position() || x > max_position()) return 0.0;
        return probs[static_cast<std::size_t>(x - offset)];
    }
    double total() const;
};

}  // namespace mcwalk
