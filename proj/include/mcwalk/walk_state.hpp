// walk_state.hpp
// Dense state vector of an M-coin walk on the line and its unitary evolution.
//
// Coin basis indexing: coin 1 occupies the most significant bit of the coin
// index and R = 0, L = 1.  For M = 2 the columns are therefore
// RR, RL, LR, LL in that order.  Cross-checks against the factorized
// multicoin distribution depend on this ordering.

#pragma once

#include "mcwalk/types.hpp"

#include <cstddef>

namespace mcwalk {

class WalkState {
  public:
    WalkState(long offset, int m_coins, long time,
              std::vector<Amplitude> amps);

    int m_coins() const { return m_coins_; }
    std::size_t coin_dim() const { return coin_dim_; }
    long time() const { return time_; }
    long min_position() const { return offset_; }
    long max_position() const {
        return offset_ + static_cast<long>(rows()) - 1;
    }
    std::size_t rows() const { return amps_.size() / coin_dim_; }

    Amplitude amp(long x, std::size_t coin_index) const;

    const std::vector<Amplitude>& raw() const { return amps_; }

    double norm_sq() const;

  private:
    friend WalkState step(const WalkState& state, int active_coin);

    long offset_ = 0;
    int m_coins_ = 1;
    std::size_t coin_dim_ = 2;
    long time_ = 0;
    std::vector<Amplitude> amps_;  // row-major: [(x - offset) * coin_dim + c]
};

// |x0> tensor the product of the M initial coin states.  Rejects
// M > direct_sim_cap; beyond that the factorized evaluation is the
// supported path.
WalkState initial_state(const CoinSpec& spec, long x0,
                        int direct_sim_cap = kDefaultDirectSimCap);

// One flip of coin m (1-based): Hadamard on that coin, then a conditional
// shift of the position.
WalkState step(const WalkState& state, int active_coin);

// t single steps under the given flip order.  Block order requires t to be
// a multiple of M.
WalkState evolve(WalkState state, long t, Schedule schedule);

// p(x) = sum over the coin basis of |amp(x, c)|^2.
Distribution measure_positions(const WalkState& state);

}  // namespace mcwalk
