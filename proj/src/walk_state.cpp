#include "mcwalk/walk_state.hpp"

#include "mcwalk/parallel.hpp"

#include <cmath>

namespace mcwalk {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

WalkState::WalkState(long offset, int m_coins, long time,
                     std::vector<Amplitude> amps)
    : offset_(offset),
      m_coins_(m_coins),
      coin_dim_(std::size_t{1} << m_coins),
      time_(time),
      amps_(std::move(amps)) {
    if (amps_.empty() || amps_.size() % coin_dim_ != 0)
        throw std::invalid_argument("amplitude table shape mismatch");
}

Amplitude WalkState::amp(long x, std::size_t coin_index) const {
    if (x < min_position() || x > max_position()) return {0.0, 0.0};
    return amps_[static_cast<std::size_t>(x - offset_) * coin_dim_ +
                 coin_index];
}

double WalkState::norm_sq() const {
    double total = 0.0;
    for (const Amplitude& a : amps_) total += std::norm(a);
    return total;
}

WalkState initial_state(const CoinSpec& spec, long x0, int direct_sim_cap) {
    spec.validate();
    if (spec.m_coins > direct_sim_cap)
        throw std::invalid_argument(
            "coin count exceeds the direct simulation cap of " +
            std::to_string(direct_sim_cap) +
            "; use the factorized evaluation");

    const std::size_t coin_dim = std::size_t{1} << spec.m_coins;
    std::vector<Amplitude> amps(coin_dim, Amplitude{1.0, 0.0});
    // Product state: coin 1 is the most significant bit, R = 0, L = 1.
    for (int m = 1; m <= spec.m_coins; ++m) {
        const std::size_t bit = std::size_t{1} << (spec.m_coins - m);
        const CoinState& coin = spec.initial[static_cast<std::size_t>(m - 1)];
        for (std::size_t c = 0; c < coin_dim; ++c)
            amps[c] *= (c & bit) ? coin.beta : coin.alpha;
    }
    return WalkState(x0, spec.m_coins, 0, std::move(amps));
}

WalkState step(const WalkState& state, int active_coin) {
    if (active_coin < 1 || active_coin > state.m_coins())
        throw std::invalid_argument("active coin out of range");

    const std::size_t dim = state.coin_dim();
    const std::size_t bit = std::size_t{1}
                            << (state.m_coins() - active_coin);
    const std::size_t in_rows = state.rows();
    const std::size_t out_rows = in_rows + 2;
    const long out_offset = state.offset_ - 1;
    std::vector<Amplitude> out(out_rows * dim, Amplitude{0.0, 0.0});

    const Amplitude* in = state.amps_.data();
    Amplitude* dst = out.data();
    // Gather form: every output cell is one fixed expression, so the result
    // is bit-identical for any worker count.
    parallel_for(out_rows, [&](std::size_t begin, std::size_t end) {
        for (std::size_t row = begin; row < end; ++row) {
            Amplitude* out_row = dst + row * dim;
            // R components (coin bit clear) arrive from the left neighbour.
            if (row >= 2) {
                const Amplitude* src = in + (row - 2) * dim;
                for (std::size_t c = 0; c < dim; ++c) {
                    if (c & bit) continue;
                    out_row[c] = (src[c] + src[c | bit]) * kInvSqrt2;
                }
            }
            // L components (coin bit set) arrive from the right neighbour.
            if (row < in_rows) {
                const Amplitude* src = in + row * dim;
                for (std::size_t c = 0; c < dim; ++c) {
                    if (!(c & bit)) continue;
                    out_row[c] = (src[c & ~bit] - src[c]) * kInvSqrt2;
                }
            }
        }
    });

    WalkState next(out_offset, state.m_coins(), state.time_ + 1,
                   std::move(out));
    return next;
}

WalkState evolve(WalkState state, long t, Schedule schedule) {
    if (t < 0) throw std::invalid_argument("time must be nonnegative");
    const long m = state.m_coins();
    if (schedule == Schedule::Block && t % m != 0)
        throw std::invalid_argument(
            "block order requires t divisible by the coin count");
    const long per_coin = schedule == Schedule::Block ? t / m : 0;
    for (long s = 0; s < t; ++s) {
        const int coin = schedule == Schedule::Cyclic
                             ? static_cast<int>(s % m) + 1
                             : static_cast<int>(s / per_coin) + 1;
        state = step(state, coin);
    }
    return state;
}

Distribution measure_positions(const WalkState& state) {
    Distribution dist;
    dist.offset = state.min_position();
    dist.time = state.time();
    dist.probs.assign(state.rows(), 0.0);
    const std::size_t dim = state.coin_dim();
    const Amplitude* amps = state.raw().data();
    for (std::size_t row = 0; row < dist.probs.size(); ++row) {
        double p = 0.0;
        for (std::size_t c = 0; c < dim; ++c) p += std::norm(amps[row * dim + c]);
        dist.probs[row] = p;
    }
    return dist;
}

}  // namespace mcwalk
