#include "mcwalk/types.hpp"

#include <cmath>
#include <numeric>

namespace mcwalk {

CoinState CoinState::symmetric() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {{inv_sqrt2, 0.0}, {0.0, inv_sqrt2}};
}

CoinSpec CoinSpec::uniform(int m, CoinState start, Schedule sched) {
    CoinSpec spec;
    spec.m_coins = m;
    spec.initial.assign(static_cast<std::size_t>(m), start);
    spec.schedule = sched;
    spec.validate();
    return spec;
}

void CoinSpec::validate() const {
    if (m_coins < 1) throw std::invalid_argument("need at least one coin");
    if (initial.size() != static_cast<std::size_t>(m_coins))
        throw std::invalid_argument("one initial state required per coin");
    for (const CoinState& coin : initial) {
        if (!coin.is_normalized())
            throw std::invalid_argument("initial coin state not normalized");
    }
}

double Distribution::total() const {
    return std::accumulate(probs.begin(), probs.end(), 0.0);
}

}  // namespace mcwalk
