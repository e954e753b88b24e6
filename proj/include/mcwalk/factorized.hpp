// factorized.hpp
// M-coin distributions in cost linear in M.  A one-coin walk of s steps,
// conditioned on the final coin value, acts on the position as a pure shift
// polynomial; an M-coin walk is M such factors plus a binomial weight over
// the measurement records.

#pragma once

#include "mcwalk/types.hpp"

#include <vector>

namespace mcwalk {

// Shift-amplitude vectors of the conditioned one-coin walk.  The entries
// live on even shifts 2j; aL covers j in [-s/2, s/2-1], aR covers
// j in [-s/2+1, s/2] for s = steps_per_coin.
struct ConditionalKernel {
    long steps_per_coin = 0;
    long aL_min_shift = 0;  // smallest shift (in units of 2) carried by aL
    long aR_min_shift = 0;
    std::vector<Amplitude> aL;  // index i = shift/2 - aL_min_shift
    std::vector<Amplitude> aR;

    double norm_sq() const;
};

// Builds the kernel from the exact closed-form amplitudes for the given
// single-coin start.  steps must be even and positive.
ConditionalKernel build_kernel(long steps, const CoinState& coin_start);

// Amplitude vector over even shifts with an explicit origin.
struct ShiftVector {
    long min_shift = 0;  // in units of 2 positions
    std::vector<Amplitude> values;
};

// [A_R]^N [A_L]^(M-N) applied to the delta at x = 0, computed by iterated
// convolution.  N in [0, M].
ShiftVector record_term(int n_right, int m_coins,
                        const ConditionalKernel& kernel);

// p(x) = sum_N C(M,N) |<x| A_R^N A_L^(M-N) |0>|^2 at total time
// T = M * steps_per_coin.  All coins share the same start state.
Distribution multicoin_distribution(int m_coins, long steps_per_coin,
                                    const CoinState& coin_start);

}  // namespace mcwalk
