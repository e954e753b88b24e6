// combinatorics.hpp
// Closed-form single-coin Hadamard walk amplitudes as signed binomial sums,
// exact up to the global 2^(-t/2) factor, plus the brute-force path
// enumeration they are checked against.

#pragma once

#include "mcwalk/exact_amplitude.hpp"
#include "mcwalk/types.hpp"

#include <utility>

namespace mcwalk {

// Left/right step counts of a path reaching x after t steps.
struct PathCounts {
    long n_left = 0;   // (t - x) / 2
    long n_right = 0;  // (t + x) / 2

    static PathCounts from(long x, long t);
};

struct ExactAmplitudePair {
    ExactAmplitude ends_left;   // coin shows L at time t
    ExactAmplitude ends_right;  // coin shows R at time t
};

// Amplitudes at (x, t) for a walk started at x=0 with the coin in |R>.
// Requires |x| <= t and x+t even.
ExactAmplitudePair amp_from_R(long x, long t);

// Same for a walk started with the coin in |L>.
ExactAmplitudePair amp_from_L(long x, long t);

// General start alpha|R> + beta|L>: linear combination of the two basis
// solutions.  Returns floating amplitudes (g_L, g_R).
std::pair<Amplitude, Amplitude> amp_general(long x, long t, Amplitude alpha,
                                            Amplitude beta);

// Independent oracle: sums the sign-weighted contributions of all 2^t
// classical paths ending at x.  The phase of a path is (-1)^(N_L - C) with
// C its number of L-clusters; paths whose first symbol is L pick up an
// extra sign when the walk starts from |L>.  Limited to t <= 24.
ExactAmplitudePair brute_force_paths(long x, long t, CoinBasis start);

// Full single-coin distribution at time t for an arbitrary coin start,
// evaluated from the closed-form amplitudes.
Distribution combinatorial_distribution(long t, const CoinState& start);

}  // namespace mcwalk
