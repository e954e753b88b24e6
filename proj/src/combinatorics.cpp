#include "mcwalk/combinatorics.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

namespace mcwalk {

namespace {

void check_reachable(long x, long t) {
    if (t < 0) throw std::invalid_argument("time must be nonnegative");
    if (std::labs(x) > t)
        throw std::invalid_argument("position outside light cone |x| <= t");
    if (((x + t) & 1L) != 0)
        throw std::invalid_argument("parity violation: x + t must be even");
}

}  // namespace

PathCounts PathCounts::from(long x, long t) {
    check_reachable(x, t);
    return {(t - x) / 2, (t + x) / 2};
}

ExactAmplitudePair amp_from_R(long x, long t) {
    check_reachable(x, t);
    const auto [n_left, n_right] = PathCounts::from(x, t);

    ExactAmplitudePair out;
    out.ends_left.scale_exponent = t;
    out.ends_right.scale_exponent = t;

    if (n_left == 0) {
        // All-R path: no L-cluster ever forms, amplitude is 2^(-t/2).
        out.ends_right.numerator = 1;
        return out;
    }

    // Terms vanish once either binomial does, so the printed summation
    // limits (N_L for x >= 0, N_R + 1 for x < 0) reduce to this bound.
    const long c_max = std::min(n_left, n_right + 1);
    BigInt sum_left = 0;
    BigInt sum_right = 0;
    BigInt b_nl = 1;                // C(N_L - 1, C - 1)
    BigInt b_nr_lo = 1;             // C(N_R, C - 1)
    BigInt b_nr_hi = n_right;       // C(N_R, C)
    for (long c = 1; c <= c_max; ++c) {
        const bool negative = ((n_left - c) & 1L) != 0;
        const BigInt left_term = b_nl * b_nr_lo;
        const BigInt right_term = b_nl * b_nr_hi;
        if (negative) {
            sum_left -= left_term;
            sum_right -= right_term;
        } else {
            sum_left += left_term;
            sum_right += right_term;
        }
        // Advance the running binomials from C to C + 1.
        b_nl = b_nl * (n_left - c) / c;
        b_nr_lo = b_nr_lo * (n_right - c + 1) / c;
        b_nr_hi = b_nr_hi * (n_right - c) / (c + 1);
    }
    out.ends_left.numerator = sum_left;
    out.ends_right.numerator = sum_right;
    return out;
}

ExactAmplitudePair amp_from_L(long x, long t) {
    check_reachable(x, t);
    const auto [n_left, n_right] = PathCounts::from(x, t);

    ExactAmplitudePair out;
    out.ends_left.scale_exponent = t;
    out.ends_right.scale_exponent = t;

    if (t == 0) {
        out.ends_left.numerator = 1;
        return out;
    }
    if (n_left == 0) {
        // All-R path; the leading L->R flip carries no sign.
        out.ends_right.numerator = 1;
        return out;
    }
    if (n_right == 0) {
        // Single all-L path.  The printed formulas divide by N_R here; the
        // path model gives (-1)^(N_L - 1) times the extra leading-L sign.
        out.ends_left.numerator = (t % 2 == 0) ? 1 : -1;
        return out;
    }

    const long c_max = std::min(n_left, n_right + 1);
    BigInt sum_left = 0;
    BigInt sum_right = 0;
    BigInt b_nl = 1;                 // C(N_L - 1, C - 1)
    BigInt b_nr_lo = 1;              // C(N_R, C - 1)
    BigInt b_nr_hi = n_right;        // C(N_R, C)
    BigInt b_nr1_lo = 0;             // C(N_R - 1, C - 2)
    BigInt b_nr1_hi = 1;             // C(N_R - 1, C - 1)
    for (long c = 1; c <= c_max; ++c) {
        const bool negative = ((n_left - c) & 1L) != 0;
        // C(N_R,j) (N_R - 2j)/N_R == C(N_R,j) - 2 C(N_R-1,j-1), exactly.
        const BigInt left_term = b_nl * (b_nr_lo - 2 * b_nr1_lo);
        const BigInt right_term = b_nl * (b_nr_hi - 2 * b_nr1_hi);
        if (negative) {
            sum_left -= left_term;
            sum_right -= right_term;
        } else {
            sum_left += left_term;
            sum_right += right_term;
        }
        b_nl = b_nl * (n_left - c) / c;
        b_nr_lo = b_nr_lo * (n_right - c + 1) / c;
        b_nr_hi = b_nr_hi * (n_right - c) / (c + 1);
        b_nr1_lo = (c == 1) ? BigInt(1)
                            : b_nr1_lo * (n_right - c + 1) / (c - 1);
        b_nr1_hi = b_nr1_hi * (n_right - c) / c;
    }
    out.ends_left.numerator = sum_left;
    out.ends_right.numerator = sum_right;
    return out;
}

std::pair<Amplitude, Amplitude> amp_general(long x, long t, Amplitude alpha,
                                            Amplitude beta) {
    const double norm = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm - 1.0) > kCoinNormTol)
        throw std::invalid_argument("coin start is not normalized");
    const ExactAmplitudePair a = amp_from_R(x, t);
    const ExactAmplitudePair b = amp_from_L(x, t);
    const Amplitude g_left =
        alpha * a.ends_left.to_double() + beta * b.ends_left.to_double();
    const Amplitude g_right =
        alpha * a.ends_right.to_double() + beta * b.ends_right.to_double();
    return {g_left, g_right};
}

ExactAmplitudePair brute_force_paths(long x, long t, CoinBasis start) {
    if (t > 24) throw std::invalid_argument("brute force limited to t <= 24");
    check_reachable(x, t);

    ExactAmplitudePair out;
    out.ends_left.scale_exponent = t;
    out.ends_right.scale_exponent = t;
    if (t == 0) {
        (start == CoinBasis::Left ? out.ends_left : out.ends_right).numerator =
            1;
        return out;
    }

    // Bit i of a mask is the coin state after flip i+1 (1 = L).
    const std::uint32_t n_paths = 1u << t;
    const long n_left_target = (t - x) / 2;
    long long sum_left = 0;
    long long sum_right = 0;
    for (std::uint32_t mask = 0; mask < n_paths; ++mask) {
        const long n_left = std::popcount(mask);
        if (n_left != n_left_target) continue;
        const long clusters = std::popcount(mask & ~(mask << 1));
        long sign_pow = n_left - clusters;
        if (start == CoinBasis::Left && (mask & 1u)) sign_pow += 1;
        const long long sign = (sign_pow & 1L) ? -1 : 1;
        if (mask >> (t - 1) & 1u)
            sum_left += sign;
        else
            sum_right += sign;
    }
    out.ends_left.numerator = sum_left;
    out.ends_right.numerator = sum_right;
    return out;
}

Distribution combinatorial_distribution(long t, const CoinState& start) {
    Distribution dist;
    dist.time = t;
    dist.offset = -t;
    dist.probs.assign(static_cast<std::size_t>(2 * t + 1), 0.0);
    for (long x = -t; x <= t; x += 2) {
        const auto [g_left, g_right] = amp_general(x, t, start.alpha,
                                                   start.beta);
        dist.probs[static_cast<std::size_t>(x + t)] =
            std::norm(g_left) + std::norm(g_right);
    }
    return dist;
}

}  // namespace mcwalk
