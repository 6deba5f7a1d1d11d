#ifndef HODISC_HAAR_HPP
#define HODISC_HAAR_HPP

#include <cstdint>
#include <vector>

#include "hodisc/rational.hpp"
#include "hodisc/sequence.hpp"

namespace hodisc {

// Address of a dyadic Haar function: level j_i >= -1 per axis and position
// m_i < 2^max(j_i,0). Level -1 is the constant function on [0,1) (m = 0);
// level j >= 0 is +1 on the left half and -1 on the right half of
// [m 2^-j, (m+1) 2^-j).
struct HaarIndex {
    std::vector<int> level;
    std::vector<std::uint64_t> position;

    HaarIndex() = default;
    HaarIndex(std::vector<int> level_, std::vector<std::uint64_t> position_);

    std::size_t d() const { return level.size(); }
    unsigned order() const;  // |j| = sum of max(level_i, 0)
};

// One-dimensional closed forms. volume factor: <x, h_{j,m}> = 1/2 for j = -1
// and -2^{-2j-2} for j >= 0 (independent of m). counting factor:
// <chi(z < .), h_{j,m}> = 1 - z for j = -1; for j >= 0 it vanishes unless z
// lies in the interior of I_{j,m}, where it is m 2^-j - z on the left half
// and z - (m+1) 2^-j on the right half. z = v * 2^-q.
Rational haar_volume_factor(int level);
Rational haar_counting_factor(std::uint64_t v, unsigned q, int level, std::uint64_t m);

// Exact Haar coefficient of the discrepancy function:
// <D, h_{j,m}> = (1/N) sum_z prod_i counting - prod_i volume.
Rational haar_coefficient(const DyadicPointSet& points, const HaarIndex& idx);

// Everything a whole level contributes, without touching the 2^|j| empty
// intervals: per interval that contains a point in its interior, the exact
// sum over points of the tensor counting factors. Intervals without interior
// points all share the coefficient -volume_factor.
struct HaarLevelSums {
    std::vector<Rational> candidate_sums;  // one per interval with interior points
    Rational volume_factor;                // prod_i v1(j_i)
    long double total_intervals;           // 2^|j|
};
HaarLevelSums haar_level_sums(const DyadicPointSet& points, const std::vector<int>& level);

// Truncated Parseval sum sum_{j <= cap} 2^|j| sum_m <D,h>^2, nondecreasing in
// the cap and converging to the exact squared L2-discrepancy. Once the cap
// reaches the point precision the counting factors vanish on all excluded
// levels, so the remaining gap is a pure volume-part geometric series and is
// reported exactly as gap_certificate (certificate_valid = false below that
// cap).
struct ParsevalResult {
    double partial_sum = 0;
    double gap_certificate = 0;
    bool certificate_valid = false;
    int level_cap = 0;
};
ParsevalResult parseval_l2(const DyadicPointSet& points, int level_cap);

// Per-level decay table: largest |<D,h>| over all indices with |j| = level,
// against the reference envelope 2^{-2n+t} (2n - t - 2|j|)^{d-1} of a
// 2^n-point order-2 net with quality t. Requires 2*level <= 2n - t.
struct DecayRow {
    unsigned level = 0;
    double observed_max = 0;
    double bound = 0;
    double ratio = 0;
};
std::vector<DecayRow> decay_profile(const DyadicPointSet& points, unsigned n, unsigned t,
                                    const std::vector<unsigned>& levels);

// Truncated Littlewood-Paley right-hand side
//   sum_{j <= cap} 2^{2|j|(1-1/pbar)} ( sum_m |<D,h>|^pbar )^{2/pbar},
// pbar = max(p,2). Diagnostic only; reduces to the Parseval sum at p = 2.
double littlewood_paley_bound(const DyadicPointSet& points, double p, int level_cap);

}  // namespace hodisc

#endif
