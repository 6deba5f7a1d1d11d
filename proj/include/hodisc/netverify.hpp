#ifndef HODISC_NETVERIFY_HPP
#define HODISC_NETVERIFY_HPP

#include <cstdint>

#include "hodisc/genmat.hpp"
#include "hodisc/sequence.hpp"

namespace hodisc {

struct NetQuality {
    int alpha = 1;
    unsigned n = 0;
    std::size_t d = 0;
    unsigned t_exact = 0;
    unsigned t_upper = 0;  // min(construction bound, alpha*n)
    std::uint64_t checked_selections = 0;
};

// Order-alpha digital net test: every admissible choice of row indices
// (strictly decreasing per coordinate, with only the min(nu_j, alpha) largest
// indices counted against the budget alpha*n - t) must select linearly
// independent rows. All chosen rows must be independent, not merely the
// counted ones.
//
// The enumeration runs over closure representatives only: per coordinate a
// top segment 1..v for alpha=1, or a top row a over a filled segment 1..b
// (b < a) for alpha=2. Any admissible selection extends to a representative
// with the same counted weight, so a dependency exists among the
// representatives iff one exists at all. Uses the top alpha*n rows and first
// n columns of the set; alpha must be 1 or 2.
bool is_order_alpha_net(const GenMatrixSet& set, int alpha, unsigned n, unsigned t,
                        std::uint64_t* checked_selections = nullptr);

// Smallest passing t (scans upward from 0; passing is monotone in t because
// raising t only shrinks the admissible selections).
NetQuality t_value(const GenMatrixSet& set, int alpha, unsigned n);

struct EquiReport {
    bool pass = false;
    unsigned interval_order = 0;       // |j| of the checked dyadic intervals
    std::uint64_t allowed_max = 0;     // 2^ceil(t/alpha)
    std::uint64_t max_count = 0;       // worst interval occupancy found
    bool exact = false;                // alpha=1: every interval holds exactly 2^t points
    std::uint64_t intervals_checked = 0;
};

// Counts points in every dyadic interval of order n - ceil(t/alpha) by exact
// bit-prefix matching; passes iff no interval holds more than 2^ceil(t/alpha)
// points. For alpha=1 additionally verifies the exact per-interval count 2^t.
// Requires |points| = 2^n.
EquiReport check_equidistribution(const DyadicPointSet& points, unsigned t, int alpha);

}  // namespace hodisc

#endif
