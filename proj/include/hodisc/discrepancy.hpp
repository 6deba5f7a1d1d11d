#ifndef HODISC_DISCREPANCY_HPP
#define HODISC_DISCREPANCY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodisc/rational.hpp"
#include "hodisc/sequence.hpp"

namespace hodisc {

// Enumeration ceilings (cell grids, corner grids). The CLI maps this to exit
// code 3.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DiscrepancyReport {
    std::uint64_t N = 0;
    std::size_t d = 0;
    std::string measure;  // "L2" | "star" | "Lp"
    double p = 0;         // only for "Lp"
    double value = 0;
    std::string method;  // "closed-form" | "cellwise-quadrature" | "enumeration"
    double error_bound = 0;
};

// D(x) = (1/N) #{z in P : z in [0,x)} - x_1...x_d, exact. The box is half
// open, so points on a face x_i = z_i do not count.
Rational local_discrepancy(const DyadicPointSet& points, const std::vector<Rational>& x);

// Squared L2 norm of D via the closed-form double sum
//   3^-d - (2/N) sum_k prod_i (1-x_{k,i}^2)/2 + (1/N^2) sum_{k,l} prod_i (1-max(x_{k,i},x_{l,i})),
// evaluated in extended precision on the exact dyadic inputs. O(N^2 d).
// The report carries the L2 norm itself plus a forward rounding bound.
DiscrepancyReport l2_exact(const DyadicPointSet& points);

struct CellwiseOptions {
    unsigned nodes_per_axis = 8;
    int bisect_depth = 6;
    std::size_t max_cells = 10000000;
};

// L_p norm of D by cellwise tensor Gauss-Legendre quadrature on the grid
// spanned by the point coordinates, where the counting part is constant per
// cell. For integer p the integrand is polynomial on every cell the surface
// c/N = x_1...x_d does not cross, making the rule exact there; crossed cells
// are bisected recursively and the unresolved leaves contribute the reported
// error bound vol * max|f|^p. Throws GuardError above max_cells.
DiscrepancyReport lp_cellwise(const DyadicPointSet& points, double p, CellwiseOptions opt = {});

// Exact star discrepancy sup |D| over the closed cube, by enumerating the
// critical corner grid (point coordinates plus 1 per axis) and taking closed
// box counts against the volume and open box counts against it, all in exact
// rational arithmetic. Throws GuardError above max_corners grid entries.
DiscrepancyReport star_discrepancy(const DyadicPointSet& points, std::size_t max_corners = 10000000);

}  // namespace hodisc

#endif
