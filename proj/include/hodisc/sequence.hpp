#ifndef HODISC_SEQUENCE_HPP
#define HODISC_SEQUENCE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodisc/genmat.hpp"

namespace hodisc {

// N points in [0,1)^d stored as exact q-bit dyadic integers: coordinate value
// is numerator * 2^-q with numerator < 2^q. Digits are packed MSB-first, so
// digit r (weight 2^-r) of a coordinate is bit q-r of its numerator.
struct DyadicPointSet {
    std::size_t d = 0;
    unsigned precision_q = 0;
    std::vector<std::uint64_t> coords;  // size() * d numerators, row-major

    std::size_t size() const { return d ? coords.size() / d : 0; }
    std::uint64_t at(std::size_t k, std::size_t j) const { return coords[k * d + j]; }
    long double value(std::size_t k, std::size_t j) const;
};

// Generating matrices plus output precision and optional digital shift.
// The shift holds one precision_q-bit word per coordinate, packed like point
// numerators (MSB-first digits).
struct SequenceSpec {
    GenMatrixSet matrices;
    unsigned precision_q = 0;
    std::optional<std::vector<std::uint64_t>> shift;

    // default precision: order * n_cols digits (the structurally nonzero ones),
    // capped by the available rows
    static SequenceSpec make(GenMatrixSet matrices,
                             std::optional<unsigned> precision = std::nullopt,
                             std::optional<std::vector<std::uint64_t>> shift = std::nullopt);
};

// Point with index k: coordinate j holds the first precision_q digits of
// C_j * kvec (over F2) XOR shift_j, where kvec is the binary digit vector of
// k (least significant digit first). Requires k < 2^n_cols.
std::vector<std::uint64_t> point_at(const SequenceSpec& spec, std::uint64_t k);

// First N points, index order. Requires N <= 2^n_cols.
DyadicPointSet prefix(const SequenceSpec& spec, std::uint64_t N);

// One dyadic block of a prefix: 2^n_bits consecutive points starting at
// first_index, reproduced as a digitally shifted net of the truncated
// (order*n_bits x n_bits) matrices.
struct PrefixBlock {
    unsigned n_bits = 0;
    std::uint64_t first_index = 0;
    std::vector<std::uint64_t> shift;  // composed digital shift per coordinate
    DyadicPointSet points;
};

// Splits the first N points along the binary expansion of N, largest block
// first, so that each block's index digits separate into a free low part and
// a constant high part. The constant part, pushed through the matrices,
// becomes the block's digital shift; the regenerated blocks partition the
// prefix exactly. Valid for matrices with entry (k,l) = 0 for k > order*l,
// which makes rows beyond order*n_bits independent of the free digits.
std::vector<PrefixBlock> prefix_decompose(const SequenceSpec& spec, std::uint64_t N);

// Base-2 radical inverse sequence (d=1), exact to q digits.
DyadicPointSet van_der_corput(std::uint64_t N, unsigned q);

// Symmetrized variant: z_{2n} = y_n, z_{2n+1} = 1 - y_n. The value 1 (from
// y_n = 0) falls outside [0,1) and is clamped to 1 - 2^-q; `clamped` counts
// how often that happened.
struct SymmetrizedVdc {
    DyadicPointSet points;
    std::size_t clamped = 0;
};
SymmetrizedVdc symmetrized_vdc(std::uint64_t N, unsigned q);

struct PointParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;
    PointParseError(std::size_t line_, std::size_t column_, const std::string& what_)
        : std::runtime_error("point file line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

// Text format: header `hodisc-points v1 d=<d> q=<q> N=<N>`, then one line per
// point with d space-separated numerators over 2^q.
void write_points(const DyadicPointSet& points, std::ostream& os);
void write_points_file(const DyadicPointSet& points, const std::string& path);
DyadicPointSet read_points(std::istream& is);
DyadicPointSet read_points_file(const std::string& path);

}  // namespace hodisc

#endif
