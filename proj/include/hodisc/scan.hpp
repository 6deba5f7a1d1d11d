#ifndef HODISC_SCAN_HPP
#define HODISC_SCAN_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hodisc/discrepancy.hpp"
#include "hodisc/sequence.hpp"

namespace hodisc {

enum class SequenceKind { vdc, vdc_sym, tezuka_order1, interlaced_order2 };

const char* to_string(SequenceKind kind);
std::optional<SequenceKind> sequence_kind_from_string(const std::string& s);

// Points of one of the supported sequences, with the kind's default
// precision. A seed requests a random digital shift (coordinatewise XOR with
// fixed masks drawn from the seed).
DyadicPointSet make_sequence_points(SequenceKind kind, std::size_t d, std::uint64_t N,
                                    std::optional<unsigned> precision,
                                    std::optional<std::uint64_t> shift_seed);

// Same, but from an explicit matrix set (e.g. a matrix file).
DyadicPointSet points_from_matrices(const GenMatrixSet& set, std::uint64_t N,
                                    std::optional<unsigned> precision,
                                    std::optional<std::uint64_t> shift_seed);

struct ScanConfig {
    SequenceKind kind = SequenceKind::interlaced_order2;
    std::size_t d = 1;
    unsigned n_max = 12;
    unsigned n_max_guard = 14;  // desk-scale guard on the dyadic range
    std::vector<double> p_values;
    bool star = false;
    std::optional<std::uint64_t> shift_seed;
    std::optional<double> log_exponent;  // default d/2 for L_p rows, d for star rows
    unsigned nodes_per_axis = 8;
    int bisect_depth = 6;
    std::size_t max_cells = std::size_t(1) << 26;
    // sample every N above 256 too (cheap measures only; the default dyadic
    // subsample exists to keep the O(N^2) kernels fast)
    bool dense = false;
};

struct ScanRow {
    std::uint64_t N = 0;
    std::string measure;
    double value = 0;
    double normalized = 0;  // N * value / (log N)^exponent
};

struct MeasureSummary {
    std::string measure;
    double running_max = 0;
    double max_bottom = 0;  // over N <= 2^(n_max/2)
    double max_top = 0;     // over N > 2^(n_max/2)
    bool bounded_proxy = false;  // max_top <= 1.1 * max_bottom
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::vector<MeasureSummary> summary;
};

// Every N in [2, 256], then the dyadic subsample {2^k, 3*2^(k-1)} up to
// 2^n_max; dense = true keeps every N throughout.
std::vector<std::uint64_t> scan_schedule(unsigned n_max, bool dense = false);

ScanResult run_scan(const ScanConfig& config);

// CSV: N,measure,value,normalized data rows followed by one
// runmax,<measure>,,<running max> row per measure.
void write_scan_csv(const ScanResult& result, std::ostream& os);

}  // namespace hodisc

#endif
