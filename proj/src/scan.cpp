#include "hodisc/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "hodisc/genmat.hpp"

namespace hodisc {

const char* to_string(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::vdc: return "vdc";
        case SequenceKind::vdc_sym: return "vdc-sym";
        case SequenceKind::tezuka_order1: return "tezuka-order1";
        case SequenceKind::interlaced_order2: return "interlaced-order2";
    }
    return "?";
}

std::optional<SequenceKind> sequence_kind_from_string(const std::string& s) {
    if (s == "vdc") return SequenceKind::vdc;
    if (s == "vdc-sym") return SequenceKind::vdc_sym;
    if (s == "tezuka-order1") return SequenceKind::tezuka_order1;
    if (s == "interlaced-order2") return SequenceKind::interlaced_order2;
    return std::nullopt;
}

namespace {

unsigned bits_for(std::uint64_t N) {
    unsigned b = 0;
    while ((std::uint64_t(1) << b) < N) ++b;
    return std::max(b, 1u);
}

void apply_digital_shift(DyadicPointSet& points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> masks(points.d);
    std::uint64_t keep = points.precision_q >= 64 ? ~std::uint64_t(0)
                                                  : (std::uint64_t(1) << points.precision_q) - 1;
    for (std::uint64_t& m : masks) m = rng() & keep;
    for (std::size_t k = 0; k < points.size(); ++k)
        for (std::size_t j = 0; j < points.d; ++j) points.coords[k * points.d + j] ^= masks[j];
}

}  // namespace

DyadicPointSet make_sequence_points(SequenceKind kind, std::size_t d, std::uint64_t N,
                                    std::optional<unsigned> precision,
                                    std::optional<std::uint64_t> shift_seed) {
    DyadicPointSet points;
    switch (kind) {
        case SequenceKind::vdc:
            if (d != 1) throw std::invalid_argument("vdc is one-dimensional");
            points = van_der_corput(N, precision.value_or(bits_for(N)));
            break;
        case SequenceKind::vdc_sym:
            if (d != 1) throw std::invalid_argument("vdc-sym is one-dimensional");
            points = symmetrized_vdc(N, precision.value_or(32)).points;
            break;
        case SequenceKind::tezuka_order1: {
            unsigned n = bits_for(N);
            GenMatrixSet set = tezuka_matrices(d, n, n);
            points = prefix(SequenceSpec::make(std::move(set), precision), N);
            break;
        }
        case SequenceKind::interlaced_order2: {
            unsigned n = bits_for(N);
            GenMatrixSet set = interlace(tezuka_matrices(2 * d, n, n));
            points = prefix(SequenceSpec::make(std::move(set), precision), N);
            break;
        }
    }
    if (shift_seed) apply_digital_shift(points, *shift_seed);
    return points;
}

DyadicPointSet points_from_matrices(const GenMatrixSet& set, std::uint64_t N,
                                    std::optional<unsigned> precision,
                                    std::optional<std::uint64_t> shift_seed) {
    DyadicPointSet points = prefix(SequenceSpec::make(set, precision), N);
    if (shift_seed) apply_digital_shift(points, *shift_seed);
    return points;
}

std::vector<std::uint64_t> scan_schedule(unsigned n_max, bool dense) {
    std::uint64_t limit = std::uint64_t(1) << n_max;
    std::vector<std::uint64_t> Ns;
    for (std::uint64_t N = 2; N <= (dense ? limit : std::min<std::uint64_t>(256, limit)); ++N) Ns.push_back(N);
    for (unsigned k = 8; k <= n_max; ++k) {
        for (std::uint64_t N : {std::uint64_t(1) << k, 3 * (std::uint64_t(1) << (k - 1))})
            if (N > 256 && N <= limit) Ns.push_back(N);
    }
    std::sort(Ns.begin(), Ns.end());
    Ns.erase(std::unique(Ns.begin(), Ns.end()), Ns.end());
    return Ns;
}

namespace {

std::string measure_label(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "L%g", p);
    return buf;
}

DyadicPointSet take_prefix(const DyadicPointSet& all, std::uint64_t N) {
    DyadicPointSet out;
    out.d = all.d;
    out.precision_q = all.precision_q;
    out.coords.assign(all.coords.begin(), all.coords.begin() + static_cast<std::ptrdiff_t>(N * all.d));
    return out;
}

}  // namespace

ScanResult run_scan(const ScanConfig& config) {
    if (config.n_max < 1 || config.n_max > config.n_max_guard)
        throw GuardError("scan: n_max " + std::to_string(config.n_max) + " outside guard [1, " +
                         std::to_string(config.n_max_guard) + "]");
    for (double p : config.p_values)
        if (!(p >= 1)) throw std::invalid_argument("scan: p values must be >= 1");

    std::uint64_t N_full = std::uint64_t(1) << config.n_max;
    DyadicPointSet all = make_sequence_points(config.kind, config.d, N_full, std::nullopt, config.shift_seed);

    struct MeasureSpec {
        std::string label;
        bool is_star;
        double p;
        double exponent;
    };
    std::vector<MeasureSpec> measures;
    for (double p : config.p_values)
        measures.push_back({measure_label(p), false, p,
                            config.log_exponent.value_or(static_cast<double>(config.d) / 2.0)});
    if (config.star)
        measures.push_back({"star", true, 0,
                            config.log_exponent.value_or(static_cast<double>(config.d))});

    CellwiseOptions cw;
    cw.nodes_per_axis = config.nodes_per_axis;
    cw.bisect_depth = config.bisect_depth;
    cw.max_cells = config.max_cells;

    ScanResult result;
    std::uint64_t split = std::uint64_t(1) << (config.n_max / 2);
    std::vector<MeasureSummary> summary(measures.size());
    for (std::size_t m = 0; m < measures.size(); ++m) summary[m].measure = measures[m].label;

    for (std::uint64_t N : scan_schedule(config.n_max, config.dense)) {
        DyadicPointSet pts = take_prefix(all, N);
        for (std::size_t m = 0; m < measures.size(); ++m) {
            const MeasureSpec& ms = measures[m];
            DiscrepancyReport rep;
            if (ms.is_star)
                rep = star_discrepancy(pts, config.max_cells);
            else if (ms.p == 2.0)
                rep = l2_exact(pts);
            else
                rep = lp_cellwise(pts, ms.p, cw);

            ScanRow row;
            row.N = N;
            row.measure = ms.label;
            row.value = rep.value;
            row.normalized = static_cast<double>(N) * rep.value /
                             std::pow(std::log(static_cast<double>(N)), ms.exponent);
            result.rows.push_back(row);

            MeasureSummary& s = summary[m];
            s.running_max = std::max(s.running_max, row.normalized);
            if (N <= split)
                s.max_bottom = std::max(s.max_bottom, row.normalized);
            else
                s.max_top = std::max(s.max_top, row.normalized);
        }
    }

    for (MeasureSummary& s : summary) s.bounded_proxy = s.max_top <= 1.1 * s.max_bottom;
    result.summary = std::move(summary);
    return result;
}

void write_scan_csv(const ScanResult& result, std::ostream& os) {
    os << "N,measure,value,normalized\n";
    char buf[128];
    for (const ScanRow& row : result.rows) {
        std::snprintf(buf, sizeof buf, "%llu,%s,%.12g,%.12g\n",
                      static_cast<unsigned long long>(row.N), row.measure.c_str(), row.value,
                      row.normalized);
        os << buf;
    }
    for (const MeasureSummary& s : result.summary) {
        std::snprintf(buf, sizeof buf, "runmax,%s,,%.12g\n", s.measure.c_str(), s.running_max);
        os << buf;
    }
}

}  // namespace hodisc
