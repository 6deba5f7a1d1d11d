// Acceptance suite: one pass/fail line per criterion, run under ctest.
//
// Thresholds are fixed here, not tuned at runtime:
//   1. construction equality + zero structure, < 1 s
//   2. t-value certificates (t=0 for s<=2; t <= sum(e_j - 1); t <= 2t'+d;
//      cross-order t1 <= ceil(t2/2)), < 600 s
//   3. definition/geometry equivalence on 50 random nets, zero mismatches
//   4. prefix decomposition = direct prefix as exact multisets, N <= 512, < 30 s
//   5. l2 vs cellwise within 1e-10; haar closed forms vs cut-cell oracle
//      within 1e-12 on 200 cases; parseval monotone, bounded by L2^2 and
//      convergent within its tail certificate
//   6. Haar decay envelope: every ratio <= 4 and fitted constants within a
//      factor 4 across n in {4,6,8}
//   7. N*L_p/(log N)^{d/2} running-max proxy bounded (top half <= 1.1x bottom
//      half) for the order-2 sequence, with the vdc/star positive control
//      failing the proxy, < 1200 s
//   8. baselines: symmetrized vdc L2 and plain vdc star proxies bounded

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "hodisc/discrepancy.hpp"
#include "hodisc/haar.hpp"
#include "hodisc/netverify.hpp"
#include "hodisc/parallel.hpp"
#include "hodisc/scan.hpp"
#include "hodisc/sequence.hpp"
#include "oracles.hpp"

using namespace hodisc;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    double time_limit_s;

    Criterion(const char* name_, double time_limit_s_ = 0) : name(name_), time_limit_s(time_limit_s_) {}

    void require(bool cond, const char* what) {
        if (!cond) {
            ok = false;
            std::printf("    FAILED check: %s\n", what);
        }
    }

    void finish() {
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (time_limit_s > 0 && elapsed > time_limit_s) {
            ok = false;
            std::printf("    FAILED check: runtime %.1f s exceeds limit %.0f s\n", elapsed, time_limit_s);
        }
        std::printf("%s  %s (%.2f s)\n", ok ? "PASS" : "FAIL", name, elapsed);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

std::multiset<std::vector<std::uint64_t>> as_multiset(const DyadicPointSet& pts) {
    std::multiset<std::vector<std::uint64_t>> out;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        std::vector<std::uint64_t> row(pts.d);
        for (std::size_t j = 0; j < pts.d; ++j) row[j] = pts.at(k, j);
        out.insert(row);
    }
    return out;
}

void criterion1_construction() {
    Criterion c("criterion 1: Tezuka construction equality and zero structure", 1.0);

    GenMatrixSet s2 = tezuka_matrices(2, 12, 12);
    c.require(s2.matrices[0] == BinMatrix::identity(12), "C1 = identity (12x12)");
    bool pascal = true;
    for (std::size_t k = 0; k < 12; ++k)
        for (std::size_t l = 0; l < 12; ++l)
            pascal = pascal && static_cast<int>(s2.matrices[1].get(k, l)) == oracle::binom_mod2(l, k);
    c.require(pascal, "C2 = Pascal matrix mod 2 (12x12)");

    GenMatrixSet tall = tezuka_matrices(6, 24, 12);
    bool zero1 = true;
    for (const BinMatrix& m : tall.matrices)
        for (std::size_t k = 1; k <= 24; ++k)
            for (std::size_t l = 1; l <= 12; ++l)
                if (k > l) zero1 = zero1 && !m.get(k - 1, l - 1);
    c.require(zero1, "order-1 entries vanish for row > column (24x12, s=6)");

    GenMatrixSet inter = interlace(tezuka_matrices(6, 12, 12));
    bool zero2 = true;
    for (const BinMatrix& m : inter.matrices)
        for (std::size_t k = 1; k <= m.n_rows(); ++k)
            for (std::size_t l = 1; l <= 12; ++l)
                if (k > 2 * l) zero2 = zero2 && !m.get(k - 1, l - 1);
    c.require(zero2, "order-2 entries vanish for row > 2*column (24x12, d=3)");

    c.finish();
}

void criterion2_tvalues() {
    Criterion c("criterion 2: t-value certificates and cross-order consistency", 600.0);

    c.require(t_value(tezuka_matrices(1, 6, 6), 1, 6).t_exact == 0, "s=1 order-1 t_exact = 0 at n=6");
    c.require(t_value(tezuka_matrices(2, 6, 6), 1, 6).t_exact == 0, "s=2 order-1 t_exact = 0 at n=6");

    GenMatrixSet s4 = tezuka_matrices(4, 6, 6);
    NetQuality q4 = t_value(s4, 1, 6);
    c.require(q4.t_upper == 3, "s=4 certificate sum(e_j - 1) = 3");
    c.require(q4.t_exact <= 3, "s=4 order-1 t_exact <= 3 at n=6");

    for (std::size_t d : {std::size_t(1), std::size_t(2)}) {
        GenMatrixSet base = tezuka_matrices(2 * d, 5, 5);
        GenMatrixSet e = interlace(base);
        unsigned bound = 2 * base.t_upper + static_cast<unsigned>(d);
        NetQuality q2 = t_value(e, 2, 5);
        std::printf("    d=%zu: order-2 t_exact=%u (certificate %u), order-1 t_exact=%u\n", d, q2.t_exact,
                    bound, t_value(e, 1, 5).t_exact);
        c.require(q2.t_exact <= bound, "interlaced order-2 t_exact <= 2t' + d at n=5");
        unsigned t1 = t_value(e, 1, 5).t_exact;
        c.require(t1 <= (q2.t_exact + 1) / 2, "cross-order t(1) <= ceil(t(2)/2)");
    }

    c.finish();
}

void criterion3_definition_geometry() {
    Criterion c("criterion 3: net definition matches interval counting on 50 random nets");

    std::mt19937_64 rng(20260808);
    std::uint64_t mismatches = 0, instances = 0;
    for (int trial = 0; trial < 50; ++trial) {
        unsigned n = 2 + static_cast<unsigned>(rng() % 5);  // 2..6
        std::size_t d = 1 + rng() % 2;
        GenMatrixSet set;
        set.order = 1;
        set.q_rows = n;
        set.n_cols = n;
        set.t_upper = n;
        for (std::size_t j = 0; j < d; ++j) {
            BinMatrix m(n, n);
            for (unsigned r = 0; r < n; ++r) m.set_row(r, rng());
            set.matrices.push_back(m);
        }
        DyadicPointSet pts = prefix(SequenceSpec::make(set), std::uint64_t(1) << n);
        for (unsigned t = 0; t <= n; ++t) {
            ++instances;
            bool alg = is_order_alpha_net(set, 1, n, t);
            bool geo = check_equidistribution(pts, t, 1).pass;
            if (alg != geo) ++mismatches;
        }
    }
    std::printf("    %llu (net, t) instances, %llu mismatches\n",
                static_cast<unsigned long long>(instances), static_cast<unsigned long long>(mismatches));
    c.require(mismatches == 0, "zero mismatches between rank test and interval counting");
    c.finish();
}

void criterion4_prefix_decompose() {
    Criterion c("criterion 4: prefix decomposition partitions every prefix N <= 512", 30.0);

    SequenceSpec spec = SequenceSpec::make(interlace(tezuka_matrices(4, 12, 12)));
    bool all_equal = true;
    for (std::uint64_t N = 1; N <= 512; ++N) {
        auto blocks = prefix_decompose(spec, N);
        std::multiset<std::vector<std::uint64_t>> together;
        for (const auto& b : blocks)
            for (auto& row : as_multiset(b.points)) together.insert(row);
        if (together != as_multiset(prefix(spec, N))) {
            all_equal = false;
            std::printf("    multiset mismatch at N=%llu\n", static_cast<unsigned long long>(N));
            break;
        }
    }
    c.require(all_equal, "union of shifted subnets equals the direct prefix for all N <= 512");
    c.finish();
}

void criterion5_discrepancy_crossval() {
    Criterion c("criterion 5: discrepancy engine cross-validation");

    // l2_exact vs lp_cellwise(p=2) within 1e-10 on sets with N <= 64, d <= 2
    std::mt19937_64 rng(424242);
    std::vector<DyadicPointSet> sets;
    sets.push_back(van_der_corput(64, 8));
    sets.push_back(van_der_corput(37, 8));
    sets.push_back(symmetrized_vdc(64, 10).points);
    sets.push_back(prefix(SequenceSpec::make(tezuka_matrices(2, 6, 6)), 64));
    sets.push_back(prefix(SequenceSpec::make(interlace(tezuka_matrices(4, 6, 6))), 64));
    sets.push_back(prefix(SequenceSpec::make(interlace(tezuka_matrices(4, 6, 6))), 41));
    for (int i = 0; i < 6; ++i) {
        std::size_t d = 1 + rng() % 2;
        unsigned q = 5 + static_cast<unsigned>(rng() % 3);
        std::size_t N = 1 + rng() % 64;
        std::vector<std::uint64_t> coords(N * d);
        for (auto& v : coords) v = rng() & ((std::uint64_t(1) << q) - 1);
        DyadicPointSet p;
        p.d = d;
        p.precision_q = q;
        p.coords = std::move(coords);
        sets.push_back(std::move(p));
    }
    double worst_gap = 0;
    for (const auto& pts : sets) {
        double a = l2_exact(pts).value;
        double b = lp_cellwise(pts, 2).value;
        worst_gap = std::max(worst_gap, std::fabs(a - b));
    }
    std::printf("    l2_exact vs cellwise p=2: worst |gap| = %.3e over %zu sets\n", worst_gap, sets.size());
    c.require(worst_gap < 1e-10, "l2_exact and lp_cellwise(p=2) agree to 1e-10");

    // 200 randomized haar coefficients vs the cut-cell oracle, 1e-12
    double worst_haar = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t d = 1 + rng() % 3;
        unsigned q = 3 + static_cast<unsigned>(rng() % 4);
        std::size_t N = 1 + rng() % 16;
        std::vector<std::uint64_t> coords(N * d);
        for (auto& v : coords) v = rng() & ((std::uint64_t(1) << q) - 1);
        DyadicPointSet pts;
        pts.d = d;
        pts.precision_q = q;
        pts.coords = std::move(coords);
        std::vector<int> level(d);
        std::vector<std::uint64_t> pos(d);
        for (std::size_t i = 0; i < d; ++i) {
            level[i] = static_cast<int>(rng() % 6) - 1;
            pos[i] = level[i] <= 0 ? 0 : rng() % (std::uint64_t(1) << level[i]);
        }
        HaarIndex idx(level, pos);
        long double got = haar_coefficient(pts, idx).to_long_double();
        long double want = oracle::haar_cut_cell(pts, idx);
        worst_haar = std::max(worst_haar, static_cast<double>(std::fabs(got - want)));
    }
    std::printf("    haar closed forms vs cut-cell oracle: worst |gap| = %.3e over 200 cases\n", worst_haar);
    c.require(worst_haar < 1e-12, "haar closed forms match the quadrature oracle to 1e-12");

    // parseval: monotone in the cap, never above L2^2, convergent under the certificate
    bool monotone = true, bounded = true, convergent = true;
    for (const auto& pts : {van_der_corput(32, 5), prefix(SequenceSpec::make(tezuka_matrices(2, 5, 5)), 29),
                            prefix(SequenceSpec::make(interlace(tezuka_matrices(2, 5, 5))), 32)}) {
        double l2sq = std::pow(l2_exact(pts).value, 2);
        double prev = 0;
        for (int cap = 0; cap <= static_cast<int>(pts.precision_q) + 1; ++cap) {
            ParsevalResult r = parseval_l2(pts, cap);
            monotone = monotone && r.partial_sum >= prev - 1e-15;
            bounded = bounded && r.partial_sum <= l2sq + 1e-12;
            prev = r.partial_sum;
            if (r.certificate_valid)
                convergent = convergent && (l2sq - r.partial_sum <= r.gap_certificate + 1e-12);
        }
        ParsevalResult top = parseval_l2(pts, static_cast<int>(pts.precision_q) + 1);
        convergent = convergent && top.certificate_valid &&
                     std::fabs(l2sq - top.partial_sum) <= top.gap_certificate + 1e-12;
    }
    c.require(monotone, "parseval partial sums nondecreasing in the cap");
    c.require(bounded, "parseval partial sums never exceed L2^2 + 1e-12");
    c.require(convergent, "parseval gap within the reported tail certificate");

    c.finish();
}

void criterion6_decay() {
    Criterion c("criterion 6: Haar decay envelope stable across n in {4,6,8}");

    for (std::size_t d : {std::size_t(1), std::size_t(2)}) {
        // sequence-level quality parameter, exhaustively verified over the
        // profiled range (the 2t'+d certificate is not tight here)
        GenMatrixSet e = interlace(tezuka_matrices(2 * d, 8, 8));
        unsigned t = 0;
        for (unsigned n = 4; n <= 8; ++n) t = std::max(t, t_value(e, 2, n).t_exact);
        SequenceSpec spec = SequenceSpec::make(e);

        double fitted_min = 1e300, fitted_max = 0, top_min = 1e300, top_max = 0, ratio_max = 0;
        for (unsigned n : {4u, 6u, 8u}) {
            DyadicPointSet pts = prefix(spec, std::uint64_t(1) << n);
            std::vector<unsigned> levels;
            for (unsigned L = 0; 2 * L + t <= 2 * n; ++L)
                if (d == 1 || 2 * n - t - 2 * L >= 1) levels.push_back(L);
            auto rows = decay_profile(pts, n, t, levels);
            double fitted = 0;
            std::printf("    d=%zu n=%u t=%u ratios:", d, n, t);
            for (const auto& r : rows) {
                std::printf(" %.3f", r.ratio);
                fitted = std::max(fitted, r.ratio);
                ratio_max = std::max(ratio_max, r.ratio);
            }
            std::printf("  (fitted constant %.3f)\n", fitted);
            fitted_min = std::min(fitted_min, fitted);
            fitted_max = std::max(fitted_max, fitted);
            top_min = std::min(top_min, rows.back().ratio);
            top_max = std::max(top_max, rows.back().ratio);
        }
        c.require(ratio_max <= 4.0, "every admissible-level ratio <= 4");
        c.require(fitted_max < 4.0 * fitted_min, "fitted constants within a factor 4 across n");
        c.require(top_max < 4.0 * std::max(top_min, 1e-300), "top-level ratios within a factor 4 across n");
    }
    c.finish();
}

void print_summary(const MeasureSummary& s, const char* tag) {
    std::printf("    %s %s: runmax=%.4f bottom=%.4f top=%.4f -> %s\n", tag, s.measure.c_str(),
                s.running_max, s.max_bottom, s.max_top, s.bounded_proxy ? "bounded" : "NOT bounded");
}

void criterion7_main_scaling() {
    Criterion c("criterion 7: order-2 L_p scaling proxy bounded, vdc/star control grows", 1200.0);

    for (std::size_t d : {std::size_t(1), std::size_t(2)}) {
        ScanConfig cfg;
        cfg.kind = SequenceKind::interlaced_order2;
        cfg.d = d;
        cfg.n_max = 12;
        cfg.p_values = {1.0, 2.0, 4.0};
        ScanResult res = run_scan(cfg);
        char tag[32];
        std::snprintf(tag, sizeof tag, "interlaced d=%zu", d);
        for (const MeasureSummary& s : res.summary) {
            print_summary(s, tag);
            c.require(s.bounded_proxy, "N*L_p/(log N)^{d/2} running max bounded (10% proxy)");
        }
    }

    // positive control: the plain van der Corput star discrepancy normalized
    // by (log N)^{1/2} must fail the proxy
    // the dyadic subsample hits only N where the van der Corput prefix is at
    // its best, so the control uses the dense schedule (cheap for d=1 star)
    // to expose the worst-case indices 101011..., where the growth lives
    ScanConfig control;
    control.kind = SequenceKind::vdc;
    control.d = 1;
    control.n_max = 12;
    control.star = true;
    control.log_exponent = 0.5;
    control.dense = true;
    ScanResult res = run_scan(control);
    print_summary(res.summary[0], "control");
    c.require(!res.summary[0].bounded_proxy, "vdc star over (log N)^{1/2} fails the proxy");

    c.finish();
}

void criterion8_baselines() {
    Criterion c("criterion 8: symmetrized vdc L2 and plain vdc star proxies bounded");

    ScanConfig sym;
    sym.kind = SequenceKind::vdc_sym;
    sym.d = 1;
    sym.n_max = 12;
    sym.p_values = {2.0};
    ScanResult rs = run_scan(sym);
    print_summary(rs.summary[0], "vdc-sym");
    c.require(rs.summary[0].bounded_proxy, "N*L2/sqrt(log N) bounded for the symmetrized sequence");

    ScanConfig star;
    star.kind = SequenceKind::vdc;
    star.d = 1;
    star.n_max = 12;
    star.star = true;  // normalized by (log N)^d = log N
    ScanResult rv = run_scan(star);
    print_summary(rv.summary[0], "vdc");
    c.require(rv.summary[0].bounded_proxy, "N*D*/log N bounded for the van der Corput sequence");

    c.finish();
}

}  // namespace

int main() {
    set_worker_count(std::max(1u, std::thread::hardware_concurrency()));

    criterion1_construction();
    criterion2_tvalues();
    criterion3_definition_geometry();
    criterion4_prefix_decompose();
    criterion5_discrepancy_crossval();
    criterion6_decay();
    criterion7_main_scaling();
    criterion8_baselines();

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
