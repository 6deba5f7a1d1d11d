// hodisc - construct, verify and measure order-2 digital sequences over F2.
//
// Subcommands: gen, matrices, tvalue, equi, disc, haar, scan.
// Exit codes: 0 success, 2 usage error, 3 enumeration ceiling exceeded.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodisc/discrepancy.hpp"
#include "hodisc/genmat.hpp"
#include "hodisc/haar.hpp"
#include "hodisc/netverify.hpp"
#include "hodisc/parallel.hpp"
#include "hodisc/scan.hpp"
#include "hodisc/sequence.hpp"

using nlohmann::json;
using namespace hodisc;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct GlobalOpts {
    std::string out;
    std::string format = "json";
    std::size_t threads = 1;
    std::optional<std::uint64_t> seed;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(g.out);
    if (!os) throw std::runtime_error("cannot open " + g.out + " for writing");
    os << text;
}

SequenceKind parse_kind(const std::string& s) {
    auto kind = sequence_kind_from_string(s);
    if (!kind)
        throw CLI::ValidationError("--kind", "expected one of vdc, vdc-sym, tezuka-order1, interlaced-order2");
    return *kind;
}

json report_to_json(const DiscrepancyReport& rep) {
    json j{{"N", rep.N},       {"d", rep.d},           {"measure", rep.measure},
           {"value", rep.value}, {"method", rep.method}, {"error_bound", rep.error_bound}};
    if (rep.measure == "Lp") j["p"] = rep.p;
    return j;
}

std::string report_to_csv(const DiscrepancyReport& rep) {
    char buf[192];
    std::snprintf(buf, sizeof buf, "N,d,measure,p,value,method,error_bound\n%llu,%zu,%s,%g,%.17g,%s,%.3g\n",
                  static_cast<unsigned long long>(rep.N), rep.d, rep.measure.c_str(), rep.p, rep.value,
                  rep.method.c_str(), rep.error_bound);
    return buf;
}

std::vector<double> parse_double_list(const std::string& csv, const char* flag) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "expected a comma-separated list of numbers");
        }
    }
    if (out.empty()) throw CLI::ValidationError(flag, "empty list");
    return out;
}

// points come from a point file, or in-process from a matrix file prefix
DyadicPointSet load_points(const GlobalOpts& g, const std::string& points_file,
                           const std::string& matrices_file, std::uint64_t N, unsigned n, unsigned q) {
    if (!points_file.empty() && !matrices_file.empty())
        throw CLI::ValidationError("--points", "give either --points or --matrices, not both");
    if (!points_file.empty()) return read_points_file(points_file);
    if (matrices_file.empty()) throw CLI::ValidationError("--points", "give --points or --matrices");
    if (N == 0 && n == 0) throw CLI::ValidationError("--N", "give --N or --n with --matrices");
    if (N == 0) N = std::uint64_t(1) << n;
    GenMatrixSet set = read_matrices_file(matrices_file);
    return points_from_matrices(set, N, q ? std::optional<unsigned>(q) : std::nullopt, g.seed);
}

std::vector<long long> parse_int_list(const std::string& csv, const char* flag) {
    std::vector<long long> out;
    for (double v : parse_double_list(csv, flag)) {
        if (v != std::floor(v)) throw CLI::ValidationError(flag, "expected integers");
        out.push_back(static_cast<long long>(v));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"order-2 digital sequences over F2: construction, net verification, exact discrepancy"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--out", g.out, "write output to this file instead of stdout");
    app.add_option("--format", g.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", g.threads, "worker threads for the heavy kernels");
    std::uint64_t seed_val = 0;
    CLI::Option* seed_opt = app.add_option("--seed", seed_val, "seed for the optional random digital shift");

    // gen
    auto* gen = app.add_subcommand("gen", "generate points and write a point file");
    std::string gen_kind_str;
    std::size_t gen_d = 0;
    std::uint64_t gen_N = 0;
    unsigned gen_n = 0, gen_q = 0;
    gen->add_option("--kind", gen_kind_str, "vdc | vdc-sym | tezuka-order1 | interlaced-order2")->required();
    auto* gen_N_opt = gen->add_option("--N", gen_N, "number of points");
    auto* gen_n_opt = gen->add_option("--n", gen_n, "digits: generate N = 2^n points");
    gen->add_option("--d", gen_d, "dimension (required for the matrix-based kinds)");
    gen->add_option("--q", gen_q, "output precision in digits (default: kind-specific)");

    // matrices
    auto* mats = app.add_subcommand("matrices", "construct generating matrices and write a matrix file");
    std::string mat_kind_str = "tezuka-order1";
    std::size_t mat_d = 0, mat_s = 0;
    unsigned mat_n = 0, mat_q = 0;
    mats->add_option("--kind", mat_kind_str, "tezuka-order1 | interlaced-order2");
    mats->add_option("--s", mat_s, "coordinate count for order-1 sets");
    mats->add_option("--d", mat_d, "dimension for interlaced sets (uses s = 2d inputs)");
    mats->add_option("--n", mat_n, "columns")->required();
    mats->add_option("--q", mat_q, "rows of the order-1 construction (default n)");

    // tvalue
    auto* tv = app.add_subcommand("tvalue", "exact t-value of a matrix file via rank enumeration");
    std::string tv_file;
    int tv_alpha = 0;
    unsigned tv_n = 0;
    tv->add_option("--matrices", tv_file, "matrix file")->required();
    tv->add_option("--alpha", tv_alpha, "order (1 or 2; default: the file's order)");
    tv->add_option("--n", tv_n, "digits (default: largest the file supports)");

    // equi
    auto* eq = app.add_subcommand("equi", "dyadic-interval equidistribution check of a point file");
    std::string eq_points;
    unsigned eq_t = 0;
    int eq_alpha = 1;
    std::string eq_mats;
    unsigned eq_n = 0;
    eq->add_option("--points", eq_points, "point file (N must be a power of two)");
    eq->add_option("--matrices", eq_mats, "matrix file to generate from instead of --points");
    eq->add_option("--n", eq_n, "digits when generating: N = 2^n");
    eq->add_option("--t", eq_t, "quality parameter")->required();
    eq->add_option("--alpha", eq_alpha, "order (1 or 2)");

    // disc
    auto* disc = app.add_subcommand("disc", "discrepancy of a point file");
    std::string disc_points, disc_measure = "l2";
    double disc_p = 2.0;
    unsigned disc_nodes = 8;
    std::size_t disc_cells = 10000000;
    std::string disc_mats;
    std::uint64_t disc_N = 0;
    unsigned disc_n = 0, disc_q = 0;
    disc->add_option("--points", disc_points, "point file");
    disc->add_option("--matrices", disc_mats, "matrix file to generate from instead of --points");
    disc->add_option("--N", disc_N, "points to generate from --matrices");
    disc->add_option("--n", disc_n, "digits when generating: N = 2^n");
    disc->add_option("--q", disc_q, "precision when generating");
    disc->add_option("--measure", disc_measure, "l2 | lp | star")->check(CLI::IsMember({"l2", "lp", "star"}));
    disc->add_option("--p", disc_p, "exponent for --measure lp");
    disc->add_option("--nodes", disc_nodes, "Gauss-Legendre nodes per axis");
    disc->add_option("--max-cells", disc_cells, "cell/corner enumeration ceiling");

    // haar
    auto* haar = app.add_subcommand("haar", "Haar coefficients of the discrepancy function");
    std::string haar_points, haar_j, haar_m, haar_levels;
    bool haar_parseval = false;
    int haar_cap = -1;
    unsigned haar_n = 0, haar_t = 0;
    std::string haar_mats;
    std::uint64_t haar_N = 0;
    unsigned haar_gen_n = 0;
    haar->add_option("--points", haar_points, "point file");
    haar->add_option("--matrices", haar_mats, "matrix file to generate from instead of --points");
    haar->add_option("--N", haar_N, "points to generate from --matrices");
    haar->add_option("--gen-n", haar_gen_n, "digits when generating: N = 2^n");
    haar->add_option("--j", haar_j, "level vector, e.g. 1,-1,3");
    haar->add_option("--m", haar_m, "position vector");
    haar->add_flag("--parseval", haar_parseval, "truncated Parseval sum with tail certificate");
    haar->add_option("--cap", haar_cap, "level cap for --parseval");
    haar->add_option("--profile", haar_levels, "decay profile at these |j| values, e.g. 0,1,2");
    haar->add_option("--n", haar_n, "net digits for --profile (N = 2^n)");
    haar->add_option("--t", haar_t, "net quality parameter for --profile");

    // scan
    auto* scan = app.add_subcommand("scan", "discrepancy scaling scan over a dyadic range of N");
    std::string scan_kind_str, scan_p = "2";
    std::size_t scan_d = 1;
    unsigned scan_nmax = 12, scan_guard = 14;
    bool scan_star = false;
    double scan_logexp = 0;
    CLI::Option* scan_logexp_opt = scan->add_option(
        "--log-exponent", scan_logexp, "override the (log N)^e normalization exponent");
    scan->add_option("--kind", scan_kind_str, "vdc | vdc-sym | tezuka-order1 | interlaced-order2")->required();
    scan->add_option("--d", scan_d, "dimension");
    scan->add_option("--n-max", scan_nmax, "scan N = 2 .. 2^n_max");
    scan->add_option("--n-max-guard", scan_guard, "raise the desk-scale guard on n_max");
    scan->add_option("--p", scan_p, "comma-separated list of L_p exponents");
    scan->add_flag("--star", scan_star, "also scan the star discrepancy");
    bool scan_dense = false;
    scan->add_flag("--dense", scan_dense, "sample every N above 256 too (cheap measures only)");

    // global flags may follow the subcommand
    for (CLI::App* sc : {gen, mats, tv, eq, disc, haar, scan}) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        set_worker_count(g.threads);
        if (*seed_opt) g.seed = seed_val;

        if (*gen) {
            SequenceKind kind = parse_kind(gen_kind_str);
            bool matrix_kind =
                kind == SequenceKind::tezuka_order1 || kind == SequenceKind::interlaced_order2;
            if (matrix_kind && gen_d == 0)
                throw CLI::ValidationError("--d", "required for tezuka-order1 and interlaced-order2");
            if (!*gen_N_opt && !*gen_n_opt) throw CLI::ValidationError("--N", "give --N or --n");
            if (*gen_N_opt && *gen_n_opt) throw CLI::ValidationError("--N", "give only one of --N and --n");
            std::uint64_t N = *gen_n_opt ? (std::uint64_t(1) << gen_n) : gen_N;
            if (N == 0) throw CLI::ValidationError("--N", "need N >= 1");
            std::optional<unsigned> q;
            if (gen_q) q = gen_q;
            DyadicPointSet pts = make_sequence_points(kind, matrix_kind ? gen_d : 1, N, q, g.seed);
            std::ostringstream ss;
            write_points(pts, ss);
            emit(g, ss.str());
            std::cerr << "# kind=" << to_string(kind) << " d=" << pts.d << " q=" << pts.precision_q
                      << " N=" << pts.size() << (g.seed ? " shifted" : "") << "\n";
        } else if (*mats) {
            SequenceKind kind = parse_kind(mat_kind_str);
            GenMatrixSet set;
            if (kind == SequenceKind::tezuka_order1) {
                if (mat_s == 0) throw CLI::ValidationError("--s", "required for tezuka-order1");
                set = tezuka_matrices(mat_s, mat_q ? mat_q : mat_n, mat_n);
            } else if (kind == SequenceKind::interlaced_order2) {
                if (mat_d == 0) throw CLI::ValidationError("--d", "required for interlaced-order2");
                set = interlace(tezuka_matrices(2 * mat_d, mat_q ? mat_q : mat_n, mat_n));
            } else {
                throw CLI::ValidationError("--kind", "matrices exist for the matrix-based kinds only");
            }
            std::ostringstream ss;
            write_matrices(set, ss);
            emit(g, ss.str());
        } else if (*tv) {
            GenMatrixSet set = read_matrices_file(tv_file);
            int alpha = tv_alpha ? tv_alpha : set.order;
            unsigned n = tv_n;
            if (n == 0)
                n = static_cast<unsigned>(std::min<std::size_t>(set.n_cols, set.q_rows / alpha));
            auto start = std::chrono::steady_clock::now();
            NetQuality q = t_value(set, alpha, n);
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            json j{{"alpha", q.alpha},    {"n", q.n},
                   {"d", q.d},            {"t_exact", q.t_exact},
                   {"t_upper", q.t_upper}, {"checked_selections", q.checked_selections}};
            emit(g, j.dump(2) + "\n");
            std::cerr << "# elapsed " << elapsed << " s\n";
        } else if (*eq) {
            DyadicPointSet pts = load_points(g, eq_points, eq_mats, 0, eq_n, 0);
            EquiReport rep = check_equidistribution(pts, eq_t, eq_alpha);
            json j{{"alpha", eq_alpha},
                   {"t", eq_t},
                   {"d", pts.d},
                   {"N", pts.size()},
                   {"interval_order", rep.interval_order},
                   {"allowed_max", rep.allowed_max},
                   {"max_count", rep.max_count},
                   {"exact", rep.exact},
                   {"pass", rep.pass},
                   {"intervals_checked", rep.intervals_checked}};
            emit(g, j.dump(2) + "\n");
        } else if (*disc) {
            DyadicPointSet pts = load_points(g, disc_points, disc_mats, disc_N, disc_n, disc_q);
            DiscrepancyReport rep;
            if (disc_measure == "l2") {
                rep = l2_exact(pts);
            } else if (disc_measure == "star") {
                rep = star_discrepancy(pts, disc_cells);
            } else {
                CellwiseOptions opt;
                opt.nodes_per_axis = disc_nodes;
                opt.max_cells = disc_cells;
                rep = lp_cellwise(pts, disc_p, opt);
            }
            emit(g, g.format == "csv" ? report_to_csv(rep) : report_to_json(rep).dump(2) + "\n");
        } else if (*haar) {
            DyadicPointSet pts = load_points(g, haar_points, haar_mats, haar_N, haar_gen_n, 0);
            if (haar_parseval) {
                int cap = haar_cap >= 0 ? haar_cap : static_cast<int>(pts.precision_q) + 1;
                ParsevalResult r = parseval_l2(pts, cap);
                json j{{"level_cap", r.level_cap},
                       {"partial_sum", r.partial_sum},
                       {"certificate_valid", r.certificate_valid}};
                if (r.certificate_valid) j["l2sq_gap_certificate"] = r.gap_certificate;
                emit(g, j.dump(2) + "\n");
            } else if (!haar_levels.empty()) {
                if (haar_n == 0) throw CLI::ValidationError("--n", "required for --profile");
                std::vector<unsigned> levels;
                for (long long v : parse_int_list(haar_levels, "--profile")) {
                    if (v < 0) throw CLI::ValidationError("--profile", "levels are >= 0");
                    levels.push_back(static_cast<unsigned>(v));
                }
                auto rows = decay_profile(pts, haar_n, haar_t, levels);
                if (g.format == "csv") {
                    std::ostringstream ss;
                    ss << "level,observed_max,bound,ratio\n";
                    char buf[128];
                    for (const auto& r : rows) {
                        std::snprintf(buf, sizeof buf, "%u,%.17g,%.17g,%.6g\n", r.level, r.observed_max,
                                      r.bound, r.ratio);
                        ss << buf;
                    }
                    emit(g, ss.str());
                } else {
                    json j = json::array();
                    for (const auto& r : rows)
                        j.push_back({{"level", r.level},
                                     {"observed_max", r.observed_max},
                                     {"bound", r.bound},
                                     {"ratio", r.ratio}});
                    emit(g, j.dump(2) + "\n");
                }
            } else {
                if (haar_j.empty() || haar_m.empty())
                    throw CLI::ValidationError("--j", "give --j and --m, or --parseval, or --profile");
                std::vector<int> level;
                for (long long v : parse_int_list(haar_j, "--j")) level.push_back(static_cast<int>(v));
                std::vector<std::uint64_t> pos;
                for (long long v : parse_int_list(haar_m, "--m")) {
                    if (v < 0) throw CLI::ValidationError("--m", "positions are >= 0");
                    pos.push_back(static_cast<std::uint64_t>(v));
                }
                HaarIndex idx(level, pos);
                Rational c = haar_coefficient(pts, idx);
                json j{{"j", level}, {"m", pos}, {"value", c.to_double()}, {"value_exact", c.to_string()}};
                emit(g, j.dump(2) + "\n");
            }
        } else if (*scan) {
            ScanConfig cfg;
            cfg.kind = parse_kind(scan_kind_str);
            cfg.d = scan_d;
            cfg.n_max = scan_nmax;
            cfg.n_max_guard = scan_guard;
            cfg.p_values = parse_double_list(scan_p, "--p");
            cfg.star = scan_star;
            cfg.dense = scan_dense;
            cfg.shift_seed = g.seed;
            if (*scan_logexp_opt) cfg.log_exponent = scan_logexp;
            ScanResult res = run_scan(cfg);
            std::ostringstream ss;
            write_scan_csv(res, ss);
            emit(g, ss.str());
            for (const MeasureSummary& s : res.summary)
                std::cerr << "# " << s.measure << ": runmax=" << s.running_max
                          << " bottom=" << s.max_bottom << " top=" << s.max_top
                          << (s.bounded_proxy ? " bounded" : " NOT bounded") << "\n";
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
