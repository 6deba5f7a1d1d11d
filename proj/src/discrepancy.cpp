#include "hodisc/discrepancy.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <numbers>

#include "hodisc/parallel.hpp"

namespace hodisc {

Rational local_discrepancy(const DyadicPointSet& points, const std::vector<Rational>& x) {
    if (x.size() != points.d) throw std::invalid_argument("local_discrepancy: dimension mismatch");
    for (const Rational& xi : x)
        if (xi < Rational(0) || xi > Rational(1))
            throw std::invalid_argument("local_discrepancy: x must lie in [0,1]^d");

    std::uint64_t N = points.size();
    if (N == 0) throw std::invalid_argument("local_discrepancy: empty point set");

    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k < N; ++k) {
        bool inside = true;
        for (std::size_t i = 0; i < points.d && inside; ++i)
            inside = Rational::dyadic(points.at(k, i), points.precision_q) < x[i];
        if (inside) ++count;
    }

    Rational volume(1);
    for (const Rational& xi : x) volume *= xi;
    return Rational(static_cast<Rational::int128>(count), static_cast<Rational::int128>(N)) - volume;
}

namespace {

long double exact_value(std::uint64_t v, unsigned q) {
    return static_cast<long double>(v) * std::exp2(-static_cast<long double>(q));
}

}  // namespace

DiscrepancyReport l2_exact(const DyadicPointSet& points) {
    std::uint64_t N = points.size();
    if (N == 0) throw std::invalid_argument("l2_exact: empty point set");
    std::size_t d = points.d;

    std::vector<long double> xs(N * d);
    for (std::size_t i = 0; i < N * d; ++i) xs[i] = exact_value(points.coords[i], points.precision_q);

    constexpr std::size_t kChunk = 64;
    std::size_t n_chunks = (N + kChunk - 1) / kChunk;
    std::vector<long double> sum1(n_chunks, 0), sum2(n_chunks, 0), abs2(n_chunks, 0);

    parallel_chunks(N, kChunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
        long double s1 = 0, s2 = 0, a2 = 0;
        for (std::size_t k = begin; k < end; ++k) {
            long double prod = 1;
            for (std::size_t i = 0; i < d; ++i) prod *= (1 - xs[k * d + i] * xs[k * d + i]) / 2;
            s1 += prod;
            // pair terms with l < k appear twice, the diagonal once
            for (std::size_t l = 0; l < k; ++l) {
                long double pm = 1;
                for (std::size_t i = 0; i < d; ++i) pm *= 1 - std::max(xs[k * d + i], xs[l * d + i]);
                s2 += 2 * pm;
                a2 += 2 * pm;
            }
            long double pd = 1;
            for (std::size_t i = 0; i < d; ++i) pd *= 1 - xs[k * d + i];
            s2 += pd;
            a2 += pd;
        }
        sum1[c] = s1;
        sum2[c] = s2;
        abs2[c] = a2;
    });

    long double t1 = 0, t2 = 0, ta = 0;
    for (std::size_t c = 0; c < n_chunks; ++c) {
        t1 += sum1[c];
        t2 += sum2[c];
        ta += abs2[c];
    }

    long double Nld = static_cast<long double>(N);
    long double l2sq = std::pow(3.0L, -static_cast<long double>(d)) - 2.0L / Nld * t1 + t2 / (Nld * Nld);
    long double abs_scale = 1 + 2.0L / Nld * t1 + ta / (Nld * Nld);
    long double err_sq = 64 * LDBL_EPSILON * abs_scale;  // forward rounding estimate

    DiscrepancyReport rep;
    rep.N = N;
    rep.d = d;
    rep.measure = "L2";
    rep.method = "closed-form";
    long double value = std::sqrt(std::max(l2sq, 0.0L));
    rep.value = static_cast<double>(value);
    rep.error_bound = static_cast<double>(value > 0 ? err_sq / (2 * value) : std::sqrt(err_sq));
    return rep;
}

namespace {

struct GLRule {
    std::vector<long double> nodes;    // on [-1, 1]
    std::vector<long double> weights;
};

const GLRule& gauss_legendre(unsigned n) {
    static std::map<unsigned, GLRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GLRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
        long double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1, p1 = x;
            for (unsigned k = 2; k <= n; ++k) {
                long double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            long double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-19L) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0L / ((1 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

// |f|^p with a fast path for integer exponents
struct PowAbs {
    bool integral;
    unsigned ip;
    long double p;
    explicit PowAbs(double p_) : integral(p_ == std::floor(p_) && p_ <= 64), ip(static_cast<unsigned>(p_)), p(p_) {}
    long double operator()(long double f) const {
        f = std::fabs(f);
        if (!integral) return std::pow(f, p);
        long double r = 1, base = f;
        unsigned e = ip;
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }
};

struct CellIntegrator {
    std::size_t d;
    long double cN;  // counting part, constant on the cell
    const GLRule* rule;
    const PowAbs* pw;
    bool even_integer_p;

    long double sum = 0;
    long double err = 0;

    long double gl(const long double* lo, const long double* hi) const {
        unsigned K = static_cast<unsigned>(rule->nodes.size());
        // per-axis scaled nodes and weights
        long double sx[8 * 32], sw[8 * 32];
        for (std::size_t i = 0; i < d; ++i) {
            long double mid = (lo[i] + hi[i]) / 2, half = (hi[i] - lo[i]) / 2;
            for (unsigned a = 0; a < K; ++a) {
                sx[i * K + a] = mid + half * rule->nodes[a];
                sw[i * K + a] = half * rule->weights[a];
            }
        }
        long double acc = 0;
        std::size_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= K;
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rem = flat;
            long double xprod = 1, wprod = 1;
            for (std::size_t i = 0; i < d; ++i) {
                unsigned a = static_cast<unsigned>(rem % K);
                rem /= K;
                xprod *= sx[i * K + a];
                wprod *= sw[i * K + a];
            }
            acc += wprod * (*pw)(cN - xprod);
        }
        return acc;
    }

    void integrate(const long double* lo, const long double* hi, int depth) {
        long double plo = 1, phi = 1;
        for (std::size_t i = 0; i < d; ++i) {
            plo *= lo[i];
            phi *= hi[i];
        }
        long double f_lo = cN - plo;  // maximum of f on the cell (f decreases in x)
        long double f_hi = cN - phi;
        bool crossing = !even_integer_p && f_lo > 0 && f_hi < 0;
        if (!crossing) {
            sum += gl(lo, hi);
            return;
        }
        if (depth == 0) {
            sum += gl(lo, hi);
            long double vol = 1;
            for (std::size_t i = 0; i < d; ++i) vol *= hi[i] - lo[i];
            err += vol * (*pw)(std::max(std::fabs(f_lo), std::fabs(f_hi)));
            return;
        }
        long double clo[8], chi[8];
        for (std::size_t corner = 0; corner < (std::size_t(1) << d); ++corner) {
            for (std::size_t i = 0; i < d; ++i) {
                long double mid = (lo[i] + hi[i]) / 2;
                if ((corner >> i) & 1u) {
                    clo[i] = mid;
                    chi[i] = hi[i];
                } else {
                    clo[i] = lo[i];
                    chi[i] = mid;
                }
            }
            integrate(clo, chi, depth - 1);
        }
    }
};

struct CellGrid {
    std::size_t d;
    std::uint64_t N;
    std::vector<std::vector<std::uint64_t>> bounds;  // per axis, strictly increasing numerators
    std::vector<std::size_t> cells;                  // bounds[i].size() - 1
    std::vector<std::size_t> strides;
    std::size_t total = 1;
    std::vector<std::uint32_t> prefix;  // #{z : z_i <= lower bound of cell}

    // corner_grid=false: cell decomposition, boundaries {0} u coords u {1},
    // grid entry = cell between consecutive boundaries. corner_grid=true:
    // critical corners, entries are the values coords u {1} themselves.
    CellGrid(const DyadicPointSet& points, bool corner_grid, std::size_t ceiling, const char* who) {
        d = points.d;
        N = points.size();
        bounds.resize(d);
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<std::uint64_t>& b = bounds[i];
            b.reserve(N + 2);
            for (std::uint64_t k = 0; k < N; ++k) b.push_back(points.at(k, i));
            if (!corner_grid) b.push_back(0);
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            b.push_back(std::uint64_t(1) << points.precision_q);
        }

        unsigned __int128 tot = 1;
        cells.resize(d);
        for (std::size_t i = 0; i < d; ++i) {
            cells[i] = corner_grid ? bounds[i].size() : bounds[i].size() - 1;
            tot *= cells[i];
            if (tot > ceiling)
                throw GuardError(std::string(who) + ": grid of " + int128_to_string(static_cast<__int128>(tot)) +
                                 "+ entries exceeds ceiling " + std::to_string(ceiling));
        }
        total = static_cast<std::size_t>(tot);
        strides.resize(d);
        std::size_t stride = 1;
        for (std::size_t i = d; i-- > 0;) {
            strides[i] = stride;
            stride *= cells[i];
        }

        // histogram of coordinate slots, then prefix sums per axis:
        // prefix[u] = #{z : slot_i(z) <= u_i for all i}
        prefix.assign(total, 0);
        for (std::uint64_t k = 0; k < N; ++k) {
            std::size_t flat = 0;
            for (std::size_t i = 0; i < d; ++i) {
                const std::vector<std::uint64_t>& b = bounds[i];
                std::size_t slot = static_cast<std::size_t>(
                    std::lower_bound(b.begin(), b.end(), points.at(k, i)) - b.begin());
                flat += slot * strides[i];
            }
            ++prefix[flat];
        }
        for (std::size_t axis = 0; axis < d; ++axis) {
            std::size_t stride_a = strides[axis];
            std::size_t len = cells[axis];
            for (std::size_t base = 0; base < total; ++base) {
                std::size_t pos = (base / stride_a) % len;
                if (pos > 0) continue;
                for (std::size_t t = 1; t < len; ++t)
                    prefix[base + t * stride_a] += prefix[base + (t - 1) * stride_a];
            }
        }
    }
};

}  // namespace

DiscrepancyReport lp_cellwise(const DyadicPointSet& points, double p, CellwiseOptions opt) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_cellwise: p must be >= 1");
    std::uint64_t N = points.size();
    if (N == 0) throw std::invalid_argument("lp_cellwise: empty point set");
    if (points.d > 8) throw std::invalid_argument("lp_cellwise: d > 8 not supported");
    if (points.precision_q > 63) throw std::invalid_argument("lp_cellwise: precision above 63 bits");

    bool int_p = p == std::floor(p) && p <= 64;
    // integer p: the integrand is polynomial of per-axis degree p away from
    // sign changes, so the minimal rule with 2K-1 >= p is already exact and
    // larger node counts only cost time; nodes_per_axis governs non-integer p
    unsigned nodes = int_p ? (static_cast<unsigned>(p) + 2) / 2
                           : std::min<unsigned>(std::max<unsigned>(opt.nodes_per_axis, 1), 32);
    bool even_p = int_p && (static_cast<unsigned>(p) % 2 == 0);

    CellGrid grid(points, false, opt.max_cells, "lp_cellwise");
    const GLRule& rule = gauss_legendre(nodes);
    PowAbs pw(p);

    constexpr std::size_t kChunk = 2048;
    std::size_t n_chunks = (grid.total + kChunk - 1) / kChunk;
    std::vector<long double> sums(n_chunks, 0), errs(n_chunks, 0);

    std::size_t d = points.d;
    unsigned q = points.precision_q;
    long double Nld = static_cast<long double>(N);

    parallel_chunks(grid.total, kChunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
        CellIntegrator integ;
        integ.d = d;
        integ.rule = &rule;
        integ.pw = &pw;
        integ.even_integer_p = even_p;
        long double lo[8], hi[8];
        for (std::size_t flat = begin; flat < end; ++flat) {
            std::size_t rem = flat;
            for (std::size_t i = 0; i < d; ++i) {
                std::size_t t = rem / grid.strides[i];
                rem %= grid.strides[i];
                lo[i] = exact_value(grid.bounds[i][t], q);
                hi[i] = exact_value(grid.bounds[i][t + 1], q);
            }
            integ.cN = static_cast<long double>(grid.prefix[flat]) / Nld;
            integ.integrate(lo, hi, opt.bisect_depth);
        }
        sums[c] = integ.sum;
        errs[c] = integ.err;
    });

    long double total = 0, err = 0;
    for (std::size_t c = 0; c < n_chunks; ++c) {
        total += sums[c];
        err += errs[c];
    }
    total = std::max(total, 0.0L);

    DiscrepancyReport rep;
    rep.N = N;
    rep.d = points.d;
    rep.measure = "Lp";
    rep.p = p;
    rep.method = "cellwise-quadrature";
    long double value = std::pow(total, 1.0L / p);
    rep.value = static_cast<double>(value);
    rep.error_bound = static_cast<double>(std::pow(total + err, 1.0L / p) - value +
                                          64 * LDBL_EPSILON * (value > 0 ? value : 1));
    return rep;
}

DiscrepancyReport star_discrepancy(const DyadicPointSet& points, std::size_t max_corners) {
    std::uint64_t N = points.size();
    if (N == 0) throw std::invalid_argument("star_discrepancy: empty point set");
    if (points.precision_q > 63) throw std::invalid_argument("star_discrepancy: precision above 63 bits");

    CellGrid grid(points, true, max_corners, "star_discrepancy");
    std::size_t d = points.d;
    unsigned q = points.precision_q;
    Rational Nr(static_cast<Rational::int128>(N), 1);

    Rational best(0);
    std::vector<std::size_t> u(d);
    for (std::size_t flat = 0; flat < grid.total; ++flat) {
        std::size_t rem = flat;
        bool has_zero_slot = false;
        Rational vol(1);
        for (std::size_t i = 0; i < d; ++i) {
            u[i] = rem / grid.strides[i];
            rem %= grid.strides[i];
            if (u[i] == 0) has_zero_slot = true;
            vol *= Rational::dyadic(grid.bounds[i][u[i]], q);
        }

        // closed corner: count z <= y against the volume (limit from above)
        Rational closed = Rational(static_cast<Rational::int128>(grid.prefix[flat]), 1) / Nr - vol;
        if (closed > best) best = closed;

        // open corner: volume against count z < y (limit from below)
        std::uint32_t open_count = 0;
        if (!has_zero_slot) {
            std::size_t oflat = 0;
            for (std::size_t i = 0; i < d; ++i) oflat += (u[i] - 1) * grid.strides[i];
            open_count = grid.prefix[oflat];
        }
        Rational open = vol - Rational(static_cast<Rational::int128>(open_count), 1) / Nr;
        if (open > best) best = open;
    }

    DiscrepancyReport rep;
    rep.N = N;
    rep.d = d;
    rep.measure = "star";
    rep.method = "enumeration";
    rep.value = static_cast<double>(best.to_long_double());
    rep.error_bound = 0;
    return rep;
}

}  // namespace hodisc
