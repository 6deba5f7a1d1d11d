#include "hodisc/netverify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hodisc {

namespace {

struct Selection {
    unsigned weight;
    std::vector<std::size_t> rows;  // 0-based row indices into the coordinate's matrix
};

// Closure representatives of the admissible per-coordinate selections, sorted
// by counted weight.
std::vector<Selection> coordinate_selections(int alpha, unsigned q, unsigned budget) {
    std::vector<Selection> out;
    if (alpha == 1) {
        for (unsigned v = 1; v <= std::min(q, budget); ++v) {
            Selection s;
            s.weight = v;
            for (unsigned r = 1; r <= v; ++r) s.rows.push_back(r - 1);
            out.push_back(std::move(s));
        }
    } else {
        for (unsigned a = 1; a <= std::min(q, budget); ++a) {
            Selection s;
            s.weight = a;
            s.rows.push_back(a - 1);
            out.push_back(std::move(s));
        }
        for (unsigned a = 2; a <= q; ++a) {
            for (unsigned b = 1; b < a; ++b) {
                if (a + b > budget) break;
                Selection s;
                s.weight = a + b;
                for (unsigned r = 1; r <= b; ++r) s.rows.push_back(r - 1);
                s.rows.push_back(a - 1);
                out.push_back(std::move(s));
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const Selection& x, const Selection& y) { return x.weight < y.weight; });
    }
    return out;
}

struct NetSearch {
    const std::vector<std::vector<std::uint64_t>>* rows;      // [coordinate][row]
    const std::vector<std::vector<Selection>>* selections;    // per coordinate, weight-sorted
    std::uint64_t checked = 0;
    bool violated = false;

    void dfs(std::size_t j, unsigned budget, const GF2Basis& basis) {
        if (violated) return;
        if (j == rows->size()) {
            ++checked;
            return;
        }
        dfs(j + 1, budget, basis);  // this coordinate contributes no rows
        for (const Selection& sel : (*selections)[j]) {
            if (sel.weight > budget) break;
            GF2Basis extended = basis;
            for (std::size_t r : sel.rows) {
                if (!extended.insert((*rows)[j][r])) {
                    // dependent rows within budget: the selection made of the
                    // choices so far (remaining coordinates empty) violates
                    // the net condition
                    violated = true;
                    ++checked;
                    return;
                }
            }
            dfs(j + 1, budget - sel.weight, extended);
            if (violated) return;
        }
    }
};

}  // namespace

bool is_order_alpha_net(const GenMatrixSet& set, int alpha, unsigned n, unsigned t,
                        std::uint64_t* checked_selections) {
    if (alpha != 1 && alpha != 2) throw std::invalid_argument("is_order_alpha_net: alpha must be 1 or 2");
    if (n == 0) throw std::invalid_argument("is_order_alpha_net: n must be >= 1");
    unsigned q = static_cast<unsigned>(alpha) * n;
    if (t > q) throw std::invalid_argument("is_order_alpha_net: t out of range [0, alpha*n]");
    if (set.q_rows < q) throw std::invalid_argument("is_order_alpha_net: set has fewer than alpha*n rows");
    if (set.n_cols < n) throw std::invalid_argument("is_order_alpha_net: set has fewer than n columns");

    std::uint64_t mask = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    std::vector<std::vector<std::uint64_t>> rows(set.s());
    for (std::size_t j = 0; j < set.s(); ++j) {
        rows[j].resize(q);
        for (unsigned r = 0; r < q; ++r) rows[j][r] = set.matrices[j].row(r) & mask;
    }

    unsigned budget = q - t;
    std::vector<std::vector<Selection>> selections(set.s());
    for (std::size_t j = 0; j < set.s(); ++j) selections[j] = coordinate_selections(alpha, q, budget);

    NetSearch search;
    search.rows = &rows;
    search.selections = &selections;
    search.dfs(0, budget, GF2Basis{});
    if (checked_selections) *checked_selections = search.checked;
    return !search.violated;
}

NetQuality t_value(const GenMatrixSet& set, int alpha, unsigned n) {
    NetQuality quality;
    quality.alpha = alpha;
    quality.n = n;
    quality.d = set.s();
    unsigned q = static_cast<unsigned>(alpha) * n;
    quality.t_upper = std::min(set.t_upper, q);
    quality.checked_selections = 0;
    for (unsigned t = 0; t <= q; ++t) {
        std::uint64_t checked = 0;
        bool pass = is_order_alpha_net(set, alpha, n, t, &checked);
        quality.checked_selections += checked;
        if (pass) {
            quality.t_exact = t;
            return quality;
        }
    }
    // unreachable: t = alpha*n leaves only the empty selection
    throw std::logic_error("t_value: no passing t");
}

namespace {

void compositions(unsigned total, std::size_t parts, std::vector<unsigned>& current,
                  const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (parts == 1) {
        current.push_back(total);
        fn(current);
        current.pop_back();
        return;
    }
    for (unsigned head = 0; head <= total; ++head) {
        current.push_back(head);
        compositions(total - head, parts - 1, current, fn);
        current.pop_back();
    }
}

}  // namespace

EquiReport check_equidistribution(const DyadicPointSet& points, unsigned t, int alpha) {
    if (alpha != 1 && alpha != 2) throw std::invalid_argument("check_equidistribution: alpha must be 1 or 2");
    std::uint64_t N = points.size();
    if (N == 0 || (N & (N - 1)) != 0)
        throw std::invalid_argument("check_equidistribution: point count must be a power of two");
    unsigned n = static_cast<unsigned>(std::countr_zero(N));
    if (t > static_cast<unsigned>(alpha) * n)
        throw std::invalid_argument("check_equidistribution: t out of range [0, alpha*n]");

    unsigned tceil = (t + static_cast<unsigned>(alpha) - 1) / static_cast<unsigned>(alpha);
    unsigned order = n > tceil ? n - tceil : 0;
    if (order > points.precision_q)
        throw std::invalid_argument("check_equidistribution: interval order exceeds point precision");

    EquiReport report;
    report.interval_order = order;
    report.allowed_max = std::uint64_t(1) << (n - order);
    report.exact = true;

    std::vector<std::uint64_t> buckets(std::uint64_t(1) << order);
    std::vector<unsigned> j;
    compositions(order, points.d, j, [&](const std::vector<unsigned>& levels) {
        std::fill(buckets.begin(), buckets.end(), 0);
        for (std::size_t k = 0; k < N; ++k) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < points.d; ++i) {
                if (levels[i] == 0) continue;
                key <<= levels[i];
                key |= points.at(k, i) >> (points.precision_q - levels[i]);
            }
            ++buckets[key];
        }
        for (std::uint64_t c : buckets) {
            report.max_count = std::max(report.max_count, c);
            if (c != report.allowed_max) report.exact = false;
        }
        report.intervals_checked += buckets.size();
    });

    report.pass = report.max_count <= report.allowed_max;
    if (alpha == 1) report.pass = report.pass && report.exact;
    return report;
}

}  // namespace hodisc
