#include "hodisc/haar.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace hodisc {

HaarIndex::HaarIndex(std::vector<int> level_, std::vector<std::uint64_t> position_)
    : level(std::move(level_)), position(std::move(position_)) {
    if (level.size() != position.size() || level.empty())
        throw std::invalid_argument("HaarIndex: level and position must have equal positive length");
    for (std::size_t i = 0; i < level.size(); ++i) {
        if (level[i] < -1) throw std::invalid_argument("HaarIndex: level must be >= -1");
        if (level[i] <= 0) {
            if (position[i] != 0) throw std::invalid_argument("HaarIndex: position must be 0 at level <= 0");
        } else if (level[i] < 64 && position[i] >= (std::uint64_t(1) << level[i])) {
            throw std::invalid_argument("HaarIndex: position out of range");
        }
    }
}

unsigned HaarIndex::order() const {
    unsigned s = 0;
    for (int j : level) s += static_cast<unsigned>(std::max(j, 0));
    return s;
}

Rational haar_volume_factor(int level) {
    if (level == -1) return Rational(1, 2);
    if (level < -1 || level > 60) throw std::invalid_argument("haar_volume_factor: level out of range");
    return Rational(-1, Rational::int128(1) << (2 * level + 2));
}

Rational haar_counting_factor(std::uint64_t v, unsigned q, int level, std::uint64_t m) {
    if (q == 0 || q > 63) throw std::invalid_argument("haar_counting_factor: need 1 <= q <= 63");
    Rational::int128 den = Rational::int128(1) << q;
    if (level == -1) return Rational(den - v, den);
    unsigned j = static_cast<unsigned>(level);
    if (j >= q) return Rational(0);  // dyadic z is never interior below its own precision
    if ((v >> (q - j)) != m) return Rational(0);
    std::uint64_t rem = v & ((std::uint64_t(1) << (q - j)) - 1);
    if (rem == 0) return Rational(0);  // z on the left edge
    std::uint64_t half = std::uint64_t(1) << (q - j - 1);
    if (rem < half) return Rational(-static_cast<Rational::int128>(rem), den);  // m 2^-j - z
    return Rational(static_cast<Rational::int128>(rem) - (Rational::int128(1) << (q - j)), den);  // z - (m+1) 2^-j
}

Rational haar_coefficient(const DyadicPointSet& points, const HaarIndex& idx) {
    if (idx.d() != points.d) throw std::invalid_argument("haar_coefficient: dimension mismatch");
    std::uint64_t N = points.size();
    if (N == 0) throw std::invalid_argument("haar_coefficient: empty point set");

    Rational counting(0);
    for (std::uint64_t k = 0; k < N; ++k) {
        Rational prod(1);
        for (std::size_t i = 0; i < points.d && !prod.is_zero(); ++i)
            prod *= haar_counting_factor(points.at(k, i), points.precision_q, idx.level[i], idx.position[i]);
        counting += prod;
    }
    Rational volume(1);
    for (int j : idx.level) volume *= haar_volume_factor(j);
    return counting / Rational(static_cast<Rational::int128>(N), 1) - volume;
}

HaarLevelSums haar_level_sums(const DyadicPointSet& points, const std::vector<int>& level) {
    if (level.size() != points.d) throw std::invalid_argument("haar_level_sums: dimension mismatch");
    unsigned order = 0;
    for (int j : level) {
        if (j < -1) throw std::invalid_argument("haar_level_sums: level must be >= -1");
        order += static_cast<unsigned>(std::max(j, 0));
    }
    if (order > 120) throw std::invalid_argument("haar_level_sums: |j| too large");

    HaarLevelSums out;
    out.volume_factor = Rational(1);
    for (int j : level) out.volume_factor *= haar_volume_factor(j);
    out.total_intervals = std::exp2(static_cast<long double>(order));

    std::uint64_t N = points.size();
    std::vector<std::pair<unsigned __int128, Rational>> terms;
    terms.reserve(N);
    for (std::uint64_t k = 0; k < N; ++k) {
        unsigned __int128 key = 0;
        Rational prod(1);
        bool interior = true;
        for (std::size_t i = 0; i < points.d; ++i) {
            int j = level[i];
            std::uint64_t v = points.at(k, i);
            std::uint64_t m = 0;
            if (j > 0) {
                if (static_cast<unsigned>(j) >= points.precision_q) {
                    interior = false;
                    break;
                }
                m = v >> (points.precision_q - static_cast<unsigned>(j));
                key = (key << j) | m;
            } else if (j == 0) {
                m = 0;
            }
            Rational g = haar_counting_factor(v, points.precision_q, j, m);
            if (g.is_zero()) {
                interior = false;
                break;
            }
            prod *= g;
        }
        if (interior) terms.emplace_back(key, prod);
    }

    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < terms.size();) {
        Rational sum = terms[i].second;
        std::size_t e = i + 1;
        while (e < terms.size() && terms[e].first == terms[i].first) sum += terms[e++].second;
        out.candidate_sums.push_back(sum);
        i = e;
    }
    return out;
}

namespace {

// all j in {-1, ..., cap}^d
void for_each_level_vector(std::size_t d, int cap, std::vector<int>& j,
                           const std::function<void(const std::vector<int>&)>& fn) {
    if (j.size() == d) {
        fn(j);
        return;
    }
    for (int v = -1; v <= cap; ++v) {
        j.push_back(v);
        for_each_level_vector(d, cap, j, fn);
        j.pop_back();
    }
}

// all j in N_{-1}^d with |j| = order
void for_each_level_vector_of_order(std::size_t d, unsigned order, std::vector<int>& j,
                                    const std::function<void(const std::vector<int>&)>& fn) {
    if (j.size() == d - 1) {
        j.push_back(static_cast<int>(order));
        fn(j);
        j.pop_back();
        if (order == 0) {
            j.push_back(-1);
            fn(j);
            j.pop_back();
        }
        return;
    }
    for (unsigned v = 0; v <= order; ++v) {
        j.push_back(static_cast<int>(v));
        for_each_level_vector_of_order(d, order - v, j, fn);
        j.pop_back();
    }
    j.push_back(-1);
    for_each_level_vector_of_order(d, order, j, fn);
    j.pop_back();
}

}  // namespace

ParsevalResult parseval_l2(const DyadicPointSet& points, int level_cap) {
    if (level_cap < 0) throw std::invalid_argument("parseval_l2: level_cap must be >= 0");
    std::uint64_t N = points.size();
    if (N == 0) throw std::invalid_argument("parseval_l2: empty point set");

    long double acc = 0;
    long double Nld = static_cast<long double>(N);
    std::vector<int> j;
    for_each_level_vector(points.d, level_cap, j, [&](const std::vector<int>& level) {
        HaarLevelSums sums = haar_level_sums(points, level);
        unsigned order = 0;
        for (int ji : level) order += static_cast<unsigned>(std::max(ji, 0));
        long double weight = std::exp2(static_cast<long double>(order));
        long double v = sums.volume_factor.to_long_double();
        long double level_acc = 0;
        for (const Rational& s : sums.candidate_sums) {
            long double coeff = s.to_long_double() / Nld - v;
            level_acc += coeff * coeff;
        }
        level_acc += (sums.total_intervals - static_cast<long double>(sums.candidate_sums.size())) * v * v;
        acc += weight * level_acc;
    });

    ParsevalResult res;
    res.level_cap = level_cap;
    res.partial_sum = static_cast<double>(acc);
    if (static_cast<unsigned>(level_cap) >= points.precision_q) {
        // excluded levels carry the volume part only; per-axis weights sum to
        // 1/4 (level -1) plus sum_{j>cap} 2^{-2j-4}
        long double tail1 = std::exp2(-2.0L * level_cap - 4.0L) / 3.0L;
        long double inner = 1.0L / 3.0L - tail1;
        long double full = std::pow(1.0L / 3.0L, static_cast<long double>(points.d));
        res.gap_certificate = static_cast<double>(full - std::pow(inner, static_cast<long double>(points.d)));
        res.certificate_valid = true;
    }
    return res;
}

std::vector<DecayRow> decay_profile(const DyadicPointSet& points, unsigned n, unsigned t,
                                    const std::vector<unsigned>& levels) {
    std::uint64_t N = points.size();
    if (N == 0) throw std::invalid_argument("decay_profile: empty point set");
    long double Nld = static_cast<long double>(N);

    std::vector<DecayRow> rows;
    for (unsigned L : levels) {
        if (2 * L + t > 2 * n)
            throw std::invalid_argument("decay_profile: level violates |j| + t/2 <= n");
        long double observed = 0;
        std::vector<int> j;
        for_each_level_vector_of_order(points.d, L, j, [&](const std::vector<int>& level) {
            HaarLevelSums sums = haar_level_sums(points, level);
            long double v = sums.volume_factor.to_long_double();
            for (const Rational& s : sums.candidate_sums)
                observed = std::max(observed, std::fabs(s.to_long_double() / Nld - v));
            if (static_cast<long double>(sums.candidate_sums.size()) < sums.total_intervals)
                observed = std::max(observed, std::fabs(v));
        });

        DecayRow row;
        row.level = L;
        row.observed_max = static_cast<double>(observed);
        long double base = static_cast<long double>(2 * n) - t - 2 * L;
        row.bound = static_cast<double>(std::exp2(static_cast<long double>(t) - 2 * n) *
                                        std::pow(base, static_cast<long double>(points.d - 1)));
        row.ratio = row.bound > 0 ? row.observed_max / row.bound
                                  : std::numeric_limits<double>::infinity();
        rows.push_back(row);
    }
    return rows;
}

double littlewood_paley_bound(const DyadicPointSet& points, double p, int level_cap) {
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("littlewood_paley_bound: p must be in (1, inf)");
    if (level_cap < 0) throw std::invalid_argument("littlewood_paley_bound: level_cap must be >= 0");
    std::uint64_t N = points.size();
    if (N == 0) throw std::invalid_argument("littlewood_paley_bound: empty point set");

    long double pbar = std::max<long double>(p, 2.0L);
    long double Nld = static_cast<long double>(N);
    long double acc = 0;
    std::vector<int> j;
    for_each_level_vector(points.d, level_cap, j, [&](const std::vector<int>& level) {
        HaarLevelSums sums = haar_level_sums(points, level);
        unsigned order = 0;
        for (int ji : level) order += static_cast<unsigned>(std::max(ji, 0));
        long double v = sums.volume_factor.to_long_double();
        long double inner = 0;
        for (const Rational& s : sums.candidate_sums)
            inner += std::pow(std::fabs(s.to_long_double() / Nld - v), pbar);
        inner += (sums.total_intervals - static_cast<long double>(sums.candidate_sums.size())) *
                 std::pow(std::fabs(v), pbar);
        long double weight = std::exp2(2.0L * order * (1.0L - 1.0L / pbar));
        acc += weight * std::pow(inner, 2.0L / pbar);
    });
    return static_cast<double>(acc);
}

}  // namespace hodisc
