#include "hodisc/sequence.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace hodisc {

long double DyadicPointSet::value(std::size_t k, std::size_t j) const {
    return static_cast<long double>(at(k, j)) * std::exp2(-static_cast<long double>(precision_q));
}

SequenceSpec SequenceSpec::make(GenMatrixSet matrices,
                                std::optional<unsigned> precision,
                                std::optional<std::vector<std::uint64_t>> shift) {
    SequenceSpec spec;
    unsigned structural = static_cast<unsigned>(matrices.order * matrices.n_cols);
    spec.precision_q = precision.value_or(std::min<unsigned>(structural, static_cast<unsigned>(matrices.q_rows)));
    if (spec.precision_q == 0 || spec.precision_q > 64)
        throw std::invalid_argument("SequenceSpec: need 1 <= precision_q <= 64");
    if (spec.precision_q > matrices.q_rows)
        throw std::invalid_argument("SequenceSpec: precision_q exceeds q_rows");
    if (shift) {
        if (shift->size() != matrices.s())
            throw std::invalid_argument("SequenceSpec: shift must have one entry per coordinate");
        if (spec.precision_q < 64)
            for (std::uint64_t& w : *shift) w &= (std::uint64_t(1) << spec.precision_q) - 1;
        spec.shift = std::move(shift);
    }
    spec.matrices = std::move(matrices);
    return spec;
}

namespace {

// C_j * kvec with zero rows below q_rows, so callers may ask for more digits
// than the matrices carry (used by the block regeneration).
std::uint64_t matrix_times_index(const BinMatrix& m, std::uint64_t k, unsigned precision_q) {
    std::uint64_t v = 0;
    std::size_t rows = std::min<std::size_t>(m.n_rows(), precision_q);
    for (std::size_t r = 0; r < rows; ++r)
        v |= static_cast<std::uint64_t>(std::popcount(m.row(r) & k) & 1) << (precision_q - 1 - r);
    return v;
}

void check_index(const GenMatrixSet& set, std::uint64_t k) {
    if (set.n_cols < 64 && (k >> set.n_cols) != 0)
        throw std::invalid_argument("point index must be < 2^n_cols");
}

}  // namespace

std::vector<std::uint64_t> point_at(const SequenceSpec& spec, std::uint64_t k) {
    check_index(spec.matrices, k);
    std::vector<std::uint64_t> pt(spec.matrices.s());
    for (std::size_t j = 0; j < pt.size(); ++j) {
        pt[j] = matrix_times_index(spec.matrices.matrices[j], k, spec.precision_q);
        if (spec.shift) pt[j] ^= (*spec.shift)[j];
    }
    return pt;
}

DyadicPointSet prefix(const SequenceSpec& spec, std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("prefix: N must be >= 1");
    if (spec.matrices.n_cols < 64 && N > (std::uint64_t(1) << spec.matrices.n_cols))
        throw std::invalid_argument("prefix: N exceeds 2^n_cols");
    DyadicPointSet out;
    out.d = spec.matrices.s();
    out.precision_q = spec.precision_q;
    out.coords.resize(N * out.d);
    for (std::uint64_t k = 0; k < N; ++k) {
        std::vector<std::uint64_t> pt = point_at(spec, k);
        for (std::size_t j = 0; j < out.d; ++j) out.coords[k * out.d + j] = pt[j];
    }
    return out;
}

std::vector<PrefixBlock> prefix_decompose(const SequenceSpec& spec, std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("prefix_decompose: N must be >= 1");
    if (spec.matrices.n_cols < 64 && N > (std::uint64_t(1) << spec.matrices.n_cols))
        throw std::invalid_argument("prefix_decompose: N exceeds 2^n_cols");

    std::vector<PrefixBlock> blocks;
    std::uint64_t offset = 0;
    for (int b = 63; b >= 0; --b) {
        if (!((N >> b) & 1u)) continue;
        unsigned n_bits = static_cast<unsigned>(b);

        PrefixBlock block;
        block.n_bits = n_bits;
        block.first_index = offset;
        // the constant high digits of every index in the block, pushed
        // through the full matrices (and composed with the spec's own shift)
        block.shift = point_at(spec, offset);

        block.points.d = spec.matrices.s();
        block.points.precision_q = spec.precision_q;
        std::uint64_t block_size = std::uint64_t(1) << n_bits;
        block.points.coords.resize(block_size * block.points.d);

        if (n_bits == 0) {
            for (std::size_t j = 0; j < block.points.d; ++j) block.points.coords[j] = block.shift[j];
        } else {
            GenMatrixSet trunc = truncate_set(spec.matrices, n_bits);
            for (std::uint64_t a = 0; a < block_size; ++a)
                for (std::size_t j = 0; j < block.points.d; ++j)
                    block.points.coords[a * block.points.d + j] =
                        matrix_times_index(trunc.matrices[j], a, spec.precision_q) ^ block.shift[j];
        }

        blocks.push_back(std::move(block));
        offset += block_size;
    }
    return blocks;
}

namespace {

std::uint64_t radical_inverse(std::uint64_t n, unsigned q) {
    std::uint64_t v = 0;
    for (unsigned j = 0; j < q && (n >> j) != 0; ++j)
        if ((n >> j) & 1u) v |= std::uint64_t(1) << (q - 1 - j);
    return v;
}

void check_vdc_args(std::uint64_t indices, unsigned q, const char* who) {
    if (q == 0 || q > 63) throw std::invalid_argument(std::string(who) + ": need 1 <= q <= 63");
    if (indices > (std::uint64_t(1) << q))
        throw std::invalid_argument(std::string(who) + ": q too small for N indices");
}

}  // namespace

DyadicPointSet van_der_corput(std::uint64_t N, unsigned q) {
    if (N == 0) throw std::invalid_argument("van_der_corput: N must be >= 1");
    check_vdc_args(N, q, "van_der_corput");
    DyadicPointSet out;
    out.d = 1;
    out.precision_q = q;
    out.coords.resize(N);
    for (std::uint64_t n = 0; n < N; ++n) out.coords[n] = radical_inverse(n, q);
    return out;
}

SymmetrizedVdc symmetrized_vdc(std::uint64_t N, unsigned q) {
    if (N == 0) throw std::invalid_argument("symmetrized_vdc: N must be >= 1");
    check_vdc_args((N + 1) / 2, q, "symmetrized_vdc");
    SymmetrizedVdc out;
    out.points.d = 1;
    out.points.precision_q = q;
    out.points.coords.resize(N);
    std::uint64_t one = std::uint64_t(1) << q;
    for (std::uint64_t n = 0; n < N; ++n) {
        std::uint64_t y = radical_inverse(n / 2, q);
        if (n % 2 == 0) {
            out.points.coords[n] = y;
        } else {
            std::uint64_t z = one - y;
            if (z == one) {  // 1 - y_0 = 1 lies outside the half-open cube
                z = one - 1;
                ++out.clamped;
            }
            out.points.coords[n] = z;
        }
    }
    return out;
}

void write_points(const DyadicPointSet& points, std::ostream& os) {
    os << "hodisc-points v1 d=" << points.d << " q=" << points.precision_q << " N=" << points.size()
       << "\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (std::size_t j = 0; j < points.d; ++j) {
            if (j) os << ' ';
            os << points.at(k, j);
        }
        os << "\n";
    }
}

void write_points_file(const DyadicPointSet& points, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_points(points, os);
}

namespace {

std::uint64_t parse_uint(const std::string& line, std::size_t line_no, std::size_t& pos, const char* what) {
    if (pos >= line.size() || !isdigit(static_cast<unsigned char>(line[pos])))
        throw PointParseError(line_no, pos + 1, std::string("expected ") + what);
    std::uint64_t v = 0;
    while (pos < line.size() && isdigit(static_cast<unsigned char>(line[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(line[pos] - '0');
        ++pos;
    }
    return v;
}

}  // namespace

DyadicPointSet read_points(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw PointParseError(1, 1, "empty file");
    const std::string magic = "hodisc-points v1 ";
    if (line.compare(0, magic.size(), magic) != 0) throw PointParseError(1, 1, "expected 'hodisc-points v1'");

    std::size_t pos = magic.size();
    auto expect = [&](const std::string& tok) {
        if (line.compare(pos, tok.size(), tok) != 0) throw PointParseError(1, pos + 1, "expected '" + tok + "'");
        pos += tok.size();
    };
    expect("d=");
    std::uint64_t d = parse_uint(line, 1, pos, "dimension");
    expect(" q=");
    std::uint64_t q = parse_uint(line, 1, pos, "precision");
    expect(" N=");
    std::uint64_t N = parse_uint(line, 1, pos, "point count");
    if (d == 0) throw PointParseError(1, 1, "d must be >= 1");
    if (q == 0 || q > 64) throw PointParseError(1, 1, "need 1 <= q <= 64");

    DyadicPointSet out;
    out.d = d;
    out.precision_q = static_cast<unsigned>(q);
    out.coords.reserve(N * d);
    for (std::uint64_t k = 0; k < N; ++k) {
        if (!std::getline(is, line)) throw PointParseError(k + 2, 1, "unexpected end of file");
        pos = 0;
        for (std::uint64_t j = 0; j < d; ++j) {
            if (j) {
                if (pos >= line.size() || line[pos] != ' ')
                    throw PointParseError(k + 2, pos + 1, "expected space between coordinates");
                ++pos;
            }
            std::uint64_t v = parse_uint(line, k + 2, pos, "coordinate numerator");
            if (q < 64 && v >= (std::uint64_t(1) << q))
                throw PointParseError(k + 2, pos, "coordinate numerator out of range");
            out.coords.push_back(v);
        }
        if (pos != line.size()) throw PointParseError(k + 2, pos + 1, "trailing characters");
    }
    return out;
}

DyadicPointSet read_points_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_points(is);
}

}  // namespace hodisc
