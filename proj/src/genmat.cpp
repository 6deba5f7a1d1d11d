#include "hodisc/genmat.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hodisc/gf2poly.hpp"
#include "hodisc/laurent.hpp"

namespace hodisc {

GenMatrixSet tezuka_matrices(std::size_t s, std::size_t q_rows, std::size_t n_cols) {
    if (s == 0) throw std::invalid_argument("tezuka_matrices: s must be >= 1");
    if (n_cols == 0 || n_cols > 64) throw std::invalid_argument("tezuka_matrices: need 1 <= n_cols <= 64");
    if (q_rows < n_cols) throw std::invalid_argument("tezuka_matrices: q_rows must be >= n_cols");

    std::vector<GF2Poly> polys = irreducibles_up_to(s);

    GenMatrixSet set;
    set.order = 1;
    set.q_rows = q_rows;
    set.n_cols = n_cols;
    set.t_upper = 0;
    set.matrices.reserve(s);

    for (std::size_t j = 0; j < s; ++j) {
        const GF2Poly& p = polys[j];
        unsigned e = static_cast<unsigned>(p.degree());
        set.t_upper += e - 1;

        BinMatrix c(q_rows, n_cols);
        for (std::size_t k = 1; k <= q_rows; ++k) {
            unsigned i = static_cast<unsigned>((k - 1) / e) + 1;
            unsigned z = static_cast<unsigned>((k - 1) % e);
            std::vector<std::uint8_t> a = laurent_coefficients(e - z - 1, p, i, n_cols);
            std::uint64_t row = 0;
            for (std::size_t l = 0; l < n_cols; ++l)
                if (a[l]) row |= std::uint64_t(1) << l;
            c.set_row(k - 1, row);
        }
        set.matrices.push_back(std::move(c));
    }
    return set;
}

GenMatrixSet interlace(const GenMatrixSet& base) {
    if (base.order != 1) throw std::invalid_argument("interlace: base must be an order-1 set");
    if (base.s() % 2 != 0) throw std::invalid_argument("interlace: base.s must be even");
    if (base.q_rows < base.n_cols) throw std::invalid_argument("interlace: base.q_rows must be >= base.n_cols");

    std::size_t d = base.s() / 2;
    std::size_t m = std::min(base.q_rows, base.n_cols);

    GenMatrixSet out;
    out.order = 2;
    out.q_rows = 2 * m;
    out.n_cols = base.n_cols;
    out.t_upper = 2 * base.t_upper + static_cast<unsigned>(d);
    out.matrices.reserve(d);

    for (std::size_t j = 1; j <= d; ++j) {
        BinMatrix e(2 * m, base.n_cols);
        for (std::size_t u = 0; u < m; ++u)
            for (unsigned v = 1; v <= 2; ++v)
                e.set_row(2 * u + v - 1, base.matrices[2 * (j - 1) + v - 1].row(u));
        out.matrices.push_back(std::move(e));
    }
    return out;
}

GenMatrixSet truncate_set(const GenMatrixSet& set, std::size_t n) {
    if (n == 0) throw std::invalid_argument("truncate_set: n must be >= 1");
    if (n > set.n_cols) throw std::invalid_argument("truncate_set: n exceeds n_cols");
    std::size_t rows = static_cast<std::size_t>(set.order) * n;
    if (rows > set.q_rows) throw std::invalid_argument("truncate_set: order*n exceeds q_rows");

    GenMatrixSet out;
    out.order = set.order;
    out.q_rows = rows;
    out.n_cols = n;
    out.t_upper = set.t_upper;
    out.matrices.reserve(set.s());
    std::uint64_t mask = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    for (const BinMatrix& m : set.matrices) {
        BinMatrix t(rows, n);
        for (std::size_t r = 0; r < rows; ++r) t.set_row(r, m.row(r) & mask);
        out.matrices.push_back(std::move(t));
    }
    return out;
}

void write_matrices(const GenMatrixSet& set, std::ostream& os) {
    os << "hodisc-matrices v1\n";
    os << "s=" << set.s() << " order=" << set.order << " q=" << set.q_rows << " n=" << set.n_cols
       << " t_upper=" << set.t_upper << "\n";
    for (const BinMatrix& m : set.matrices) {
        os << "\n";
        for (std::size_t r = 0; r < set.q_rows; ++r) {
            for (std::size_t c = 0; c < set.n_cols; ++c) os << (m.get(r, c) ? '1' : '0');
            os << "\n";
        }
    }
}

void write_matrices_file(const GenMatrixSet& set, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_matrices(set, os);
}

namespace {

// header fields appear in fixed order; value starts right after "key="
std::uint64_t parse_header_field(const std::string& line, std::size_t line_no, std::size_t& pos,
                                 const std::string& key) {
    const std::string prefix = key + "=";
    if (line.compare(pos, prefix.size(), prefix) != 0)
        throw MatrixParseError(line_no, pos + 1, "expected '" + prefix + "'");
    pos += prefix.size();
    if (pos >= line.size() || !isdigit(static_cast<unsigned char>(line[pos])))
        throw MatrixParseError(line_no, pos + 1, "expected a number for '" + key + "'");
    std::uint64_t v = 0;
    while (pos < line.size() && isdigit(static_cast<unsigned char>(line[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(line[pos] - '0');
        ++pos;
    }
    if (pos < line.size()) {
        if (line[pos] != ' ') throw MatrixParseError(line_no, pos + 1, "expected space after '" + key + "' value");
        ++pos;
    }
    return v;
}

}  // namespace

GenMatrixSet read_matrices(std::istream& is) {
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&](const char* what) {
        if (!std::getline(is, line)) throw MatrixParseError(line_no + 1, 1, std::string("unexpected end of file, expected ") + what);
        ++line_no;
    };

    next_line("format header");
    if (line != "hodisc-matrices v1") throw MatrixParseError(line_no, 1, "expected 'hodisc-matrices v1'");

    next_line("dimension header");
    std::size_t pos = 0;
    std::uint64_t s = parse_header_field(line, line_no, pos, "s");
    std::uint64_t order = parse_header_field(line, line_no, pos, "order");
    std::uint64_t q = parse_header_field(line, line_no, pos, "q");
    std::uint64_t n = parse_header_field(line, line_no, pos, "n");
    std::uint64_t t_upper = parse_header_field(line, line_no, pos, "t_upper");
    if (pos != line.size()) throw MatrixParseError(line_no, pos + 1, "trailing characters in header");
    if (s == 0) throw MatrixParseError(line_no, 1, "s must be >= 1");
    if (order != 1 && order != 2) throw MatrixParseError(line_no, 1, "order must be 1 or 2");
    if (n == 0 || n > 64) throw MatrixParseError(line_no, 1, "need 1 <= n <= 64");
    if (q < order * n) throw MatrixParseError(line_no, 1, "q must be >= order * n");

    GenMatrixSet set;
    set.order = static_cast<int>(order);
    set.q_rows = q;
    set.n_cols = n;
    set.t_upper = static_cast<unsigned>(t_upper);
    set.matrices.reserve(s);

    for (std::uint64_t mi = 0; mi < s; ++mi) {
        next_line("blank line before matrix");
        if (!line.empty()) throw MatrixParseError(line_no, 1, "expected blank line before matrix " + std::to_string(mi + 1));
        BinMatrix m(q, n);
        for (std::uint64_t r = 0; r < q; ++r) {
            next_line("matrix row");
            if (line.size() != n)
                throw MatrixParseError(line_no, std::min(line.size(), static_cast<std::size_t>(n)) + 1,
                                       "matrix " + std::to_string(mi + 1) + " row " + std::to_string(r + 1) +
                                           ": expected " + std::to_string(n) + " columns, got " +
                                           std::to_string(line.size()));
            for (std::uint64_t c = 0; c < n; ++c) {
                if (line[c] == '1')
                    m.set(r, c, true);
                else if (line[c] != '0')
                    throw MatrixParseError(line_no, c + 1, "expected '0' or '1'");
            }
        }
        set.matrices.push_back(std::move(m));
    }
    return set;
}

GenMatrixSet read_matrices_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_matrices(is);
}

}  // namespace hodisc
