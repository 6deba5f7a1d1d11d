#include "hodisc/binmatrix.hpp"

#include <stdexcept>

namespace hodisc {

BinMatrix::BinMatrix(std::size_t n_rows, std::size_t n_cols) : cols_(n_cols) {
    if (n_cols == 0 || n_cols > 64) throw std::invalid_argument("BinMatrix: need 1 <= n_cols <= 64");
    if (n_rows == 0) throw std::invalid_argument("BinMatrix: need n_rows >= 1");
    rows_.assign(n_rows, 0);
}

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i] = std::uint64_t(1) << i;
    return m;
}

void BinMatrix::set(std::size_t r, std::size_t c, bool v) {
    if (v)
        rows_[r] |= std::uint64_t(1) << c;
    else
        rows_[r] &= ~(std::uint64_t(1) << c);
}

void BinMatrix::set_row(std::size_t r, std::uint64_t bits) {
    if (cols_ < 64) bits &= (std::uint64_t(1) << cols_) - 1;
    rows_[r] = bits;
}

std::size_t rank_f2(const std::vector<std::uint64_t>& rows) {
    GF2Basis basis;
    for (std::uint64_t r : rows) basis.insert(r);
    return basis.size;
}

std::size_t rank_f2(const BinMatrix& m) {
    GF2Basis basis;
    for (std::size_t r = 0; r < m.n_rows(); ++r) basis.insert(m.row(r));
    return basis.size;
}

}  // namespace hodisc
