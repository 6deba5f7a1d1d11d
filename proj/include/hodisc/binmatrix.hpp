#ifndef HODISC_BINMATRIX_HPP
#define HODISC_BINMATRIX_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace hodisc {

// Matrix over F2 with bit-packed rows. Rows are stored little-endian:
// bit (l-1) of the row word is column l, so matrix files and digit vectors
// map to words without reshuffling. At most 64 columns.
class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(std::size_t n_rows, std::size_t n_cols);
    static BinMatrix identity(std::size_t n);

    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return (rows_[r] >> c) & 1u; }
    void set(std::size_t r, std::size_t c, bool v);

    std::uint64_t row(std::size_t r) const { return rows_[r]; }
    void set_row(std::size_t r, std::uint64_t bits);

    bool operator==(const BinMatrix& o) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Incremental row basis over F2; rows indexed by their leading (highest) bit.
struct GF2Basis {
    std::array<std::uint64_t, 64> pivot{};
    std::size_t size = 0;

    // reduce v against the basis; insert if independent. Returns false when v
    // is in the span (insert rejected).
    bool insert(std::uint64_t v) {
        while (v) {
            unsigned b = 63 - static_cast<unsigned>(__builtin_clzll(v));
            if (!pivot[b]) {
                pivot[b] = v;
                ++size;
                return true;
            }
            v ^= pivot[b];
        }
        return false;
    }
};

std::size_t rank_f2(const BinMatrix& m);
std::size_t rank_f2(const std::vector<std::uint64_t>& rows);

}  // namespace hodisc

#endif
