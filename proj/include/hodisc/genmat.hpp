#ifndef HODISC_GENMAT_HPP
#define HODISC_GENMAT_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodisc/binmatrix.hpp"

namespace hodisc {

// One generating matrix per coordinate plus the construction metadata that
// travels with them. `order` is the interlacing factor (1 for the plain
// polynomial construction, 2 after interlacing) and `t_upper` the quality
// bound certified by the construction.
struct GenMatrixSet {
    std::vector<BinMatrix> matrices;
    int order = 1;
    std::size_t q_rows = 0;
    std::size_t n_cols = 0;
    unsigned t_upper = 0;

    std::size_t s() const { return matrices.size(); }
};

// Generating matrices of the generalized Niederreiter (Sobol'/Tezuka)
// sequence: coordinate j uses the j-th irreducible polynomial p_j (p_1 = x,
// p_2 = x+1, ...), and row k of C_j holds the Laurent coefficients of
// x^{e_j-z-1} / p_j^i where k-1 = (i-1) e_j + z. Entries vanish below the
// diagonal (row k, column l is 0 for k > l), and the certified quality bound
// is t_upper = sum_j (deg p_j - 1).
GenMatrixSet tezuka_matrices(std::size_t s, std::size_t q_rows, std::size_t n_cols);

// Row-interlaces 2d order-1 matrices into d order-2 matrices: row 2u+v of
// E_j is row u+1 of C_{2(j-1)+v}. Output has 2*min(q,n) rows and satisfies
// e_{k,l} = 0 for k > 2l; t_upper becomes 2*t_upper + d.
GenMatrixSet interlace(const GenMatrixSet& base);

// Upper-left (order*n) x n submatrices; t_upper carries over.
GenMatrixSet truncate_set(const GenMatrixSet& set, std::size_t n);

struct MatrixParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;
    MatrixParseError(std::size_t line_, std::size_t column_, const std::string& what_)
        : std::runtime_error("matrix file line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

// Text format:
//   hodisc-matrices v1
//   s=<s> order=<a> q=<q> n=<n> t_upper=<t>
// then per matrix a blank line followed by q lines of n characters in {0,1};
// row k lists columns l = 1..n left to right.
void write_matrices(const GenMatrixSet& set, std::ostream& os);
void write_matrices_file(const GenMatrixSet& set, const std::string& path);
GenMatrixSet read_matrices(std::istream& is);
GenMatrixSet read_matrices_file(const std::string& path);

}  // namespace hodisc

#endif
