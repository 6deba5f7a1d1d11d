#ifndef HODISC_GF2POLY_HPP
#define HODISC_GF2POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hodisc {

// Polynomial over F2. Coefficient of x^i lives in bit i (little-endian words),
// so the nonzero leading coefficient is always the highest set bit and the
// representation is normalized by construction. The zero polynomial has
// degree -1.
class GF2Poly {
public:
    GF2Poly() = default;

    static GF2Poly zero() { return GF2Poly(); }
    static GF2Poly one() { return from_encoding(1); }
    static GF2Poly x() { return from_encoding(2); }
    static GF2Poly monomial(unsigned e);
    // bit i of `bits` = coefficient of x^i
    static GF2Poly from_encoding(std::uint64_t bits);

    bool is_zero() const { return words_.empty(); }
    // -1 for the zero polynomial
    int degree() const;
    bool coeff(unsigned i) const;
    void set_coeff(unsigned i, bool v);

    GF2Poly operator+(const GF2Poly& o) const;  // addition = XOR over F2
    GF2Poly operator*(const GF2Poly& o) const;  // carry-less product
    GF2Poly shifted_left(unsigned k) const;     // multiply by x^k
    GF2Poly pow(unsigned e) const;

    // quotient/remainder with deg(remainder) < deg(divisor); divisor nonzero
    static std::pair<GF2Poly, GF2Poly> divmod(const GF2Poly& a, const GF2Poly& b);

    // integer encoding of the coefficient bits; requires degree <= 63
    std::uint64_t encoding() const;

    bool operator==(const GF2Poly& o) const { return words_ == o.words_; }
    bool operator!=(const GF2Poly& o) const { return !(*this == o); }

    std::string to_string() const;  // e.g. "x^3+x+1"

private:
    std::vector<std::uint64_t> words_;
    void trim();
};

// Trial-division irreducibility test (deterministic, fine for the small
// degrees this library needs).
bool is_irreducible(const GF2Poly& p);

// First `count` irreducible polynomials over F2, sorted by degree ascending
// with ties broken by integer encoding ascending. Starts x, x+1, x^2+x+1, ...
std::vector<GF2Poly> irreducibles_up_to(std::size_t count);

}  // namespace hodisc

#endif
