#include "hodisc/laurent.hpp"

#include <stdexcept>

namespace hodisc {

std::vector<std::uint8_t> laurent_coefficients(unsigned numerator_power,
                                               const GF2Poly& denominator,
                                               unsigned power,
                                               std::size_t length) {
    if (power == 0) throw std::invalid_argument("laurent_coefficients: power must be >= 1");
    if (length == 0) throw std::invalid_argument("laurent_coefficients: length must be >= 1");
    int e = denominator.degree();
    if (e < 1) throw std::invalid_argument("laurent_coefficients: denominator must have degree >= 1");
    if (numerator_power >= power * static_cast<unsigned>(e))
        throw std::invalid_argument(
            "laurent_coefficients: numerator_power must be < power * deg(denominator)");

    // x^w / D = x^{-length} * (x^{w+length} / D); the quotient of the
    // polynomial division x^{w+length} = Q*D + R carries the first `length`
    // series coefficients: a_l = Q_{length-l}.
    GF2Poly den = denominator.pow(power);
    GF2Poly q = GF2Poly::divmod(GF2Poly::monomial(numerator_power + static_cast<unsigned>(length)), den).first;

    std::vector<std::uint8_t> a(length);
    for (std::size_t l = 1; l <= length; ++l)
        a[l - 1] = q.coeff(static_cast<unsigned>(length - l)) ? 1 : 0;
    return a;
}

}  // namespace hodisc
