#ifndef HODISC_LAURENT_HPP
#define HODISC_LAURENT_HPP

#include <cstdint>
#include <vector>

#include "hodisc/gf2poly.hpp"

namespace hodisc {

// Coefficients a_1,...,a_length of the expansion
//
//   x^numerator_power / denominator(x)^power = sum_{l>=1} a_l x^{-l}
//
// in F2((1/x)), computed by long division. Requires
// numerator_power < power * deg(denominator) so the series starts at l >= 1.
std::vector<std::uint8_t> laurent_coefficients(unsigned numerator_power,
                                               const GF2Poly& denominator,
                                               unsigned power,
                                               std::size_t length);

}  // namespace hodisc

#endif
