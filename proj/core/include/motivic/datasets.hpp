#ifndef MOTIVIC_DATASETS_HPP
#define MOTIVIC_DATASETS_HPP

#include "motivic/resolution.hpp"

namespace motivic::datasets {

/// f = x in two variables: one reduced smooth divisor.
ResolutionData smooth();

/// f = xy: normal crossing of two reduced divisors. Classes are entered
/// through the unit via the scissor relations ([E_i^o] = L - 1, [E_12^o] = 1).
ResolutionData xy();

/// f = x^2: one divisor of multiplicity 2 whose cover is the trivial
/// mu_2-torsor over A^1 (class L * [mu_2], naive quotient L).
ResolutionData xsq();

/// f = x^2 + y^3: standard three-blow-up resolution of the cusp with
/// (N, xi) = (2,2), (3,3), (6,5), (1,1).
ResolutionData cusp();

/// All four, in the order above.
std::vector<ResolutionData> all();

}  // namespace motivic::datasets

#endif
