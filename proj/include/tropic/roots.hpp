#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace tropic::roots {

/// Binary float with a 64-bit mantissa and a 32-bit exponent, so magnitudes
/// like exp(1e5) stay representable.
using WideFloat = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<64, boost::multiprecision::backends::digit_base_2, void,
                                                   std::int32_t>,
    boost::multiprecision::et_off>;

using WideComplex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::backends::cpp_bin_float<
        64, boost::multiprecision::backends::digit_base_2, void, std::int32_t>>,
    boost::multiprecision::et_off>;

struct RootResult
{
    /// Nonzero roots; zero roots are deflated before iterating.
    std::vector<WideComplex> roots;
    bool converged = false;
    int iterations = 0;
};

/**
 * All nonzero roots of sum_j coefficients[j] * z^j by Aberth-Ehrlich
 * iteration.
 *
 * Starting points are spread on circles whose radii come from the upper
 * convex hull of (j, log|c_j|), which keeps roots of very different
 * magnitudes apart from the first step. A root is accepted when its last
 * correction is below `relative_tolerance` times its modulus.
 */
RootResult aberth_roots(std::vector<WideComplex> coefficients, double relative_tolerance = 1e-10,
                        int max_iterations = 500);

/// Horner evaluation of the polynomial and its derivative.
void evaluate(const std::vector<WideComplex>& coefficients, const WideComplex& z, WideComplex& value,
              WideComplex& derivative);

} // namespace tropic::roots
