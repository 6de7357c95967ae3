#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arpaint/estimation.hpp"

namespace arpaint {

/// Full convolution of the model coefficients with x, treating samples
/// outside x as zero. The result has length x.size() + order.
std::vector<double> residual(const ARModel& model, std::span<const double> x);

/// Sum of squares of residual(model, x), computed without materializing the
/// residual vector.
double residual_energy(const ARModel& model, std::span<const double> x);

/// Zero-input recursive prediction: each new sample is
/// -sum_{i=1..p} coeffs[i] * (previous samples), seeded by the last p
/// context samples. Requires context.size() >= order.
std::vector<double> extrapolate_forward(const ARModel& model,
                                        std::span<const double> context,
                                        std::size_t horizon);

/// Time-reversed prediction: equals
/// reverse(extrapolate_forward(model, reverse(context), horizon)).
std::vector<double> extrapolate_backward(const ARModel& model,
                                         std::span<const double> context,
                                         std::size_t horizon);

}  // namespace arpaint
