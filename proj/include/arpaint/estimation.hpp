#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace arpaint {

/// Prediction-error filter of an AR(p) model. coeffs has length p + 1 and
/// coeffs[0] == 1 always; the filter polynomial is
/// A(z) = 1 + coeffs[1] z^-1 + ... + coeffs[p] z^-p.
struct ARModel {
    std::vector<double> coeffs;

    std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

enum class Estimator { Lpc, Burg };

/// Biased, unnormalized autocorrelation estimate:
/// r[k] = sum_n x[n] * x[n+k] for k = 0..order.
/// Requires x.size() >= order + 1.
std::vector<double> autocorrelation(std::span<const double> x, std::size_t order);

/// Same estimate accumulated over several disjoint chunks of one signal; no
/// lag products are formed across chunk boundaries.
std::vector<double> autocorrelation_chunks(
    const std::vector<std::span<const double>>& chunks, std::size_t order);

struct LevinsonResult {
    ARModel model;
    double error_power = 0.0;  // final prediction error of the recursion
};

/// Solves the Yule-Walker equations for the autocorrelation sequence r
/// (length p + 1) by the Levinson-Durbin recursion. r[0] == 0 yields the
/// trivial model with zero error.
LevinsonResult levinson_durbin(std::span<const double> r);

/// Autocorrelation-method linear prediction: Levinson-Durbin applied to the
/// biased autocorrelation estimate of x.
ARModel estimate_lpc(std::span<const double> x, std::size_t order);

/// Burg lattice estimation. Reflection coefficient per stage is
/// k = -2 sum(f*b) / sum(f^2 + b^2) over the forward/backward prediction
/// errors, with the Levinson-style coefficient update. A zero denominator
/// stops the recursion early with the remaining reflections at zero. The
/// returned polynomial has all roots strictly inside the unit circle.
ARModel estimate_burg(std::span<const double> x, std::size_t order);

/// Burg estimation with the lattice sums accumulated over several disjoint
/// chunks sharing one model.
ARModel estimate_burg_chunks(const std::vector<std::span<const double>>& chunks,
                             std::size_t order);

/// Dispatch on the estimator selector.
ARModel estimate(std::span<const double> x, std::size_t order, Estimator estimator);
ARModel estimate_chunks(const std::vector<std::span<const double>>& chunks,
                        std::size_t order, Estimator estimator);

const char* to_string(Estimator estimator);

}  // namespace arpaint
