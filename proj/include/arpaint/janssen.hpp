#pragma once

#include <cstddef>
#include <vector>

#include "arpaint/estimation.hpp"
#include "arpaint/signal.hpp"

namespace arpaint {

/// Autocorrelation of the coefficient vector: band[j] = sum_i a[i] * a[i+j]
/// for j = 0..p. This is the (k, k+j) entry of A^T A for the full
/// convolution matrix A of the residual, for any k.
struct GramBand {
    std::vector<double> band;
};

GramBand gram_band(const ARModel& model);

enum class SolverPath {
    Auto,    // banded for one contiguous missing run, dense otherwise
    Banded,  // requires a contiguous missing run
    Dense,
};

/// Replaces the missing entries of the segment with the minimizer of the
/// residual energy for the fixed model; reliable samples are returned
/// unchanged. The normal equations restricted to the missing coordinates are
/// symmetric positive definite; a contiguous run is solved in banded
/// Cholesky form, scattered runs by a dense symmetric solve.
std::vector<double> solve_missing(const ARModel& model, const Segment& segment,
                                  SolverPath path = SolverPath::Auto);

struct JanssenConfig {
    std::size_t order = 256;
    Estimator estimator = Estimator::Burg;
    int max_iterations = 50;
    double rel_tolerance = 1e-6;
    /// Estimate the model from the reliable runs only instead of the full
    /// segment with the current gap estimate included.
    bool contexts_only = false;
};

struct JanssenResult {
    std::vector<double> samples;
    int iterations = 0;
    double objective = 0.0;  // final residual energy ||e(a, s)||^2
    /// Residual energy after the solve step of each iteration.
    std::vector<double> objective_history;
};

/// Alternating restoration: estimate the AR model with the missing samples
/// fixed, then re-solve the missing samples with the model fixed. Missing
/// samples start from zero. Stops after max_iterations or when the relative
/// change of the missing-sample vector drops below rel_tolerance.
JanssenResult janssen_iterate(const Segment& segment, const JanssenConfig& config);

}  // namespace arpaint
