#include "arpaint/janssen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "arpaint/prediction.hpp"
#include "lapack.hpp"

namespace arpaint {

GramBand gram_band(const ARModel& model) {
    const std::size_t p = model.order();
    GramBand g;
    g.band.assign(p + 1, 0.0);
    for (std::size_t j = 0; j <= p; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i + j <= p; ++i)
            acc += model.coeffs[i] * model.coeffs[i + j];
        g.band[j] = acc;
    }
    return g;
}

namespace {

bool is_contiguous(const std::vector<std::size_t>& idx) {
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] != idx[i - 1] + 1) return false;
    return true;
}

/// rhs[k] = -sum over reliable l with |l - missing[k]| <= p of
/// band[|l - k|] * s[l]. Only reliable neighbors within the band contribute.
std::vector<double> restricted_rhs(const std::vector<double>& band,
                                   const Segment& segment,
                                   const std::vector<std::size_t>& missing) {
    const std::size_t p = band.size() - 1;
    const std::size_t n = segment.size();
    std::vector<char> is_missing(n, 0);
    for (std::size_t m : missing) is_missing[m] = 1;

    std::vector<double> rhs(missing.size(), 0.0);
    for (std::size_t r = 0; r < missing.size(); ++r) {
        const std::size_t k = missing[r];
        const std::size_t lo = k >= p ? k - p : 0;
        const std::size_t hi = std::min(n - 1, k + p);
        double acc = 0.0;
        for (std::size_t l = lo; l <= hi; ++l) {
            if (is_missing[l]) continue;
            const std::size_t d = l > k ? l - k : k - l;
            acc += band[d] * segment.samples[l];
        }
        rhs[r] = -acc;
    }
    return rhs;
}

void solve_banded(const std::vector<double>& band, std::vector<double>& rhs,
                  std::size_t gap_length) {
    const std::size_t p = band.size() - 1;
    const int n = static_cast<int>(gap_length);
    const int kd = static_cast<int>(std::min(p, gap_length - 1));
    const int ldab = kd + 1;

    // Lower banded storage, column major: ab[(i - j) + j*ldab] = band[i - j].
    // The restricted matrix is Toeplitz, so every column repeats the band
    // head, truncated at the bottom edge.
    std::vector<double> ab(static_cast<std::size_t>(ldab) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        const int rows = std::min(kd + 1, n - j);
        for (int d = 0; d < rows; ++d) ab[static_cast<std::size_t>(j) * ldab + d] = band[d];
    }

    int info = 0;
    dpbtrf_("L", &n, &kd, ab.data(), &ldab, &info);
    if (info != 0)
        throw std::runtime_error(
            "banded Cholesky factorization failed (info = " + std::to_string(info) +
            "); the restricted normal matrix should be positive definite");
    const int nrhs = 1;
    dpbtrs_("L", &n, &kd, &nrhs, ab.data(), &ldab, rhs.data(), &n, &info);
    if (info != 0)
        throw std::runtime_error("banded triangular solve failed (info = " +
                                 std::to_string(info) + ")");
}

void solve_dense(const std::vector<double>& band, std::vector<double>& rhs,
                 const std::vector<std::size_t>& missing) {
    const std::size_t p = band.size() - 1;
    const int n = static_cast<int>(missing.size());
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) {
            const std::size_t d = missing[i] - missing[j];
            if (d <= p) a[static_cast<std::size_t>(j) * n + i] = band[d];
        }
    }
    int info = 0;
    const int nrhs = 1;
    dposv_("L", &n, &nrhs, a.data(), &n, rhs.data(), &n, &info);
    if (info != 0)
        throw std::runtime_error(
            "dense symmetric solve failed (info = " + std::to_string(info) +
            "); the restricted normal matrix should be positive definite");
}

}  // namespace

std::vector<double> solve_missing(const ARModel& model, const Segment& segment,
                                  SolverPath path) {
    if (model.coeffs.empty() || model.coeffs[0] != 1.0)
        throw std::invalid_argument("model coefficients must start with 1");
    if (segment.local_missing.empty())
        throw std::invalid_argument("segment has no missing samples");
    for (std::size_t m : segment.local_missing)
        if (m >= segment.size())
            throw std::invalid_argument("missing index out of segment bounds");

    const GramBand gram = gram_band(model);
    std::vector<double> rhs = restricted_rhs(gram.band, segment, segment.local_missing);

    const bool contiguous = is_contiguous(segment.local_missing);
    if (path == SolverPath::Banded && !contiguous)
        throw std::invalid_argument("banded path requires a contiguous missing run");
    if (path == SolverPath::Dense || !contiguous)
        solve_dense(gram.band, rhs, segment.local_missing);
    else
        solve_banded(gram.band, rhs, segment.local_missing.size());

    std::vector<double> out = segment.samples;
    for (std::size_t r = 0; r < segment.local_missing.size(); ++r)
        out[segment.local_missing[r]] = rhs[r];
    return out;
}

namespace {

/// Maximal reliable (non-missing) runs of the segment, as spans into `samples`.
std::vector<std::span<const double>> reliable_chunks(
    const std::vector<double>& samples, const std::vector<std::size_t>& missing) {
    std::vector<char> is_missing(samples.size(), 0);
    for (std::size_t m : missing) is_missing[m] = 1;
    std::vector<std::span<const double>> chunks;
    std::size_t run_start = 0;
    bool in_run = false;
    for (std::size_t i = 0; i <= samples.size(); ++i) {
        const bool reliable = i < samples.size() && !is_missing[i];
        if (reliable && !in_run) {
            run_start = i;
            in_run = true;
        } else if (!reliable && in_run) {
            chunks.push_back(std::span<const double>(samples).subspan(run_start, i - run_start));
            in_run = false;
        }
    }
    return chunks;
}

}  // namespace

JanssenResult janssen_iterate(const Segment& segment, const JanssenConfig& config) {
    if (config.max_iterations < 1)
        throw std::invalid_argument("max_iterations must be at least 1");
    if (segment.size() < config.order + 1)
        throw std::invalid_argument("segment of " + std::to_string(segment.size()) +
                                    " samples is too short for order " +
                                    std::to_string(config.order));
    if (segment.local_missing.size() >= segment.size())
        throw std::invalid_argument("segment has no reliable samples");

    JanssenResult result;
    result.samples = segment.samples;
    if (segment.local_missing.empty()) {
        result.objective = 0.0;
        return result;
    }

    Segment work = segment;
    for (std::size_t m : work.local_missing) work.samples[m] = 0.0;

    std::vector<double> previous(work.local_missing.size(), 0.0);
    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        ARModel model;
        if (config.contexts_only) {
            model = estimate_chunks(reliable_chunks(work.samples, work.local_missing),
                                    config.order, config.estimator);
        } else {
            model = estimate(work.samples, config.order, config.estimator);
        }
        work.samples = solve_missing(model, work);
        result.iterations = iter;
        result.objective = residual_energy(model, work.samples);
        result.objective_history.push_back(result.objective);

        double delta_sq = 0.0, norm_sq = 0.0;
        for (std::size_t r = 0; r < work.local_missing.size(); ++r) {
            const double v = work.samples[work.local_missing[r]];
            const double d = v - previous[r];
            delta_sq += d * d;
            norm_sq += v * v;
            previous[r] = v;
        }
        const double denom = std::max(std::sqrt(norm_sq), 1e-12);
        if (std::sqrt(delta_sq) / denom <= config.rel_tolerance) break;
    }

    result.samples = std::move(work.samples);
    return result;
}

}  // namespace arpaint
