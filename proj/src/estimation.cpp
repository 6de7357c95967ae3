#include "arpaint/estimation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace arpaint {

namespace {

void check_length(std::size_t n, std::size_t order) {
    if (order == 0) throw std::invalid_argument("model order must be positive");
    if (n < order + 1)
        throw std::invalid_argument("segment of " + std::to_string(n) +
                                    " samples is too short for order " +
                                    std::to_string(order));
}

void check_finite(std::span<const double> x) {
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite input sample");
}

ARModel trivial_model(std::size_t order) {
    ARModel model;
    model.coeffs.assign(order + 1, 0.0);
    model.coeffs[0] = 1.0;
    return model;
}

void accumulate_autocorrelation(std::span<const double> x, std::size_t order,
                                std::vector<double>& r) {
    const std::size_t n = x.size();
    for (std::size_t k = 0; k <= order && k < n; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i + k < n; ++i) acc += x[i] * x[i + k];
        r[k] += acc;
    }
}

}  // namespace

std::vector<double> autocorrelation(std::span<const double> x, std::size_t order) {
    check_length(x.size(), order);
    check_finite(x);
    std::vector<double> r(order + 1, 0.0);
    accumulate_autocorrelation(x, order, r);
    return r;
}

std::vector<double> autocorrelation_chunks(
    const std::vector<std::span<const double>>& chunks, std::size_t order) {
    if (order == 0) throw std::invalid_argument("model order must be positive");
    std::size_t longest = 0;
    for (const auto& c : chunks) longest = std::max(longest, c.size());
    if (longest < order + 1)
        throw std::invalid_argument("no chunk is long enough for order " +
                                    std::to_string(order));
    std::vector<double> r(order + 1, 0.0);
    for (const auto& c : chunks) {
        check_finite(c);
        accumulate_autocorrelation(c, order, r);
    }
    return r;
}

LevinsonResult levinson_durbin(std::span<const double> r) {
    if (r.size() < 2) throw std::invalid_argument("need at least two lags");
    check_finite(r);
    if (r[0] < 0.0) throw std::invalid_argument("negative zero-lag autocorrelation");
    const std::size_t p = r.size() - 1;

    LevinsonResult result;
    result.model = trivial_model(p);
    if (r[0] == 0.0) {
        result.error_power = 0.0;
        return result;
    }

    std::vector<double>& a = result.model.coeffs;
    double error = r[0];
    std::vector<double> prev(p + 1);
    for (std::size_t m = 1; m <= p; ++m) {
        if (error <= 0.0) break;  // perfectly predictable; remaining reflections are zero
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += a[j] * r[m - j];
        const double k = -acc / error;
        prev.assign(a.begin(), a.end());
        for (std::size_t j = 1; j < m; ++j) a[j] = prev[j] + k * prev[m - j];
        a[m] = k;
        error *= 1.0 - k * k;
    }
    result.error_power = std::max(error, 0.0);
    return result;
}

ARModel estimate_lpc(std::span<const double> x, std::size_t order) {
    return levinson_durbin(autocorrelation(x, order)).model;
}

namespace {

/// One Burg lattice pass over pre-initialized forward/backward error vectors,
/// where `errors` holds one pair (f, b) per chunk. Stage sums are accumulated
/// across chunks so all of them share the model.
ARModel burg_lattice(std::vector<std::pair<std::vector<double>, std::vector<double>>>& errors,
                     std::size_t order) {
    ARModel model = trivial_model(order);
    std::vector<double>& a = model.coeffs;
    std::vector<double> prev(order + 1);

    for (std::size_t m = 1; m <= order; ++m) {
        double num = 0.0, den = 0.0;
        for (auto& [f, b] : errors) {
            const std::size_t n = f.size();
            if (n < m + 1) continue;
            for (std::size_t i = m; i < n; ++i) {
                num += f[i] * b[i - 1];
                den += f[i] * f[i] + b[i - 1] * b[i - 1];
            }
        }
        if (den == 0.0) break;  // remaining reflection coefficients are zero
        const double k = -2.0 * num / den;

        for (auto& [f, b] : errors) {
            const std::size_t n = f.size();
            if (n < m + 1) continue;
            for (std::size_t i = n - 1; i >= m; --i) {
                const double fi = f[i];
                f[i] = fi + k * b[i - 1];
                b[i] = b[i - 1] + k * fi;
            }
        }

        prev.assign(a.begin(), a.end());
        for (std::size_t j = 1; j < m; ++j) a[j] = prev[j] + k * prev[m - j];
        a[m] = k;
    }
    return model;
}

}  // namespace

ARModel estimate_burg(std::span<const double> x, std::size_t order) {
    check_length(x.size(), order);
    check_finite(x);
    std::vector<std::pair<std::vector<double>, std::vector<double>>> errors(1);
    errors[0].first.assign(x.begin(), x.end());
    errors[0].second.assign(x.begin(), x.end());
    return burg_lattice(errors, order);
}

ARModel estimate_burg_chunks(const std::vector<std::span<const double>>& chunks,
                             std::size_t order) {
    if (order == 0) throw std::invalid_argument("model order must be positive");
    std::size_t longest = 0;
    for (const auto& c : chunks) longest = std::max(longest, c.size());
    if (longest < order + 1)
        throw std::invalid_argument("no chunk is long enough for order " +
                                    std::to_string(order));
    std::vector<std::pair<std::vector<double>, std::vector<double>>> errors;
    errors.reserve(chunks.size());
    for (const auto& c : chunks) {
        check_finite(c);
        errors.emplace_back(std::vector<double>(c.begin(), c.end()),
                            std::vector<double>(c.begin(), c.end()));
    }
    return burg_lattice(errors, order);
}

ARModel estimate(std::span<const double> x, std::size_t order, Estimator estimator) {
    return estimator == Estimator::Lpc ? estimate_lpc(x, order)
                                       : estimate_burg(x, order);
}

ARModel estimate_chunks(const std::vector<std::span<const double>>& chunks,
                        std::size_t order, Estimator estimator) {
    if (estimator == Estimator::Lpc)
        return levinson_durbin(autocorrelation_chunks(chunks, order)).model;
    return estimate_burg_chunks(chunks, order);
}

const char* to_string(Estimator estimator) {
    return estimator == Estimator::Lpc ? "lpc" : "burg";
}

}  // namespace arpaint
