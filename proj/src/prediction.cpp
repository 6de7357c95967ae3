#include "arpaint/prediction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arpaint {

std::vector<double> residual(const ARModel& model, std::span<const double> x) {
    const std::size_t p = model.order();
    const std::size_t n = x.size();
    std::vector<double> e(n + p, 0.0);
    for (std::size_t i = 0; i <= p; ++i) {
        const double c = model.coeffs[i];
        if (c == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) e[i + j] += c * x[j];
    }
    return e;
}

double residual_energy(const ARModel& model, std::span<const double> x) {
    const std::size_t p = model.order();
    const std::size_t n = x.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n + p; ++i) {
        // e[i] = sum_k a[k] x[i-k] over the valid overlap
        const std::size_t k_lo = i >= n ? i - n + 1 : 0;
        const std::size_t k_hi = std::min(i, p);
        double e = 0.0;
        for (std::size_t k = k_lo; k <= k_hi; ++k) e += model.coeffs[k] * x[i - k];
        total += e * e;
    }
    return total;
}

std::vector<double> extrapolate_forward(const ARModel& model,
                                        std::span<const double> context,
                                        std::size_t horizon) {
    const std::size_t p = model.order();
    if (context.size() < p)
        throw std::invalid_argument("context of " + std::to_string(context.size()) +
                                    " samples is shorter than model order " +
                                    std::to_string(p));
    // Work buffer: last p context samples followed by the predictions.
    std::vector<double> buf(p + horizon);
    std::copy(context.end() - static_cast<std::ptrdiff_t>(p), context.end(), buf.begin());
    for (std::size_t n = 0; n < horizon; ++n) {
        double acc = 0.0;
        for (std::size_t i = 1; i <= p; ++i) acc -= model.coeffs[i] * buf[p + n - i];
        buf[p + n] = acc;
    }
    return {buf.begin() + static_cast<std::ptrdiff_t>(p), buf.end()};
}

std::vector<double> extrapolate_backward(const ARModel& model,
                                         std::span<const double> context,
                                         std::size_t horizon) {
    std::vector<double> reversed(context.rbegin(), context.rend());
    std::vector<double> pred = extrapolate_forward(model, reversed, horizon);
    std::reverse(pred.begin(), pred.end());
    return pred;
}

}  // namespace arpaint
