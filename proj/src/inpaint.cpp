#include "arpaint/inpaint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace arpaint {

const char* to_string(InpaintMethod method) {
    switch (method) {
        case InpaintMethod::ExtrapolationCrossfade: return "extrapolation";
        case InpaintMethod::JanssenFrameWise: return "framewise";
        case InpaintMethod::JanssenGapWise: return "gapwise";
    }
    return "?";
}

const char* to_string(WindowShape window) {
    return window == WindowShape::Hann ? "hann" : "rect";
}

std::vector<double> window_values(WindowShape shape, std::size_t length) {
    if (length == 0) throw std::invalid_argument("window length must be positive");
    std::vector<double> w(length, 1.0);
    if (shape == WindowShape::Hann) {
        for (std::size_t n = 0; n < length; ++n)
            w[n] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                                         static_cast<double>(length)));
    }
    return w;
}

std::vector<double> crossfade_weights(std::size_t gap_length) {
    if (gap_length == 0) throw std::invalid_argument("gap length must be positive");
    if (gap_length == 1) return {0.5};
    std::vector<double> w(gap_length);
    // Mirrored construction: w[n] + w[L-1-n] = 1 exactly, endpoints exactly
    // 1 and 0, middle exactly 0.5 for odd lengths.
    const std::size_t last = gap_length - 1;
    for (std::size_t n = 0; 2 * n <= last; ++n) {
        const double v = 0.5 * (1.0 + std::cos(std::numbers::pi * static_cast<double>(n) /
                                               static_cast<double>(last)));
        w[n] = v;
        w[last - n] = 1.0 - v;
    }
    if (last % 2 == 0) w[last / 2] = 0.5;
    return w;
}

namespace {

struct GapContexts {
    std::size_t left_start = 0;   // [left_start, gap.start)
    std::size_t right_end = 0;    // [gap.end(), right_end)
};

/// Context bounds for gap `i`, truncated at signal edges and neighbor gaps.
GapContexts context_bounds(const GapMask& mask, std::size_t i, std::size_t context_length) {
    const auto& gaps = mask.gaps();
    const Gap& gap = gaps[i];
    GapContexts c;
    std::size_t lo = i > 0 ? gaps[i - 1].end() : 0;
    c.left_start = std::max(lo, gap.start >= context_length ? gap.start - context_length : 0);
    std::size_t hi = i + 1 < gaps.size() ? gaps[i + 1].start : mask.signal_length();
    c.right_end = std::min(hi, gap.end() + context_length);
    return c;
}

JanssenConfig janssen_config(const InpaintConfig& config) {
    JanssenConfig jc = config.janssen;
    jc.order = config.order;
    jc.estimator = config.estimator;
    return jc;
}

void check_common(const Signal& signal, const GapMask& mask) {
    validate_signal(signal);
    if (mask.signal_length() != signal.size())
        throw std::invalid_argument("mask length " + std::to_string(mask.signal_length()) +
                                    " does not match signal length " +
                                    std::to_string(signal.size()));
}

}  // namespace

Signal inpaint_extrapolation(const Signal& signal, const GapMask& mask,
                             const InpaintConfig& config) {
    check_common(signal, mask);
    Signal out = signal;
    const auto& gaps = mask.gaps();
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const Gap& gap = gaps[i];
        const GapContexts ctx = context_bounds(mask, i, config.context_length);
        const std::size_t left_len = gap.start - ctx.left_start;
        const std::size_t right_len = ctx.right_end - gap.end();
        if (left_len < config.order + 1 || right_len < config.order + 1)
            throw std::invalid_argument(
                "gap " + std::to_string(i) + " at [" + std::to_string(gap.start) + ", " +
                std::to_string(gap.end()) + "): context too short for order " +
                std::to_string(config.order) + " (left " + std::to_string(left_len) +
                ", right " + std::to_string(right_len) + ")");

        const std::span<const double> all(out.samples);
        const auto left = all.subspan(ctx.left_start, left_len);
        const auto right = all.subspan(gap.end(), right_len);
        const ARModel model_left = estimate(left, config.order, config.estimator);
        const ARModel model_right = estimate(right, config.order, config.estimator);

        const std::vector<double> fwd = extrapolate_forward(model_left, left, gap.length);
        const std::vector<double> bwd = extrapolate_backward(model_right, right, gap.length);
        const std::vector<double> w = crossfade_weights(gap.length);
        for (std::size_t n = 0; n < gap.length; ++n)
            out.samples[gap.start + n] = w[n] * fwd[n] + (1.0 - w[n]) * bwd[n];
    }
    return out;
}

Signal inpaint_janssen_gapwise(const Signal& signal, const GapMask& mask,
                               const InpaintConfig& config) {
    check_common(signal, mask);
    Signal out = signal;
    const auto& gaps = mask.gaps();
    const JanssenConfig jc = janssen_config(config);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const Gap& gap = gaps[i];
        const GapContexts ctx = context_bounds(mask, i, config.context_length);
        const std::size_t seg_len = ctx.right_end - ctx.left_start;
        if (seg_len < config.order + 1)
            throw std::invalid_argument(
                "gap " + std::to_string(i) + " at [" + std::to_string(gap.start) + ", " +
                std::to_string(gap.end()) + "): segment of " + std::to_string(seg_len) +
                " samples is too short for order " + std::to_string(config.order));

        Segment segment;
        segment.offset = ctx.left_start;
        segment.samples.assign(
            out.samples.begin() + static_cast<std::ptrdiff_t>(ctx.left_start),
            out.samples.begin() + static_cast<std::ptrdiff_t>(ctx.right_end));
        segment.local_missing.resize(gap.length);
        for (std::size_t n = 0; n < gap.length; ++n)
            segment.local_missing[n] = gap.start - ctx.left_start + n;

        const JanssenResult result = janssen_iterate(segment, jc);
        for (std::size_t n = 0; n < gap.length; ++n)
            out.samples[gap.start + n] = result.samples[gap.start - ctx.left_start + n];
    }
    return out;
}

std::vector<double> overlap_add_process(
    std::span<const double> x, std::size_t frame_length, std::size_t hop,
    WindowShape window,
    const std::function<void(std::ptrdiff_t start, std::span<double> frame)>& process) {
    const std::size_t n = x.size();
    if (frame_length == 0) throw std::invalid_argument("frame length must be positive");
    if (hop == 0 || hop > frame_length)
        throw std::invalid_argument("hop must be in [1, frame_length]");

    const std::size_t pad = frame_length - hop;
    const std::size_t padded_len = pad + n + frame_length;
    std::vector<double> padded(padded_len, 0.0);
    std::copy(x.begin(), x.end(), padded.begin() + static_cast<std::ptrdiff_t>(pad));

    const std::vector<double> w = window_values(window, frame_length);
    std::vector<double> accum(padded_len, 0.0);
    std::vector<double> wsum(padded_len, 0.0);

    std::vector<double> frame(frame_length);
    for (std::size_t start = 0; start + frame_length <= padded_len; start += hop) {
        for (std::size_t k = 0; k < frame_length; ++k)
            frame[k] = padded[start + k] * w[k];
        process(static_cast<std::ptrdiff_t>(start) - static_cast<std::ptrdiff_t>(pad),
                std::span<double>(frame));
        for (std::size_t k = 0; k < frame_length; ++k) {
            accum[start + k] += frame[k];
            wsum[start + k] += w[k];
        }
    }

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double denom = wsum[pad + i];
        out[i] = denom > 1e-12 ? accum[pad + i] / denom : x[i];
    }
    return out;
}

Signal inpaint_janssen_framewise(const Signal& signal, const GapMask& mask,
                                 const InpaintConfig& config) {
    check_common(signal, mask);
    if (config.frame_length < config.order + 1)
        throw std::invalid_argument("frame length " + std::to_string(config.frame_length) +
                                    " is too short for order " + std::to_string(config.order));
    const std::size_t hop = config.effective_hop();
    if (hop == 0 || hop > config.frame_length)
        throw std::invalid_argument("hop must be in [1, frame_length]");

    const std::size_t n = signal.size();
    const JanssenConfig jc = janssen_config(config);

    auto process = [&](std::ptrdiff_t start, std::span<double> frame) {
        std::vector<std::size_t> missing;
        std::size_t reliable = 0;
        for (std::size_t k = 0; k < frame.size(); ++k) {
            const std::ptrdiff_t pos = start + static_cast<std::ptrdiff_t>(k);
            if (pos < 0 || pos >= static_cast<std::ptrdiff_t>(n)) continue;  // padding
            if (mask.is_missing(static_cast<std::size_t>(pos)))
                missing.push_back(k);
            else
                ++reliable;
        }
        if (missing.empty() || reliable == 0) return;  // clean frames pass through
        Segment segment;
        segment.offset = 0;
        segment.samples.assign(frame.begin(), frame.end());
        segment.local_missing = std::move(missing);
        const JanssenResult result = janssen_iterate(segment, jc);
        std::copy(result.samples.begin(), result.samples.end(), frame.begin());
    };

    Signal candidate = signal;
    candidate.samples = overlap_add_process(signal.samples, config.frame_length, hop,
                                            config.window, process);
    return project_consistent(signal, mask, candidate);
}

Signal inpaint(const Signal& signal, const GapMask& mask, const InpaintConfig& config) {
    switch (config.method) {
        case InpaintMethod::ExtrapolationCrossfade:
            return inpaint_extrapolation(signal, mask, config);
        case InpaintMethod::JanssenFrameWise:
            return inpaint_janssen_framewise(signal, mask, config);
        case InpaintMethod::JanssenGapWise:
            return inpaint_janssen_gapwise(signal, mask, config);
    }
    throw std::invalid_argument("unknown inpainting method");
}

}  // namespace arpaint
