#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "arpaint/estimation.hpp"
#include "arpaint/janssen.hpp"
#include "arpaint/signal.hpp"

namespace arpaint {

enum class InpaintMethod { ExtrapolationCrossfade, JanssenFrameWise, JanssenGapWise };
enum class WindowShape { Rectangular, Hann };

const char* to_string(InpaintMethod method);
const char* to_string(WindowShape window);

/// Analysis window of the given length. Hann is the periodic form
/// w[n] = 0.5 * (1 - cos(2 pi n / L)), which sums to a constant at 50% hop.
std::vector<double> window_values(WindowShape shape, std::size_t length);

/// Raised-cosine fade from 1 to 0 across the gap:
/// w[n] = 0.5 * (1 + cos(pi n / (L - 1))) for n = 0..L-1, and [0.5] for L = 1.
std::vector<double> crossfade_weights(std::size_t gap_length);

struct InpaintConfig {
    InpaintMethod method = InpaintMethod::JanssenGapWise;
    Estimator estimator = Estimator::Burg;
    std::size_t order = 256;
    std::size_t context_length = 4096;  // per gap side (extrapolation, gap-wise)
    std::size_t frame_length = 4096;    // frame-wise
    WindowShape window = WindowShape::Hann;
    std::size_t hop = 0;                // 0 means frame_length / 2
    /// Iteration control for the Janssen methods; order and estimator above
    /// take precedence over the ones in here.
    JanssenConfig janssen;

    std::size_t effective_hop() const { return hop == 0 ? frame_length / 2 : hop; }
};

/// Per gap: fit one model on the left context and one on the right, predict
/// both into the gap, and blend with the raised-cosine weights. Contexts are
/// truncated at signal edges and at neighboring gaps; fewer than order + 1
/// remaining context samples on either side is an error.
Signal inpaint_extrapolation(const Signal& signal, const GapMask& mask,
                             const InpaintConfig& config);

/// Per gap: run the alternating restoration on one segment made of the left
/// context, the gap, and the right context, all sharing a single model.
Signal inpaint_janssen_gapwise(const Signal& signal, const GapMask& mask,
                               const InpaintConfig& config);

/// Windowed frames at a fixed stride; frames containing missing samples are
/// restored, the rest pass through; frames are overlap-added and normalized
/// by the accumulated window sum, and reliable samples are restored exactly.
Signal inpaint_janssen_framewise(const Signal& signal, const GapMask& mask,
                                 const InpaintConfig& config);

/// Dispatch on config.method.
Signal inpaint(const Signal& signal, const GapMask& mask, const InpaintConfig& config);

/// Overlap-add engine used by the frame-wise method. The input is zero-padded
/// so every sample gets full window coverage; each windowed frame is handed to
/// `process` (start = frame position in signal coordinates, possibly negative
/// into the padding) before accumulation. Returns the normalized result with
/// the input's length.
std::vector<double> overlap_add_process(
    std::span<const double> x, std::size_t frame_length, std::size_t hop,
    WindowShape window,
    const std::function<void(std::ptrdiff_t start, std::span<double> frame)>& process);

}  // namespace arpaint
