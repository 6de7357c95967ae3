#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "arpaint/evaluation.hpp"
#include "arpaint/inpaint.hpp"
#include "arpaint/io.hpp"
#include "arpaint/signal.hpp"

namespace py = pybind11;
using namespace arpaint;

namespace {

std::vector<double> to_vector(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1-D array");
    return {a.data(), a.data() + a.size()};
}

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::memcpy(out.mutable_data(), v.data(), v.size() * sizeof(double));
    return out;
}

GapMask make_mask(const std::vector<std::pair<std::size_t, std::size_t>>& gaps,
                  std::size_t signal_length) {
    std::vector<Gap> parsed;
    parsed.reserve(gaps.size());
    for (const auto& [start, length] : gaps) parsed.push_back(Gap{start, length});
    return GapMask(std::move(parsed), signal_length);
}

InpaintConfig make_config(const std::string& method, const std::string& estimator,
                          std::size_t order, std::size_t context, std::size_t frame,
                          const std::string& window, std::size_t hop,
                          int max_iterations, double rel_tolerance, bool contexts_only) {
    InpaintConfig config;
    if (method == "extrapolation")
        config.method = InpaintMethod::ExtrapolationCrossfade;
    else if (method == "gapwise")
        config.method = InpaintMethod::JanssenGapWise;
    else if (method == "framewise")
        config.method = InpaintMethod::JanssenFrameWise;
    else
        throw std::invalid_argument("unknown method: " + method);
    if (estimator == "lpc")
        config.estimator = Estimator::Lpc;
    else if (estimator == "burg")
        config.estimator = Estimator::Burg;
    else
        throw std::invalid_argument("unknown estimator: " + estimator);
    if (window == "hann")
        config.window = WindowShape::Hann;
    else if (window == "rect")
        config.window = WindowShape::Rectangular;
    else
        throw std::invalid_argument("unknown window: " + window);
    config.order = order;
    config.context_length = context;
    config.frame_length = frame;
    config.hop = hop;
    config.janssen.max_iterations = max_iterations;
    config.janssen.rel_tolerance = rel_tolerance;
    config.janssen.contexts_only = contexts_only;
    return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Autoregressive audio gap inpainting";

    m.def(
        "estimate_lpc",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> x, std::size_t order) {
            return to_array(estimate_lpc(to_vector(x), order).coeffs);
        },
        py::arg("x"), py::arg("order"),
        "AR coefficients [1, a2, ...] by the autocorrelation method");

    m.def(
        "estimate_burg",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> x, std::size_t order) {
            return to_array(estimate_burg(to_vector(x), order).coeffs);
        },
        py::arg("x"), py::arg("order"), "AR coefficients by the Burg lattice method");

    m.def(
        "residual",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> coeffs,
           py::array_t<double, py::array::c_style | py::array::forcecast> x) {
            return to_array(residual(ARModel{to_vector(coeffs)}, to_vector(x)));
        },
        py::arg("coeffs"), py::arg("x"),
        "Full convolution of the coefficients with x (length N + p)");

    m.def(
        "extrapolate_forward",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> coeffs,
           py::array_t<double, py::array::c_style | py::array::forcecast> context,
           std::size_t horizon) {
            return to_array(
                extrapolate_forward(ARModel{to_vector(coeffs)}, to_vector(context), horizon));
        },
        py::arg("coeffs"), py::arg("context"), py::arg("horizon"));

    m.def(
        "extrapolate_backward",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> coeffs,
           py::array_t<double, py::array::c_style | py::array::forcecast> context,
           std::size_t horizon) {
            return to_array(
                extrapolate_backward(ARModel{to_vector(coeffs)}, to_vector(context), horizon));
        },
        py::arg("coeffs"), py::arg("context"), py::arg("horizon"));

    m.def(
        "crossfade_weights",
        [](std::size_t gap_length) { return to_array(crossfade_weights(gap_length)); },
        py::arg("gap_length"));

    m.def(
        "generate_gaps",
        [](std::size_t signal_length, int sample_rate, double gap_length_ms, int count,
           std::size_t min_separation, std::size_t border, std::uint64_t seed) {
            const GapMask mask = generate_gaps(signal_length, sample_rate, gap_length_ms,
                                               count, min_separation, border, seed);
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (const Gap& g : mask.gaps()) out.emplace_back(g.start, g.length);
            return out;
        },
        py::arg("signal_length"), py::arg("sample_rate"), py::arg("gap_length_ms"),
        py::arg("count"), py::arg("min_separation") = 8192, py::arg("border") = 4096,
        py::arg("seed") = 0, "Seeded pseudorandom gap placement; returns (start, length) pairs");

    m.def(
        "inpaint",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> x, int sample_rate,
           const std::vector<std::pair<std::size_t, std::size_t>>& gaps,
           const std::string& method, const std::string& estimator, std::size_t order,
           std::size_t context, std::size_t frame, const std::string& window, std::size_t hop,
           int max_iterations, double rel_tolerance, bool contexts_only) {
            Signal signal{to_vector(x), sample_rate};
            const GapMask mask = make_mask(gaps, signal.size());
            const Signal out = inpaint(signal, mask,
                                       make_config(method, estimator, order, context, frame,
                                                   window, hop, max_iterations, rel_tolerance,
                                                   contexts_only));
            return to_array(out.samples);
        },
        py::arg("x"), py::arg("sample_rate"), py::arg("gaps"), py::arg("method") = "gapwise",
        py::arg("estimator") = "burg", py::arg("order") = 256, py::arg("context") = 4096,
        py::arg("frame") = 4096, py::arg("window") = "hann", py::arg("hop") = 0,
        py::arg("max_iterations") = 50, py::arg("rel_tolerance") = 1e-6,
        py::arg("contexts_only") = false,
        "Reconstruct the gap samples; reliable samples pass through exactly");

    m.def(
        "sdr",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> reference,
           py::array_t<double, py::array::c_style | py::array::forcecast> estimate) {
            return sdr(to_vector(reference), to_vector(estimate));
        },
        py::arg("reference"), py::arg("estimate"),
        "Signal-to-distortion ratio in dB (inf when identical)");

    m.def(
        "sdr_inpainted",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> reference,
           py::array_t<double, py::array::c_style | py::array::forcecast> estimate,
           const std::vector<std::pair<std::size_t, std::size_t>>& gaps, bool per_gap) {
            Signal ref{to_vector(reference), 44100};
            Signal est{to_vector(estimate), 44100};
            const GapMask mask = make_mask(gaps, ref.size());
            if (per_gap) return py::cast(sdr_inpainted_per_gap(ref, est, mask));
            return py::cast(sdr_inpainted_all_gaps(ref, est, mask));
        },
        py::arg("reference"), py::arg("estimate"), py::arg("gaps"), py::arg("per_gap") = false,
        "SDR restricted to the gap samples");

    m.def(
        "read_wav",
        [](const std::string& path, bool downmix) {
            const Signal s = read_wav(path, downmix);
            return py::make_tuple(to_array(s.samples), s.sample_rate);
        },
        py::arg("path"), py::arg("downmix") = false, "Returns (samples, sample_rate)");

    m.def(
        "write_wav",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> x, int sample_rate,
           const std::string& path, const std::string& encoding) {
            WavEncoding enc;
            if (encoding == "pcm16")
                enc = WavEncoding::Pcm16;
            else if (encoding == "float32")
                enc = WavEncoding::Float32;
            else
                throw std::invalid_argument("unknown encoding: " + encoding);
            write_wav(Signal{to_vector(x), sample_rate}, path, enc);
        },
        py::arg("x"), py::arg("sample_rate"), py::arg("path"),
        py::arg("encoding") = "float32");
}
