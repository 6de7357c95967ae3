#include "arpaint/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace arpaint {

namespace {

Signal zero_gaps(const Signal& signal, const GapMask& mask) {
    Signal out = signal;
    for (const Gap& g : mask.gaps())
        std::fill(out.samples.begin() + static_cast<std::ptrdiff_t>(g.start),
                  out.samples.begin() + static_cast<std::ptrdiff_t>(g.end()), 0.0);
    return out;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

std::uint64_t sweep_cell_seed(std::uint64_t sweep_seed, const std::string& signal_id,
                              double gap_length_ms) {
    const auto ms_key =
        static_cast<std::uint64_t>(std::llround(gap_length_ms * 1000.0));
    SplitMix64 rng(sweep_seed ^ fnv1a64(signal_id) ^
                   (ms_key * 0xD1B54A32D192ED03ull));
    return rng.next();
}

void cmd_degrade(const std::filesystem::path& input_wav, const DegradeOptions& options,
                 const std::filesystem::path& out_wav,
                 const std::filesystem::path& out_mask) {
    const Signal signal = read_wav(input_wav, options.downmix);
    const GapMask mask =
        generate_gaps(signal.size(), signal.sample_rate, options.gap_length_ms,
                      options.count, options.min_separation, options.border, options.seed);
    write_mask(MaskFile{mask, signal.sample_rate}, out_mask);
    write_wav(zero_gaps(signal, mask), out_wav, WavEncoding::Float32);
}

void cmd_inpaint(const std::filesystem::path& input_wav,
                 const std::filesystem::path& mask_path, const InpaintConfig& config,
                 const std::filesystem::path& out_wav, std::ostream* log, bool downmix) {
    const Signal signal = read_wav(input_wav, downmix);
    const MaskFile mask_file = read_mask(mask_path);
    if (mask_file.mask.signal_length() != signal.size())
        throw std::invalid_argument("mask length " +
                                    std::to_string(mask_file.mask.signal_length()) +
                                    " does not match signal length " +
                                    std::to_string(signal.size()));

    const auto t0 = std::chrono::steady_clock::now();
    const Signal restored = inpaint(signal, mask_file.mask, config);
    const auto t1 = std::chrono::steady_clock::now();
    if (log) {
        const double s = std::chrono::duration<double>(t1 - t0).count();
        const std::size_t units = config.method == InpaintMethod::JanssenFrameWise
                                      ? (signal.size() + config.effective_hop() - 1) /
                                            config.effective_hop()
                                      : mask_file.mask.gaps().size();
        const char* unit =
            config.method == InpaintMethod::JanssenFrameWise ? "frame" : "gap";
        (*log) << to_string(config.method) << ": " << s << " s total";
        if (units > 0)
            (*log) << ", " << s / static_cast<double>(units) << " s per " << unit;
        (*log) << "\n";
    }
    write_wav(restored, out_wav, WavEncoding::Float32);
}

EvaluateResult cmd_evaluate(const std::filesystem::path& reference_wav,
                            const std::filesystem::path& estimate_wav,
                            const std::filesystem::path& mask_path,
                            const std::filesystem::path& out_csv, std::ostream* out) {
    const Signal reference = read_wav(reference_wav);
    const Signal estimate = read_wav(estimate_wav);
    const MaskFile mask_file = read_mask(mask_path);

    EvaluateResult result;
    result.per_gap = sdr_inpainted_per_gap(reference, estimate, mask_file.mask);
    result.all_gaps = sdr_inpainted_all_gaps(reference, estimate, mask_file.mask);

    if (out) {
        const auto& gaps = mask_file.mask.gaps();
        for (std::size_t i = 0; i < gaps.size(); ++i)
            (*out) << "gap " << i << " [" << gaps[i].start << ", " << gaps[i].end()
                   << "): " << result.per_gap[i] << " dB\n";
        (*out) << "all gaps: " << result.all_gaps << " dB\n";
    }

    if (!out_csv.empty()) {
        ResultsTable table;
        const std::string id = reference_wav.stem().string();
        const auto& gaps = mask_file.mask.gaps();
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            EvalRecord r;
            r.signal_id = id;
            r.method = "evaluate";
            r.estimator = "none";
            r.gap_length_ms = 1000.0 * static_cast<double>(gaps[i].length) /
                              mask_file.sample_rate;
            r.gap_index = static_cast<int>(i);
            r.sdr_db = result.per_gap[i];
            table.rows.push_back(std::move(r));
        }
        write_results(table, out_csv);
    }
    return result;
}

namespace {

struct SweepCell {
    std::size_t signal_index = 0;
    double gap_length_ms = 0.0;
    InpaintMethod method = InpaintMethod::JanssenGapWise;
    WindowShape window = WindowShape::Hann;  // frame-wise only
    Estimator estimator = Estimator::Burg;
    unsigned order = 0;
};

std::string method_label(InpaintMethod method, WindowShape window) {
    if (method == InpaintMethod::JanssenFrameWise)
        return std::string("framewise:") + to_string(window);
    return to_string(method);
}

std::string cell_key(const std::string& signal_id, const std::string& method,
                     const std::string& estimator, unsigned order, double gap_ms) {
    std::ostringstream ss;
    ss << signal_id << '|' << method << '|' << estimator << '|' << order << '|'
       << gap_ms;
    return ss.str();
}

}  // namespace

void cmd_sweep(const SweepSpec& spec, std::ostream* progress) {
    if (spec.methods.empty() || spec.estimators.empty() || spec.orders.empty() ||
        spec.gap_lengths_ms.empty())
        throw std::invalid_argument("sweep needs methods, estimators, orders, and gap lengths");
    const bool has_framewise =
        std::find(spec.methods.begin(), spec.methods.end(),
                  InpaintMethod::JanssenFrameWise) != spec.methods.end();
    if (has_framewise && spec.windows.empty())
        throw std::invalid_argument("frame-wise sweep needs at least one window shape");
    for (unsigned order : spec.orders) {
        if (order + 1 > spec.context_length || (has_framewise && order + 1 > spec.frame_length))
            throw std::invalid_argument("order " + std::to_string(order) +
                                        " does not fit the context/frame length");
    }
    if (spec.output_csv.empty()) throw std::invalid_argument("output CSV path is empty");

    // Corpus, sorted by filename for a deterministic cell order.
    std::vector<std::filesystem::path> wavs;
    for (const auto& entry : std::filesystem::directory_iterator(spec.corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".wav")
            wavs.push_back(entry.path());
    std::sort(wavs.begin(), wavs.end());
    if (wavs.empty())
        throw std::runtime_error("no .wav files in " + spec.corpus_dir.string());

    std::vector<Signal> signals;
    std::vector<std::string> ids;
    signals.reserve(wavs.size());
    for (const auto& p : wavs) {
        signals.push_back(read_wav(p, spec.downmix));
        ids.push_back(p.stem().string());
    }

    // Shared per (signal, gap length): mask and degraded input.
    struct Degraded {
        GapMask mask;
        Signal input;
        std::string error;
    };
    std::vector<std::vector<Degraded>> degraded(signals.size());
    for (std::size_t s = 0; s < signals.size(); ++s) {
        degraded[s].resize(spec.gap_lengths_ms.size());
        for (std::size_t g = 0; g < spec.gap_lengths_ms.size(); ++g) {
            Degraded& d = degraded[s][g];
            try {
                d.mask = generate_gaps(signals[s].size(), signals[s].sample_rate,
                                       spec.gap_lengths_ms[g], spec.gap_count,
                                       spec.min_separation, spec.border,
                                       sweep_cell_seed(spec.seed, ids[s],
                                                       spec.gap_lengths_ms[g]));
                d.input = zero_gaps(signals[s], d.mask);
            } catch (const std::exception& e) {
                d.error = e.what();
            }
        }
    }

    std::vector<SweepCell> cells;
    for (std::size_t s = 0; s < signals.size(); ++s)
        for (std::size_t g = 0; g < spec.gap_lengths_ms.size(); ++g)
            for (InpaintMethod method : spec.methods)
                for (Estimator estimator : spec.estimators)
                    for (unsigned order : spec.orders) {
                        if (method == InpaintMethod::JanssenFrameWise) {
                            for (WindowShape window : spec.windows)
                                cells.push_back({s, spec.gap_lengths_ms[g], method, window,
                                                 estimator, order});
                        } else {
                            cells.push_back({s, spec.gap_lengths_ms[g], method,
                                             WindowShape::Hann, estimator, order});
                        }
                    }

    // Resume: keep rows of cells already present in the output.
    std::vector<EvalRecord> rows;
    std::set<std::string> done;
    if (std::filesystem::exists(spec.output_csv)) {
        rows = read_results(spec.output_csv).rows;
        for (const EvalRecord& r : rows)
            done.insert(cell_key(r.signal_id, r.method, r.estimator, r.order,
                                 r.gap_length_ms));
    }
    std::vector<const SweepCell*> pending;
    for (const SweepCell& c : cells) {
        const std::string key = cell_key(ids[c.signal_index],
                                         method_label(c.method, c.window),
                                         to_string(c.estimator), c.order, c.gap_length_ms);
        if (!done.count(key)) pending.push_back(&c);
    }

    std::ofstream append(spec.output_csv, rows.empty() ? std::ios::trunc : std::ios::app);
    if (!append) throw std::runtime_error(spec.output_csv.string() + ": cannot open");
    if (rows.empty())
        append << "signal_id,method,estimator,order,gap_length_ms,gap_index,sdr_db,elapsed_s\n"
               << std::flush;

    std::mutex mutex;
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> finished{0};

    auto run_cell = [&](const SweepCell& cell) {
        const std::size_t gi =
            static_cast<std::size_t>(std::find(spec.gap_lengths_ms.begin(),
                                               spec.gap_lengths_ms.end(), cell.gap_length_ms) -
                                     spec.gap_lengths_ms.begin());
        const Degraded& d = degraded[cell.signal_index][gi];
        const std::string method = method_label(cell.method, cell.window);

        std::vector<EvalRecord> cell_rows;
        auto make_row = [&](int gap_index, double sdr_db, double elapsed) {
            EvalRecord r;
            r.signal_id = ids[cell.signal_index];
            r.method = method;
            r.estimator = to_string(cell.estimator);
            r.order = cell.order;
            r.gap_length_ms = cell.gap_length_ms;
            r.gap_index = gap_index;
            r.sdr_db = sdr_db;
            r.elapsed_s = spec.record_timings ? elapsed : 0.0;
            cell_rows.push_back(std::move(r));
        };

        if (!d.error.empty()) {
            make_row(-1, std::numeric_limits<double>::quiet_NaN(), 0.0);
        } else {
            InpaintConfig config;
            config.method = cell.method;
            config.estimator = cell.estimator;
            config.order = cell.order;
            config.context_length = spec.context_length;
            config.frame_length = spec.frame_length;
            config.window = cell.window;
            config.janssen.max_iterations = spec.max_iterations;
            config.janssen.rel_tolerance = spec.rel_tolerance;
            try {
                const auto t0 = std::chrono::steady_clock::now();
                const Signal restored = inpaint(d.input, d.mask, config);
                const double elapsed = std::chrono::duration<double>(
                                           std::chrono::steady_clock::now() - t0)
                                           .count();
                const std::vector<double> per_gap =
                    sdr_inpainted_per_gap(signals[cell.signal_index], restored, d.mask);
                for (std::size_t i = 0; i < per_gap.size(); ++i)
                    make_row(static_cast<int>(i), per_gap[i], elapsed);
            } catch (const std::exception&) {
                for (int i = 0; i < spec.gap_count; ++i)
                    make_row(i, std::numeric_limits<double>::quiet_NaN(), 0.0);
            }
        }

        std::lock_guard<std::mutex> lock(mutex);
        for (const EvalRecord& r : cell_rows) {
            rows.push_back(r);
            append << r.signal_id << ',' << r.method << ',' << r.estimator << ','
                   << r.order << ',' << r.gap_length_ms << ',' << r.gap_index << ','
                   << (std::isnan(r.sdr_db)
                           ? std::string("nan")
                           : (std::isinf(r.sdr_db) ? std::string("inf")
                                                   : std::to_string(r.sdr_db)))
                   << ',' << r.elapsed_s << "\n";
        }
        append << std::flush;
        const std::size_t k = ++finished;
        if (progress)
            (*progress) << "[" << k << "/" << pending.size() << "] " << method << " "
                        << to_string(cell.estimator) << " p=" << cell.order << " "
                        << cell.gap_length_ms << " ms " << ids[cell.signal_index] << "\n";
    };

    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        for (const SweepCell* c : pending) run_cell(*c);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j)
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= pending.size()) return;
                    run_cell(*pending[i]);
                }
            });
        for (auto& w : workers) w.join();
    }
    append.close();

    // Final deterministic rewrite, fully sorted.
    write_results(ResultsTable{std::move(rows)}, spec.output_csv);
}

}  // namespace arpaint
