#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "arpaint/evaluation.hpp"
#include "arpaint/inpaint.hpp"
#include "arpaint/io.hpp"

namespace arpaint {

struct DegradeOptions {
    double gap_length_ms = 40.0;
    int count = 10;
    std::uint64_t seed = 0;
    std::size_t min_separation = 8192;
    std::size_t border = 4096;
    bool downmix = false;
};

/// Generates a seeded mask for the input, writes it, and writes a degraded
/// copy of the signal with the gap samples zeroed for audition. The mask is
/// the ground truth; the zeros are not.
void cmd_degrade(const std::filesystem::path& input_wav, const DegradeOptions& options,
                 const std::filesystem::path& out_wav,
                 const std::filesystem::path& out_mask);

/// Runs the selected method on input + mask and writes the reconstruction.
/// Logs elapsed wall time to `log` when given.
void cmd_inpaint(const std::filesystem::path& input_wav,
                 const std::filesystem::path& mask_path, const InpaintConfig& config,
                 const std::filesystem::path& out_wav, std::ostream* log = nullptr,
                 bool downmix = false);

struct EvaluateResult {
    std::vector<double> per_gap;
    double all_gaps = 0.0;
};

/// Gap-restricted SDR of estimate against reference. Prints per-gap and
/// all-gaps values to `out` when given and writes a CSV when out_csv is
/// non-empty.
EvaluateResult cmd_evaluate(const std::filesystem::path& reference_wav,
                            const std::filesystem::path& estimate_wav,
                            const std::filesystem::path& mask_path,
                            const std::filesystem::path& out_csv = {},
                            std::ostream* out = nullptr);

/// Full experiment grid over a corpus directory of WAV files.
struct SweepSpec {
    std::vector<InpaintMethod> methods;
    std::vector<Estimator> estimators;
    std::vector<unsigned> orders;
    std::vector<double> gap_lengths_ms;
    std::size_t context_length = 4096;
    std::size_t frame_length = 4096;
    std::vector<WindowShape> windows;  // frame-wise variants only
    std::uint64_t seed = 0;
    std::filesystem::path corpus_dir;
    std::filesystem::path output_csv;

    int gap_count = 10;
    std::size_t min_separation = 8192;
    std::size_t border = 4096;
    int max_iterations = 50;
    double rel_tolerance = 1e-6;
    int jobs = 1;
    /// Record wall-clock times in the CSV. Off by default: with zeroed
    /// timings a rerun of the same spec is byte-identical.
    bool record_timings = false;
    bool downmix = false;
};

/// Runs every (signal x gap length x method x estimator x order [x window])
/// cell: degrade with a per-(signal, gap length) derived seed, inpaint,
/// evaluate per gap. Rows are appended to the output CSV as cells finish, so
/// an interrupted sweep resumes by cell; the final file is rewritten fully
/// sorted. Per-cell failures become rows with sdr_db = nan and do not abort
/// the sweep. Cells run on `jobs` worker threads; the result is independent
/// of scheduling.
void cmd_sweep(const SweepSpec& spec, std::ostream* progress = nullptr);

/// The per-(signal, gap length) degradation seed used by cmd_sweep,
/// exposed so single cells can be reproduced outside a sweep.
std::uint64_t sweep_cell_seed(std::uint64_t sweep_seed, const std::string& signal_id,
                              double gap_length_ms);

}  // namespace arpaint
