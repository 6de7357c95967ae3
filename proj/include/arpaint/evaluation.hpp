#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arpaint/signal.hpp"

namespace arpaint {

/// Signal-to-distortion ratio in dB: 10 log10(||y||^2 / ||y - x||^2).
/// Returns +infinity when the estimate matches the reference exactly.
/// Throws std::invalid_argument on length mismatch and std::runtime_error
/// when the reference has zero energy.
double sdr(std::span<const double> reference, std::span<const double> estimate);

/// SDR of each gap's samples separately.
std::vector<double> sdr_inpainted_per_gap(const Signal& reference,
                                          const Signal& estimate,
                                          const GapMask& mask);

/// SDR over the concatenation of all gap samples.
double sdr_inpainted_all_gaps(const Signal& reference, const Signal& estimate,
                              const GapMask& mask);

/// One reconstruction-quality measurement, as serialized to CSV.
struct EvalRecord {
    std::string signal_id;
    std::string method;
    std::string estimator;
    unsigned order = 0;
    double gap_length_ms = 0.0;
    int gap_index = 0;
    double sdr_db = 0.0;   // finite, +inf (perfect), or NaN (failed cell)
    double elapsed_s = 0.0;
};

/// Grouped mean/median statistics. +inf values are excluded from the mean
/// and median but counted in perfect_count; NaN rows count as failed.
struct AggregateRow {
    std::vector<std::string> key;  // one value per group_by field, in order
    std::size_t count = 0;         // finite measurements
    double mean_sdr_db = 0.0;
    double median_sdr_db = 0.0;
    std::size_t perfect_count = 0;
    std::size_t failed_count = 0;
};

/// Groups records by the named fields (any of signal_id, method, estimator,
/// order, gap_length_ms, gap_index) and reports mean and median SDR per
/// group. Rows are sorted by key.
std::vector<AggregateRow> aggregate(std::span<const EvalRecord> records,
                                    std::span<const std::string> group_by);

}  // namespace arpaint
