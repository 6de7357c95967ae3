#pragma once

#include <filesystem>
#include <vector>

#include "arpaint/evaluation.hpp"
#include "arpaint/signal.hpp"

namespace arpaint {

enum class WavEncoding { Pcm16, Float32 };

/// Reads a mono RIFF/WAVE file with 16-bit integer or 32-bit float samples.
/// 16-bit samples are scaled by 1/32768. Multi-channel input is rejected
/// unless downmix is set, in which case channels are averaged.
Signal read_wav(const std::filesystem::path& path, bool downmix = false);

/// Writes a WAV file. Pcm16 clamps to [-1, 1 - 2^-15] and rounds to the
/// nearest integer sample; Float32 stores IEEE floats.
void write_wav(const Signal& signal, const std::filesystem::path& path,
               WavEncoding encoding = WavEncoding::Float32);

/// Gap mask together with the sample rate it was generated for
/// (the on-disk format is versioned; only version 1 exists).
struct MaskFile {
    GapMask mask;
    int sample_rate = 44100;
};

/// Parses the textual mask format, validating every GapMask invariant.
/// Validation errors name the offending gap.
MaskFile read_mask(const std::filesystem::path& path);

void write_mask(const MaskFile& mask, const std::filesystem::path& path);

struct ResultsTable {
    std::vector<EvalRecord> rows;
};

/// Writes the CSV with header
/// signal_id,method,estimator,order,gap_length_ms,gap_index,sdr_db,elapsed_s.
/// +inf is serialized as `inf`, failed cells as `nan`; rows are sorted by all
/// key columns so identical tables produce byte-identical files.
void write_results(const ResultsTable& table, const std::filesystem::path& path);

/// Parses a results CSV back into records (used for resuming sweeps).
ResultsTable read_results(const std::filesystem::path& path);

}  // namespace arpaint
