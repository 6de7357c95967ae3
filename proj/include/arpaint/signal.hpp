#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace arpaint {

/// A finite, single-channel sampled waveform. Samples are dimensionless
/// amplitudes, nominally in [-1, 1].
struct Signal {
    std::vector<double> samples;
    int sample_rate = 44100;

    std::size_t size() const { return samples.size(); }
};

/// Throws std::invalid_argument if the signal is empty, has a non-positive
/// sample rate, or contains non-finite samples.
void validate_signal(const Signal& signal);

/// A run of consecutive missing samples, [start, start + length).
struct Gap {
    std::size_t start = 0;
    std::size_t length = 0;

    std::size_t end() const { return start + length; }
    friend bool operator==(const Gap&, const Gap&) = default;
};

/// Partition of the index range {0, ..., N-1} into the reliable set and a
/// list of disjoint, non-adjacent gaps. Gaps are kept sorted by start; there
/// is at least one reliable sample between consecutive gaps.
class GapMask {
public:
    GapMask() = default;

    /// Validates and stores the gaps; they may be given in any order.
    /// Throws std::invalid_argument on overlap, adjacency, zero length, or a
    /// gap reaching past signal_length.
    GapMask(std::vector<Gap> gaps, std::size_t signal_length);

    const std::vector<Gap>& gaps() const { return gaps_; }
    std::size_t signal_length() const { return signal_length_; }
    bool empty() const { return gaps_.empty(); }

    /// Total number of missing samples.
    std::size_t missing_count() const;

    /// True if sample index i falls inside a gap. Binary search, O(log g).
    bool is_missing(std::size_t i) const;

private:
    std::vector<Gap> gaps_;
    std::size_t signal_length_ = 0;
};

/// A contiguous working window on a parent signal, together with the local
/// indices (sorted) that are missing inside it.
struct Segment {
    std::vector<double> samples;
    std::size_t offset = 0;
    std::vector<std::size_t> local_missing;

    std::size_t size() const { return samples.size(); }
};

/// Copies signal samples [start, start + length) into a Segment, deriving
/// the local missing set from the mask. Missing positions carry whatever
/// values the signal currently holds.
Segment extract_segment(const Signal& signal, const GapMask& mask,
                        std::size_t start, std::size_t length);

/// Returns a signal equal to `original` on the reliable set and to
/// `candidate` inside the gaps.
Signal project_consistent(const Signal& original, const GapMask& mask,
                          const Signal& candidate);

/// SplitMix64 generator. The gap placement below is specified in terms of
/// this exact generator so that masks are bit-reproducible across
/// implementations.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// next() reduced modulo bound; bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

/// Places `count` gaps of round(gap_length_ms * sample_rate / 1000) samples
/// at pseudorandom positions. Every gap starts at least `border` samples from
/// either signal end and consecutive gaps are separated by at least
/// `min_separation` reliable samples. Deterministic for a fixed seed.
/// Throws std::runtime_error when the geometry cannot be satisfied (checked
/// arithmetically up front, and again after a bounded number of rejection
/// sampling attempts).
GapMask generate_gaps(std::size_t signal_length, int sample_rate,
                      double gap_length_ms, int count,
                      std::size_t min_separation = 8192,
                      std::size_t border = 4096,
                      std::uint64_t seed = 0);

}  // namespace arpaint
