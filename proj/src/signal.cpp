#include "arpaint/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace arpaint {

void validate_signal(const Signal& signal) {
    if (signal.samples.empty())
        throw std::invalid_argument("signal must contain at least one sample");
    if (signal.sample_rate <= 0)
        throw std::invalid_argument("sample rate must be positive");
    for (double s : signal.samples)
        if (!std::isfinite(s))
            throw std::invalid_argument("signal contains a non-finite sample");
}

GapMask::GapMask(std::vector<Gap> gaps, std::size_t signal_length)
    : gaps_(std::move(gaps)), signal_length_(signal_length) {
    std::sort(gaps_.begin(), gaps_.end(),
              [](const Gap& a, const Gap& b) { return a.start < b.start; });
    for (std::size_t i = 0; i < gaps_.size(); ++i) {
        const Gap& g = gaps_[i];
        if (g.length == 0)
            throw std::invalid_argument("gap " + std::to_string(i) + " has zero length");
        if (g.end() > signal_length_ || g.end() < g.start)
            throw std::invalid_argument("gap " + std::to_string(i) + " at [" +
                                        std::to_string(g.start) + ", " +
                                        std::to_string(g.end()) +
                                        ") reaches past signal length " +
                                        std::to_string(signal_length_));
        if (i > 0 && g.start <= gaps_[i - 1].end())
            throw std::invalid_argument(
                "gap " + std::to_string(i) + " starting at " + std::to_string(g.start) +
                " overlaps or touches the previous gap ending at " +
                std::to_string(gaps_[i - 1].end()));
    }
}

std::size_t GapMask::missing_count() const {
    std::size_t total = 0;
    for (const Gap& g : gaps_) total += g.length;
    return total;
}

bool GapMask::is_missing(std::size_t i) const {
    auto it = std::upper_bound(gaps_.begin(), gaps_.end(), i,
                               [](std::size_t v, const Gap& g) { return v < g.start; });
    if (it == gaps_.begin()) return false;
    --it;
    return i < it->end();
}

Segment extract_segment(const Signal& signal, const GapMask& mask,
                        std::size_t start, std::size_t length) {
    const std::size_t n = signal.size();
    if (start > n || length > n - start)
        throw std::out_of_range("segment [" + std::to_string(start) + ", " +
                                std::to_string(start + length) +
                                ") out of bounds for signal of length " +
                                std::to_string(n));
    Segment segment;
    segment.offset = start;
    segment.samples.assign(signal.samples.begin() + static_cast<std::ptrdiff_t>(start),
                           signal.samples.begin() + static_cast<std::ptrdiff_t>(start + length));
    for (const Gap& g : mask.gaps()) {
        const std::size_t lo = std::max(g.start, start);
        const std::size_t hi = std::min(g.end(), start + length);
        for (std::size_t i = lo; i < hi; ++i)
            segment.local_missing.push_back(i - start);
    }
    return segment;
}

Signal project_consistent(const Signal& original, const GapMask& mask,
                          const Signal& candidate) {
    if (original.size() != candidate.size())
        throw std::invalid_argument("original and candidate lengths differ (" +
                                    std::to_string(original.size()) + " vs " +
                                    std::to_string(candidate.size()) + ")");
    if (original.sample_rate != candidate.sample_rate)
        throw std::invalid_argument("original and candidate sample rates differ");
    Signal out = original;
    for (const Gap& g : mask.gaps())
        std::copy(candidate.samples.begin() + static_cast<std::ptrdiff_t>(g.start),
                  candidate.samples.begin() + static_cast<std::ptrdiff_t>(g.end()),
                  out.samples.begin() + static_cast<std::ptrdiff_t>(g.start));
    return out;
}

GapMask generate_gaps(std::size_t signal_length, int sample_rate,
                      double gap_length_ms, int count, std::size_t min_separation,
                      std::size_t border, std::uint64_t seed) {
    if (sample_rate <= 0) throw std::invalid_argument("sample rate must be positive");
    if (count < 0) throw std::invalid_argument("gap count must be nonnegative");
    if (count == 0) return GapMask({}, signal_length);

    const auto gap_len =
        static_cast<std::size_t>(std::llround(gap_length_ms * sample_rate / 1000.0));
    if (gap_len == 0)
        throw std::invalid_argument("gap length rounds to zero samples");
    // A gap list with touching gaps is not a valid mask, so enforce at least
    // one reliable sample of separation.
    const std::size_t separation = std::max<std::size_t>(min_separation, 1);

    const std::size_t needed = static_cast<std::size_t>(count) * gap_len +
                               static_cast<std::size_t>(count - 1) * separation +
                               2 * border;
    if (needed > signal_length)
        throw std::runtime_error(
            "cannot place " + std::to_string(count) + " gaps of " +
            std::to_string(gap_len) + " samples: " + std::to_string(needed) +
            " samples required, signal has " + std::to_string(signal_length));

    const std::uint64_t span = signal_length - 2 * border - gap_len + 1;
    SplitMix64 rng(seed);
    std::vector<Gap> accepted;
    accepted.reserve(static_cast<std::size_t>(count));
    const int max_attempts = 10000 + 1000 * count;
    for (int attempt = 0; attempt < max_attempts && accepted.size() < static_cast<std::size_t>(count); ++attempt) {
        const std::size_t start = border + static_cast<std::size_t>(rng.next_below(span));
        bool ok = true;
        for (const Gap& g : accepted) {
            const bool after = start >= g.end() + separation;
            const bool before = g.start >= start + gap_len + separation;
            if (!after && !before) {
                ok = false;
                break;
            }
        }
        if (ok) accepted.push_back(Gap{start, gap_len});
    }
    if (accepted.size() < static_cast<std::size_t>(count))
        throw std::runtime_error("gap placement failed after " +
                                 std::to_string(max_attempts) +
                                 " attempts; geometry too tight");
    return GapMask(std::move(accepted), signal_length);
}

}  // namespace arpaint
