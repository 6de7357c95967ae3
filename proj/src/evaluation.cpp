#include "arpaint/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace arpaint {

double sdr(std::span<const double> reference, std::span<const double> estimate) {
    if (reference.size() != estimate.size())
        throw std::invalid_argument("reference and estimate lengths differ (" +
                                    std::to_string(reference.size()) + " vs " +
                                    std::to_string(estimate.size()) + ")");
    double ref_energy = 0.0, err_energy = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        ref_energy += reference[i] * reference[i];
        const double d = reference[i] - estimate[i];
        err_energy += d * d;
    }
    if (ref_energy == 0.0)
        throw std::runtime_error("SDR undefined: reference has zero energy");
    if (err_energy == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(ref_energy / err_energy);
}

namespace {

void check_pair(const Signal& reference, const Signal& estimate, const GapMask& mask) {
    if (reference.size() != estimate.size())
        throw std::invalid_argument("reference and estimate lengths differ");
    if (reference.sample_rate != estimate.sample_rate)
        throw std::invalid_argument("reference and estimate sample rates differ");
    if (mask.signal_length() != reference.size())
        throw std::invalid_argument("mask does not match signal length");
}

}  // namespace

std::vector<double> sdr_inpainted_per_gap(const Signal& reference,
                                          const Signal& estimate,
                                          const GapMask& mask) {
    check_pair(reference, estimate, mask);
    std::vector<double> out;
    out.reserve(mask.gaps().size());
    for (const Gap& g : mask.gaps()) {
        const std::span<const double> ref(reference.samples);
        const std::span<const double> est(estimate.samples);
        out.push_back(sdr(ref.subspan(g.start, g.length), est.subspan(g.start, g.length)));
    }
    return out;
}

double sdr_inpainted_all_gaps(const Signal& reference, const Signal& estimate,
                              const GapMask& mask) {
    check_pair(reference, estimate, mask);
    std::vector<double> ref, est;
    ref.reserve(mask.missing_count());
    est.reserve(mask.missing_count());
    for (const Gap& g : mask.gaps())
        for (std::size_t i = g.start; i < g.end(); ++i) {
            ref.push_back(reference.samples[i]);
            est.push_back(estimate.samples[i]);
        }
    if (ref.empty()) throw std::runtime_error("mask has no gaps to evaluate");
    return sdr(ref, est);
}

namespace {

std::string field_value(const EvalRecord& r, const std::string& field) {
    char buf[64];
    if (field == "signal_id") return r.signal_id;
    if (field == "method") return r.method;
    if (field == "estimator") return r.estimator;
    if (field == "order") {
        std::snprintf(buf, sizeof buf, "%u", r.order);
        return buf;
    }
    if (field == "gap_length_ms") {
        std::snprintf(buf, sizeof buf, "%g", r.gap_length_ms);
        return buf;
    }
    if (field == "gap_index") {
        std::snprintf(buf, sizeof buf, "%d", r.gap_index);
        return buf;
    }
    throw std::invalid_argument("unknown group-by field: " + field);
}

}  // namespace

std::vector<AggregateRow> aggregate(std::span<const EvalRecord> records,
                                    std::span<const std::string> group_by) {
    std::map<std::vector<std::string>, std::vector<const EvalRecord*>> groups;
    for (const EvalRecord& r : records) {
        std::vector<std::string> key;
        key.reserve(group_by.size());
        for (const std::string& f : group_by) key.push_back(field_value(r, f));
        groups[std::move(key)].push_back(&r);
    }

    std::vector<AggregateRow> rows;
    rows.reserve(groups.size());
    for (auto& [key, members] : groups) {
        AggregateRow row;
        row.key = key;
        std::vector<double> finite;
        for (const EvalRecord* r : members) {
            if (std::isnan(r->sdr_db))
                ++row.failed_count;
            else if (std::isinf(r->sdr_db))
                ++row.perfect_count;
            else
                finite.push_back(r->sdr_db);
        }
        row.count = finite.size();
        if (!finite.empty()) {
            double sum = 0.0;
            for (double v : finite) sum += v;
            row.mean_sdr_db = sum / static_cast<double>(finite.size());
            std::sort(finite.begin(), finite.end());
            const std::size_t m = finite.size();
            row.median_sdr_db = m % 2 == 1 ? finite[m / 2]
                                           : 0.5 * (finite[m / 2 - 1] + finite[m / 2]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace arpaint
