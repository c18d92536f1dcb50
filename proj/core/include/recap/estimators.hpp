#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "recap/errors.hpp"

namespace recap {

enum class EstimatorMethod { Petersen, Schnabel };

struct PopulationEstimate {
    double point = 0.0;   // estimated total population
    double stddev = 0.0;  // standard deviation of the estimate
    EstimatorMethod method = EstimatorMethod::Petersen;
};

// One sampling event for the multi-sample estimator.
//   captures          number of individuals caught in this sample
//   marked_recaptured how many of them were already marked
//   marked_before     marked individuals in the population before the sample
struct CaptureSample {
    std::int64_t captures = 0;
    std::int64_t marked_recaptured = 0;
    std::int64_t marked_before = 0;
};

// Two-sample estimate: point = n1*n2/r.
// Throws ZeroRecapture when r = 0, InvalidCounts when r > min(n1, n2)
// or any count is negative.
PopulationEstimate petersen_estimate(std::int64_t n1, std::int64_t n2, std::int64_t r);

// Weighted multi-sample estimate over an ordered list of samples:
// point = sum(captures_i * marked_before_i) / sum(marked_recaptured_i).
// The stddev field is sqrt(sum r / (sum n*m)^2) as the source formula is
// written; dimensionally that is the spread of the reciprocal estimate,
// and it is stored verbatim without re-derivation.
// Throws ZeroRecapture when no recapture ever happens, InvalidSequence
// when the samples are not a valid accumulation sequence.
PopulationEstimate schnabel_estimate(const std::vector<CaptureSample>& samples);

// Derives capture statistics from raw capture sets: for sample i,
// captures = |set_i|, marked_before = |union of earlier sets| and
// marked_recaptured = |set_i intersected with that union|.
template <typename Id>
std::vector<CaptureSample> samples_from_capture_sets(
    const std::vector<std::unordered_set<Id>>& captures) {
    std::vector<CaptureSample> out;
    out.reserve(captures.size());
    std::unordered_set<Id> marked;
    for (const auto& capture : captures) {
        CaptureSample sample;
        sample.captures = static_cast<std::int64_t>(capture.size());
        sample.marked_before = static_cast<std::int64_t>(marked.size());
        for (const auto& id : capture) {
            if (marked.contains(id)) ++sample.marked_recaptured;
        }
        marked.insert(capture.begin(), capture.end());
        out.push_back(sample);
    }
    return out;
}

} // namespace recap
