#include "recap/estimators.hpp"

#include <cmath>
#include <string>

namespace recap {

PopulationEstimate petersen_estimate(std::int64_t n1, std::int64_t n2, std::int64_t r) {
    if (n1 < 0 || n2 < 0 || r < 0) {
        throw Error(ErrorCode::InvalidCounts, "capture counts must be non-negative");
    }
    if (r == 0) {
        throw Error(ErrorCode::ZeroRecapture,
                    "no recaptured individuals; the two-sample estimate is undefined");
    }
    if (r > n1 || r > n2) {
        throw Error(ErrorCode::InvalidCounts,
                    "recapture count exceeds a sample size (r=" + std::to_string(r) +
                        ", n1=" + std::to_string(n1) + ", n2=" + std::to_string(n2) + ")");
    }

    const double dn1 = static_cast<double>(n1);
    const double dn2 = static_cast<double>(n2);
    const double dr = static_cast<double>(r);

    PopulationEstimate est;
    est.method = EstimatorMethod::Petersen;
    est.point = dn1 * dn2 / dr;
    est.stddev = std::sqrt((dn1 + 1.0) * (dn2 + 1.0) * (dn1 - dr) * (dn2 - dr) /
                           ((dr + 1.0) * (dr + 1.0) * (dr + 2.0)));
    return est;
}

PopulationEstimate schnabel_estimate(const std::vector<CaptureSample>& samples) {
    if (samples.size() < 2) {
        throw Error(ErrorCode::InvalidSequence, "need at least two samples");
    }
    if (samples.front().marked_before != 0 || samples.front().marked_recaptured != 0) {
        throw Error(ErrorCode::InvalidSequence,
                    "first sample must have no marked individuals");
    }

    double weighted_sum = 0.0;  // sum of captures_i * marked_before_i
    double recaptures = 0.0;
    std::int64_t prev_marked = 0;
    std::size_t index = 0;
    for (const auto& s : samples) {
        if (s.captures < 0 || s.marked_recaptured < 0 || s.marked_before < 0) {
            throw Error(ErrorCode::InvalidSequence,
                        "negative count in sample " + std::to_string(index + 1));
        }
        if (s.marked_recaptured > s.captures || s.marked_recaptured > s.marked_before) {
            throw Error(ErrorCode::InvalidSequence,
                        "recaptures exceed captures or marked pool in sample " +
                            std::to_string(index + 1));
        }
        if (index > 0 && s.marked_before < prev_marked) {
            throw Error(ErrorCode::InvalidSequence,
                        "marked pool shrank at sample " + std::to_string(index + 1));
        }
        prev_marked = s.marked_before;
        weighted_sum += static_cast<double>(s.captures) * static_cast<double>(s.marked_before);
        recaptures += static_cast<double>(s.marked_recaptured);
        ++index;
    }

    if (recaptures == 0.0) {
        throw Error(ErrorCode::ZeroRecapture, "no recaptured individuals across all samples");
    }
    if (weighted_sum <= 0.0) {
        throw Error(ErrorCode::InvalidSequence,
                    "sum of captures * marked_before must be positive");
    }

    PopulationEstimate est;
    est.method = EstimatorMethod::Schnabel;
    est.point = weighted_sum / recaptures;
    est.stddev = std::sqrt(recaptures / (weighted_sum * weighted_sum));
    return est;
}

} // namespace recap
