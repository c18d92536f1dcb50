#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recap/records.hpp"

namespace recap {

// Per-n counts and estimates for a pair of ranked lists. Index i holds
// the values at n = i + 1:
//   n1, n2  unique articles among the first n entries of each list
//   r       unique articles common to both prefixes
//   t       estimated total population, n1*n2/max(r, 1)
//   c       coverage, (n1 + n2 - r)/t  (the true r, no floor)
struct CoverageSeries {
    std::vector<std::int64_t> n1;
    std::vector<std::int64_t> n2;
    std::vector<std::int64_t> r;
    std::vector<double> t;
    std::vector<double> c;

    std::size_t max_n() const { return c.size(); }
};

enum class ExtremumKind { LocalMin, LocalMax };

struct StoppingPoint {
    std::size_t n = 0;  // 1-based position, strictly inside the series
    ExtremumKind kind = ExtremumKind::LocalMin;
    double c_value = 0.0;  // smoothed coverage at the extremum
};

enum class KeywordType { TypeI, TypeII, TypeIII, TypeIV };

const char* to_string(KeywordType type);
const char* to_string(ExtremumKind kind);

struct KeywordClass {
    KeywordType type = KeywordType::TypeIV;
    std::vector<StoppingPoint> stopping_points;
    std::string rationale;
};

// Defaults used by classify_keyword; exposed because the source material
// reads extrema off plots and fixes no numeric thresholds.
inline constexpr std::size_t kDefaultSmoothingWindow = 5;
inline constexpr double kProminenceFraction = 0.05;   // of the coverage range
inline constexpr double kTypeITerminalCoverage = 0.05;
inline constexpr double kTypeISlopeLow = 1.8;         // log-log slope band for
inline constexpr double kTypeISlopeHigh = 2.2;        // quadratic growth of t
inline constexpr std::size_t kMinClassifyLength = 50;

// Builds the coverage time series for n = 1..max_n. Prefix counts come
// from dedup_prefix; prefixes saturate once a list is exhausted. The
// max(r, 1) floor applies only inside t's denominator.
// Throws EmptyList / InvalidParams.
CoverageSeries build_series(const RankedList& list1, const RankedList& list2,
                            std::size_t max_n);

// Centered moving average of the coverage column; the window shrinks
// symmetrically at the boundaries. window must be odd and < max_n.
std::vector<double> smoothed_coverage(const CoverageSeries& series, std::size_t window);

// 0.05 * (max c - min c), the default extremum prominence threshold.
double default_min_prominence(const CoverageSeries& series);

// Strict local extrema of the smoothed coverage, filtered by prominence:
// an extremum qualifies when it differs from both its neighbouring
// opposing extrema (or the boundary values) by at least min_prominence.
// Returned in increasing n.
std::vector<StoppingPoint> stopping_points(const CoverageSeries& series,
                                           std::size_t window, double min_prominence);

// Sorts the series into the four stopping-rule classes:
//   TypeII  at least one qualifying local min and one local max
//   TypeIII at least one qualifying local min, no local max
//   TypeI   no qualifying extrema, decreasing tail, terminal coverage
//           below 0.05 and near-quadratic growth of t (log-log slope
//           over the final half within [1.8, 2.2])
//   TypeIV  everything else, including series shorter than 50
KeywordClass classify_keyword(const CoverageSeries& series);

// First difference of the coverage column: gain[i] = c[i+1] - c[i].
std::vector<double> information_gain(const CoverageSeries& series);

} // namespace recap
