#include "recap/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace recap {

const char* to_string(KeywordType type) {
    switch (type) {
    case KeywordType::TypeI: return "TypeI";
    case KeywordType::TypeII: return "TypeII";
    case KeywordType::TypeIII: return "TypeIII";
    case KeywordType::TypeIV: return "TypeIV";
    }
    return "TypeIV";
}

const char* to_string(ExtremumKind kind) {
    return kind == ExtremumKind::LocalMin ? "LocalMin" : "LocalMax";
}

CoverageSeries build_series(const RankedList& list1, const RankedList& list2,
                            std::size_t max_n) {
    if (list1.entries.empty() || list2.entries.empty()) {
        throw Error(ErrorCode::EmptyList, "both ranked lists must be non-empty");
    }
    if (max_n < 1) {
        throw Error(ErrorCode::InvalidParams, "max_n must be at least 1");
    }

    CoverageSeries series;
    series.n1.reserve(max_n);
    series.n2.reserve(max_n);
    series.r.reserve(max_n);
    series.t.reserve(max_n);
    series.c.reserve(max_n);

    std::unordered_set<std::string> keys1;
    std::unordered_set<std::string> keys2;
    std::int64_t common = 0;

    auto absorb = [&](const RankedList& list, std::size_t index,
                      std::unordered_set<std::string>& own,
                      const std::unordered_set<std::string>& other) {
        if (index >= list.entries.size()) return;
        std::string key = normalize_key(list.entries[index]).render();
        if (own.insert(key).second && other.contains(key)) ++common;
    };

    for (std::size_t n = 1; n <= max_n; ++n) {
        absorb(list1, n - 1, keys1, keys2);
        absorb(list2, n - 1, keys2, keys1);
        const auto u1 = static_cast<std::int64_t>(keys1.size());
        const auto u2 = static_cast<std::int64_t>(keys2.size());
        const double t = static_cast<double>(u1) * static_cast<double>(u2) /
                         static_cast<double>(std::max<std::int64_t>(common, 1));
        const double c = static_cast<double>(u1 + u2 - common) / t;
        series.n1.push_back(u1);
        series.n2.push_back(u2);
        series.r.push_back(common);
        series.t.push_back(t);
        series.c.push_back(c);
    }
    return series;
}

std::vector<double> smoothed_coverage(const CoverageSeries& series, std::size_t window) {
    const std::size_t len = series.max_n();
    if (window % 2 == 0 || window == 0) {
        throw Error(ErrorCode::InvalidParams, "smoothing window must be odd");
    }
    if (window >= len) {
        throw Error(ErrorCode::WindowTooLarge, "smoothing window must be smaller than the series");
    }
    const std::size_t half = window / 2;
    std::vector<double> smoothed(len);
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(i + half, len - 1);
        double sum = 0.0;
        for (std::size_t j = lo; j <= hi; ++j) sum += series.c[j];
        smoothed[i] = sum / static_cast<double>(hi - lo + 1);
    }
    return smoothed;
}

double default_min_prominence(const CoverageSeries& series) {
    const auto [lo, hi] = std::minmax_element(series.c.begin(), series.c.end());
    return kProminenceFraction * (*hi - *lo);
}

std::vector<StoppingPoint> stopping_points(const CoverageSeries& series,
                                           std::size_t window, double min_prominence) {
    const std::vector<double> s = smoothed_coverage(series, window);

    std::vector<StoppingPoint> candidates;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] > s[i - 1] && s[i] > s[i + 1]) {
            candidates.push_back({i + 1, ExtremumKind::LocalMax, s[i]});
        } else if (s[i] < s[i - 1] && s[i] < s[i + 1]) {
            candidates.push_back({i + 1, ExtremumKind::LocalMin, s[i]});
        }
    }

    // Strict extrema alternate, so the neighbouring candidate is always
    // the opposing kind; boundaries stand in at the ends.
    std::vector<StoppingPoint> accepted;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const double left = k > 0 ? candidates[k - 1].c_value : s.front();
        const double right = k + 1 < candidates.size() ? candidates[k + 1].c_value : s.back();
        const double prominence = std::min(std::abs(candidates[k].c_value - left),
                                           std::abs(candidates[k].c_value - right));
        if (prominence >= min_prominence) accepted.push_back(candidates[k]);
    }
    return accepted;
}

namespace {

// Least-squares slope of log t against log n over the final half.
double log_log_slope(const CoverageSeries& series) {
    const std::size_t len = series.max_n();
    const std::size_t first = len / 2;  // 0-based start of the final half
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double count = 0;
    for (std::size_t i = first; i < len; ++i) {
        const double x = std::log(static_cast<double>(i + 1));
        const double y = std::log(series.t[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        count += 1;
    }
    const double denom = count * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (count * sxy - sx * sy) / denom;
}

std::string extrema_summary(const std::vector<StoppingPoint>& points) {
    std::string out;
    for (const auto& p : points) {
        if (!out.empty()) out += ", ";
        out += std::string(p.kind == ExtremumKind::LocalMin ? "local min" : "local max") +
               " at n=" + std::to_string(p.n);
    }
    return out;
}

} // namespace

KeywordClass classify_keyword(const CoverageSeries& series) {
    KeywordClass result;
    if (series.max_n() < kMinClassifyLength) {
        result.type = KeywordType::TypeIV;
        result.rationale = "insufficient data";
        return result;
    }

    result.stopping_points =
        stopping_points(series, kDefaultSmoothingWindow, default_min_prominence(series));
    const bool has_min = std::any_of(result.stopping_points.begin(), result.stopping_points.end(),
                                     [](const StoppingPoint& p) { return p.kind == ExtremumKind::LocalMin; });
    const bool has_max = std::any_of(result.stopping_points.begin(), result.stopping_points.end(),
                                     [](const StoppingPoint& p) { return p.kind == ExtremumKind::LocalMax; });

    if (has_min && has_max) {
        result.type = KeywordType::TypeII;
        result.rationale = extrema_summary(result.stopping_points);
        return result;
    }
    if (has_min) {
        result.type = KeywordType::TypeIII;
        result.rationale = extrema_summary(result.stopping_points);
        return result;
    }

    if (!has_max) {
        const std::vector<double> s = smoothed_coverage(series, kDefaultSmoothingWindow);
        const bool tail_decreasing = s.back() < s[series.max_n() / 2];
        const double terminal_c = series.c.back();
        const double slope = log_log_slope(series);
        if (tail_decreasing && terminal_c < kTypeITerminalCoverage &&
            slope >= kTypeISlopeLow && slope <= kTypeISlopeHigh) {
            result.type = KeywordType::TypeI;
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "coverage converges to zero (terminal c=%.4f, log-log t slope %.2f)",
                          terminal_c, slope);
            result.rationale = buf;
            return result;
        }
    }

    result.type = KeywordType::TypeIV;
    result.rationale = "no significant feature";
    return result;
}

std::vector<double> information_gain(const CoverageSeries& series) {
    if (series.max_n() < 2) {
        throw Error(ErrorCode::InvalidParams, "need at least two points for information gain");
    }
    std::vector<double> gain(series.max_n() - 1);
    for (std::size_t i = 0; i + 1 < series.max_n(); ++i) {
        gain[i] = series.c[i + 1] - series.c[i];
    }
    return gain;
}

} // namespace recap
