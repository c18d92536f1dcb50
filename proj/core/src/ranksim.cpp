#include "recap/ranksim.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace recap {

namespace {

std::unordered_map<EntityId, std::size_t> position_index(const TruncatedRanking& q) {
    std::unordered_map<EntityId, std::size_t> pos;
    pos.reserve(q.ids.size());
    for (std::size_t i = 0; i < q.ids.size(); ++i) pos.emplace(q.ids[i], i);
    return pos;
}

// Counts inversions by merge sort; `work` is scratch of the same size.
std::uint64_t count_inversions(std::vector<std::size_t>& values,
                               std::vector<std::size_t>& work,
                               std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inversions = count_inversions(values, work, lo, mid) +
                               count_inversions(values, work, mid, hi);
    std::size_t left = lo, right = mid, out = lo;
    while (left < mid && right < hi) {
        if (values[left] <= values[right]) {
            work[out++] = values[left++];
        } else {
            inversions += mid - left;
            work[out++] = values[right++];
        }
    }
    while (left < mid) work[out++] = values[left++];
    while (right < hi) work[out++] = values[right++];
    for (std::size_t i = lo; i < hi; ++i) values[i] = work[i];
    return inversions;
}

} // namespace

TruncatedRanking::TruncatedRanking(std::vector<EntityId> ranked_ids)
    : ids(std::move(ranked_ids)) {
    if (ids.empty()) {
        throw Error(ErrorCode::InvalidParams, "ranking must not be empty");
    }
    std::unordered_set<EntityId> seen;
    seen.reserve(ids.size());
    for (EntityId id : ids) {
        if (!seen.insert(id).second) {
            throw Error(ErrorCode::DuplicateId,
                        "duplicate id " + std::to_string(id) + " in ranking");
        }
    }
}

OverlapCurve overlap_curve(const TruncatedRanking& q1, const TruncatedRanking& q2) {
    if (q1.size() != q2.size()) {
        throw Error(ErrorCode::LengthMismatch, "rankings must have equal length");
    }
    const auto pos1 = position_index(q1);
    const auto pos2 = position_index(q2);

    OverlapCurve curve;
    curve.values.resize(q1.size() + 1, 0);
    std::int64_t common = 0;
    for (std::size_t j = 1; j <= q1.size(); ++j) {
        const EntityId x = q1.ids[j - 1];
        const EntityId y = q2.ids[j - 1];
        if (x == y) {
            ++common;
        } else {
            auto px = pos2.find(x);
            if (px != pos2.end() && px->second < j) ++common;
            auto py = pos1.find(y);
            if (py != pos1.end() && py->second < j) ++common;
        }
        curve.values[j] = common;
    }
    return curve;
}

double similarity_s(const OverlapCurve& curve) {
    const std::size_t n = curve.n();
    if (n == 0) {
        throw Error(ErrorCode::InvalidParams, "overlap curve is empty");
    }
    std::int64_t error_to_ideal = 0;
    std::int64_t error_zero_to_ideal = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        const std::int64_t ideal = static_cast<std::int64_t>(j);
        const std::int64_t d = ideal - curve.values[j];
        error_to_ideal += d * d;
        error_zero_to_ideal += ideal * ideal;
    }
    return 1.0 - static_cast<double>(error_to_ideal) / static_cast<double>(error_zero_to_ideal);
}

double similarity_s(const TruncatedRanking& q1, const TruncatedRanking& q2) {
    return similarity_s(overlap_curve(q1, q2));
}

KendallResult kendall_tau_truncated(const TruncatedRanking& q1, const TruncatedRanking& q2) {
    const auto pos2 = position_index(q2);

    // q2-positions of the common elements, in q1 order; discordant
    // pairs are exactly the inversions of this sequence.
    std::vector<std::size_t> sequence;
    sequence.reserve(std::min(q1.size(), q2.size()));
    for (EntityId id : q1.ids) {
        auto it = pos2.find(id);
        if (it != pos2.end()) sequence.push_back(it->second);
    }

    KendallResult result;
    if (sequence.size() < 2) return result;

    std::vector<std::size_t> work(sequence.size());
    const std::uint64_t discordant = count_inversions(sequence, work, 0, sequence.size());
    const std::uint64_t comparable =
        static_cast<std::uint64_t>(sequence.size()) * (sequence.size() - 1) / 2;
    const std::uint64_t concordant = comparable - discordant;
    result.value = (static_cast<double>(concordant) - static_cast<double>(discordant)) /
                   static_cast<double>(comparable);
    result.defined = true;
    return result;
}

double normalized_overlap(const TruncatedRanking& q1, const TruncatedRanking& q2) {
    if (q1.size() != q2.size()) {
        throw Error(ErrorCode::LengthMismatch, "rankings must have equal length");
    }
    std::unordered_set<EntityId> set1(q1.ids.begin(), q1.ids.end());
    std::size_t common = 0;
    for (EntityId id : q2.ids) {
        if (set1.contains(id)) ++common;
    }
    return static_cast<double>(common) / static_cast<double>(q1.size());
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) {
        throw Error(ErrorCode::LengthMismatch, "sequences must have equal length");
    }
    if (xs.size() < 2) {
        throw Error(ErrorCode::DegenerateInput, "need at least two points");
    }
    const double n = static_cast<double>(xs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw Error(ErrorCode::DegenerateInput, "constant sequence has no correlation");
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace recap
