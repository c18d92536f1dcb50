#pragma once

#include <cstdint>
#include <vector>

#include "recap/errors.hpp"

namespace recap {

using EntityId = std::int64_t;

// Top-N slice of a ranking over a (possibly much larger) universe.
// Ids are distinct; position 0 is the highest rank.
struct TruncatedRanking {
    std::vector<EntityId> ids;

    TruncatedRanking() = default;
    explicit TruncatedRanking(std::vector<EntityId> ranked_ids);

    std::size_t size() const { return ids.size(); }
};

// Prefix-overlap counts: values[j] = |top-j of one ranking  intersected
// with top-j of the other| for j = 0..N. Identical rankings give the
// line values[j] = j; disjoint rankings give all zeros.
struct OverlapCurve {
    std::vector<std::int64_t> values;

    std::size_t n() const { return values.empty() ? 0 : values.size() - 1; }
};

OverlapCurve overlap_curve(const TruncatedRanking& q1, const TruncatedRanking& q2);

// Similarity S = 1 - E(I,R)/E(I,Z): the squared error between the
// overlap curve and the ideal line y=x, normalized by the error of the
// all-zero curve, E(I,Z) = N(N+1)(2N+1)/6. S is 1 for identical
// rankings, 0 for disjoint ones, and weights the top positions most.
double similarity_s(const TruncatedRanking& q1, const TruncatedRanking& q2);

// Same metric evaluated on a precomputed curve.
double similarity_s(const OverlapCurve& curve);

struct KendallResult {
    double value = 0.0;
    bool defined = false;  // false when no element pair is comparable

    operator double() const { return value; }
};

// Kendall tau over the unordered element pairs present in BOTH
// rankings: (concordant - discordant) / comparable. Pairs with an
// element missing from either ranking are ignored. When fewer than two
// common elements exist the result is 0 with defined = false.
KendallResult kendall_tau_truncated(const TruncatedRanking& q1, const TruncatedRanking& q2);

// |set(q1) intersected set(q2)| / N.
double normalized_overlap(const TruncatedRanking& q1, const TruncatedRanking& q2);

// Sample Pearson correlation. Throws LengthMismatch / DegenerateInput.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace recap
