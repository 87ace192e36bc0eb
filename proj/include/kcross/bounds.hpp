#pragma once

#include <kcross/checked_int.hpp>
#include <kcross/core.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kcross {

// Bounds on f(k,w), the maximum size of an antichain in Z^w without k-crossing
// pairs. All arithmetic is checked; OverflowError is thrown instead of
// wrapping.

struct BoundOptions {
    // When set, f(k,1)=1, f(k,2)=k and f(k,3)=k^2 seed the recursions. When
    // cleared only f(k,1)=1 is trusted, giving independent pure-recursion
    // bounds for cross-checking.
    bool trust_small_widths = true;
};

struct BoundCandidate {
    std::string name;
    std::int64_t value;
};

struct BoundsReport {
    std::vector<Coord> ks; // (k,...,k) in the uniform case
    std::int64_t lower = 0;
    std::vector<BoundCandidate> upper_candidates;
    std::int64_t upper = 0;
    std::int64_t conjectured = 0;
    // Known exact value when one applies.
    std::optional<std::int64_t> exact;
};

/// k^(w-1).
std::int64_t lower_bound(Coord k, std::size_t w);

/// Conjectured value of f(k,w), equal to lower_bound(k, w).
std::int64_t conjectured_value(Coord k, std::size_t w);

/// f(k,w) <= k^(w-1) + (k-1) f(k,w-1), unrolled from the trusted seeds.
std::int64_t recursive_upper_bound(Coord k, std::size_t w, BoundOptions options = {});

/// k^w - k^2 (k-1)^(w-2); meaningful for w >= 3.
std::int64_t difference_form_bound(Coord k, std::size_t w);

/// ceil(w/3) k^(w-1); meaningful for w >= 3.
std::int64_t ceiling_form_bound(Coord k, std::size_t w);

/// k^(w-v) F(v) + k^v F(w-v) for 1 <= v <= w-1, where F is the best known
/// upper bound (exact for trusted widths).
std::int64_t split_upper_bound(Coord k, std::size_t w, std::size_t v, BoundOptions options = {});

/// Minimum over every applicable candidate, each listed in the report.
BoundsReport best_upper_bound(Coord k, std::size_t w, BoundOptions options = {});

/// True when ks = (k, k, 2k, 4k, ..., 2^(w-2) k) for some k, w >= 2.
bool is_geometric_thresholds(const CrossingThresholds &ks);

/// k_2...k_w <= f(k_1,...,k_w; w) <= k_1...k_w, with the exact value reported
/// for geometric thresholds.
BoundsReport generalized_bounds(const CrossingThresholds &ks);

/// Coordinatewise residues mod k in [0,k), over all coordinates or all but the
/// last.
std::vector<Coord> sigma_signature(const Vector &a, Coord k, bool drop_last);

/// Raised by height_signature when two vectors share coordinate 1.
class CoordinateCollision : public PreconditionError {
  public:
    CoordinateCollision(Vector first, Vector second);
    const Vector &first() const noexcept { return first_; }
    const Vector &second() const noexcept { return second_; }

  private:
    Vector first_;
    Vector second_;
};

/// For each coordinate i >= 2 the height of every vector in the order
/// A <_i B iff A[1] < B[1] and A[i] > B[i]. The family must be a valid
/// k-family whose vectors are pairwise distinct on coordinate 1. Heights are
/// 1-based and at most k; the resulting map is injective.
std::map<Vector, std::vector<Coord>> height_signature(const Family &family, Coord k);

/// True iff coordinate `coord` (0-based) attains at most k^(w-1) distinct
/// values over the (valid) family.
bool distinct_values_bound_check(const Family &family, Coord k, std::size_t coord);

} // namespace kcross
