#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcross {

using Coord = std::int64_t;

// Coordinates are kept within +-2^60 so that pairwise differences and
// per-family sums never overflow a 64-bit integer.
inline constexpr Coord kCoordLimit = Coord{1} << 60;

/// Malformed or out-of-range caller input (width mismatch, bad parameter).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called on data that violates its documented precondition.
class PreconditionError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A point of Z^w. Width is fixed at construction and is at least one.
class Vector {
  public:
    explicit Vector(std::vector<Coord> coords);
    Vector(std::initializer_list<Coord> coords);

    std::size_t width() const noexcept { return coords_.size(); }
    Coord operator[](std::size_t i) const noexcept { return coords_[i]; }
    std::span<const Coord> coords() const noexcept { return coords_; }

    /// Sum of all coordinates.
    Coord rank() const noexcept;

    /// Copy with `delta` added to coordinate `i` (0-based).
    Vector shifted(std::size_t i, Coord delta) const;

    friend bool operator==(const Vector &, const Vector &) = default;
    friend std::strong_ordering operator<=>(const Vector &a, const Vector &b) { return a.coords_ <=> b.coords_; }

  private:
    std::vector<Coord> coords_;
};

std::ostream &operator<<(std::ostream &os, const Vector &v);
std::string to_string(const Vector &v);

/// Finite set of same-width vectors, kept in lexicographic order.
class Family {
  public:
    using const_iterator = std::vector<Vector>::const_iterator;

    explicit Family(std::size_t width);

    /// Throws InputError on a width mismatch or a duplicate vector.
    Family(std::size_t width, std::vector<Vector> vectors);

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    bool empty() const noexcept { return vectors_.empty(); }

    const_iterator begin() const noexcept { return vectors_.begin(); }
    const_iterator end() const noexcept { return vectors_.end(); }
    const Vector &operator[](std::size_t i) const noexcept { return vectors_[i]; }
    const std::vector<Vector> &vectors() const noexcept { return vectors_; }

    bool contains(const Vector &v) const;

    /// Adds `v`; returns false when it is already present.
    bool insert(const Vector &v);

    friend bool operator==(const Family &, const Family &) = default;

  private:
    std::size_t width_;
    std::vector<Vector> vectors_;
};

/// Per-coordinate crossing thresholds k_1 <= ... <= k_w, all positive.
class CrossingThresholds {
  public:
    explicit CrossingThresholds(std::vector<Coord> ks);

    static CrossingThresholds uniform(Coord k, std::size_t width);

    std::size_t width() const noexcept { return ks_.size(); }
    Coord operator[](std::size_t i) const noexcept { return ks_[i]; }
    std::span<const Coord> values() const noexcept { return ks_; }
    Coord max() const noexcept { return ks_.back(); }
    bool is_uniform() const noexcept { return ks_.front() == ks_.back(); }

    friend bool operator==(const CrossingThresholds &, const CrossingThresholds &) = default;

  private:
    std::vector<Coord> ks_;
};

std::string to_string(const CrossingThresholds &ks);

// Pairwise predicates. All throw InputError when widths differ.

/// True iff a[i]-b[i] >= k and b[j]-a[j] >= k for some coordinates i, j.
bool is_k_crossing(const Vector &a, const Vector &b, Coord k);

/// Per-coordinate thresholds. The span form accepts any positive thresholds in
/// any order (needed when permuting coordinates together with thresholds).
bool is_generalized_crossing(const Vector &a, const Vector &b, const CrossingThresholds &ks);
bool is_generalized_crossing(const Vector &a, const Vector &b, std::span<const Coord> ks);

/// a <= b in the product order.
bool is_dominated(const Vector &a, const Vector &b);

/// a <= b or b <= a. Reflexive.
bool is_comparable(const Vector &a, const Vector &b);

enum class ViolationKind { Comparable, Crossing };

std::string to_string(ViolationKind kind);

struct Violation {
    Vector first;
    Vector second;
    ViolationKind kind;
};

struct VerificationReport {
    std::size_t size = 0;
    bool is_antichain = true;
    bool is_cross_free = true;
    bool is_ranked = true;
    std::set<Coord> rank_values;
    std::vector<Violation> violations;
    // Set when some violations were dropped because of the per-kind limit.
    bool violations_truncated = false;

    bool valid() const noexcept { return is_antichain && is_cross_free; }
};

inline constexpr std::size_t kDefaultViolationLimit = 100;

/// Checks every pair of the family. At most `violation_limit` entries of each
/// ViolationKind are recorded, so a listed kind is never silently missing.
VerificationReport verify(const Family &family, const CrossingThresholds &ks,
                          std::size_t violation_limit = kDefaultViolationLimit);
VerificationReport verify(const Family &family, Coord k, std::size_t violation_limit = kDefaultViolationLimit);

/// Throws PreconditionError naming the first failing pair unless the family
/// is an antichain without ks-crossing pairs.
void require_valid(const Family &family, const CrossingThresholds &ks, const char *operation);

/// Translates every coordinate so that its minimum over the family is zero.
Family translate_to_origin(const Family &family);

/// For an antichain whose vectors agree on the w-2 coordinates in `fixed`
/// (0-based), orders the vectors so that the first free coordinate strictly
/// increases and the second strictly decreases. The first and last vectors of
/// the labeling are then (n-1)-crossing.
std::vector<Vector> dual_orders_check(const Family &family, const std::set<std::size_t> &fixed);

} // namespace kcross
