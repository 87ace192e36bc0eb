#pragma once

#include <kcross/core.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kcross {

/// The given relations contain a directed cycle; `cycle()` lists its labels
/// with the first label repeated at the end.
class CycleError : public InputError {
  public:
    explicit CycleError(std::vector<std::string> cycle);
    const std::vector<std::string> &cycle() const noexcept { return cycle_; }

  private:
    std::vector<std::string> cycle_;
};

/// Finite poset on elements 0..n-1 with string labels. The order is the
/// transitive closure of the relations passed in, stored as bitsets.
class Poset {
  public:
    using Relation = std::pair<std::size_t, std::size_t>; // first < second

    Poset(std::vector<std::string> labels, const std::vector<Relation> &relations);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string &label(std::size_t x) const { return labels_.at(x); }
    const std::vector<std::string> &labels() const noexcept { return labels_; }
    std::optional<std::size_t> find(std::string_view label) const;

    bool less(std::size_t x, std::size_t y) const noexcept { return test(above_, x, y); }
    bool leq(std::size_t x, std::size_t y) const noexcept { return x == y || less(x, y); }
    bool comparable(std::size_t x, std::size_t y) const noexcept { return leq(x, y) || less(y, x); }

    /// Cover relations (transitive reduction), sorted.
    std::vector<Relation> covers() const;
    /// A linear extension.
    const std::vector<std::size_t> &linear_extension() const noexcept { return topo_; }

    /// `count` disjoint chains of `length` elements. Chain i is labelled with
    /// the i-th letter and positions 1..length (a1 < a2 < ..., b1 < ...); past
    /// 26 chains the labels become c<i>_<j>.
    static Poset disjoint_chains(std::size_t count, std::size_t length);
    static Poset chain(std::size_t length) { return disjoint_chains(1, length); }

  private:
    bool test(const std::vector<std::uint64_t> &bits, std::size_t x, std::size_t y) const noexcept
    {
        return (bits[x * words_ + y / 64] >> (y % 64)) & 1U;
    }

    std::vector<std::string> labels_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> above_; // row x: elements y with x < y
    std::vector<std::size_t> topo_;
};

/// Strictly increasing chain x_1 < ... < x_m.
using Chain = std::vector<std::size_t>;
/// Pairwise incomparable elements, sorted by index.
using Antichain = std::vector<std::size_t>;

struct WidthResult {
    std::size_t width = 0;
    Antichain antichain;
    std::vector<Chain> chains; // minimum chain cover, |chains| == width
};

/// Width through maximum bipartite matching on the strict order.
WidthResult width(const Poset &p);

/// All maximum antichains of a poset, ordered by A <= B iff every a in A lies
/// below some b in B. Keeps its own copy of the poset.
class MaxAntichainLattice {
  public:
    MaxAntichainLattice(const Poset &p, std::vector<Antichain> members, bool truncated);

    std::size_t size() const noexcept { return members_.size(); }
    const Antichain &operator[](std::size_t i) const { return members_.at(i); }
    const std::vector<Antichain> &members() const noexcept { return members_; }
    bool truncated() const noexcept { return truncated_; }
    bool leq(std::size_t a, std::size_t b) const;
    const Poset &poset() const noexcept { return poset_; }

    /// Labels such as "{a,b}" for each member.
    std::string describe(std::size_t i) const;
    /// The order as a Poset (members labelled by describe()).
    Poset as_poset() const;

  private:
    Poset poset_;
    std::vector<Antichain> members_;
    bool truncated_ = false;
};

inline constexpr std::size_t kDefaultAntichainCap = 1'000'000;

/// Enumerates maximum antichains, one element per chain of a minimum cover.
/// At most `cap` members are produced; beyond that truncated() is set.
MaxAntichainLattice max_antichains(const Poset &p, std::size_t cap = kDefaultAntichainCap);

struct LatticeWidth {
    std::size_t width = 0;
    std::vector<std::size_t> members; // indices of pairwise incomparable members
};

/// Width of the order on maximum antichains. Throws PreconditionError on a
/// truncated enumeration.
LatticeWidth lattice_width_witness(const MaxAntichainLattice &lattice);
std::size_t lattice_width(const MaxAntichainLattice &lattice);

/// Whether every pair of members has a meet and a join among the members.
bool is_lattice(const MaxAntichainLattice &lattice);

struct KPlusKWitness {
    bool found = false;
    Chain first, second;
};

/// Looks for two k-chains with every element of one incomparable to every
/// element of the other.
KPlusKWitness contains_k_plus_k(const Poset &p, std::size_t k);

/// Maps each maximum antichain A to the vector whose i-th coordinate is the
/// 1-based position on chain i (of the cover from width()) of the element
/// A has there. Requires that p has no (k+1)+(k+1) and that the antichains
/// are maximum and pairwise incomparable in the lattice order.
Family reduce_to_vectors(const Poset &p, Coord k, const std::vector<Antichain> &antichains);

/// Interval order on `intervals` (closed, [l, r] with l <= r): x < y iff r_x < l_y.
Poset interval_order(const std::vector<std::pair<Coord, Coord>> &intervals);

/// Interval order on n random intervals; the same seed gives the same poset.
Poset random_interval_order(std::size_t n, std::uint64_t seed);

// Poset text format:
//
//   # comment
//   elements a b c ...
//   a < b              one relation per line (not necessarily a cover)
//
// Labels are whitespace-free tokens. Cycles are reported with the line of a
// relation on the cycle.
Poset read_poset(std::istream &in);
Poset parse_poset(std::string_view text);
void write_poset(std::ostream &out, const Poset &p);
std::string format_poset(const Poset &p);

} // namespace kcross
