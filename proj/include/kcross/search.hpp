#pragma once

#include <kcross/core.hpp>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kcross {

/// A search would need more memory than the configured budget.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Normal forms
//
// Every relation between two vectors (comparability, 1-crossing, ks-crossing)
// depends only on the per-coordinate differences compared against 1 and
// against the coordinate threshold. Two complete reductions follow:
//
//  * normalize: translate each coordinate to start at 0 and cap every gap
//    between consecutive attained values at the coordinate threshold. Spanning
//    differences that were >= k_i stay >= k_i, all others are unchanged.
//
//  * compress: the descent procedure on a cross digraph. At its fixpoint the
//    values attained on the coordinate are exactly {0, 1, ..., t}.
//
// Both keep the family size and validity, so a search may restrict itself to
// families in either normal form.
// ---------------------------------------------------------------------------

/// Translates to the origin and caps consecutive-value gaps at ks[i] on every
/// coordinate. The input must be a valid ks-family.
Family normalize(const Family &family, const CrossingThresholds &ks);

/// The gap capping behind normalize without the validity precondition.
Family cap_gaps(const Family &family, std::span<const Coord> gaps);

/// Digraph on the family for coordinate `coord` (0-based):
///   short edge A -> B iff A[c] - B[c] = 1 and A[i] <= B[i] for all i != c
///   long edge  A -> B iff B[c] - A[c] = k_c - 1 and A[i] - B[i] >= k_i for some i != c
/// Vertex indices refer to positions in `vertices`.
struct CrossDigraph {
    Family vertices;
    std::size_t coord;
    std::vector<std::pair<std::size_t, std::size_t>> short_edges;
    std::vector<std::pair<std::size_t, std::size_t>> long_edges;

    std::vector<std::vector<std::size_t>> successors() const;
};

CrossDigraph build_cross_digraph(const Family &family, Coord k, std::size_t coord);
CrossDigraph build_cross_digraph(const Family &family, const CrossingThresholds &ks, std::size_t coord);

/// Vertices with a directed path to a vertex whose coordinate value is 0.
std::vector<bool> reaches_level_zero(const CrossDigraph &graph);

/// Repeatedly lowers coordinate `coord` by one on the first vector (in
/// lexicographic order) lacking a path to level 0, together with everything
/// it reaches, until every vector reaches level 0. Requires a valid family
/// that is nonnegative on `coord`.
Family compress(const Family &family, Coord k, std::size_t coord);
Family compress(const Family &family, const CrossingThresholds &ks, std::size_t coord);

/// translate_to_origin followed by compress on every coordinate: each
/// coordinate then attains exactly {0, ..., t_i}.
Family compress_all(const Family &family, const CrossingThresholds &ks);

// ---------------------------------------------------------------------------
// Exhaustive search
// ---------------------------------------------------------------------------

/// Box [0, limits[0]] x ... x [0, limits[w-1]] (inclusive).
struct SearchBox {
    enum class Origin { Auto, User };

    std::vector<Coord> limits;
    Origin origin = Origin::User;
    std::string note;

    std::size_t width() const noexcept { return limits.size(); }
    bool is_cube() const noexcept;
    bool contains(const Vector &v) const noexcept;
    /// True when every limit is at least the matching limit of `other`.
    bool covers(const SearchBox &other) const noexcept;
    /// Number of lattice points; throws ResourceError when it does not fit.
    std::uint64_t point_count() const;
    std::string describe() const;

    static SearchBox user(std::vector<Coord> limits);
};

/// Which reduction the search relies on.
enum class NormalForm {
    /// Gaps capped at the thresholds; auto box [0, max(ks)(m-1)]^w.
    GapCapped,
    /// Compressed coordinates; auto box [0, m-1]^w.
    Interval,
};

std::string to_string(NormalForm form);

struct SearchLimits {
    double time_seconds = 60.0;
    std::uint64_t max_nodes = 0; // 0 = unlimited
    std::uint64_t memory_bytes = std::uint64_t{1} << 30;
    unsigned workers = 1;
    // Deterministic: the witness comes from the first root (in vertex order)
    // that admits one, whatever the worker count. Otherwise the first witness
    // found by any worker wins.
    bool deterministic = true;
};

struct SearchOptions {
    NormalForm normal_form = NormalForm::Interval;
    // Quotient by coordinate permutations when thresholds and box allow it.
    bool permutation_pruning = true;
    // Restrict to families whose vectors all have the same rank.
    bool ranked = false;
};

enum class SearchOutcome {
    Found,     // a family of the target size exists (witness attached)
    Refuted,   // no family of the target size exists at all (complete box)
    NoneInBox, // no family of the target size inside a user box
    Truncated, // a resource limit stopped the search
};

std::string to_string(SearchOutcome outcome);

struct SearchResult {
    std::int64_t best_size = 0;
    Family witness{1};
    // No valid family of size best_size+1 exists (proved in a complete box).
    bool exhaustive = false;
    // No valid family of size best_size+1 lies in the searched box.
    bool box_exhausted = false;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};

    // The last decision query run: target, outcome and box.
    std::int64_t target = 0;
    SearchOutcome outcome = SearchOutcome::Truncated;
    SearchBox box;
    std::string truncation_reason;
};

/// Graph on the lattice points of a box: u ~ v iff the pair is 1-crossing and
/// not ks-crossing (and, when `ranked`, of equal rank). Points are indexed in
/// lexicographic order.
class CompatibilityGraph {
  public:
    CompatibilityGraph(const CrossingThresholds &ks, const SearchBox &box, bool ranked = false,
                       std::uint64_t memory_bytes = std::uint64_t{1} << 30);

    std::size_t size() const noexcept { return n_; }
    std::size_t width() const noexcept { return w_; }
    std::size_t words() const noexcept { return words_; }
    const SearchBox &box() const noexcept { return box_; }

    Vector vertex(std::size_t v) const;
    Coord coord(std::size_t v, std::size_t i) const noexcept { return coords_[v * w_ + i]; }
    bool adjacent(std::size_t u, std::size_t v) const noexcept
    {
        return (adjacency_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }
    std::span<const std::uint64_t> row(std::size_t v) const noexcept
    {
        return {adjacency_.data() + v * words_, words_};
    }
    std::uint64_t edge_count() const noexcept;

    /// Bytes needed for a graph on `points` vertices of the given width.
    static std::uint64_t memory_estimate(std::uint64_t points, std::size_t width);

  private:
    SearchBox box_;
    std::size_t n_ = 0, w_ = 0, words_ = 0;
    std::vector<Coord> coords_;
    std::vector<std::uint64_t> adjacency_;
};

/// Box guaranteed to contain a normal-form copy of every valid family of size
/// m: [0, max(ks)(m-1)]^w for GapCapped, [0, m-1]^w for Interval, and
/// [0, (w-1)(k-1)]^w for ranked searches.
SearchBox auto_box(const CrossingThresholds &ks, std::int64_t m, const SearchOptions &options);

/// Decides whether a valid ks-family of size m exists (inside `box` when
/// given, else inside the auto-derived complete box).
SearchResult exists_family(const CrossingThresholds &ks, std::int64_t m, const std::optional<SearchBox> &box = {},
                           const SearchLimits &limits = {}, const SearchOptions &options = {});

/// Largest certified family size. Starts from the construction lower bound
/// k_2...k_w (or from scratch inside a user box the construction does not fit)
/// and raises the target until a query fails.
SearchResult max_family_size(const CrossingThresholds &ks, const SearchLimits &limits = {},
                             const SearchOptions &options = {}, const std::optional<SearchBox> &box = {});

/// max_family_size restricted to ranked families; the witness is translated
/// to rank 0.
SearchResult ranked_max_family_size(Coord k, std::size_t w, const SearchLimits &limits = {},
                                    const SearchOptions &options = {});

} // namespace kcross
