#include <kcross/checked_int.hpp>
#include <kcross/constructions.hpp>
#include <kcross/search.hpp>

#include "clique_engine.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace kcross {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

std::string mebibytes(std::uint64_t bytes)
{
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << static_cast<double>(bytes) / (1024.0 * 1024.0) << " MiB";
    return os.str();
}

Coord ranked_spread(const CrossingThresholds &ks)
{
    return checked_mul(static_cast<Coord>(ks.width() - 1), ks.max() - 1);
}

std::vector<Coord> engine_gaps(const CrossingThresholds &ks, const SearchBox &box, const SearchOptions &options)
{
    std::vector<Coord> gap(ks.width());
    for (std::size_t i = 0; i < ks.width(); ++i) {
        if (options.ranked)
            gap[i] = box.limits[i] + 1; // only the minimum is pinned
        else if (options.normal_form == NormalForm::Interval)
            gap[i] = 1;
        else
            gap[i] = ks[i];
    }
    return gap;
}

Family canonical_family(const CompatibilityGraph &graph, const std::vector<std::size_t> &clique)
{
    std::vector<Vector> out;
    out.reserve(clique.size());
    for (auto v : clique)
        out.push_back(graph.vertex(v));
    return Family(graph.width(), std::move(out));
}

// Brings a valid family into the normal form the search expects.
Family to_normal_form(const Family &family, const CrossingThresholds &ks, const SearchOptions &options)
{
    if (options.ranked)
        return translate_to_origin(family);
    if (options.normal_form == NormalForm::Interval)
        return compress_all(family, ks);
    return normalize(family, ks);
}

bool fits(const Family &family, const SearchBox &box)
{
    return std::all_of(family.begin(), family.end(), [&](const Vector &v) { return box.contains(v); });
}

} // namespace

// --- SearchBox --------------------------------------------------------------

bool SearchBox::is_cube() const noexcept
{
    return std::adjacent_find(limits.begin(), limits.end(), std::not_equal_to<>()) == limits.end();
}

bool SearchBox::contains(const Vector &v) const noexcept
{
    if (v.width() != limits.size())
        return false;
    for (std::size_t i = 0; i < limits.size(); ++i)
        if (v[i] < 0 || v[i] > limits[i])
            return false;
    return true;
}

bool SearchBox::covers(const SearchBox &other) const noexcept
{
    if (other.width() != width())
        return false;
    for (std::size_t i = 0; i < limits.size(); ++i)
        if (limits[i] < other.limits[i])
            return false;
    return true;
}

std::uint64_t SearchBox::point_count() const
{
    std::uint64_t count = 1;
    for (Coord l : limits) {
        const auto side = static_cast<std::uint64_t>(l) + 1;
        if (__builtin_mul_overflow(count, side, &count))
            throw ResourceError("box " + describe() + " has too many points to enumerate");
    }
    return count;
}

std::string SearchBox::describe() const
{
    std::ostringstream os;
    if (!limits.empty() && is_cube()) {
        os << "[0," << limits.front() << "]^" << limits.size();
    } else {
        for (std::size_t i = 0; i < limits.size(); ++i)
            os << (i ? "x" : "") << "[0," << limits[i] << "]";
    }
    return os.str();
}

SearchBox SearchBox::user(std::vector<Coord> limits)
{
    if (limits.empty())
        throw InputError("a box needs at least one coordinate");
    for (Coord l : limits)
        if (l < 0 || l >= kCoordLimit)
            throw InputError("box limits must be nonnegative and below 2^60");
    SearchBox box;
    box.limits = std::move(limits);
    box.origin = Origin::User;
    box.note = "user-supplied";
    return box;
}

std::string to_string(NormalForm form)
{
    return form == NormalForm::GapCapped ? "gap" : "interval";
}

std::string to_string(SearchOutcome outcome)
{
    switch (outcome) {
    case SearchOutcome::Found:
        return "found";
    case SearchOutcome::Refuted:
        return "refuted";
    case SearchOutcome::NoneInBox:
        return "none-in-box";
    case SearchOutcome::Truncated:
        return "truncated";
    }
    return "unknown";
}

// --- CompatibilityGraph -----------------------------------------------------

std::uint64_t CompatibilityGraph::memory_estimate(std::uint64_t points, std::size_t width)
{
    const std::uint64_t words = (points + 63) / 64;
    return points * words * 8 + points * width * sizeof(Coord);
}

CompatibilityGraph::CompatibilityGraph(const CrossingThresholds &ks, const SearchBox &box, bool ranked,
                                       std::uint64_t memory_bytes)
    : box_(box)
{
    if (box.width() != ks.width())
        throw InputError("box width " + std::to_string(box.width()) + " does not match thresholds width " +
                         std::to_string(ks.width()));
    for (Coord l : box.limits)
        if (l < 0)
            throw InputError("box limits must be nonnegative");
    const auto points = box.point_count();
    const auto need = points > (std::uint64_t{1} << 32) ? std::numeric_limits<std::uint64_t>::max()
                                                         : memory_estimate(points, box.width());
    if (need > memory_bytes)
        throw ResourceError("compatibility graph on box " + box.describe() + " has " + std::to_string(points) +
                            " vertices and needs about " + mebibytes(need) + ", over the budget of " +
                            mebibytes(memory_bytes));

    n_ = static_cast<std::size_t>(points);
    w_ = box.width();
    words_ = (n_ + 63) / 64;
    coords_.resize(n_ * w_);
    std::vector<Coord> p(w_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
        std::copy(p.begin(), p.end(), coords_.begin() + static_cast<std::ptrdiff_t>(v * w_));
        for (std::size_t i = w_; i-- > 0;) {
            if (p[i] < box.limits[i]) {
                ++p[i];
                break;
            }
            p[i] = 0;
        }
    }

    std::vector<Coord> rank(n_, 0);
    if (ranked)
        for (std::size_t v = 0; v < n_; ++v)
            for (std::size_t i = 0; i < w_; ++i)
                rank[v] += coord(v, i);

    adjacency_.assign(n_ * words_, 0);
    const auto thresholds = ks.values();
    for (std::size_t u = 0; u < n_; ++u) {
        const Coord *a = coords_.data() + u * w_;
        for (std::size_t v = u + 1; v < n_; ++v) {
            if (ranked && rank[u] != rank[v])
                continue;
            const Coord *b = coords_.data() + v * w_;
            bool up = false, down = false, up_k = false, down_k = false;
            for (std::size_t i = 0; i < w_; ++i) {
                const Coord d = a[i] - b[i];
                if (d > 0) {
                    up = true;
                    up_k = up_k || d >= thresholds[i];
                } else if (d < 0) {
                    down = true;
                    down_k = down_k || -d >= thresholds[i];
                }
            }
            if (up && down && !(up_k && down_k)) {
                adjacency_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
                adjacency_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
            }
        }
    }
}

Vector CompatibilityGraph::vertex(std::size_t v) const
{
    return Vector(std::vector<Coord>(coords_.begin() + static_cast<std::ptrdiff_t>(v * w_),
                                     coords_.begin() + static_cast<std::ptrdiff_t>((v + 1) * w_)));
}

std::uint64_t CompatibilityGraph::edge_count() const noexcept
{
    std::uint64_t twice = 0;
    for (auto word : adjacency_)
        twice += static_cast<std::uint64_t>(std::popcount(word));
    return twice / 2;
}

// --- Search -----------------------------------------------------------------

SearchBox auto_box(const CrossingThresholds &ks, std::int64_t m, const SearchOptions &options)
{
    if (m < 1)
        throw InputError("target size must be at least 1");
    SearchBox box;
    box.origin = SearchBox::Origin::Auto;
    Coord limit = 0;
    if (options.ranked) {
        limit = ranked_spread(ks);
        box.note = "auto: equal-rank spread (w-1)(k-1)";
    } else if (options.normal_form == NormalForm::Interval) {
        limit = m - 1;
        box.note = "auto: compressed coordinates, m-1";
    } else {
        limit = checked_mul(ks.max(), m - 1);
        box.note = "auto: gaps capped at thresholds, max(ks)(m-1)";
    }
    box.limits.assign(ks.width(), limit);
    return box;
}

SearchResult exists_family(const CrossingThresholds &ks, std::int64_t m, const std::optional<SearchBox> &box,
                           const SearchLimits &limits, const SearchOptions &options)
{
    const auto start = Clock::now();
    if (m < 1)
        throw InputError("target size must be at least 1");
    const SearchBox complete = auto_box(ks, m, options);
    const SearchBox searched = box.value_or(complete);
    if (searched.width() != ks.width())
        throw InputError("box width " + std::to_string(searched.width()) + " does not match w = " +
                         std::to_string(ks.width()));

    SearchResult result;
    result.target = m;
    result.box = searched;
    result.witness = Family(ks.width());

    const CompatibilityGraph graph(ks, searched, options.ranked, limits.memory_bytes);
    detail::EngineConfig config;
    config.target = m;
    config.gap = engine_gaps(ks, searched, options);
    config.coordinate_one_smallest = options.permutation_pruning && ks.is_uniform() && searched.is_cube();
    config.limits = limits;
    const auto found = detail::find_clique(graph, config);

    result.nodes_explored = found.nodes;
    if (found.found) {
        result.outcome = SearchOutcome::Found;
        result.best_size = m;
        result.witness = canonical_family(graph, found.clique);
    } else if (found.truncated) {
        result.outcome = SearchOutcome::Truncated;
        result.truncation_reason = found.truncation_reason;
    } else if (searched.origin == SearchBox::Origin::Auto || searched.covers(complete)) {
        result.outcome = SearchOutcome::Refuted;
    } else {
        result.outcome = SearchOutcome::NoneInBox;
    }
    result.elapsed = since(start);
    return result;
}

namespace {

SearchResult ascend(const CrossingThresholds &ks, Family seed, const SearchLimits &limits,
                    const SearchOptions &options, const std::optional<SearchBox> &box)
{
    const auto start = Clock::now();
    SearchResult result;
    result.witness = Family(ks.width());
    if (!box || fits(seed, *box)) {
        result.best_size = static_cast<std::int64_t>(seed.size());
        result.witness = std::move(seed);
    }

    std::uint64_t nodes = 0;
    while (true) {
        SearchLimits remaining = limits;
        if (limits.time_seconds > 0) {
            remaining.time_seconds = limits.time_seconds - static_cast<double>(since(start).count()) / 1000.0;
            if (remaining.time_seconds <= 0) {
                result.outcome = SearchOutcome::Truncated;
                result.target = result.best_size + 1;
                result.box = box.value_or(auto_box(ks, result.target, options));
                result.truncation_reason = "time limit of " + std::to_string(limits.time_seconds) + " s reached";
                break;
            }
        }
        if (limits.max_nodes)
            remaining.max_nodes = limits.max_nodes > nodes ? limits.max_nodes - nodes : 1;

        auto step = exists_family(ks, result.best_size + 1, box, remaining, options);
        nodes += step.nodes_explored;
        result.target = step.target;
        result.outcome = step.outcome;
        result.box = step.box;
        result.truncation_reason = step.truncation_reason;
        if (step.outcome != SearchOutcome::Found)
            break;
        result.best_size = step.best_size;
        result.witness = std::move(step.witness);
    }
    result.exhaustive = result.outcome == SearchOutcome::Refuted;
    result.box_exhausted = result.exhaustive || result.outcome == SearchOutcome::NoneInBox;
    result.nodes_explored = nodes;
    result.elapsed = since(start);
    return result;
}

} // namespace

SearchResult max_family_size(const CrossingThresholds &ks, const SearchLimits &limits, const SearchOptions &options,
                             const std::optional<SearchBox> &box)
{
    if (box && box->width() != ks.width())
        throw InputError("box width " + std::to_string(box->width()) + " does not match w = " +
                         std::to_string(ks.width()));
    // The construction is ranked, so it also seeds ranked searches.
    Family seed = to_normal_form(generalized_product_family(ks), ks, options);
    return ascend(ks, std::move(seed), limits, options, box);
}

SearchResult ranked_max_family_size(Coord k, std::size_t w, const SearchLimits &limits, const SearchOptions &options)
{
    const auto ks = CrossingThresholds::uniform(k, w);
    SearchOptions ranked = options;
    ranked.ranked = true;
    auto result = ascend(ks, translate_to_origin(product_family(k, w)), limits, ranked, std::nullopt);
    if (!result.witness.empty()) {
        const Coord r = result.witness[0].rank();
        std::vector<Vector> shifted;
        for (const auto &v : result.witness)
            shifted.push_back(v.shifted(w - 1, -r));
        result.witness = Family(w, std::move(shifted));
    }
    return result;
}

} // namespace kcross
