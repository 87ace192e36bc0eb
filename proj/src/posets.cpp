#include <kcross/posets.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <queue>
#include <random>
#include <unordered_map>

namespace kcross {

namespace {

std::string join_cycle(const std::vector<std::string> &cycle)
{
    std::string out;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        out += (i ? " < " : "") + cycle[i];
    return out;
}

} // namespace

CycleError::CycleError(std::vector<std::string> cycle)
    : InputError("the relations contain a cycle: " + join_cycle(cycle)), cycle_(std::move(cycle))
{
}

// --- Poset ------------------------------------------------------------------

Poset::Poset(std::vector<std::string> labels, const std::vector<Relation> &relations) : labels_(std::move(labels))
{
    const std::size_t n = labels_.size();
    if (n == 0)
        throw InputError("a poset needs at least one element");
    {
        std::unordered_map<std::string, std::size_t> seen;
        for (std::size_t x = 0; x < n; ++x) {
            if (labels_[x].empty())
                throw InputError("element labels must be nonempty");
            if (!seen.emplace(labels_[x], x).second)
                throw InputError("duplicate element label '" + labels_[x] + "'");
        }
    }

    std::vector<std::vector<std::size_t>> succ(n);
    for (auto [x, y] : relations) {
        if (x >= n || y >= n)
            throw InputError("relation refers to an element outside the poset");
        if (x == y)
            throw CycleError({labels_[x], labels_[x]});
        succ[x].push_back(y);
    }
    for (auto &s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    // Iterative DFS: colour 1 = on the stack, 2 = finished.
    std::vector<int> colour(n, 0);
    std::vector<std::size_t> parent(n, n);
    for (std::size_t root = 0; root < n; ++root) {
        if (colour[root])
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
            auto &[x, next] = stack.back();
            if (next == succ[x].size()) {
                colour[x] = 2;
                topo_.push_back(x);
                stack.pop_back();
                continue;
            }
            const std::size_t y = succ[x][next++];
            if (colour[y] == 1) {
                std::vector<std::string> cycle{labels_[y]};
                std::vector<std::string> back;
                for (std::size_t z = x; z != y; z = parent[z])
                    back.push_back(labels_[z]);
                cycle.insert(cycle.end(), back.rbegin(), back.rend());
                cycle.push_back(labels_[y]);
                throw CycleError(std::move(cycle));
            }
            if (colour[y] == 0) {
                colour[y] = 1;
                parent[y] = x;
                stack.emplace_back(y, 0);
            }
        }
    }
    // topo_ holds a reverse topological order: build the closure in it, then flip.
    words_ = (n + 63) / 64;
    above_.assign(n * words_, 0);
    for (auto x : topo_)
        for (auto y : succ[x]) {
            above_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
            for (std::size_t w = 0; w < words_; ++w)
                above_[x * words_ + w] |= above_[y * words_ + w];
        }
    std::reverse(topo_.begin(), topo_.end());
}

std::optional<std::size_t> Poset::find(std::string_view label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<Poset::Relation> Poset::covers() const
{
    std::vector<Relation> out;
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!less(x, y))
                continue;
            bool cover = true;
            for (std::size_t z = 0; z < n && cover; ++z)
                cover = !(less(x, z) && less(z, y));
            if (cover)
                out.emplace_back(x, y);
        }
    return out;
}

Poset Poset::disjoint_chains(std::size_t count, std::size_t length)
{
    if (count == 0 || length == 0)
        throw InputError("disjoint chains need a positive count and length");
    std::vector<std::string> labels;
    std::vector<Relation> relations;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 1; j <= length; ++j) {
            if (count <= 26)
                labels.push_back(std::string(1, static_cast<char>('a' + i)) + std::to_string(j));
            else
                labels.push_back("c" + std::to_string(i + 1) + "_" + std::to_string(j));
            if (j > 1)
                relations.emplace_back(labels.size() - 2, labels.size() - 1);
        }
    return Poset(std::move(labels), relations);
}

// --- Width ------------------------------------------------------------------

WidthResult width(const Poset &p)
{
    const std::size_t n = p.size(), none = n;
    std::vector<std::vector<std::size_t>> up(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (p.less(x, y))
                up[x].push_back(y);

    // Kuhn's augmenting paths; left copy x is matched to right copy match_l[x].
    std::vector<std::size_t> match_l(n, none), match_r(n, none);
    std::vector<char> seen(n);
    std::function<bool(std::size_t)> augment = [&](std::size_t x) {
        for (auto y : up[x]) {
            if (seen[y])
                continue;
            seen[y] = 1;
            if (match_r[y] == none || augment(match_r[y])) {
                match_l[x] = y;
                match_r[y] = x;
                return true;
            }
        }
        return false;
    };
    for (std::size_t x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        augment(x);
    }

    WidthResult result;
    for (std::size_t y = 0; y < n; ++y) {
        if (match_r[y] != none)
            continue;
        Chain chain;
        for (std::size_t x = y; x != none; x = match_l[x])
            chain.push_back(x);
        result.chains.push_back(std::move(chain));
    }
    result.width = result.chains.size();

    // Konig: alternating reachability from unmatched left vertices.
    std::vector<char> left(n, 0), right(n, 0);
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x)
        if (match_l[x] == none) {
            left[x] = 1;
            queue.push_back(x);
        }
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (auto y : up[x]) {
            if (right[y] || match_l[x] == y)
                continue;
            right[y] = 1;
            const auto z = match_r[y];
            if (z != none && !left[z]) {
                left[z] = 1;
                queue.push_back(z);
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        if (left[x] && !right[x])
            result.antichain.push_back(x);
    return result;
}

// --- Maximum antichains -----------------------------------------------------

MaxAntichainLattice::MaxAntichainLattice(const Poset &p, std::vector<Antichain> members, bool truncated)
    : poset_(p), members_(std::move(members)), truncated_(truncated)
{
}

bool MaxAntichainLattice::leq(std::size_t a, std::size_t b) const
{
    for (auto x : members_.at(a)) {
        bool below = false;
        for (auto y : members_.at(b))
            if (poset_.leq(x, y)) {
                below = true;
                break;
            }
        if (!below)
            return false;
    }
    return true;
}

std::string MaxAntichainLattice::describe(std::size_t i) const
{
    std::string out = "{";
    for (std::size_t j = 0; j < members_.at(i).size(); ++j)
        out += (j ? "," : "") + poset_.label(members_[i][j]);
    return out + "}";
}

Poset MaxAntichainLattice::as_poset() const
{
    std::vector<std::string> labels;
    std::vector<Poset::Relation> relations;
    for (std::size_t a = 0; a < size(); ++a) {
        labels.push_back(describe(a));
        for (std::size_t b = 0; b < size(); ++b)
            if (a != b && leq(a, b))
                relations.emplace_back(a, b);
    }
    return Poset(std::move(labels), relations);
}

MaxAntichainLattice max_antichains(const Poset &p, std::size_t cap)
{
    const auto cover = width(p).chains;
    const std::size_t w = cover.size(), n = p.size();
    std::vector<Antichain> found;
    bool truncated = false;

    // blocked[x] counts chosen elements comparable to x.
    std::vector<std::size_t> blocked(n, 0);
    Antichain chosen;
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
        if (truncated)
            return;
        if (i == w) {
            if (found.size() == cap) {
                truncated = true;
                return;
            }
            Antichain a = chosen;
            std::sort(a.begin(), a.end());
            found.push_back(std::move(a));
            return;
        }
        for (std::size_t j = i + 1; j < w; ++j)
            if (std::none_of(cover[j].begin(), cover[j].end(), [&](std::size_t x) { return blocked[x] == 0; }))
                return;
        for (auto x : cover[i]) {
            if (blocked[x])
                continue;
            for (std::size_t y = 0; y < n; ++y)
                blocked[y] += p.comparable(x, y);
            chosen.push_back(x);
            pick(i + 1);
            chosen.pop_back();
            for (std::size_t y = 0; y < n; ++y)
                blocked[y] -= p.comparable(x, y);
        }
    };
    pick(0);
    std::sort(found.begin(), found.end());
    return MaxAntichainLattice(p, std::move(found), truncated);
}

LatticeWidth lattice_width_witness(const MaxAntichainLattice &lattice)
{
    if (lattice.truncated())
        throw PreconditionError("lattice_width: the maximum antichain enumeration was truncated");
    const auto result = width(lattice.as_poset());
    return {result.width, result.antichain};
}

std::size_t lattice_width(const MaxAntichainLattice &lattice) { return lattice_width_witness(lattice).width; }

bool is_lattice(const MaxAntichainLattice &lattice)
{
    const std::size_t n = lattice.size();
    std::vector<char> leq(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            leq[a * n + b] = lattice.leq(a, b);
    auto bound_exists = [&](std::size_t a, std::size_t b, bool upper) {
        auto rel = [&](std::size_t x, std::size_t y) { return upper ? leq[x * n + y] : leq[y * n + x]; };
        std::vector<std::size_t> bounds;
        for (std::size_t c = 0; c < n; ++c)
            if (rel(a, c) && rel(b, c))
                bounds.push_back(c);
        return std::any_of(bounds.begin(), bounds.end(), [&](std::size_t m) {
            return std::all_of(bounds.begin(), bounds.end(), [&](std::size_t c) { return rel(m, c); });
        });
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!bound_exists(a, b, true) || !bound_exists(a, b, false))
                return false;
    return true;
}

// --- k+k --------------------------------------------------------------------

namespace {

// Longest chain inside `allowed`, found by a pass over a linear extension.
Chain longest_chain(const Poset &p, const std::vector<char> &allowed)
{
    const std::size_t n = p.size();
    std::vector<std::size_t> length(n, 0), prev(n, n);
    std::size_t best = n;
    for (auto y : p.linear_extension()) {
        if (!allowed[y])
            continue;
        length[y] = 1;
        for (auto x : p.linear_extension()) {
            if (x == y)
                break;
            if (allowed[x] && p.less(x, y) && length[x] + 1 > length[y]) {
                length[y] = length[x] + 1;
                prev[y] = x;
            }
        }
        if (best == n || length[y] > length[best])
            best = y;
    }
    Chain chain;
    for (std::size_t x = best; x != n; x = prev[x])
        chain.push_back(x);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

} // namespace

KPlusKWitness contains_k_plus_k(const Poset &p, std::size_t k)
{
    if (k < 1)
        throw InputError("k must be a positive integer");
    const std::size_t n = p.size();
    KPlusKWitness witness;
    if (2 * k > n)
        return witness;

    Chain chain;
    std::function<bool(const std::vector<char> &)> extend = [&](const std::vector<char> &free) {
        if (chain.size() == k) {
            auto other = longest_chain(p, free);
            if (other.size() < k)
                return false;
            other.resize(k);
            witness = {true, chain, std::move(other)};
            return true;
        }
        if (static_cast<std::size_t>(std::count(free.begin(), free.end(), 1)) < k)
            return false;
        for (std::size_t y = 0; y < n; ++y) {
            if (!chain.empty() && !p.less(chain.back(), y))
                continue;
            std::vector<char> next(free);
            for (std::size_t z = 0; z < n; ++z)
                if (p.comparable(y, z))
                    next[z] = 0;
            chain.push_back(y);
            if (extend(next))
                return true;
            chain.pop_back();
        }
        return false;
    };
    extend(std::vector<char>(n, 1));
    return witness;
}

// --- Reduction to vectors ---------------------------------------------------

Family reduce_to_vectors(const Poset &p, Coord k, const std::vector<Antichain> &antichains)
{
    if (k < 1)
        throw InputError("k must be a positive integer");
    if (antichains.empty())
        throw InputError("reduce_to_vectors needs at least one antichain");
    const auto cover = width(p);
    const std::size_t w = cover.width;

    for (const auto &a : antichains) {
        bool ok = a.size() == w;
        for (std::size_t i = 0; ok && i < a.size(); ++i)
            for (std::size_t j = i + 1; ok && j < a.size(); ++j)
                ok = a[i] < p.size() && a[j] < p.size() && !p.comparable(a[i], a[j]);
        if (!ok)
            throw PreconditionError("reduce_to_vectors: input contains a set that is not a maximum antichain");
    }
    const MaxAntichainLattice lattice(p, antichains, false);
    for (std::size_t a = 0; a < antichains.size(); ++a)
        for (std::size_t b = a + 1; b < antichains.size(); ++b)
            if (lattice.leq(a, b) || lattice.leq(b, a))
                throw PreconditionError("reduce_to_vectors: " + lattice.describe(a) + " and " + lattice.describe(b) +
                                        " are comparable in the maximum antichain order");
    const auto big = contains_k_plus_k(p, static_cast<std::size_t>(k) + 1);
    if (big.found)
        throw PreconditionError("reduce_to_vectors: the poset contains " + std::to_string(k + 1) + "+" +
                                std::to_string(k + 1));

    std::vector<std::pair<std::size_t, Coord>> position(p.size());
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < cover.chains[i].size(); ++j)
            position[cover.chains[i][j]] = {i, static_cast<Coord>(j + 1)};

    std::vector<Vector> out;
    for (const auto &a : antichains) {
        std::vector<Coord> v(w, 0);
        for (auto x : a) {
            auto [i, pos] = position[x];
            if (v[i] != 0)
                throw std::logic_error("reduce_to_vectors: an antichain meets a chain twice");
            v[i] = pos;
        }
        out.emplace_back(std::move(v));
    }
    return Family(w, std::move(out));
}

// --- Interval orders --------------------------------------------------------

Poset interval_order(const std::vector<std::pair<Coord, Coord>> &intervals)
{
    std::vector<std::string> labels;
    std::vector<Poset::Relation> relations;
    for (std::size_t x = 0; x < intervals.size(); ++x) {
        if (intervals[x].first > intervals[x].second)
            throw InputError("interval " + std::to_string(x + 1) + " has its left end after its right end");
        labels.push_back("i" + std::to_string(x + 1));
        for (std::size_t y = 0; y < intervals.size(); ++y)
            if (intervals[x].second < intervals[y].first)
                relations.emplace_back(x, y);
    }
    return Poset(std::move(labels), relations);
}

Poset random_interval_order(std::size_t n, std::uint64_t seed)
{
    if (n < 1)
        throw InputError("an interval order needs at least one interval");
    std::mt19937_64 gen(seed);
    const auto span = static_cast<std::uint64_t>(2 * n);
    std::vector<std::pair<Coord, Coord>> intervals;
    for (std::size_t x = 0; x < n; ++x) {
        const auto a = static_cast<Coord>(gen() % span), b = static_cast<Coord>(gen() % span);
        intervals.emplace_back(std::min(a, b), std::max(a, b));
    }
    return interval_order(intervals);
}

} // namespace kcross
