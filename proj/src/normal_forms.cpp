#include <kcross/search.hpp>

#include <algorithm>
#include <deque>
#include <map>

namespace kcross {

Family cap_gaps(const Family &family, std::span<const Coord> gaps)
{
    if (gaps.size() != family.width())
        throw InputError("gap count does not match the family width");
    const std::size_t w = family.width();
    std::vector<std::map<Coord, Coord>> remap(w);
    for (std::size_t i = 0; i < w; ++i) {
        for (const auto &v : family)
            remap[i].emplace(v[i], 0);
        Coord next = 0;
        std::optional<Coord> prev;
        for (auto &[value, image] : remap[i]) {
            if (prev)
                next += std::min(value - *prev, gaps[i]);
            image = next;
            prev = value;
        }
    }
    std::vector<Vector> out;
    out.reserve(family.size());
    for (const auto &v : family) {
        std::vector<Coord> c(w);
        for (std::size_t i = 0; i < w; ++i)
            c[i] = remap[i].at(v[i]);
        out.emplace_back(std::move(c));
    }
    return Family(w, std::move(out));
}

Family normalize(const Family &family, const CrossingThresholds &ks)
{
    require_valid(family, ks, "normalize");
    return cap_gaps(family, ks.values());
}

std::vector<std::vector<std::size_t>> CrossDigraph::successors() const
{
    std::vector<std::vector<std::size_t>> out(vertices.size());
    for (auto [a, b] : short_edges)
        out[a].push_back(b);
    for (auto [a, b] : long_edges)
        out[a].push_back(b);
    return out;
}

CrossDigraph build_cross_digraph(const Family &family, const CrossingThresholds &ks, std::size_t coord)
{
    if (coord >= family.width())
        throw InputError("coordinate " + std::to_string(coord + 1) + " is out of range");
    require_valid(family, ks, "build_cross_digraph");
    for (const auto &v : family)
        if (v[coord] < 0)
            throw PreconditionError("build_cross_digraph: " + to_string(v) + " is negative on coordinate " +
                                    std::to_string(coord + 1));

    CrossDigraph graph{family, coord, {}, {}};
    const std::size_t n = family.size(), w = family.width();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b)
                continue;
            const Vector &A = family[a], &B = family[b];
            if (A[coord] - B[coord] == 1) {
                bool below = true;
                for (std::size_t i = 0; i < w && below; ++i)
                    below = i == coord || A[i] <= B[i];
                if (below)
                    graph.short_edges.emplace_back(a, b);
            }
            if (B[coord] - A[coord] == ks[coord] - 1) {
                for (std::size_t i = 0; i < w; ++i)
                    if (i != coord && A[i] - B[i] >= ks[i]) {
                        graph.long_edges.emplace_back(a, b);
                        break;
                    }
            }
        }
    return graph;
}

CrossDigraph build_cross_digraph(const Family &family, Coord k, std::size_t coord)
{
    return build_cross_digraph(family, CrossingThresholds::uniform(k, family.width()), coord);
}

std::vector<bool> reaches_level_zero(const CrossDigraph &graph)
{
    const std::size_t n = graph.vertices.size();
    std::vector<std::vector<std::size_t>> predecessors(n);
    for (auto [a, b] : graph.short_edges)
        predecessors[b].push_back(a);
    for (auto [a, b] : graph.long_edges)
        predecessors[b].push_back(a);

    std::vector<bool> reached(n, false);
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (graph.vertices[v][graph.coord] == 0) {
            reached[v] = true;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto u : predecessors[v])
            if (!reached[u]) {
                reached[u] = true;
                queue.push_back(u);
            }
    }
    return reached;
}

Family compress(const Family &family, const CrossingThresholds &ks, std::size_t coord)
{
    Family current = family;
    while (true) {
        const auto graph = build_cross_digraph(current, ks, coord);
        const auto reached = reaches_level_zero(graph);
        auto stuck = std::find(reached.begin(), reached.end(), false);
        if (stuck == reached.end())
            return current;

        // Everything reachable from a stuck vector is stuck as well, so the
        // whole set sits at coordinate value >= 1 and can move down together.
        const auto succ = graph.successors();
        std::vector<bool> lowered(current.size(), false);
        std::vector<std::size_t> stack{static_cast<std::size_t>(stuck - reached.begin())};
        lowered[stack.back()] = true;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto u : succ[v])
                if (!lowered[u]) {
                    lowered[u] = true;
                    stack.push_back(u);
                }
        }
        std::vector<Vector> next;
        next.reserve(current.size());
        for (std::size_t v = 0; v < current.size(); ++v)
            next.push_back(lowered[v] ? current[v].shifted(coord, -1) : current[v]);
        current = Family(current.width(), std::move(next));
    }
}

Family compress(const Family &family, Coord k, std::size_t coord)
{
    return compress(family, CrossingThresholds::uniform(k, family.width()), coord);
}

Family compress_all(const Family &family, const CrossingThresholds &ks)
{
    Family current = translate_to_origin(family);
    for (std::size_t i = 0; i < current.width(); ++i)
        current = compress(current, ks, i);
    return current;
}

} // namespace kcross
