#include <kcross/bounds.hpp>

#include <algorithm>
#include <set>

namespace kcross {

namespace {

void check_args(Coord k, std::size_t w)
{
    if (k < 1)
        throw InputError("k must be a positive integer");
    if (w < 1)
        throw InputError("w must be a positive integer");
    if (w > 64)
        throw InputError("w is too large");
}

std::int64_t pow_w(Coord k, std::size_t e) { return checked_pow(k, static_cast<std::int64_t>(e)); }

bool trusted_exact(std::size_t w, const BoundOptions &options) { return w == 1 || (options.trust_small_widths && w <= 3); }

// Best known upper bounds F[1..w] and, for the last width, the candidate list.
struct UpperTable {
    std::vector<std::int64_t> best; // best[u] for u in [1, w]
    std::vector<BoundCandidate> last_candidates;
};

UpperTable upper_table(Coord k, std::size_t w, const BoundOptions &options)
{
    UpperTable table;
    table.best.assign(w + 1, 0);
    for (std::size_t u = 1; u <= w; ++u) {
        std::vector<BoundCandidate> cands;
        if (trusted_exact(u, options))
            cands.push_back({"exact", pow_w(k, u - 1)});
        cands.push_back({"sigma", pow_w(k, u)});
        cands.push_back({"recursive", recursive_upper_bound(k, u, options)});
        if (options.trust_small_widths && u >= 3) {
            cands.push_back({"difference", difference_form_bound(k, u)});
            cands.push_back({"ceiling", ceiling_form_bound(k, u)});
        }
        for (std::size_t v = 1; v < u; ++v) {
            const auto value = checked_add(checked_mul(pow_w(k, u - v), table.best[v]),
                                           checked_mul(pow_w(k, v), table.best[u - v]));
            cands.push_back({"split(" + std::to_string(v) + ")", value});
        }
        table.best[u] = std::min_element(cands.begin(), cands.end(), [](const auto &a, const auto &b) {
                            return a.value < b.value;
                        })->value;
        if (u == w)
            table.last_candidates = std::move(cands);
    }
    return table;
}

} // namespace

std::int64_t lower_bound(Coord k, std::size_t w)
{
    check_args(k, w);
    return pow_w(k, w - 1);
}

std::int64_t conjectured_value(Coord k, std::size_t w) { return lower_bound(k, w); }

std::int64_t recursive_upper_bound(Coord k, std::size_t w, BoundOptions options)
{
    check_args(k, w);
    std::int64_t f = 1;
    std::size_t u = 1;
    if (options.trust_small_widths && w >= 2) {
        u = std::min<std::size_t>(w, 3);
        f = pow_w(k, u - 1);
    }
    for (++u; u <= w; ++u)
        f = checked_add(pow_w(k, u - 1), checked_mul(k - 1, f));
    return f;
}

std::int64_t difference_form_bound(Coord k, std::size_t w)
{
    check_args(k, w);
    if (w < 3)
        throw InputError("the difference form applies for w >= 3");
    return checked_sub(pow_w(k, w), checked_mul(checked_mul(k, k), pow_w(k - 1, w - 2)));
}

std::int64_t ceiling_form_bound(Coord k, std::size_t w)
{
    check_args(k, w);
    if (w < 3)
        throw InputError("the ceiling form applies for w >= 3");
    return checked_mul(static_cast<std::int64_t>((w + 2) / 3), pow_w(k, w - 1));
}

std::int64_t split_upper_bound(Coord k, std::size_t w, std::size_t v, BoundOptions options)
{
    check_args(k, w);
    if (v < 1 || v >= w)
        throw InputError("split point v=" + std::to_string(v) + " must satisfy 1 <= v <= w-1 = " +
                         std::to_string(w - 1));
    const auto table = upper_table(k, w - 1, options);
    return checked_add(checked_mul(pow_w(k, w - v), table.best[v]), checked_mul(pow_w(k, v), table.best[w - v]));
}

BoundsReport best_upper_bound(Coord k, std::size_t w, BoundOptions options)
{
    check_args(k, w);
    auto table = upper_table(k, w, options);
    BoundsReport report;
    report.ks.assign(w, k);
    report.lower = lower_bound(k, w);
    report.conjectured = report.lower;
    report.upper_candidates = std::move(table.last_candidates);
    report.upper = table.best[w];
    if (report.upper == report.lower)
        report.exact = report.lower;
    return report;
}

bool is_geometric_thresholds(const CrossingThresholds &ks)
{
    if (ks.width() < 2 || ks[0] != ks[1])
        return false;
    for (std::size_t i = 2; i < ks.width(); ++i)
        if (ks[i] != 2 * ks[i - 1])
            return false;
    return true;
}

BoundsReport generalized_bounds(const CrossingThresholds &ks)
{
    BoundsReport report;
    report.ks.assign(ks.values().begin(), ks.values().end());
    std::int64_t tail = 1;
    for (std::size_t i = 1; i < ks.width(); ++i)
        tail = checked_mul(tail, ks[i]);
    report.lower = tail;
    report.conjectured = tail;
    report.upper_candidates.push_back({"product", checked_mul(tail, ks[0])});
    if (is_geometric_thresholds(ks))
        report.upper_candidates.push_back({"geometric", tail});
    report.upper = std::min_element(report.upper_candidates.begin(), report.upper_candidates.end(),
                                    [](const auto &a, const auto &b) { return a.value < b.value; })
                       ->value;
    if (report.upper == report.lower)
        report.exact = report.lower;
    return report;
}

std::vector<Coord> sigma_signature(const Vector &a, Coord k, bool drop_last)
{
    if (k < 1)
        throw InputError("k must be a positive integer");
    const std::size_t n = drop_last ? a.width() - 1 : a.width();
    std::vector<Coord> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = ((a[i] % k) + k) % k;
    return out;
}

CoordinateCollision::CoordinateCollision(Vector first, Vector second)
    : PreconditionError(to_string(first) + " and " + to_string(second) + " share coordinate 1"),
      first_(std::move(first)), second_(std::move(second))
{
}

std::map<Vector, std::vector<Coord>> height_signature(const Family &family, Coord k)
{
    require_valid(family, CrossingThresholds::uniform(k, family.width()), "height_signature");
    std::vector<Vector> order(family.begin(), family.end());
    std::sort(order.begin(), order.end(), [](const Vector &a, const Vector &b) { return a[0] < b[0]; });
    for (std::size_t n = 1; n < order.size(); ++n)
        if (order[n - 1][0] == order[n][0])
            throw CoordinateCollision(order[n - 1], order[n]);

    const std::size_t w = family.width();
    std::vector<std::vector<Coord>> heights(order.size(), std::vector<Coord>(w - 1, 1));
    // Processing in increasing coordinate 1 visits every <_i predecessor first.
    for (std::size_t b = 0; b < order.size(); ++b)
        for (std::size_t a = 0; a < b; ++a)
            for (std::size_t i = 1; i < w; ++i)
                if (order[a][i] > order[b][i])
                    heights[b][i - 1] = std::max(heights[b][i - 1], heights[a][i - 1] + 1);

    std::map<Vector, std::vector<Coord>> out;
    for (std::size_t n = 0; n < order.size(); ++n)
        out.emplace(order[n], std::move(heights[n]));
    return out;
}

bool distinct_values_bound_check(const Family &family, Coord k, std::size_t coord)
{
    if (coord >= family.width())
        throw InputError("coordinate " + std::to_string(coord + 1) + " is out of range");
    require_valid(family, CrossingThresholds::uniform(k, family.width()), "distinct_values_bound_check");
    std::set<Coord> values;
    for (const auto &v : family)
        values.insert(v[coord]);
    return static_cast<std::int64_t>(values.size()) <= lower_bound(k, family.width());
}

} // namespace kcross
