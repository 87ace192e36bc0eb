#include <kcross/checked_int.hpp>
#include <kcross/constructions.hpp>

#include <algorithm>

namespace kcross {

namespace {

// Generators materialize every vector; refuse anything beyond this.
constexpr std::int64_t kMaxGenerated = std::int64_t{1} << 22;

void require_positive(Coord k, const char *what)
{
    if (k < 1)
        throw InputError(std::string(what) + " must be a positive integer");
}

void require_generated_size(std::int64_t size)
{
    if (size > kMaxGenerated)
        throw InputError("family of size " + std::to_string(size) + " is too large to generate (limit " +
                         std::to_string(kMaxGenerated) + ")");
}

// Calls f on every point of prod_i [0, limit[i]) in lexicographic order.
template <typename F> void for_each_point(const std::vector<Coord> &limit, F &&f)
{
    std::vector<Coord> p(limit.size(), 0);
    for (Coord l : limit)
        if (l <= 0)
            return;
    while (true) {
        f(p);
        std::size_t i = p.size();
        while (i > 0) {
            --i;
            if (++p[i] < limit[i])
                break;
            p[i] = 0;
            if (i == 0)
                return;
        }
        if (p.empty())
            return;
    }
}

} // namespace

Family product_family(Coord k, std::size_t w)
{
    require_positive(k, "k");
    if (w == 0)
        throw InputError("w must be a positive integer");
    require_generated_size(checked_pow(k, static_cast<std::int64_t>(w - 1)));
    std::vector<Vector> out;
    for_each_point(std::vector<Coord>(w - 1, k), [&](const std::vector<Coord> &p) {
        std::vector<Coord> c(p);
        Coord sum = 0;
        for (Coord x : p)
            sum += x;
        c.push_back(-sum);
        out.emplace_back(std::move(c));
    });
    return Family(w, std::move(out));
}

std::size_t lexicographic_tau_length(Coord k, std::size_t w)
{
    if (k < 2 || w < 2)
        throw InputError("the lexicographic construction needs k >= 2 and w >= 2");
    const Coord target = checked_mul(static_cast<Coord>(w), k - 1);
    // Smallest admissible rank is the least nonnegative residue of w(k-1) mod k.
    const Coord lowest = target % k;
    return static_cast<std::size_t>((target - lowest) / k);
}

Family lexicographic_family(Coord k, std::size_t w, const std::vector<std::size_t> &tau)
{
    const std::size_t needed = lexicographic_tau_length(k, w);
    if (tau.size() < needed)
        throw InputError("tau has length " + std::to_string(tau.size()) + " but the construction needs at least " +
                         std::to_string(needed) + " entries");
    for (std::size_t t : tau)
        if (t < 1 || t > w)
            throw InputError("tau entry " + std::to_string(t) + " is not a coordinate in [1," + std::to_string(w) +
                             "]");
    require_generated_size(checked_pow(k, static_cast<std::int64_t>(w - 1)));

    const Coord target = static_cast<Coord>(w) * (k - 1);
    std::vector<Vector> out;
    for_each_point(std::vector<Coord>(w, k), [&](const std::vector<Coord> &p) {
        Coord rank = 0;
        for (Coord x : p)
            rank += x;
        if ((target - rank) % k != 0)
            return;
        const auto m = static_cast<std::size_t>((target - rank) / k);
        std::vector<Coord> c(p);
        for (std::size_t t = 0; t < m; ++t)
            c[tau[t] - 1] += k;
        out.emplace_back(std::move(c));
    });
    return Family(w, std::move(out));
}

Coord cyclic_rank_value(Coord k, CyclicRank rank)
{
    return rank == CyclicRank::TwoKMinusOne ? 2 * k - 1 : 2 * k - 2;
}

Family cyclic_family(Coord k, CyclicRank rank)
{
    if (k < 2)
        throw InputError("the cyclic construction needs k >= 2");
    if (k > 1000)
        throw InputError("k is too large for the cyclic construction");
    const Coord target = cyclic_rank_value(k, rank);

    // Each cyclic forward difference d = A[i+1] - A[i] satisfies -(k-1) <= d <= k:
    // the upper end is A[i+1] <= k + A[i], the lower end is the second
    // constraint read at index i+1. Enumerating two differences fixes the
    // third and, with the rank, the whole vector.
    auto admissible = [&](const Vector &a) {
        for (std::size_t i = 0; i < 3; ++i) {
            const Coord here = a[i], next = a[(i + 1) % 3], prev = a[(i + 2) % 3];
            if (next > k + here || prev > k - 1 + here)
                return false;
        }
        return true;
    };

    std::vector<Vector> out;
    for (Coord d1 = -(k - 1); d1 <= k; ++d1)
        for (Coord d2 = -(k - 1); d2 <= k; ++d2) {
            const Coord d3 = -(d1 + d2);
            if (d3 < -(k - 1) || d3 > k)
                continue;
            // rank = 3a + 2*d1 + d2
            const Coord rest = target - 2 * d1 - d2;
            if (rest % 3 != 0)
                continue;
            const Coord a = rest / 3;
            Vector v{a, a + d1, a + d1 + d2};
            if (admissible(v))
                out.push_back(std::move(v));
        }
    return Family(3, std::move(out));
}

Vector cyclic_fixup_vector(Coord k) { return Vector{0, k + 1, k - 2}; }

Family inductive_lift(const Family &base, Coord k, Coord c)
{
    require_positive(k, "k");
    require_positive(c, "c");
    for (const auto &v : base)
        for (Coord x : v.coords())
            if (x < 0 || x >= c)
                throw InputError("base vector " + to_string(v) + " is not contained in [0," + std::to_string(c) +
                                 ")^" + std::to_string(base.width()));
    require_valid(base, CrossingThresholds::uniform(k, base.width()), "inductive_lift");
    require_generated_size(checked_mul(static_cast<std::int64_t>(base.size()), k));

    std::vector<Vector> out;
    for (Coord copy = 1; copy <= k; ++copy) {
        const Coord offset = checked_mul(copy - 1, c);
        for (const auto &v : base) {
            std::vector<Coord> coords;
            coords.reserve(base.width() + 1);
            for (Coord x : v.coords())
                coords.push_back(x + offset);
            coords.push_back(-copy);
            out.emplace_back(std::move(coords));
        }
    }
    return Family(base.width() + 1, std::move(out));
}

Family inductive_chain(Coord k, std::size_t w)
{
    require_positive(k, "k");
    if (w == 0)
        throw InputError("w must be a positive integer");
    Family family(1, {Vector{0}});
    for (std::size_t step = 1; step < w; ++step) {
        if (step > 1)
            family = translate_to_origin(family);
        Coord c = 1;
        for (const auto &v : family)
            for (Coord x : v.coords())
                c = std::max(c, x + 1);
        family = inductive_lift(family, k, c);
    }
    return family;
}

Family non_ranked_example()
{
    return Family(4, {
                         Vector{0, 2, 1, 1},
                         Vector{2, 1, 0, 1},
                         Vector{1, 0, 2, 1},
                         Vector{1, 1, 1, 1},
                         Vector{1, 3, 2, 0},
                         Vector{3, 2, 1, 0},
                         Vector{2, 1, 3, 0},
                         Vector{2, 2, 2, 0},
                     });
}

Family weak_compression_family(Coord k)
{
    if (k < 2)
        throw InputError("the weak compression family needs k >= 2");
    if (k > 200)
        throw InputError("k is too large for the weak compression family");
    Family family(4);

    // (i) 0 <= A[1], A[2] <= k-1, A[3] >= 2, A[1]+A[2]+A[3] = 2k-2, A[4] = k
    for (Coord a = 0; a < k; ++a)
        for (Coord b = 0; b < k; ++b) {
            const Coord c = 2 * k - 2 - a - b;
            if (c >= 2)
                family.insert(Vector{a, b, c, k});
        }
    // (ii) (i, k-1-i, k+1, 0)
    for (Coord i = 0; i < k; ++i)
        family.insert(Vector{i, k - 1 - i, k + 1, 0});
    // (iii)
    family.insert(Vector{k - 1, k - 1, k, 0});
    // (iv) rank 3k-2 with every coordinate in [1, k-1]
    for_each_point(std::vector<Coord>(4, k - 1), [&](const std::vector<Coord> &p) {
        Coord rank = 0;
        for (Coord x : p)
            rank += x + 1;
        if (rank == 3 * k - 2)
            family.insert(Vector{p[0] + 1, p[1] + 1, p[2] + 1, p[3] + 1});
    });
    return family;
}

Family generalized_product_family(const CrossingThresholds &ks)
{
    const std::size_t w = ks.width();
    std::vector<Coord> limit(ks.values().begin() + 1, ks.values().end());
    std::int64_t size = 1;
    for (Coord l : limit)
        size = checked_mul(size, l);
    require_generated_size(size);
    std::vector<Vector> out;
    for_each_point(limit, [&](const std::vector<Coord> &p) {
        Coord sum = 0;
        for (Coord x : p)
            sum += x;
        std::vector<Coord> c{-sum};
        c.insert(c.end(), p.begin(), p.end());
        out.emplace_back(std::move(c));
    });
    return Family(w, std::move(out));
}

} // namespace kcross
