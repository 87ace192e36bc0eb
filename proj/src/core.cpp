#include <kcross/core.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace kcross {

namespace {

void check_same_width(const Vector &a, const Vector &b)
{
    if (a.width() != b.width())
        throw InputError("width mismatch: " + to_string(a) + " has width " + std::to_string(a.width()) + ", " +
                         to_string(b) + " has width " + std::to_string(b.width()));
}

} // namespace

Vector::Vector(std::vector<Coord> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw InputError("a vector needs at least one coordinate");
    for (Coord c : coords_)
        if (c <= -kCoordLimit || c >= kCoordLimit)
            throw InputError("coordinate " + std::to_string(c) + " is outside the supported range (+-2^60)");
}

Vector::Vector(std::initializer_list<Coord> coords) : Vector(std::vector<Coord>(coords)) {}

Coord Vector::rank() const noexcept { return std::accumulate(coords_.begin(), coords_.end(), Coord{0}); }

Vector Vector::shifted(std::size_t i, Coord delta) const
{
    auto c = coords_;
    c.at(i) += delta;
    return Vector(std::move(c));
}

std::ostream &operator<<(std::ostream &os, const Vector &v)
{
    os << '(';
    for (std::size_t i = 0; i < v.width(); ++i)
        os << (i ? "," : "") << v[i];
    return os << ')';
}

std::string to_string(const Vector &v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

Family::Family(std::size_t width) : width_(width)
{
    if (width == 0)
        throw InputError("family width must be positive");
}

Family::Family(std::size_t width, std::vector<Vector> vectors) : Family(width)
{
    for (const auto &v : vectors)
        if (v.width() != width)
            throw InputError("vector " + to_string(v) + " does not have the family width " + std::to_string(width));
    std::sort(vectors.begin(), vectors.end());
    auto dup = std::adjacent_find(vectors.begin(), vectors.end());
    if (dup != vectors.end())
        throw InputError("duplicate vector " + to_string(*dup));
    vectors_ = std::move(vectors);
}

bool Family::contains(const Vector &v) const { return std::binary_search(vectors_.begin(), vectors_.end(), v); }

bool Family::insert(const Vector &v)
{
    if (v.width() != width_)
        throw InputError("vector " + to_string(v) + " does not have the family width " + std::to_string(width_));
    auto pos = std::lower_bound(vectors_.begin(), vectors_.end(), v);
    if (pos != vectors_.end() && *pos == v)
        return false;
    vectors_.insert(pos, v);
    return true;
}

CrossingThresholds::CrossingThresholds(std::vector<Coord> ks) : ks_(std::move(ks))
{
    if (ks_.empty())
        throw InputError("thresholds need at least one entry");
    for (Coord k : ks_)
        if (k < 1 || k >= kCoordLimit)
            throw InputError("threshold " + std::to_string(k) + " is not a positive integer in range");
    if (!std::is_sorted(ks_.begin(), ks_.end()))
        throw InputError("thresholds must be nondecreasing, got " + to_string(*this));
}

CrossingThresholds CrossingThresholds::uniform(Coord k, std::size_t width)
{
    if (width == 0)
        throw InputError("thresholds need at least one entry");
    return CrossingThresholds(std::vector<Coord>(width, k));
}

std::string to_string(const CrossingThresholds &ks)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < ks.values().size(); ++i)
        os << (i ? "," : "") << ks.values()[i];
    os << ')';
    return os.str();
}

bool is_k_crossing(const Vector &a, const Vector &b, Coord k)
{
    check_same_width(a, b);
    if (k < 1)
        throw InputError("crossing threshold must be positive");
    bool forward = false, backward = false;
    for (std::size_t i = 0; i < a.width(); ++i) {
        Coord d = a[i] - b[i];
        forward = forward || d >= k;
        backward = backward || -d >= k;
    }
    return forward && backward;
}

bool is_generalized_crossing(const Vector &a, const Vector &b, std::span<const Coord> ks)
{
    check_same_width(a, b);
    if (ks.size() != a.width())
        throw InputError("threshold count " + std::to_string(ks.size()) + " does not match width " +
                         std::to_string(a.width()));
    bool forward = false, backward = false;
    for (std::size_t i = 0; i < a.width(); ++i) {
        if (ks[i] < 1)
            throw InputError("crossing threshold must be positive");
        Coord d = a[i] - b[i];
        forward = forward || d >= ks[i];
        backward = backward || -d >= ks[i];
    }
    return forward && backward;
}

bool is_generalized_crossing(const Vector &a, const Vector &b, const CrossingThresholds &ks)
{
    return is_generalized_crossing(a, b, ks.values());
}

bool is_dominated(const Vector &a, const Vector &b)
{
    check_same_width(a, b);
    for (std::size_t i = 0; i < a.width(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

bool is_comparable(const Vector &a, const Vector &b) { return is_dominated(a, b) || is_dominated(b, a); }

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::Comparable:
        return "comparable";
    case ViolationKind::Crossing:
        return "crossing";
    }
    return "unknown";
}

VerificationReport verify(const Family &family, const CrossingThresholds &ks, std::size_t violation_limit)
{
    if (ks.width() != family.width())
        throw InputError("thresholds " + to_string(ks) + " do not match family width " +
                         std::to_string(family.width()));
    VerificationReport report;
    report.size = family.size();
    std::size_t comparable_count = 0, crossing_count = 0;
    const auto &vs = family.vectors();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        report.rank_values.insert(vs[i].rank());
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (is_comparable(vs[i], vs[j])) {
                report.is_antichain = false;
                if (comparable_count++ < violation_limit)
                    report.violations.push_back({vs[i], vs[j], ViolationKind::Comparable});
                else
                    report.violations_truncated = true;
            }
            if (is_generalized_crossing(vs[i], vs[j], ks)) {
                report.is_cross_free = false;
                if (crossing_count++ < violation_limit)
                    report.violations.push_back({vs[i], vs[j], ViolationKind::Crossing});
                else
                    report.violations_truncated = true;
            }
        }
    }
    report.is_ranked = report.rank_values.size() <= 1;
    return report;
}

VerificationReport verify(const Family &family, Coord k, std::size_t violation_limit)
{
    return verify(family, CrossingThresholds::uniform(k, family.width()), violation_limit);
}

void require_valid(const Family &family, const CrossingThresholds &ks, const char *operation)
{
    auto report = verify(family, ks, 1);
    if (report.valid())
        return;
    const auto &v = report.violations.front();
    throw PreconditionError(std::string(operation) + ": input family is not a " + to_string(ks) +
                            "-cross-free antichain; " + to_string(v.first) + " and " + to_string(v.second) + " are " +
                            to_string(v.kind));
}

Family translate_to_origin(const Family &family)
{
    if (family.empty())
        return family;
    std::vector<Coord> low(family[0].coords().begin(), family[0].coords().end());
    for (const auto &v : family)
        for (std::size_t i = 0; i < v.width(); ++i)
            low[i] = std::min(low[i], v[i]);
    std::vector<Vector> out;
    out.reserve(family.size());
    for (const auto &v : family) {
        std::vector<Coord> c(v.coords().begin(), v.coords().end());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] -= low[i];
        out.emplace_back(std::move(c));
    }
    return Family(family.width(), std::move(out));
}

std::vector<Vector> dual_orders_check(const Family &family, const std::set<std::size_t> &fixed)
{
    const std::size_t w = family.width();
    if (w < 2 || fixed.size() != w - 2)
        throw InputError("exactly w-2 fixed coordinates are required");
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < w; ++i) {
        if (!fixed.contains(i))
            free.push_back(i);
    }
    if (free.size() != 2)
        throw InputError("fixed coordinate index out of range");

    std::vector<Vector> order(family.begin(), family.end());
    for (const auto &v : order)
        for (std::size_t i : fixed)
            if (v[i] != order.front()[i])
                throw PreconditionError(to_string(v) + " and " + to_string(order.front()) +
                                        " disagree on fixed coordinate " + std::to_string(i + 1));

    const std::size_t j = free[0], jj = free[1];
    std::sort(order.begin(), order.end(), [&](const Vector &a, const Vector &b) { return a[j] < b[j]; });
    for (std::size_t n = 1; n < order.size(); ++n)
        if (!(order[n - 1][j] < order[n][j] && order[n - 1][jj] > order[n][jj]))
            throw PreconditionError("not an antichain: " + to_string(order[n - 1]) + " and " + to_string(order[n]) +
                                    " are comparable");
    return order;
}

} // namespace kcross
