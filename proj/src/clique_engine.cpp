#include "clique_engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

namespace kcross::detail {

namespace {

using Clock = std::chrono::steady_clock;
using Word = std::uint64_t;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Shared between workers. The graph is read-only; everything else is atomic
// or guarded by `mutex`.
struct SharedState {
    const CompatibilityGraph &graph;
    const EngineConfig &config;

    SharedState(const CompatibilityGraph &g, const EngineConfig &c) : graph(g), config(c) {}

    Clock::time_point deadline;
    bool has_deadline = false;

    std::atomic<std::size_t> next_root{0};
    std::atomic<std::size_t> best_root{kNone};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};

    std::mutex mutex;
    std::vector<std::size_t> best_clique;
    std::string truncation_reason;
    std::vector<std::uint64_t> root_nodes;
    std::vector<char> root_done;

    void truncate(const std::string &reason)
    {
        std::lock_guard lock(mutex);
        if (truncation_reason.empty())
            truncation_reason = reason;
        abort = true;
    }
};

// Range of words [lo, hi) outside which a bitset is known to be zero.
struct Span {
    std::size_t lo = 0, hi = 0;
};

class Worker {
  public:
    explicit Worker(SharedState &shared)
        : shared_(shared), graph_(shared.graph), config_(shared.config), w_(graph_.width()),
          words_(graph_.words()), target_(static_cast<std::size_t>(config_.target))
    {
        const auto &limits = graph_.box().limits;
        offset_.resize(w_ + 1, 0);
        for (std::size_t i = 0; i < w_; ++i)
            offset_[i + 1] = offset_[i] + static_cast<std::size_t>(limits[i]) + 1;
        counts_.assign(offset_[w_], 0);
        ok_.assign((target_ + 1) * offset_[w_], 0);
        candidates_.assign((target_ + 1) * words_, 0);
        order_.assign(target_ + 1, {});
        colour_.assign(target_ + 1, {});
        scratch_u_.assign(words_, 0);
        scratch_q_.assign(words_, 0);
    }

    void run()
    {
        const std::size_t n = graph_.size();
        while (!shared_.abort) {
            const std::size_t root = shared_.next_root.fetch_add(1);
            if (root >= n || graph_.coord(root, 0) != 0)
                return;
            if (superseded(root))
                continue;
            current_root_ = root;
            local_nodes_ = 0;
            cancelled_ = false;
            const bool found = search_root(root);
            std::lock_guard lock(shared_.mutex);
            shared_.root_nodes[root] = local_nodes_;
            if (found && root < shared_.best_root) {
                shared_.best_root = root;
                shared_.best_clique = clique_;
            }
            if (!cancelled_ && !shared_.abort)
                shared_.root_done[root] = 1;
        }
    }

  private:
    bool superseded(std::size_t root) const
    {
        const auto best = shared_.best_root.load();
        if (best == kNone)
            return false;
        return shared_.config.limits.deterministic ? root > best : true;
    }

    bool stop()
    {
        if (shared_.abort || cancelled_)
            return true;
        if ((local_nodes_ & 255U) == 0) {
            if (superseded(current_root_)) {
                cancelled_ = true;
                return true;
            }
            if (shared_.has_deadline && Clock::now() > shared_.deadline) {
                shared_.truncate("time limit of " + std::to_string(config_.limits.time_seconds) + " s reached");
                return true;
            }
        }
        return false;
    }

    void push(std::size_t v)
    {
        clique_.push_back(v);
        for (std::size_t i = 0; i < w_; ++i)
            ++counts_[offset_[i] + static_cast<std::size_t>(graph_.coord(v, i))];
    }

    void pop()
    {
        const auto v = clique_.back();
        clique_.pop_back();
        for (std::size_t i = 0; i < w_; ++i)
            --counts_[offset_[i] + static_cast<std::size_t>(graph_.coord(v, i))];
    }

    Coord max_value(std::size_t i) const
    {
        for (std::size_t x = offset_[i + 1] - offset_[i]; x-- > 0;)
            if (counts_[offset_[i] + x])
                return static_cast<Coord>(x);
        return -1;
    }

    static Coord ceil_div(Coord a, Coord b) { return (a + b - 1) / b; }

    // Number of new distinct values coordinate i still needs when its value
    // set is `values` (sorted) and it has to reach at least `reach`.
    Coord missing_values(const std::vector<Coord> &values, Coord reach, Coord gap) const
    {
        Coord need = values.front() > 0 ? ceil_div(values.front(), gap) : 0;
        for (std::size_t j = 1; j < values.size(); ++j)
            need += ceil_div(values[j] - values[j - 1], gap) - 1;
        if (reach > values.back())
            need += ceil_div(reach - values.back(), gap);
        return need;
    }

    // Checks the current clique and fills the per-value candidate table for
    // `depth`. Returns false when the clique cannot be completed.
    bool feasible(std::size_t depth)
    {
        const Coord remaining = static_cast<Coord>(target_ - clique_.size());
        const Coord reach0 = config_.coordinate_one_smallest ? max_value(0) : -1;
        char *ok = ok_.data() + depth * offset_[w_];
        std::vector<Coord> &values = values_;
        for (std::size_t i = 0; i < w_; ++i) {
            const Coord gap = config_.gap[i];
            const Coord reach = i == 0 ? -1 : reach0;
            const std::size_t span = offset_[i + 1] - offset_[i];
            values.clear();
            for (std::size_t x = 0; x < span; ++x)
                if (counts_[offset_[i] + x])
                    values.push_back(static_cast<Coord>(x));
            if (missing_values(values, reach, gap) > remaining)
                return false;
            for (std::size_t x = 0; x < span; ++x) {
                if (counts_[offset_[i] + x]) {
                    ok[offset_[i] + x] = missing_values(values, reach, gap) <= remaining - 1;
                    continue;
                }
                with_value_ = values;
                with_value_.insert(std::upper_bound(with_value_.begin(), with_value_.end(), static_cast<Coord>(x)),
                                   static_cast<Coord>(x));
                ok[offset_[i] + x] = missing_values(with_value_, reach, gap) <= remaining - 1;
            }
        }
        return true;
    }

    // Drops candidates whose coordinates fail the table for `depth`.
    std::size_t filter(Word *p, Span &s, std::size_t depth)
    {
        const char *ok = ok_.data() + depth * offset_[w_];
        std::size_t count = 0;
        for (std::size_t wi = s.lo; wi < s.hi; ++wi) {
            Word bits = p[wi];
            while (bits) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                const std::size_t u = wi * 64 + b;
                bool keep = true;
                for (std::size_t i = 0; i < w_ && keep; ++i)
                    keep = ok[offset_[i] + static_cast<std::size_t>(graph_.coord(u, i))];
                if (keep)
                    ++count;
                else
                    p[wi] &= ~(Word{1} << b);
            }
        }
        while (s.lo < s.hi && p[s.lo] == 0)
            ++s.lo;
        while (s.hi > s.lo && p[s.hi - 1] == 0)
            --s.hi;
        return count;
    }

    // Greedy sequential colouring of p; colour classes are listed in order.
    void colour(const Word *p, Span s, std::size_t depth)
    {
        auto &order = order_[depth];
        auto &colour = colour_[depth];
        order.clear();
        colour.clear();
        std::copy(p + s.lo, p + s.hi, scratch_u_.begin() + static_cast<std::ptrdiff_t>(s.lo));
        Word *u = scratch_u_.data();
        Word *q = scratch_q_.data();
        std::uint32_t c = 0;
        std::size_t lo = s.lo;
        while (true) {
            while (lo < s.hi && u[lo] == 0)
                ++lo;
            if (lo == s.hi)
                break;
            ++c;
            std::copy(u + lo, u + s.hi, q + lo);
            for (std::size_t wi = lo; wi < s.hi; ++wi) {
                while (q[wi]) {
                    const auto b = static_cast<std::size_t>(std::countr_zero(q[wi]));
                    const std::size_t v = wi * 64 + b;
                    q[wi] &= ~(Word{1} << b);
                    u[wi] &= ~(Word{1} << b);
                    const Word *row = graph_.row(v).data();
                    for (std::size_t x = wi; x < s.hi; ++x)
                        q[x] &= ~row[x];
                    order.push_back(static_cast<std::uint32_t>(v));
                    colour.push_back(c);
                }
            }
        }
    }

    bool search_root(std::size_t root)
    {
        clique_.clear();
        std::fill(counts_.begin(), counts_.end(), 0);
        push(root);
        ++local_nodes_;
        shared_.nodes.fetch_add(1);
        if (!feasible(0))
            return false;
        if (clique_.size() == target_)
            return true;
        Word *p = candidates_.data();
        const auto row = graph_.row(root);
        Span s{root / 64, words_};
        std::fill(p, p + words_, 0);
        for (std::size_t wi = s.lo; wi < s.hi; ++wi)
            p[wi] = row[wi];
        p[root / 64] &= ~((Word{2} << (root % 64)) - 1); // keep only vertices after root
        const auto count = filter(p, s, 0);
        if (clique_.size() + count < target_)
            return false;
        return expand(1, s);
    }

    // The candidate set for this level lives in candidates_[depth-1].
    bool expand(std::size_t depth, Span s)
    {
        ++local_nodes_;
        const auto total = shared_.nodes.fetch_add(1) + 1;
        if (config_.limits.max_nodes && total > config_.limits.max_nodes) {
            shared_.truncate("node limit of " + std::to_string(config_.limits.max_nodes) + " reached");
            return false;
        }
        if (stop())
            return false;

        Word *p = candidates_.data() + (depth - 1) * words_;
        Word *next = candidates_.data() + depth * words_;
        colour(p, s, depth);
        const auto &order = order_[depth];
        const auto &colour = colour_[depth];
        for (std::size_t j = order.size(); j-- > 0;) {
            if (clique_.size() + colour[j] < target_)
                return false;
            const std::size_t v = order[j];
            const auto row = graph_.row(v);
            Span ns = s;
            for (std::size_t wi = ns.lo; wi < ns.hi; ++wi)
                next[wi] = p[wi] & row[wi];
            push(v);
            bool found = false;
            if (feasible(depth)) {
                if (clique_.size() == target_)
                    return true;
                const auto count = filter(next, ns, depth);
                if (clique_.size() + count >= target_)
                    found = expand(depth + 1, ns);
            }
            if (found)
                return true;
            pop();
            if (shared_.abort || cancelled_)
                return false;
            p[v / 64] &= ~(Word{1} << (v % 64));
        }
        return false;
    }

    SharedState &shared_;
    const CompatibilityGraph &graph_;
    const EngineConfig &config_;
    const std::size_t w_, words_, target_;

    std::vector<std::size_t> offset_;
    std::vector<std::uint32_t> counts_;
    std::vector<char> ok_;
    std::vector<Word> candidates_;
    std::vector<std::vector<std::uint32_t>> order_, colour_;
    std::vector<Word> scratch_u_, scratch_q_;
    std::vector<Coord> values_, with_value_;
    std::vector<std::size_t> clique_;

    std::size_t current_root_ = 0;
    std::uint64_t local_nodes_ = 0;
    bool cancelled_ = false;
};

} // namespace

EngineResult find_clique(const CompatibilityGraph &graph, const EngineConfig &config)
{
    if (config.target < 1)
        throw InputError("target size must be positive");
    if (config.gap.size() != graph.width())
        throw InputError("gap count does not match the graph width");

    EngineResult result;
    if (static_cast<std::uint64_t>(config.target) > graph.size())
        return result;

    SharedState shared{graph, config};
    shared.root_nodes.assign(graph.size(), 0);
    shared.root_done.assign(graph.size(), 0);
    if (config.limits.time_seconds > 0) {
        shared.has_deadline = true;
        shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(config.limits.time_seconds));
    }

    const unsigned workers = std::max(1U, config.limits.workers);
    if (workers == 1) {
        Worker(shared).run();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&shared] { Worker(shared).run(); });
    }

    const auto best = shared.best_root.load();
    if (best != kNone) {
        // In deterministic mode every root before `best` must have finished,
        // otherwise an earlier witness might have been missed.
        bool earlier_complete = true;
        for (std::size_t r = 0; r < best; ++r)
            if (graph.coord(r, 0) == 0 && !shared.root_done[r])
                earlier_complete = false;
        if (!config.limits.deterministic || earlier_complete) {
            result.found = true;
            result.clique = shared.best_clique;
            std::sort(result.clique.begin(), result.clique.end());
        }
    }
    if (!result.found && shared.abort) {
        result.truncated = true;
        result.truncation_reason = shared.truncation_reason;
    }
    if (config.limits.deterministic && result.found) {
        for (std::size_t r = 0; r <= best; ++r)
            result.nodes += shared.root_nodes[r];
    } else {
        result.nodes = shared.nodes.load();
    }
    return result;
}

} // namespace kcross::detail
