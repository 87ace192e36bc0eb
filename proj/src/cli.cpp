#include <kcross/bounds.hpp>
#include <kcross/checked_int.hpp>
#include <kcross/cli.hpp>
#include <kcross/constructions.hpp>
#include <kcross/family_io.hpp>
#include <kcross/posets.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace kcross::cli {

namespace {

using nlohmann::json;

json vectors_json(const Family &family)
{
    json out = json::array();
    for (const auto &v : family)
        out.push_back(std::vector<Coord>(v.coords().begin(), v.coords().end()));
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void row(std::ostream &out, const std::string &key, const std::string &value)
{
    out << std::left << std::setw(16) << key << value << '\n';
}

template <typename T> std::string list(const std::vector<T> &values)
{
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? "," : "") + std::to_string(values[i]);
    return s + ")";
}

CrossingThresholds thresholds(const RunConfig &c, std::optional<std::size_t> width)
{
    if (!c.ks.empty()) {
        if (c.k)
            throw InputError("give either --k or --ks, not both");
        if (width && *width != c.ks.size())
            throw InputError("--ks has " + std::to_string(c.ks.size()) + " entries but the width is " +
                             std::to_string(*width));
        return CrossingThresholds(c.ks);
    }
    if (!c.k)
        throw InputError("missing --k or --ks");
    const auto w = width ? width : c.w;
    if (!w)
        throw InputError("missing --w");
    return CrossingThresholds::uniform(*c.k, *w);
}

Coord require_k(const RunConfig &c)
{
    if (!c.k)
        throw InputError("missing --k");
    return *c.k;
}

std::size_t require_w(const RunConfig &c)
{
    if (!c.w)
        throw InputError("missing --w");
    return *c.w;
}

class Input {
  public:
    Input(const std::string &path, std::istream &fallback) : path_(path)
    {
        if (path == "-") {
            stream_ = &fallback;
            return;
        }
        file_.open(path);
        if (!file_)
            throw InputError("cannot open '" + path + "'");
        stream_ = &file_;
    }
    std::istream &get() { return *stream_; }

  private:
    std::string path_;
    std::ifstream file_;
    std::istream *stream_ = nullptr;
};

// --- construct --------------------------------------------------------------

int cmd_construct(const RunConfig &c, std::ostream &out)
{
    Family family(1);
    if (c.kind == "product") {
        family = product_family(require_k(c), require_w(c));
    } else if (c.kind == "lexicographic") {
        const Coord k = require_k(c);
        const std::size_t w = require_w(c);
        auto tau = c.tau;
        if (tau.empty())
            for (std::size_t t = 0; t < lexicographic_tau_length(k, w); ++t)
                tau.push_back(t % w + 1);
        family = lexicographic_family(k, w, tau);
    } else if (c.kind == "cyclic") {
        CyclicRank rank;
        if (c.rank == "2k-1")
            rank = CyclicRank::TwoKMinusOne;
        else if (c.rank == "2k-2")
            rank = CyclicRank::TwoKMinusTwo;
        else
            throw InputError("--rank must be 2k-1 or 2k-2");
        family = cyclic_family(require_k(c), rank);
        if (c.fixup)
            family.insert(cyclic_fixup_vector(require_k(c)));
    } else if (c.kind == "inductive") {
        family = inductive_chain(require_k(c), require_w(c));
    } else if (c.kind == "non-ranked") {
        family = non_ranked_example();
    } else if (c.kind == "weak-compression") {
        family = weak_compression_family(require_k(c));
    } else if (c.kind == "generalized-product") {
        if (c.ks.empty())
            throw InputError("generalized-product needs --ks");
        family = generalized_product_family(CrossingThresholds(c.ks));
    } else {
        throw InputError("unknown construction kind '" + c.kind + "'");
    }

    if (c.format == Format::Records)
        out << json{{"kind", c.kind}, {"width", family.width()}, {"size", family.size()}, {"vectors", vectors_json(family)}}
                   .dump()
            << '\n';
    else
        write_family(out, family);
    return kOk;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const RunConfig &c, std::istream &in, std::ostream &out)
{
    Input input(c.input, in);
    const Family family = read_family(input.get());
    const auto ks = thresholds(c, family.width());
    const auto report = verify(family, ks);

    if (c.format == Format::Records) {
        json violations = json::array();
        for (const auto &v : report.violations)
            violations.push_back({{"first", std::vector<Coord>(v.first.coords().begin(), v.first.coords().end())},
                                  {"second", std::vector<Coord>(v.second.coords().begin(), v.second.coords().end())},
                                  {"kind", to_string(v.kind)}});
        out << json{{"thresholds", std::vector<Coord>(ks.values().begin(), ks.values().end())},
                    {"size", report.size},
                    {"antichain", report.is_antichain},
                    {"cross_free", report.is_cross_free},
                    {"ranked", report.is_ranked},
                    {"ranks", report.rank_values},
                    {"valid", report.valid()},
                    {"violations", violations},
                    {"violations_truncated", report.violations_truncated}}
                   .dump()
            << '\n';
    } else {
        row(out, "thresholds", to_string(ks));
        row(out, "size", std::to_string(report.size));
        row(out, "antichain", yes_no(report.is_antichain));
        row(out, "cross-free", yes_no(report.is_cross_free));
        std::string ranks;
        for (Coord r : report.rank_values)
            ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
        row(out, "ranked", yes_no(report.is_ranked) + " (ranks " + (ranks.empty() ? "-" : ranks) + ")");
        row(out, "valid", yes_no(report.valid()));
        for (const auto &v : report.violations)
            row(out, "violation", to_string(v.first) + " " + to_string(v.second) + " " + to_string(v.kind));
        if (report.violations_truncated)
            row(out, "violation", "... further violations omitted");
    }
    return report.valid() ? kOk : kFailed;
}

// --- search -----------------------------------------------------------------

std::string limits_text(const SearchLimits &l)
{
    std::ostringstream os;
    os << "time " << l.time_seconds << " s, nodes " << (l.max_nodes ? std::to_string(l.max_nodes) : "unlimited")
       << ", memory " << l.memory_bytes / (1024 * 1024) << " MiB";
    // The worker count is left out in deterministic mode, where it cannot
    // change the result.
    if (l.deterministic)
        os << ", deterministic";
    else
        os << ", workers " << l.workers;
    return os.str();
}

std::string certificate(const SearchResult &r, const SearchLimits &limits)
{
    const std::string box = r.box.describe() + " (" + r.box.note + ")";
    switch (r.outcome) {
    case SearchOutcome::Found:
        return "family of size " + std::to_string(r.target) + " found in box " + box;
    case SearchOutcome::Refuted:
        return "no family of size " + std::to_string(r.target) + " exists: box " + box +
               " is complete and was searched exhaustively under " + limits_text(limits);
    case SearchOutcome::NoneInBox:
        return "no family of size " + std::to_string(r.target) + " inside box " + box +
               " (box is not complete for this size) under " + limits_text(limits);
    case SearchOutcome::Truncated:
        return "undecided for size " + std::to_string(r.target) + " in box " + box + ": " + r.truncation_reason;
    }
    return "";
}

int cmd_search(const RunConfig &c, std::ostream &out)
{
    const auto ks = thresholds(c, std::nullopt);
    SearchOptions options;
    if (c.normal_form == "interval")
        options.normal_form = NormalForm::Interval;
    else if (c.normal_form == "gap")
        options.normal_form = NormalForm::GapCapped;
    else
        throw InputError("--normal-form must be interval or gap");
    options.permutation_pruning = c.permutation_pruning;
    options.ranked = c.ranked;

    std::optional<SearchBox> box;
    if (!c.box.empty()) {
        auto limits = c.box;
        if (limits.size() == 1)
            limits.assign(ks.width(), limits.front());
        box = SearchBox::user(std::move(limits));
    }

    SearchResult r;
    if (c.target) {
        r = exists_family(ks, *c.target, box, c.limits, options);
    } else if (c.ranked && !box && ks.is_uniform()) {
        r = ranked_max_family_size(ks[0], ks.width(), c.limits, options);
    } else {
        r = max_family_size(ks, c.limits, options, box);
    }

    int code = kOk;
    if (r.outcome == SearchOutcome::Truncated)
        code = kTruncated;
    else if (c.target && r.outcome != SearchOutcome::Found)
        code = kFailed;

    const std::string mode = c.target ? "target " + std::to_string(*c.target) : "maximum";
    if (c.format == Format::Records) {
        json j{{"thresholds", std::vector<Coord>(ks.values().begin(), ks.values().end())},
               {"width", ks.width()},
               {"mode", c.target ? "target" : "maximum"},
               {"ranked", c.ranked},
               {"normal_form", to_string(options.normal_form)},
               {"outcome", to_string(r.outcome)},
               {"target", r.target},
               {"best_size", r.best_size},
               {"exhaustive", r.exhaustive},
               {"box_exhausted", r.box_exhausted},
               {"box", r.box.limits},
               {"box_origin", r.box.origin == SearchBox::Origin::Auto ? "auto" : "user"},
               {"nodes", r.nodes_explored},
               {"certificate", certificate(r, c.limits)},
               {"witness", vectors_json(r.witness)}};
        if (!c.limits.deterministic)
            j["elapsed_ms"] = r.elapsed.count();
        if (!r.truncation_reason.empty())
            j["truncation_reason"] = r.truncation_reason;
        out << j.dump() << '\n';
    } else {
        row(out, "thresholds", to_string(ks));
        row(out, "mode", mode + (c.ranked ? ", ranked" : ""));
        row(out, "normal form", to_string(options.normal_form));
        row(out, "outcome", to_string(r.outcome));
        row(out, "best size", std::to_string(r.best_size));
        if (!c.target) {
            row(out, "exhaustive", yes_no(r.exhaustive));
            row(out, "box exhausted", yes_no(r.box_exhausted));
        }
        row(out, "nodes", std::to_string(r.nodes_explored));
        if (!c.limits.deterministic)
            row(out, "elapsed ms", std::to_string(r.elapsed.count()));
        row(out, "certificate", certificate(r, c.limits));
        if (!r.witness.empty()) {
            out << "witness:\n";
            write_family(out, r.witness);
        }
    }
    return code;
}

// --- bound ------------------------------------------------------------------

int cmd_bound(const RunConfig &c, std::ostream &out)
{
    BoundsReport report;
    if (!c.ks.empty()) {
        report = generalized_bounds(thresholds(c, std::nullopt));
    } else {
        BoundOptions options;
        options.trust_small_widths = c.trust_exact;
        report = best_upper_bound(require_k(c), require_w(c), options);
    }

    if (c.format == Format::Records) {
        json candidates = json::array();
        for (const auto &cand : report.upper_candidates)
            candidates.push_back({{"name", cand.name}, {"value", cand.value}});
        json j{{"thresholds", report.ks},         {"lower", report.lower}, {"upper", report.upper},
               {"conjectured", report.conjectured}, {"candidates", candidates}};
        j["exact"] = report.exact ? json(*report.exact) : json(nullptr);
        out << j.dump() << '\n';
    } else {
        row(out, "thresholds", list(report.ks));
        row(out, "lower", std::to_string(report.lower));
        row(out, "upper", std::to_string(report.upper));
        row(out, "conjectured", std::to_string(report.conjectured));
        row(out, "exact", report.exact ? std::to_string(*report.exact) : "-");
        for (const auto &cand : report.upper_candidates)
            row(out, "candidate", cand.name + " " + std::to_string(cand.value));
    }
    return kOk;
}

// --- poset ------------------------------------------------------------------

std::string labels_of(const Poset &p, const std::vector<std::size_t> &xs, const char *sep)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? sep : "") + p.label(xs[i]);
    return s;
}

int cmd_poset(const RunConfig &c, std::istream &in, std::ostream &out)
{
    Input input(c.input, in);
    const Poset p = read_poset(input.get());
    const auto w = width(p);
    const auto lattice = max_antichains(p, c.cap);

    std::optional<LatticeWidth> lw;
    if (!lattice.truncated())
        lw = lattice_width_witness(lattice);
    constexpr std::size_t kLatticeCheckLimit = 200;
    std::optional<bool> lattice_ok;
    if (!lattice.truncated() && lattice.size() <= kLatticeCheckLimit)
        lattice_ok = is_lattice(lattice);

    std::optional<KPlusKWitness> kk;
    std::optional<Family> reduced;
    if (c.k) {
        if (*c.k < 1)
            throw InputError("--k must be positive");
        kk = contains_k_plus_k(p, static_cast<std::size_t>(*c.k));
    }
    if (c.reduce) {
        if (!lw)
            throw InputError("--reduce needs a complete maximum antichain enumeration");
        std::vector<Antichain> chosen;
        for (auto m : lw->members)
            chosen.push_back(lattice[m]);
        reduced = reduce_to_vectors(p, require_k(c), chosen);
    }

    if (c.format == Format::Records) {
        json chains = json::array();
        for (const auto &ch : w.chains)
            chains.push_back(labels_of(p, ch, " < "));
        json j{{"elements", p.size()},
               {"width", w.width},
               {"antichain", labels_of(p, w.antichain, " ")},
               {"chains", chains},
               {"max_antichains", lattice.size()},
               {"truncated", lattice.truncated()}};
        j["lattice_width"] = lw ? json(lw->width) : json(nullptr);
        j["is_lattice"] = lattice_ok ? json(*lattice_ok) : json(nullptr);
        if (kk) {
            j["k"] = *c.k;
            j["contains_k_plus_k"] = kk->found;
            if (kk->found)
                j["k_plus_k_witness"] = {labels_of(p, kk->first, " < "), labels_of(p, kk->second, " < ")};
        }
        if (reduced) {
            j["reduced"] = vectors_json(*reduced);
            j["reduced_valid"] = verify(*reduced, *c.k).valid();
        }
        out << j.dump() << '\n';
    } else {
        row(out, "elements", std::to_string(p.size()));
        row(out, "width", std::to_string(w.width));
        row(out, "antichain", labels_of(p, w.antichain, " "));
        for (const auto &ch : w.chains)
            row(out, "chain", labels_of(p, ch, " < "));
        row(out, "max antichains", std::to_string(lattice.size()) + (lattice.truncated() ? " (truncated)" : ""));
        row(out, "lattice width", lw ? std::to_string(lw->width) : "-");
        row(out, "is lattice", lattice_ok ? yes_no(*lattice_ok) : "-");
        if (kk) {
            const std::string name = std::to_string(*c.k) + "+" + std::to_string(*c.k);
            row(out, "contains " + name, kk->found ? "yes: " + labels_of(p, kk->first, " < ") + " | " +
                                                         labels_of(p, kk->second, " < ")
                                                   : "no");
        }
        if (reduced) {
            row(out, "reduced valid", yes_no(verify(*reduced, *c.k).valid()));
            out << "reduced:\n";
            write_family(out, *reduced);
        }
    }
    return lattice.truncated() ? kTruncated : kOk;
}

// --- compress ---------------------------------------------------------------

int cmd_compress(const RunConfig &c, std::istream &in, std::ostream &out)
{
    Input input(c.input, in);
    const Family family = read_family(input.get());
    const auto ks = thresholds(c, family.width());
    Family result(family.width());
    if (c.coord == 0) {
        result = compress_all(family, ks);
    } else {
        if (c.coord > family.width())
            throw InputError("--coord " + std::to_string(c.coord) + " exceeds the width " +
                             std::to_string(family.width()));
        result = compress(family, ks, c.coord - 1);
    }
    if (c.format == Format::Records)
        out << json{{"width", result.width()}, {"size", result.size()}, {"vectors", vectors_json(result)}}.dump()
            << '\n';
    else
        write_family(out, result);
    return kOk;
}

int dispatch(const RunConfig &c, std::istream &in, std::ostream &out)
{
    if (c.subcommand == "construct")
        return cmd_construct(c, out);
    if (c.subcommand == "verify")
        return cmd_verify(c, in, out);
    if (c.subcommand == "search")
        return cmd_search(c, out);
    if (c.subcommand == "bound")
        return cmd_bound(c, out);
    if (c.subcommand == "poset")
        return cmd_poset(c, in, out);
    if (c.subcommand == "compress")
        return cmd_compress(c, in, out);
    throw InputError("unknown subcommand '" + c.subcommand + "'");
}

} // namespace

std::variant<RunConfig, int> parse_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig c;
    CLI::App app{"Antichains in Z^w without k-crossing pairs", "kcross"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format = "table";
    app.add_option("--format", format, "Output style")->check(CLI::IsMember({"table", "records"}));

    auto thresholds_opts = [&](CLI::App *sub, bool width) {
        sub->add_option("--k", c.k, "Uniform crossing threshold");
        sub->add_option("--ks", c.ks, "Per-coordinate thresholds, nondecreasing")->delimiter(',');
        if (width)
            sub->add_option("--w", c.w, "Width");
    };
    auto output_opt = [&](CLI::App *sub) { sub->add_option("-o,--output", c.output, "Output file (- for stdout)"); };
    auto input_opt = [&](CLI::App *sub) { sub->add_option("input", c.input, "Input file (- for stdin)"); };

    auto *construct = app.add_subcommand("construct", "Emit a construction in the family format");
    construct->add_option("--kind", c.kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"product", "lexicographic", "cyclic", "inductive", "non-ranked", "weak-compression",
                               "generalized-product"}));
    thresholds_opts(construct, true);
    construct->add_option("--tau", c.tau, "Lexicographic lift sequence (1-based coordinates)")->delimiter(',');
    construct->add_option("--rank", c.rank, "Cyclic family rank: 2k-1 or 2k-2");
    construct->add_flag("--fixup", c.fixup, "Add the printed fix-up vector to the cyclic family");
    output_opt(construct);

    auto *verify_cmd = app.add_subcommand("verify", "Check a family for antichain and crossing violations");
    thresholds_opts(verify_cmd, false);
    input_opt(verify_cmd);
    output_opt(verify_cmd);

    auto *search = app.add_subcommand("search", "Exhaustive search for large families");
    thresholds_opts(search, true);
    search->add_option("--target", c.target, "Decide whether a family of this size exists");
    search->add_option("--box", c.box, "Upper box limits (one value for a cube)")->delimiter(',');
    search->add_flag("--ranked", c.ranked, "Only families of constant rank");
    search->add_option("--time", c.limits.time_seconds, "Time limit in seconds (0 = none)");
    search->add_option("--nodes", c.limits.max_nodes, "Node limit (0 = none)");
    std::uint64_t memory_mib = c.limits.memory_bytes >> 20;
    search->add_option("--memory", memory_mib, "Memory budget for the graph in MiB");
    search->add_option("--workers", c.limits.workers, "Worker threads")->check(CLI::Range(1U, 1024U));
    bool nondeterministic = false;
    search->add_flag("--nondeterministic", nondeterministic, "Accept the first witness any worker finds");
    search->add_flag("--deterministic", "Reproducible witness and output (default)");
    search->add_option("--normal-form", c.normal_form, "Search normal form: interval or gap")
        ->check(CLI::IsMember({"interval", "gap"}));
    bool no_pruning = false;
    search->add_flag("--no-permutation-pruning", no_pruning, "Disable coordinate permutation pruning");
    output_opt(search);

    auto *bound = app.add_subcommand("bound", "Lower and upper bounds");
    thresholds_opts(bound, true);
    bool no_trust = false;
    bound->add_flag("--no-trust-exact", no_trust, "Do not seed with the exact values for w <= 3");
    output_opt(bound);

    auto *poset = app.add_subcommand("poset", "Width and maximum antichain lattice of a poset");
    input_opt(poset);
    poset->add_option("--k", c.k, "Check for k+k; threshold for --reduce");
    poset->add_option("--cap", c.cap, "Maximum number of antichains to enumerate");
    poset->add_flag("--reduce", c.reduce, "Map a widest set of incomparable maximum antichains to vectors");
    output_opt(poset);

    auto *compress_cmd = app.add_subcommand("compress", "Compress a family coordinate by coordinate");
    thresholds_opts(compress_cmd, false);
    compress_cmd->add_option("--coord", c.coord, "1-based coordinate (0 = all)");
    input_opt(compress_cmd);
    output_opt(compress_cmd);

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i)
            args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    c.subcommand = app.get_subcommands().front()->get_name();
    c.format = format == "records" ? Format::Records : Format::Table;
    c.limits.memory_bytes = memory_mib << 20;
    c.limits.deterministic = !nondeterministic;
    c.permutation_pruning = !no_pruning;
    c.trust_exact = !no_trust;
    return c;
}

int run(const RunConfig &config, std::istream &in, std::ostream &out, std::ostream &err)
{
    try {
        if (config.output == "-")
            return dispatch(config, in, out);
        std::ofstream file(config.output);
        if (!file)
            throw InputError("cannot write '" + config.output + "'");
        return dispatch(config, in, file);
    } catch (const ParseError &e) {
        err << "error: " << (config.input == "-" ? "<stdin>" : config.input) << ": " << e.what() << '\n';
        return kUsage;
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OverflowError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << '\n';
        return kTruncated;
    } catch (const PreconditionError &e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    }
}

int main_entry(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err)
{
    auto parsed = parse_args(argc, argv, out, err);
    if (auto *code = std::get_if<int>(&parsed))
        return *code;
    return run(std::get<RunConfig>(parsed), in, out, err);
}

} // namespace kcross::cli
