#pragma once

#include <kcross/core.hpp>
#include <kcross/search.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kcross::cli {

enum ExitCode : int {
    kOk = 0,
    kFailed = 1,    // verification failed, or the requested target was refuted
    kUsage = 2,     // bad arguments or malformed input
    kTruncated = 3, // a resource limit stopped the computation
};

enum class Format { Table, Records };

struct RunConfig {
    std::string subcommand; // construct | verify | search | bound | poset | compress
    Format format = Format::Table;

    // Thresholds: either k with w, or an explicit ks list.
    std::optional<Coord> k;
    std::optional<std::size_t> w;
    std::vector<Coord> ks;

    std::string input = "-"; // "-" reads standard input
    std::string output = "-";

    // construct
    std::string kind;
    std::vector<std::size_t> tau;
    std::string rank = "2k-1";
    bool fixup = false;

    // search
    std::optional<std::int64_t> target;
    std::vector<Coord> box;
    bool ranked = false;
    SearchLimits limits;
    std::string normal_form = "interval";
    bool permutation_pruning = true;

    // bound
    bool trust_exact = true;

    // poset
    std::size_t cap = 1'000'000;
    bool reduce = false;

    // compress: 1-based coordinate, 0 = every coordinate
    std::size_t coord = 0;
};

/// Parses argv into a RunConfig. On --help or a usage error, writes to `out`
/// or `err` and returns the exit code instead.
std::variant<RunConfig, int> parse_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Executes a parsed configuration. `in` stands in for standard input.
int run(const RunConfig &config, std::istream &in, std::ostream &out, std::ostream &err);

/// parse_args followed by run.
int main_entry(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace kcross::cli
