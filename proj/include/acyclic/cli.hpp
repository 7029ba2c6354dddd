#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace acyclic::cli {

enum class Command { Color, Verify, Oracle, Generate, Bench };
enum class Algorithm { Auto, Kdeg, Deg3 };

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitNotDegenerate = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitExceeded = 4;

struct RunConfig {
    Command command = Command::Color;
    std::string input;
    std::string output;
    // verify: edge list the coloring must cover.
    std::string graph;
    Algorithm algorithm = Algorithm::Auto;
    std::optional<int> k;
    std::uint64_t seed = 1;
    bool verify = true;
    bool json = false;
    std::optional<int> max_colors;
    std::optional<int> bound;

    // generate
    std::string family = "random-kdeg";
    int n = 10;
    bool saturated = false;

    // bench
    int count = 20;
    int min_n = 4;
    int max_n = 40;
    int oracle_max_n = 7;
    int jobs = 1;
};

// Runs one command. Diagnostics go to err; artifacts go to the configured
// output path or to out.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace acyclic::cli
