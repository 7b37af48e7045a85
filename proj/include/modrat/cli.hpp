#pragma once

#include "modrat/report_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modrat::cli {

enum class Command { Classify, Chain, Enumerate, Fine, Predecessors, Stability, Condition, Verify };

enum ExitCode : int { Ok = 0, Failure = 1, Invalid = 2 };

struct RunConfig {
    Command command = Command::Classify;
    std::optional<Integer> genus;
    std::optional<std::pair<Integer, Integer>> pair;
    std::optional<Integer> n_max;
    std::optional<std::string> input_path;  // "-" reads the input stream
    OutputFormat output_format = OutputFormat::Text;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;

    std::optional<std::size_t> ambient;   // stability
    std::string chain_mode = "nice";      // chain: nice | reduce | dual
    std::string via = "both";             // predecessors: reduce | dual | both
    bool parallel = false;                // enumerate
    std::optional<Integer> grid_bound;    // condition sampling
};

// Invalid command lines; run() maps these to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws UsageError. `--help` is reported through the returned flag.
RunConfig parse_args(const std::vector<std::string>& args, bool& help_requested, std::string& help_text);

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// Parse and run; what main() calls.
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace modrat::cli
