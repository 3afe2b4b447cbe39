#pragma once

// Command-line front end: CSV trajectories, flat key = value configuration
// files, and the example / solve / chi / limit subcommands.

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "invdisc/core.hpp"

namespace invdisc::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_io = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every parameter a subcommand may take. Unset fields fall back to the
/// subcommand's defaults.
struct RunConfig {
    std::optional<std::string> example;
    std::optional<double> h;
    std::optional<int> steps;
    std::optional<double> x0;
    std::optional<double> c;
    std::optional<std::string> scheme;
    std::optional<std::string> forcing;
    std::optional<std::string> rhs_eval;
    std::optional<std::string> root_policy;
    std::optional<std::string> seed;
    std::optional<std::string> out;
    std::optional<std::string> invariant;
    std::optional<std::string> function;
    std::optional<int> levels;
    std::optional<double> ratio;
    std::optional<std::string> lattice;
};

/// Recognised configuration keys (flag names without the leading dashes).
const std::vector<std::string_view>& config_keys();

/// Parses `key = value` lines; `#` starts a comment. Throws ConfigError on
/// unknown keys, duplicate keys, or malformed values.
RunConfig parse_config(std::string_view text);
/// Throws IoError when the file cannot be read.
RunConfig load_config(const std::string& path);
/// Fields set in `over` replace those in `base`.
RunConfig merge(RunConfig base, const RunConfig& over);
/// Serialises the set fields back to `key = value` text.
std::string to_config_text(const RunConfig& cfg);

/// 17 significant digits; round-trips every finite double.
std::string format_real(double v);

struct CsvTrajectory {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<Point> points;
};

void write_csv(std::ostream& os, const Trajectory& traj,
               const std::vector<std::pair<std::string, std::string>>& extra = {});
/// Throws ConfigError on malformed content.
CsvTrajectory read_csv(std::istream& is);
/// Throws IoError when the file cannot be opened.
CsvTrajectory read_csv_file(const std::string& path);
void write_csv_file(const std::string& path, const Trajectory& traj,
                    const std::vector<std::pair<std::string, std::string>>& extra = {});

/// Builds the scheme configuration from the run parameters.
SchemeSpec scheme_spec(const RunConfig& cfg);

int cmd_example(const RunConfig& cfg, std::ostream& out);
int cmd_solve(const RunConfig& cfg, std::ostream& out);
int cmd_chi(const std::string& a, const std::string& b, std::ostream& out);
int cmd_limit(const RunConfig& cfg, std::ostream& out);

/// Entry point used by the executable; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace invdisc::cli
