#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "invdisc/cli.hpp"

namespace invdisc::cli {

namespace {

double parse_cell(std::string_view cell, std::size_t line_no) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw ConfigError("csv line " + std::to_string(line_no) + ": bad number '" + std::string(cell) + "'");
    }
    return v;
}

}  // namespace

void write_csv(std::ostream& os, const Trajectory& traj,
               const std::vector<std::pair<std::string, std::string>>& extra) {
    os << "# scheme: " << traj.scheme_id << '\n';
    os << "# h: " << format_real(traj.h_nominal) << '\n';
    os << "# stop: " << to_string(traj.stop) << '\n';
    for (const auto& [k, v] : extra) os << "# " << k << ": " << v << '\n';
    os << "x,y\n";
    for (const auto& p : traj.points) os << format_real(p.x) << ',' << format_real(p.y) << '\n';
}

CsvTrajectory read_csv(std::istream& is) {
    CsvTrajectory out;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (header) throw ConfigError("csv line " + std::to_string(line_no) + ": metadata after header");
            const auto body = line.substr(line.find_first_not_of("# ") == std::string::npos
                                              ? line.size()
                                              : line.find_first_not_of("# "));
            const auto colon = body.find(':');
            if (colon == std::string::npos) {
                out.metadata.emplace_back(body, "");
            } else {
                const auto value_start = body.find_first_not_of(' ', colon + 1);
                out.metadata.emplace_back(body.substr(0, colon),
                                          value_start == std::string::npos ? "" : body.substr(value_start));
            }
            continue;
        }
        if (!header) {
            if (line != "x,y") throw ConfigError("csv line " + std::to_string(line_no) + ": expected header 'x,y'");
            header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ConfigError("csv line " + std::to_string(line_no) + ": expected two columns");
        }
        const std::string_view sv(line);
        out.points.push_back({parse_cell(sv.substr(0, comma), line_no), parse_cell(sv.substr(comma + 1), line_no)});
    }
    if (!header) throw ConfigError("csv has no 'x,y' header");
    return out;
}

CsvTrajectory read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    return read_csv(in);
}

void write_csv_file(const std::string& path, const Trajectory& traj,
                    const std::vector<std::pair<std::string, std::string>>& extra) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write " + path);
    write_csv(os, traj, extra);
    if (!os) throw IoError("write failed for " + path);
}

}  // namespace invdisc::cli
