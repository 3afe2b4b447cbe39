#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <type_traits>

#include "invdisc/cli.hpp"

namespace invdisc::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw ConfigError("invalid number for '" + std::string(key) + "': " + std::string(v));
    }
    return out;
}

int parse_int(std::string_view key, std::string_view v) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("invalid integer for '" + std::string(key) + "': " + std::string(v));
    }
    return out;
}

struct Field {
    std::string_view key;
    std::function<void(RunConfig&, std::string_view)> set;
    std::function<std::optional<std::string>(const RunConfig&)> get;
};

template <class T>
std::optional<std::string> show(const std::optional<T>& v) {
    if (!v) return std::nullopt;
    if constexpr (std::is_same_v<T, std::string>) {
        return *v;
    } else if constexpr (std::is_same_v<T, double>) {
        return format_real(*v);
    } else {
        return std::to_string(*v);
    }
}

template <class T>
Field field(std::string_view key, std::optional<T> RunConfig::*member) {
    return {key,
            [key, member](RunConfig& c, std::string_view v) {
                if constexpr (std::is_same_v<T, std::string>) {
                    c.*member = std::string(v);
                } else if constexpr (std::is_same_v<T, double>) {
                    c.*member = parse_double(key, v);
                } else {
                    c.*member = parse_int(key, v);
                }
            },
            [member](const RunConfig& c) { return show(c.*member); }};
}

const std::vector<Field>& fields() {
    static const std::vector<Field> table{
        field("example", &RunConfig::example),
        field("h", &RunConfig::h),
        field("steps", &RunConfig::steps),
        field("x0", &RunConfig::x0),
        field("c", &RunConfig::c),
        field("scheme", &RunConfig::scheme),
        field("forcing", &RunConfig::forcing),
        field("rhs-eval", &RunConfig::rhs_eval),
        field("root-policy", &RunConfig::root_policy),
        field("seed", &RunConfig::seed),
        field("out", &RunConfig::out),
        field("invariant", &RunConfig::invariant),
        field("function", &RunConfig::function),
        field("levels", &RunConfig::levels),
        field("ratio", &RunConfig::ratio),
        field("lattice", &RunConfig::lattice),
    };
    return table;
}

template <class T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
    if (src) dst = src;
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys = [] {
        std::vector<std::string_view> k;
        for (const auto& f : fields()) k.push_back(f.key);
        return k;
    }();
    return keys;
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const auto it = std::find_if(fields().begin(), fields().end(), [&](const Field& f) { return f.key == key; });
        if (it == fields().end()) {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
        if (!seen.insert(std::string(key)).second) {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'");
        }
        if (value.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty value for '" + std::string(key) + "'");
        }
        it->set(cfg, value);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

RunConfig merge(RunConfig base, const RunConfig& over) {
    take(base.example, over.example);
    take(base.h, over.h);
    take(base.steps, over.steps);
    take(base.x0, over.x0);
    take(base.c, over.c);
    take(base.scheme, over.scheme);
    take(base.forcing, over.forcing);
    take(base.rhs_eval, over.rhs_eval);
    take(base.root_policy, over.root_policy);
    take(base.seed, over.seed);
    take(base.out, over.out);
    take(base.invariant, over.invariant);
    take(base.function, over.function);
    take(base.levels, over.levels);
    take(base.ratio, over.ratio);
    take(base.lattice, over.lattice);
    return base;
}

std::string to_config_text(const RunConfig& cfg) {
    std::string text;
    for (const auto& f : fields()) {
        if (auto v = f.get(cfg)) text += std::string(f.key) + " = " + *v + "\n";
    }
    return text;
}

}  // namespace invdisc::cli
