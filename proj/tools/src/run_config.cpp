#include "run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "radwave/errors.hpp"

namespace radwave::cli {
namespace {

// Keys that describe a run rather than parameterise it.
const std::set<std::string> kMetaKeys = {"version", "command"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const std::string t = trim(text);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw ConfigError("value of '" + key + "' is not a number: '" + text + "'");
    }
    return v;
}

}  // namespace

RunConfig RunConfig::parse(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        cfg.set(key, trim(t.substr(eq + 1)));
    }
    return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return parse(os.str());
}

void RunConfig::set(const std::string& key, const std::string& value) { values_[key] = value; }

void RunConfig::set_assignment(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("expected key=value, got '" + assignment + "'");
    }
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

std::string RunConfig::str(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    auto it = values_.find(key);
    if (it == values_.end()) it = values_.emplace(key, fallback).first;
    return it->second;
}

double RunConfig::num(const std::string& key, double fallback) {
    used_.insert(key);
    auto it = values_.find(key);
    if (it == values_.end()) {
        values_.emplace(key, format_number(fallback));
        return fallback;
    }
    return parse_double(key, it->second);
}

int RunConfig::integer(const std::string& key, int fallback) {
    const double v = num(key, fallback);
    if (v != static_cast<double>(static_cast<int>(v))) {
        throw ConfigError("value of '" + key + "' must be an integer");
    }
    return static_cast<int>(v);
}

std::vector<double> RunConfig::list(const std::string& key, const std::string& fallback) {
    const std::string text = str(key, fallback);
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) continue;
        out.push_back(parse_double(key, item));
    }
    return out;
}

void RunConfig::reject_unused() const {
    for (const auto& [k, v] : values_) {
        if (!used_.count(k) && !kMetaKeys.count(k)) {
            throw ConfigError("unknown configuration key '" + k + "'");
        }
    }
}

std::string RunConfig::manifest(const std::string& command) const {
    std::ostringstream os;
    os << "# radwave run manifest\n";
    os << "version=" << RADWAVE_VERSION << "\n";
    os << "command=" << command << "\n";
    for (const auto& [k, v] : values_) {
        if (kMetaKeys.count(k)) continue;
        os << k << "=" << v << "\n";
    }
    return os.str();
}

std::string format_number(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) return std::to_string(x);
    return std::string(buf, ptr);
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot write " + tmp.string());
        out << content;
        if (!out) throw ConfigError("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace radwave::cli
