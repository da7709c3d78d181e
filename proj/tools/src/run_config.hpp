#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace radwave::cli {

/// Flat key=value run configuration. Getters record the resolved value
/// (including defaults) so the manifest lists every parameter a run used.
class RunConfig {
public:
    static RunConfig parse(const std::string& text);
    static RunConfig load(const std::filesystem::path& path);

    void set(const std::string& key, const std::string& value);
    /// Parses "key=value" and sets it.
    void set_assignment(const std::string& assignment);
    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string str(const std::string& key, const std::string& fallback);
    double num(const std::string& key, double fallback);
    int integer(const std::string& key, int fallback);
    std::vector<double> list(const std::string& key, const std::string& fallback);

    /// Throws ConfigError naming any key that no getter asked for.
    void reject_unused() const;

    /// "# radwave run manifest" header, version, command, then all keys sorted.
    std::string manifest(const std::string& command) const;

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
    std::set<std::string> used_;
};

/// Shortest decimal form that round-trips to the same double.
std::string format_number(double x);

/// Writes `content` to `path` via a temporary file and rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace radwave::cli
