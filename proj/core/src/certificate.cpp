#include "radwave/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <sstream>

namespace radwave {

Certificate::Certificate(std::string id, std::string region_desc, double tol)
    : inequality_id(std::move(id)),
      region(std::move(region_desc)),
      worst_margin(std::numeric_limits<double>::infinity()),
      tolerance(tol) {}

void Certificate::merge(const Certificate& other) {
    samples += other.samples;
    worst_margin = std::min(worst_margin, other.worst_margin);
    violation_count += other.violation_count;
    for (const auto& v : other.violations) {
        if (violations.size() >= kMaxStoredViolations) break;
        violations.push_back(v);
    }
    for (const auto& [k, v] : other.constants) constants.emplace(k, v);
    for (const auto& n : other.notes) {
        if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
    }
    if (inequality_id.empty()) inequality_id = other.inequality_id;
    if (region.empty()) region = other.region;
}

Certificate merge_all(const std::vector<Certificate>& parts) {
    if (parts.empty()) return Certificate{};
    Certificate out(parts.front().inequality_id, parts.front().region, parts.front().tolerance);
    for (const auto& p : parts) out.merge(p);
    return out;
}

namespace {

nlohmann::json number(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

}  // namespace

std::string Certificate::to_json() const {
    nlohmann::ordered_json j;
    j["inequality_id"] = inequality_id;
    j["region"] = region;
    j["status"] = certified() ? "certified" : "violated";
    j["samples"] = samples;
    j["worst_margin"] = number(samples == 0 ? 0.0 : worst_margin);
    j["tolerance"] = tolerance;
    j["violation_count"] = violation_count;
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (const auto& [k, v] : constants) c[k] = number(v);
    j["constants"] = c;
    j["notes"] = notes;
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
        nlohmann::ordered_json e;
        e["check"] = v.check;
        nlohmann::ordered_json at = nlohmann::ordered_json::object();
        for (const auto& [k, x] : v.at) at[k] = number(x);
        e["at"] = at;
        e["margin"] = number(v.margin);
        vs.push_back(e);
    }
    j["violations"] = vs;
    return j.dump(2) + "\n";
}

std::string Certificate::violations_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "check,coordinates,margin\n";
    for (const auto& v : violations) {
        os << v.check << ",";
        for (std::size_t i = 0; i < v.at.size(); ++i) {
            if (i) os << ";";
            os << v.at[i].first << "=" << v.at[i].second;
        }
        os << "," << v.margin << "\n";
    }
    return os.str();
}

}  // namespace radwave
