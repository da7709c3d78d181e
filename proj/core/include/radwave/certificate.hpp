#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace radwave {

using Coords = std::vector<std::pair<std::string, double>>;

struct Violation {
    std::string check;
    /// Coordinates of the failing sample, e.g. {"r", 12.0}, {"t", 3.0}.
    Coords at;
    double margin = 0.0;
};

/// Outcome of a sampled verification sweep. `worst_margin` is the minimum of
/// LHS - RHS over all samples; the sweep is certified when it is >= -tolerance.
struct Certificate {
    std::string inequality_id;
    std::string region;
    std::size_t samples = 0;
    double worst_margin = 0.0;
    double tolerance = 1e-10;
    std::vector<Violation> violations;
    std::size_t violation_count = 0;
    std::map<std::string, double> constants;
    std::vector<std::string> notes;

    static constexpr std::size_t kMaxStoredViolations = 256;

    explicit Certificate(std::string id = {}, std::string region_desc = {}, double tol = 1e-10);

    bool certified() const { return violation_count == 0 && worst_margin >= -tolerance; }

    /// Records one margin sample. Negative margins beyond the tolerance are
    /// stored as violations (up to kMaxStoredViolations, all counted).
    /// `at` is either a Coords value or a callable returning one; a callable is
    /// only invoked when the sample is stored as a violation.
    template <typename At = Coords>
    void record(double margin, std::string_view check, At&& at = {}) {
        ++samples;
        if (margin != margin) margin = -std::numeric_limits<double>::infinity();
        if (margin < worst_margin) worst_margin = margin;
        if (margin < -tolerance) add_violation(margin, check, std::forward<At>(at));
    }

    /// Records a condition that must hold strictly (value > 0); a value <= 0
    /// is always a violation regardless of tolerance.
    template <typename At = Coords>
    void record_strict(double value, std::string_view check, At&& at = {}) {
        ++samples;
        if (value != value) value = -std::numeric_limits<double>::infinity();
        if (value < worst_margin) worst_margin = value;
        if (!(value > 0.0)) add_violation(value, check, std::forward<At>(at));
    }

    /// Associative combination: min of margins, union of violations.
    void merge(const Certificate& other);

    std::string to_json() const;
    std::string violations_csv() const;

private:
    template <typename At>
    void add_violation(double margin, std::string_view check, At&& at) {
        ++violation_count;
        if (violations.size() >= kMaxStoredViolations) return;
        if constexpr (std::is_invocable_v<At>) {
            violations.push_back({std::string(check), at(), margin});
        } else {
            violations.push_back({std::string(check), Coords(at), margin});
        }
    }
};

/// Merges a list of partial certificates (order independent up to the
/// stored violation sample).
Certificate merge_all(const std::vector<Certificate>& parts);

}  // namespace radwave
