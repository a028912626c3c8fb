#ifndef FWCODES_VERIFY_HPP
#define FWCODES_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fwcodes/catalog.hpp"

namespace fwc::verify {

enum class Status { Pass, Fail, Observation };

struct CheckResult {
    std::string id;      // e.g. "C04.tables/T7 k=3 m=5"
    std::string group;   // examples, tables, oracles, two-to-one, quadratic-law,
                         // duals, factorization, prop51, containment, conjectures
    Status status = Status::Pass;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    walsh::Caps caps;
    int jobs = 0;
    std::string only;  // restrict to one group ("" = everything)
};

// runs the whole verification suite; streams one line per check to `progress`
// when given
std::vector<CheckResult> run_suite(const Options& opt, std::ostream* progress);

bool any_failed(const std::vector<CheckResult>& rs);

// per-criterion summary (12 rows), aggregated from the check results
struct CriterionSummary {
    std::string id;
    std::string title;
    int checks = 0;
    int failed = 0;
    bool observation_only = false;
    double seconds = 0.0;
};
std::vector<CriterionSummary> summarize(const std::vector<CheckResult>& rs);

}  // namespace fwc::verify

#endif
