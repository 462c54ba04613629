#ifndef INFSIMP_REPORT_HPP
#define INFSIMP_REPORT_HPP

#include "infsimp/linalg.hpp"

#include <string>
#include <vector>

namespace infsimp {

/// One failed identity: where it failed, which identity, and the nonzero
/// difference (left side minus right side) on a basis element.
struct Violation {
    std::string location;
    std::string relation;
    LinComb<std::string> discrepancy;
};

struct Report {
    std::vector<Violation> violations;
    long checked = 0;

    bool pass() const { return violations.empty(); }
    void fail(std::string location, std::string relation, LinComb<std::string> discrepancy = {}) {
        violations.push_back({std::move(location), std::move(relation), std::move(discrepancy)});
    }
    void merge(const Report& o) {
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
        checked += o.checked;
    }
};

}  // namespace infsimp

#endif
