#pragma once

#include <string>
#include <vector>

#include "diraccmp/solver_common.hpp"

namespace diraccmp {

/// One measured quantity of a reproduction record. INFO rows document a
/// known discrepancy between a printed reference value and the solver
/// (recorded, not asserted).
struct CheckResult {
    enum class Status { pass, fail, info };
    std::string name;
    double expected = 0.0;
    double measured = 0.0;
    double tolerance = 0.0;
    Status status = Status::fail;
    std::string note;
};

struct RecordResult {
    std::string id;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Registry ids, in canonical order.
std::vector<std::string> registry_ids();

/// Runs one record end to end.
RecordResult run_record(const std::string& id, const SolverConfig& config = {});

}  // namespace diraccmp
