#ifndef SPECRED_VERIFY_HPP
#define SPECRED_VERIFY_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace specred {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// Named verification suites behind `verify --suite ...`:
//   examples — the two worked coincidence constructions with their decimals
//   lemmas   — coalescence identity, radius monotonicity, counting bounds,
//              and the factored characteristic polynomial on a grid
//   oracle   — fast-path counts against brute force on a parameter grid
std::vector<CheckResult> run_verify_suite(const std::string& suite);

// Prints one line per check; returns true iff all passed.
bool report_checks(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace specred

#endif
