#pragma once

#include <string>
#include <vector>

namespace oddarc {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    std::vector<Check> checks;

    bool pass() const;
    const Check* first_failure() const;  // nullptr when everything passed
    std::string str() const;             // one "PASS name: detail" / "FAIL name: detail" line per check
};

// catalan, relations, mod2, centers, iso, cocycle (the order used by "all").
const std::vector<std::string>& suite_names();
int suite_max_n(const std::string& suite);

// Throws std::invalid_argument on an unknown suite or an n the suite does not support.
SuiteReport run_suite(const std::string& suite, int n);

}  // namespace oddarc
