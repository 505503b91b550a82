#pragma once

// Reproduction checks: computed parameters of the constructed families compared with
// embedded expected values. Each expected value carries a locus such as
// "table2 m=4 d(C_2)" naming where it comes from.

#include "eccir/code.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eccir::verify {

enum class Feasibility { exact, structural, bounds_only };
std::string_view to_string(Feasibility f);

struct Check {
    std::string locus;
    std::string expected;
    std::string actual;
    Feasibility feasibility = Feasibility::exact;
    bool pass = false;
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    double seconds = 0;
    std::string error;  // set when the suite aborted with an exception

    bool passed() const;
};

struct VerifyOptions {
    code::MinDistanceConfig distance;
};

// example1, table1, table2, table3, qr_list, concat_example, mdsir_small, dbt_comparison
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options = {});

}  // namespace eccir::verify
