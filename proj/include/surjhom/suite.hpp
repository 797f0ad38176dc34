#pragma once

#include <surjhom/io.hpp>

#include <string>
#include <vector>

namespace surjhom {

struct SuiteItem {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

/// Runs the bundled self-check suite (items in parallel), ordered by name.
/// An item over its time budget fails.
auto run_suite() -> std::vector<SuiteItem>;

auto to_json(const std::vector<SuiteItem> & items) -> json;

} // namespace surjhom
