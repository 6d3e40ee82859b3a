#pragma once
#include <string>

namespace cyclact {

// Golden-example suite; returns the number of failures and appends one
// line per check to `report`.
int selftest(std::string &report);

} // namespace cyclact
