#pragma once

#include <ostream>
#include <string>

// Reproduces every bundled example and runs the property suites. Prints one
// table row per check and returns the number of failed rows.
int run_selftest(const std::string& data_dir, std::ostream& out);
