#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tds {

/// Record of one CLI run: the command line, content digests of every input,
/// every emitted file, and collected warnings. elapsed_seconds is a
/// diagnostic only; write_run_report omits it so identical runs emit
/// byte-identical reports.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs; // path -> digest
    std::vector<std::string> outputs;
    std::vector<std::string> warnings;
    double elapsed_seconds = 0.0;
};

std::string write_run_report(const RunReport& report);

} // namespace tds
