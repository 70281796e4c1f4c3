#pragma once

#include <string>
#include <vector>

namespace odun {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    double seconds = 0;
    double budget_seconds = 0;
};

/// Criterion ids, 1..10.
std::vector<int> criterion_ids();
std::string criterion_title(int id);

/// Runs one acceptance criterion. Exceeding the time budget is a failure.
CriterionResult run_criterion(int id);

/// "criterion 3 PASS  plethysm matches Littlewood, Chen and p_2[h_n] (171 checks)"
/// followed by up to max_failures indented failure lines.
std::string format_result(const CriterionResult& r, bool with_timing = false, std::size_t max_failures = 8);

}  // namespace odun
