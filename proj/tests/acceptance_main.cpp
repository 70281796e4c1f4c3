#include <cstdlib>
#include <iostream>
#include <string>

#include "odun/acceptance.hpp"

// Usage: odun_acceptance [criterion ...]; no arguments runs all of them.
int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty()) ids = odun::criterion_ids();
    int failed = 0;
    for (int id : ids) {
        const odun::CriterionResult r = odun::run_criterion(id);
        std::cout << odun::format_result(r, true) << std::flush;
        failed += !r.passed;
    }
    std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
