// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Exit code 0 iff all criteria pass.

#include <iostream>

#include "syzygy/selftest.hpp"

int main() {
    auto results = syzygy::run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "acceptance: all criteria passed\n"
                      : "acceptance: FAILURES present\n");
    return all ? 0 : 1;
}
