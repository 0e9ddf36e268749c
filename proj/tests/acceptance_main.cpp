// Acceptance suite: runs every numbered criterion at its pinned
// tolerance and prints one pass/fail line per criterion.
#include <cstdio>

#include "revival/validation.hpp"

int main() {
    const auto results = revival::run_all_criteria();
    int failed = 0;
    for (const auto& r : results) {
        const char* tag = r.advisory ? "INFO" : (r.passed ? "PASS" : "FAIL");
        std::printf("[%s] %2d/%zu %s: %s (%.2fs)\n", tag, r.id, results.size(),
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        if (!r.advisory && !r.passed) ++failed;
    }
    if (failed) {
        std::printf("%d criterion(s) failed\n", failed);
        return 1;
    }
    std::printf("all %zu criteria passed\n", results.size());
    return 0;
}
