// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <cstdio>

#include "vade/selftest.hpp"

int main() {
    bool all = true;
    for (const auto& r : vade::run_selftest()) {
        std::printf("[%s] %d. %s%s%s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.pass ? "" : " -- ", r.pass ? "" : r.detail.c_str(),
                    r.seconds);
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "all criteria passed" : "FAILURES present");
    return all ? 0 : 1;
}
