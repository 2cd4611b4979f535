// Acceptance suite runner: one pass/fail line per criterion, exit 1 on any
// failure.  Usage: acceptance [small|full]   (default: full)
#include <algorithm>
#include <cstdio>
#include <cstring>
#include <string>

#include "cybra/acceptance.hpp"

int main(int argc, char** argv) {
    cybra::SizeProfile profile = cybra::SizeProfile::Full;
    if (argc > 1 && std::strcmp(argv[1], "small") == 0) profile = cybra::SizeProfile::Small;
    if (argc > 1 && std::strcmp(argv[1], "full") == 0) profile = cybra::SizeProfile::Full;

    auto rows = cybra::run_acceptance(profile);
    bool all_pass = true;
    for (const auto& r : rows) {
        std::printf("%s criterion %2d: %s (%s) [%lld ms]\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.title.c_str(), r.detail.c_str(), static_cast<long long>(r.millis));
        if (!r.pass) all_pass = false;
    }
    std::printf("%s: %zu/%zu criteria passed\n", all_pass ? "OK" : "FAILURES",
                static_cast<size_t>(std::count_if(rows.begin(), rows.end(),
                                                  [](const auto& r) { return r.pass; })),
                rows.size());
    return all_pass ? 0 : 1;
}
