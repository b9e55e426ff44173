#include "isolab/acceptance.hpp"

#include <cstdio>

int main()
{
    isolab::SuiteOptions opts;
    opts.on_result = [](const isolab::CriterionResult& r) {
        std::printf("%s criterion %2d: %-26s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    };
    isolab::SuiteReport rep = isolab::run_acceptance(opts);
    return rep.all_pass() ? 0 : 1;
}
