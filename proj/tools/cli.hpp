#pragma once

#include <ostream>

namespace homoglab::cli
{
    enum ExitCode
    {
        ok = 0,
        failed = 1,
        invalid_input = 2,
        budget_exhausted = 3
    };

    /// Runs one command; the JSON report goes to out, diagnostics to err.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}
