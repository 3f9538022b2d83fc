/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ZSSCHUR_GUARD_ZSSCHUR_CLI_HH
#define ZSSCHUR_GUARD_ZSSCHUR_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace zsschur
{
    namespace exit_code
    {
        constexpr int success = 0;
        constexpr int failure = 1;   ///< witness found or a property failed
        constexpr int invalid = 2;   ///< bad flags, bad parameters, unreadable file
        constexpr int budget = 3;    ///< node or time budget exhausted
    }

    /// Entry point for the `zsschur` tool. args excludes the program name.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
