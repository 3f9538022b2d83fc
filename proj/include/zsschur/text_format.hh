/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ZSSCHUR_GUARD_ZSSCHUR_TEXT_FORMAT_HH
#define ZSSCHUR_GUARD_ZSSCHUR_TEXT_FORMAT_HH 1

#include <zsschur/core.hh>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace zsschur
{
    class ParseError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A colouring as stored on disk: the header carries the k it was made
    /// for alongside n and r.
    struct ColoringFile
    {
        int k;
        Coloring coloring;
    };

    /// Format:
    ///
    ///     # comment lines start with '#'
    ///     n k r
    ///     c_1 c_2 ... c_n
    ///
    /// Throws ParseError on anything malformed.
    auto read_coloring(std::istream &) -> ColoringFile;
    auto read_coloring_file(const std::string & path) -> ColoringFile;

    auto write_coloring(std::ostream &, const Coloring &, int k) -> void;
    auto write_coloring_file(const std::string & path, const Coloring &, int k) -> void;

    /// `WITNESS target= T parts= p1 ... p(k-1)`
    auto format_witness(const Witness &) -> std::string;
    auto parse_witness(const std::string &) -> Witness;
}

#endif
