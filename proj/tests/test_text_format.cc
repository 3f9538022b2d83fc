#include <doctest.h>

#include <zsschur/constructions.hh>
#include <zsschur/text_format.hh>

#include <sstream>

using namespace zsschur;

namespace
{
    auto parse(const std::string & text) -> ColoringFile
    {
        std::istringstream in{text};
        return read_coloring(in);
    }
}

TEST_CASE("reads the documented format")
{
    auto f = parse("# a comment\n4 4 2\n1 0 0 1\n");
    CHECK(f.k == 4);
    CHECK(f.coloring == Coloring{2, {1, 0, 0, 1}});

    auto no_newline = parse("3 4 2\n1 1 1");
    CHECK(no_newline.coloring == Coloring::constant(3, 2, 1));

    auto empty = parse("0 5 3\n");
    CHECK(empty.coloring.n() == 0);
}

TEST_CASE("rejects malformed input")
{
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("4 4\n1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("4 4 2 9\n1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("four 4 2\n1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("4 4 2\n1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse("4 4 2\n1 0 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse("4 4 2\n1 0 0 1\n1\n"), ParseError);
    CHECK_THROWS_AS(parse("4 2 2\n1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("4 4 1\n0 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse("2 4 2\n1 0x\n"), ParseError);
}

TEST_CASE("write then read is the identity")
{
    for (auto [k, r] : {std::pair{6, 3}, {8, 4}, {10, 5}, {12, 6}}) {
        auto chi = construct_lower_bound(k, r);
        std::ostringstream out;
        write_coloring(out, chi, k);
        auto back = parse(out.str());
        CHECK(back.k == k);
        CHECK(back.coloring == chi);
    }
}

TEST_CASE("witness line")
{
    Witness w{{2, 1, 1}, 4};
    CHECK(format_witness(w) == "WITNESS target= 4 parts= 1 1 2");
    CHECK(parse_witness(format_witness(w)) == w);
    CHECK_THROWS_AS(parse_witness("WITNESS target 4 parts= 1"), ParseError);
    CHECK_THROWS_AS(parse_witness("WITNESS target= 4 parts= 1 x"), ParseError);
}
