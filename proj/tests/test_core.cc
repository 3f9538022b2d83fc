#include <doctest.h>

#include <zsschur/core.hh>

#include <algorithm>
#include <random>

using namespace zsschur;

TEST_CASE("residue_add")
{
    CHECK(residue_add(0, 0, 5) == 0);
    CHECK(residue_add(3, 4, 5) == 2);
    CHECK(residue_add(6, 1, 7) == 0);

    for (int r = 2 ; r <= 9 ; ++r)
        for (int a = 0 ; a < r ; ++a)
            for (int b = 0 ; b < r ; ++b)
                CHECK(residue_add(a, b, r) == (a + b) % r);
}

TEST_CASE("reduce handles negatives")
{
    CHECK(reduce(-1, 5) == 4);
    CHECK(reduce(-10, 5) == 0);
    CHECK(reduce(12, 5) == 2);
}

TEST_CASE("ProblemSpec validation")
{
    CHECK_THROWS_AS(ProblemSpec::make(2, 3), ParameterError);
    CHECK_THROWS_AS(ProblemSpec::make(4, 1), ParameterError);
    auto spec = ProblemSpec::make(6, 3);
    CHECK(spec.r_divides_k());
    CHECK(spec.colours() == std::vector<int>{0, 1, 2});
    CHECK(ProblemSpec::make(8, 4, Palette::Binary).colours() == std::vector<int>{0, 1});
    CHECK_FALSE(ProblemSpec::make(5, 3).r_divides_k());
}

TEST_CASE("Extended ordering")
{
    auto inf = Extended::infinity();
    CHECK(Extended{3} < Extended{4});
    CHECK(Extended{1'000'000} < inf);
    CHECK(inf == Extended::infinity());
    CHECK_FALSE(inf < inf);
    CHECK(inf.to_string() == "inf");
    CHECK(Extended{45}.to_string() == "45");
    CHECK_THROWS((void) inf.value());
}

TEST_CASE("Coloring rejects out-of-range residues")
{
    CHECK_THROWS_AS(Coloring(3, {0, 3}), ParameterError);
    CHECK_THROWS_AS(Coloring(3, {-1}), ParameterError);
    CHECK_THROWS_AS(Coloring(1, {}), ParameterError);
    Coloring chi{4, {1, 0, 0, 1}};
    CHECK(chi.n() == 4);
    CHECK(chi(4) == 1);
    CHECK_THROWS((void) chi.at(5));
    CHECK(chi.translated(3).values()[0] == 0);
    CHECK(chi.scaled(3).values()[0] == 3);
    CHECK(chi.restricted(2) == Coloring{4, {1, 0}});
}

TEST_CASE("Witness is a sorted multiset")
{
    Witness a{{2, 1, 1}, 4}, b{{1, 2, 1}, 4};
    CHECK(a == b);
    CHECK(a.parts == std::vector<int>{1, 1, 2});
    CHECK(Witness({1, 1, 1}, 3) < a);
    CHECK(Witness({1, 1, 3}, 5) < Witness({1, 2, 2}, 5));
}

TEST_CASE("validate_witness examples")
{
    auto spec = ProblemSpec::make(4, 2);
    auto ones = Coloring::constant(3, 2, 1);
    CHECK(validate_witness(Witness{{1, 1, 1}, 3}, ones, spec));
    CHECK_FALSE(validate_witness(Witness{{1, 1, 1}, 4}, Coloring::constant(4, 2, 1), spec));

    Coloring chi{2, {1, 0, 0, 1}};
    CHECK_FALSE(validate_witness(Witness{{1, 1, 2}, 4}, chi, spec));
}

TEST_CASE("validate_witness edge cases")
{
    auto spec = ProblemSpec::make(4, 2);
    auto ones = Coloring::constant(3, 2, 1);
    CHECK_FALSE(validate_witness(Witness{{1, 1}, 2}, ones, spec));          // wrong arity
    CHECK_FALSE(validate_witness(Witness{{0, 1, 2}, 3}, ones, spec));       // part below 1
    CHECK_FALSE(validate_witness(Witness{{1, 1, 2}, 4}, ones, spec));       // target past n
    CHECK_FALSE(validate_witness(Witness{{1, 1, 1}, 3}, Coloring::constant(3, 3, 1), spec));  // modulus mismatch
}

TEST_CASE("validate_witness symmetries")
{
    std::mt19937 rng{7};
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int r = std::uniform_int_distribution<int>(2, 6)(rng);
        int k = r * std::uniform_int_distribution<int>(1, 3)(rng);
        if (k < 3)
            k += r;
        auto spec = ProblemSpec::make(k, r);

        std::vector<int> parts(k - 1);
        for (auto & p : parts)
            p = std::uniform_int_distribution<int>(1, 3)(rng);
        int target = 0;
        for (int p : parts)
            target += p;

        std::vector<int> values(target);
        for (auto & v : values)
            v = std::uniform_int_distribution<int>(0, r - 1)(rng);
        Coloring chi{r, values};
        Witness w{parts, target};
        bool base = validate_witness(w, chi, spec);

        auto shuffled = parts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(validate_witness(Witness{shuffled, target}, chi, spec) == base);

        for (int c = 0 ; c < r ; ++c)
            CHECK(validate_witness(w, chi.translated(c), spec) == base);
        for (int u = 1 ; u < r ; ++u)
            if (is_unit(u, r))
                CHECK(validate_witness(w, chi.scaled(u), spec) == base);
    }
}
