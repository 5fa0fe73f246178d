#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "theaterperm/errors.hpp"
#include "theaterperm/permutation.hpp"

using namespace theaterperm;

namespace {

Permutation perm(std::vector<int> w) { return Permutation::from_word(std::move(w)); }

template <typename Fn>
void for_each_perm(int length, Fn&& fn) {
    std::vector<int> word(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) word[static_cast<size_t>(i)] = i + 1;
    do {
        fn(Permutation::from_word(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace

TEST_CASE("parsing the three accepted shapes") {
    CHECK(parse_permutation("359724681").word() ==
          std::vector<int>{3, 5, 9, 7, 2, 4, 6, 8, 1});
    CHECK(parse_permutation("1").word() == std::vector<int>{1});
    CHECK(parse_permutation("3,1,4,2").word() == std::vector<int>{3, 1, 4, 2});
    CHECK(parse_permutation("3 1 4 2") == parse_permutation("3,1,4,2"));
    CHECK(parse_permutation("  2, 1 ") == perm({2, 1}));
    CHECK(parse_permutation("10,2,3,4,5,6,7,8,9,1").size() == 10);
}

TEST_CASE("parse errors carry the offending position") {
    CHECK_THROWS_AS(parse_permutation(""), ParseError);
    CHECK_THROWS_AS(parse_permutation("   "), ParseError);

    try {
        parse_permutation("3,1,x,2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
    try {
        parse_permutation("1,2,2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);  // second 2 is the duplicate
    }
    try {
        parse_permutation("1,5,3");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);  // 5 exceeds L=3
    }
    // A separator-free digit string longer than 9 cannot be compact.
    CHECK_THROWS_AS(parse_permutation("1234567891"), ParseError);
    CHECK_THROWS_AS(parse_permutation("12a"), ParseError);
    CHECK_THROWS_AS(parse_permutation("0"), ParseError);
}

TEST_CASE("word validation") {
    CHECK_THROWS_AS(Permutation::from_word({}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_word({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_word({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_word({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(perm({1, 2})(3), std::out_of_range);
    CHECK_THROWS_AS(perm({1, 2})(0), std::out_of_range);
}

TEST_CASE("serialization styles") {
    const Permutation p = parse_permutation("359724681");
    CHECK(to_string(p) == "3,5,9,7,2,4,6,8,1");
    CHECK(to_string(p, SerializeStyle::Compact) == "359724681");
    CHECK(to_string(p, SerializeStyle::Auto) == "359724681");

    const Permutation big = parse_permutation("10,2,3,4,5,6,7,8,9,1");
    CHECK(to_string(big, SerializeStyle::Auto) == "10,2,3,4,5,6,7,8,9,1");
    CHECK_THROWS_AS(to_string(big, SerializeStyle::Compact), std::invalid_argument);
}

TEST_CASE("round trip for random words, both formats") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 40);
        std::vector<int> w(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
        std::shuffle(w.begin(), w.end(), rng);
        const Permutation p = perm(w);
        CHECK(parse_permutation(to_string(p)) == p);
        if (n <= 9) CHECK(parse_permutation(to_string(p, SerializeStyle::Compact)) == p);
    }
}

TEST_CASE("inverse") {
    CHECK(invert(perm({2, 3, 1})) == perm({3, 1, 2}));
    CHECK(invert(Permutation::identity(6)) == Permutation::identity(6));
    CHECK(invert(perm({1, 3, 2})) == perm({1, 3, 2}));
}

TEST_CASE("rotate180") {
    CHECK(rotate180(perm({2, 3, 1})) == perm({3, 1, 2}));
    CHECK(rotate180(Permutation::identity(8)) == Permutation::identity(8));
    const Permutation p = parse_permutation("359724681");
    CHECK(rotate180(rotate180(p)) == p);
}

TEST_CASE("complement") {
    CHECK(complement(perm({1, 3, 2})) == perm({3, 1, 2}));
    CHECK(complement(Permutation::identity(5)) == perm({5, 4, 3, 2, 1}));
    const Permutation p = parse_permutation("359724681");
    CHECK(complement(complement(p)) == p);
}

TEST_CASE("involutions and the reverse identity, exhaustive to L=6") {
    for (int n = 1; n <= 6; ++n) {
        for_each_perm(n, [](const Permutation& p) {
            CHECK(rotate180(rotate180(p)) == p);
            CHECK(complement(complement(p)) == p);
            CHECK(invert(invert(p)) == p);
            CHECK(rotate180(p) == complement(reverse(p)));
            for (int i = 1; i <= p.size(); ++i) CHECK(invert(p)(p(i)) == i);
        });
    }
}

TEST_CASE("point diagram coordinates") {
    const Permutation p = perm({3, 1, 2});
    const PointDiagram d = point_diagram(p);
    REQUIRE(d.points.size() == 3);
    for (int i = 1; i <= 3; ++i) {
        CHECK(d.points[static_cast<size_t>(i - 1)].first == i);
        CHECK(d.points[static_cast<size_t>(i - 1)].second == p(i));
    }
}

TEST_CASE("ascii diagrams") {
    CHECK(render_diagram_ascii(perm({1, 2})) == ".*\n*.\n");
    CHECK(render_diagram_ascii(perm({2, 1})) == "*.\n.*\n");
    CHECK(render_diagram_ascii(perm({1})) == "*\n");
    // One marker per column, grid is exactly L x L.
    const Permutation p = parse_permutation("359724681");
    const std::string grid = render_diagram_ascii(p);
    CHECK(std::count(grid.begin(), grid.end(), '*') == 9);
    CHECK(std::count(grid.begin(), grid.end(), '\n') == 9);
}

TEST_CASE("ascii rendering refuses oversized boards, svg does not") {
    std::vector<int> w(120);
    for (int i = 0; i < 120; ++i) w[static_cast<size_t>(i)] = i + 1;
    const Permutation big = perm(w);
    CHECK_THROWS_AS(render_diagram_ascii(big), std::invalid_argument);
    CHECK(render_diagram_svg(big).find("<svg") != std::string::npos);
}

TEST_CASE("svg diagram contains one circle per point") {
    const Permutation p = parse_permutation("359724681");
    const std::string svg = render_diagram_svg(p);
    CHECK(svg.find("<?xml") == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    size_t circles = 0, at = 0;
    while ((at = svg.find("<circle", at)) != std::string::npos) {
        ++circles;
        at += 7;
    }
    CHECK(circles == 9);
}
