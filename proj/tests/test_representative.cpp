#include "doctest.h"

#include "stsurf/representative.hpp"

#include <stdexcept>

using namespace stsurf;

TEST_CASE("row validation") {
    CHECK_NOTHROW(Representative::from_rows({0, 1, 2, 3, 4}, {4, 3, 1, 2, 0}));
    // top must be sorted
    CHECK_THROWS_AS(Representative::from_rows({0, 2, 1}, {2, 1, 0}), std::invalid_argument);
    // bottom must end with 0
    CHECK_THROWS_AS(Representative::from_rows({0, 1, 2}, {0, 2, 1}), std::invalid_argument);
    // symbol sets must match
    CHECK_THROWS_AS(Representative::from_rows({0, 1, 2}, {2, 2, 0}), std::invalid_argument);
}

TEST_CASE("text round trip") {
    Representative r = Representative::from_rows({0, 1, 2, 3, 4, 5}, {2, 5, 4, 1, 3, 0});
    CHECK(r.to_text() == "0 1 2 3 4 5\n2 5 4 1 3 0\n");
    CHECK(Representative::parse(r.to_text()) == r);
}

TEST_CASE("dezeroed map and rebuild") {
    Representative r = Representative::from_rows({0, 1, 2, 3, 4}, {4, 3, 1, 2, 0});
    auto m = r.dezeroed_map();
    CHECK(m == std::vector<int>{0, 4, 3, 1, 2});
    CHECK(Representative::from_map(m) == r);
}

TEST_CASE("normal form shape") {
    CHECK(Representative::from_rows({0, 1, 2, 3, 4, 5}, {2, 5, 4, 1, 3, 0}).is_normal_form());
    CHECK_FALSE(Representative::from_rows({0, 1, 2, 3, 4}, {4, 3, 1, 2, 0}).is_normal_form());
    CHECK(Representative::torus().is_normal_form());
}

TEST_CASE("splitting a side inserts a fresh symbol in both rows") {
    // the paper's example: splitting side 1 of the three-square surface
    // yields the four-square one
    Representative r = Representative::from_rows({0, 1, 2, 3}, {3, 2, 1, 0});
    Representative s = r.split_symbol(1);
    CHECK(s == Representative::from_rows({0, 1, 2, 3, 4}, {4, 3, 1, 2, 0}));
    CHECK_THROWS_AS(r.split_symbol(9), std::invalid_argument);
}

TEST_CASE("canonical rotation is rotation invariant") {
    Representative r = Representative::from_rows({0, 1, 2, 3, 4, 5}, {2, 5, 4, 1, 3, 0});
    Representative c = r.canonical_rotation();
    CHECK(c.canonical_rotation() == c);
    CHECK(c.squares() == r.squares());
}
