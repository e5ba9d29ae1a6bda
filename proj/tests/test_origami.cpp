#include "doctest.h"

#include "stsurf/canonical.hpp"
#include "stsurf/classify.hpp"
#include "stsurf/origami.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace stsurf;

namespace {

Representative rep5() {  // one horizontal and one vertical cylinder, H(2)
    return Representative::from_rows({0, 1, 2, 3, 4}, {4, 3, 1, 2, 0});
}
Representative rep4() {  // two vertical cylinders, H(2)
    return Representative::from_rows({0, 1, 2, 3}, {3, 2, 1, 0});
}
Representative rep_odd4() {  // H^odd(4), five squares
    return Representative::from_rows({0, 1, 2, 3, 4, 5}, {2, 5, 4, 1, 3, 0});
}

} // namespace

TEST_CASE("from_representative recovers the paper's vertical monodromy") {
    Origami a = from_representative(rep5());
    CHECK(a.n() == 4);
    CHECK(a.h == Permutation::full_cycle(4));
    // de-zeroed map is the cycle (1,4,2,3); v is its inverse
    CHECK(a.v == parse_cycles("(1,4,2,3)").inverse());
    CHECK(a.v.is_single_cycle());

    Origami b = from_representative(rep4());
    CHECK(b.v == parse_cycles("(1,3)(2)").inverse());

    Origami t = from_representative(Representative::torus());
    CHECK(t.n() == 1);
    CHECK(t.h.is_identity());
    CHECK(t.v.is_identity());
}

TEST_CASE("stratum from the commutator") {
    Origami o(parse_cycles("(1,2,3)"), parse_cycles("(1,3)(2)"));
    StratumSpec s = stratum_of(o);
    CHECK(s.zero_orders == std::vector<int>{2});
    CHECK(s.genus() == 2);
    CHECK(s.marked_points == 0);

    StratumSpec s9 = stratum_of(from_representative(rep_odd4()));
    CHECK(s9.zero_orders == std::vector<int>{4});
    CHECK(s9.marked_points == 0);

    StratumSpec st = stratum_of(from_representative(Representative::torus()));
    CHECK(st.zero_orders.empty());
    CHECK(st.marked_points == 1);
    CHECK(st.genus() == 1);
}

TEST_CASE("cylinder decompositions of the figure-one surfaces") {
    Origami left = from_representative(rep4());
    auto lh = cylinder_decomposition(left, Direction::horizontal);
    auto lv = cylinder_decomposition(left, Direction::vertical);
    CHECK(lh.cylinders.size() == 1);
    CHECK(lv.cylinders.size() == 2);
    CHECK_FALSE(is_one_one(left));

    Origami right = from_representative(rep5());
    CHECK(is_one_one(right));

    Origami torus = from_representative(Representative::torus());
    auto th = cylinder_decomposition(torus, Direction::horizontal);
    CHECK(th.cylinders.size() == 1);
    CHECK(th.cylinders[0].circumference == 1);
    CHECK(th.cylinders[0].height == 1);
    CHECK(is_one_one(torus));
}

TEST_CASE("cylinder areas add up to the square count") {
    for (const Representative& r : {rep4(), rep5(), rep_odd4()}) {
        Origami o = from_representative(r);
        for (auto d : {Direction::horizontal, Direction::vertical}) {
            auto dec = cylinder_decomposition(o, d);
            int area = 0;
            for (const auto& c : dec.cylinders) area += c.circumference * c.height;
            CHECK(area == o.n());
        }
    }
}

TEST_CASE("a wide flat torus merges rows into one tall cylinder") {
    // two squares side by side, v the identity
    Origami o(Permutation::full_cycle(2), Permutation::identity(2));
    auto h = cylinder_decomposition(o, Direction::horizontal);
    REQUIRE(h.cylinders.size() == 1);
    CHECK(h.cylinders[0].circumference == 2);
    CHECK(h.cylinders[0].height == 1);
    auto v = cylinder_decomposition(o, Direction::vertical);
    REQUIRE(v.cylinders.size() == 1);
    CHECK(v.cylinders[0].circumference == 1);
    CHECK(v.cylinders[0].height == 2);
}

TEST_CASE("ribbon boundaries") {
    // five-square H(4) surface: a single 20-sided boundary
    CHECK(ribbon_boundaries(from_representative(rep_odd4())) == std::vector<int>{20});
    // torus: one boundary with 4 sides, order 0
    CHECK(ribbon_boundaries(from_representative(Representative::torus())) == std::vector<int>{4});
    // H^odd(6,2): boundaries {28, 12} give orders {6, 2}
    Representative r13 =
        Representative::from_rows({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {2, 5, 4, 6, 3, 8, 10, 7, 1, 9, 0});
    CHECK(ribbon_boundaries(from_representative(r13)) == std::vector<int>{28, 12});
}

TEST_CASE("ribbon boundaries match the commutator stratum") {
    for (const Representative& r : {rep4(), rep5(), rep_odd4()}) {
        Origami o = from_representative(r);
        StratumSpec s = stratum_of(o);
        std::vector<int> want;
        for (int k : s.zero_orders) want.push_back(4 * (k + 1));
        for (int i = 0; i < s.marked_points; ++i) want.push_back(4);
        std::sort(want.begin(), want.end(), std::greater<int>());
        CHECK(ribbon_boundaries(o) == want);
    }
}

TEST_CASE("hyperellipticity") {
    // every genus-2 origami is hyperelliptic
    CHECK(is_hyperelliptic(from_representative(rep4())));
    CHECK(is_hyperelliptic(from_representative(rep5())));
    // the five-square H(4) surface lies in the odd component
    CHECK_FALSE(is_hyperelliptic(from_representative(rep_odd4())));
}

TEST_CASE("classification of the small surfaces") {
    Classification c5 = classify(from_representative(rep5()));
    CHECK(c5.stratum.zero_orders == std::vector<int>{2});
    CHECK(c5.component == ComponentLabel::hyperelliptic);

    Classification c9 = classify(rep_odd4());
    CHECK(c9.stratum.zero_orders == std::vector<int>{4});
    CHECK(c9.component == ComponentLabel::odd);
}

TEST_CASE("classification is invariant under simultaneous conjugation") {
    std::mt19937 rng(41);
    Origami o = from_representative(rep_odd4());
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> im(o.n());
        std::iota(im.begin(), im.end(), 0);
        std::shuffle(im.begin(), im.end(), rng);
        Permutation s(im);
        Origami oc(conjugate(o.h, s), conjugate(o.v, s));
        Classification a = classify(o), b = classify(oc);
        CHECK(a.stratum == b.stratum);
        CHECK(a.component == b.component);
    }
}

TEST_CASE("to_representative round trip") {
    for (const Representative& r : {rep4(), rep5(), rep_odd4()}) {
        CHECK(to_representative(from_representative(r)) == r.canonical_rotation());
    }
    // h with two cycles has no one-cylinder representative
    Origami o(Permutation::identity(2), Permutation::full_cycle(2));
    CHECK_THROWS_AS(to_representative(o), std::invalid_argument);
}
