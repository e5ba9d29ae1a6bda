#include "doctest.h"

#include "stsurf/canonical.hpp"
#include "stsurf/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace stsurf;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
}

// lexicographic minimum over all n! relabelings, the brute-force oracle for
// canonical_form
std::pair<Permutation, Permutation> brute_lexmin(const Permutation& h, const Permutation& v) {
    const int n = h.degree();
    std::vector<int> L(n);
    std::iota(L.begin(), L.end(), 0);
    std::vector<int> best;
    std::vector<int> best_L;
    do {
        std::vector<int> str(2 * n);
        for (int i = 0; i < n; ++i) {
            str[L[i]] = L[h(i)];
            str[n + L[i]] = L[v(i)];
        }
        if (best.empty() || str < best) {
            best = str;
            best_L = L;
        }
    } while (std::next_permutation(L.begin(), L.end()));
    std::vector<int> hh(best.begin(), best.begin() + n), vv(best.begin() + n, best.end());
    return {Permutation(hh), Permutation(vv)};
}

} // namespace

TEST_CASE("compose with identity and inverse laws") {
    Permutation c3 = parse_cycles("(1,2,3)");
    CHECK(compose(c3, Permutation::identity(3)) == c3);
    CHECK(compose(Permutation::identity(3), c3) == c3);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Permutation p = random_perm(8, rng);
        CHECK(compose(p, inverse(p)).is_identity());
        CHECK(compose(inverse(p), p).is_identity());
    }
}

TEST_CASE("group axioms on random samples") {
    std::mt19937 rng(11);
    for (int n : {2, 5, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            Permutation p = random_perm(n, rng), q = random_perm(n, rng), r = random_perm(n, rng);
            CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
        }
    }
}

TEST_CASE("commutator of the three-square surface") {
    Permutation h = parse_cycles("(1,2,3)");
    Permutation v = parse_cycles("(1,3)(2)");
    Permutation c = commutator(h, v);
    CHECK(c == parse_cycles("(1,3,2)"));
    CHECK(c.cycle_type() == std::vector<int>{3});
}

TEST_CASE("commutator support never exceeds the degree") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Permutation h = random_perm(9, rng), v = random_perm(9, rng);
        auto t = commutator(h, v).cycle_type();
        CHECK(std::accumulate(t.begin(), t.end(), 0) == 9);
    }
}

TEST_CASE("cycle type basics") {
    CHECK(Permutation::identity(5).cycle_type() == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(Permutation::full_cycle(6).is_single_cycle());
    CHECK_FALSE(parse_cycles("(1,3)(2)").is_single_cycle());
}

TEST_CASE("cycle type is a conjugation invariant") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        Permutation p = random_perm(10, rng), s = random_perm(10, rng);
        CHECK(conjugate(p, s).cycle_type() == p.cycle_type());
    }
}

TEST_CASE("cycle notation parse and print") {
    Permutation p = parse_cycles("(1,3)(2)");
    CHECK(p.degree() == 3);
    CHECK(format_cycles(p) == "(1,3)(2)");
    // fixed points elided: degree must be explicit
    Permutation q = parse_cycles("(1,3)", 3);
    CHECK(p == q);
    CHECK_THROWS_AS(parse_cycles("(1,3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1,1)", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)"), std::invalid_argument);
    CHECK(format_cycles(Permutation::identity(2)) == "(1)(2)");
}

TEST_CASE("degree mismatch is flagged") {
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(commutator(Permutation::identity(3), Permutation::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("canonical form matches the brute-force lexicographic minimum") {
    std::mt19937 rng(31);
    // the two labelings of the four-square surface below are conjugate
    Permutation h = Permutation::full_cycle(4);
    Permutation v = parse_cycles("(1,3,2,4)").inverse();
    for (int trial = 0; trial < 30; ++trial) {
        Permutation s = random_perm(4, rng);
        auto [ch, cv] = canonical_form(conjugate(h, s), conjugate(v, s));
        auto [bh, bv] = brute_lexmin(h, v);
        CHECK(ch == bh);
        CHECK(cv == bv);
    }
    for (int n : {3, 5, 6}) {
        for (int trial = 0; trial < 10; ++trial) {
            Permutation a = random_perm(n, rng), b = random_perm(n, rng);
            if (!is_transitive_pair(a, b)) continue;
            auto got = canonical_form(a, b);
            auto want = brute_lexmin(a, b);
            CHECK(got == want);
        }
    }
}

TEST_CASE("canonical form is conjugation invariant and idempotent") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 9;
        Permutation h = random_perm(n, rng), v = random_perm(n, rng);
        if (!is_transitive_pair(h, v)) continue;
        Permutation s = random_perm(n, rng);
        auto base = canonical_form(h, v);
        CHECK(canonical_form(conjugate(h, s), conjugate(v, s)) == base);
        CHECK(canonical_form(base.first, base.second) == base);
    }
    // the torus is its own canonical form
    auto t = canonical_form(Permutation::identity(1), Permutation::identity(1));
    CHECK(t.first == Permutation::identity(1));
    // non-transitive pairs are flagged
    CHECK_THROWS_AS(canonical_form(Permutation::identity(2), Permutation::identity(2)),
                    std::invalid_argument);
}

TEST_CASE("bfs canonical form is a conjugacy invariant too") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 12;
        Permutation h = random_perm(n, rng), v = random_perm(n, rng);
        if (!is_transitive_pair(h, v)) continue;
        Permutation s = random_perm(n, rng);
        CHECK(bfs_canonical_form(conjugate(h, s), conjugate(v, s)) == bfs_canonical_form(h, v));
    }
}
