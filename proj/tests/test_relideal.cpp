#include <doctest.h>

#include <numeric>
#include <random>

#include "nsemi/relideal.hpp"
#include "oracle.hpp"

using namespace nsemi;

namespace {

SgPtr sg(std::vector<i64> gens) { return make_semigroup(std::move(gens)); }

// Compare a library ideal against a naive one pointwise on [lo, hi).
void check_same_window(const RelativeIdeal& got, const oracle::Ideal& want, i64 lo, i64 hi) {
    for (i64 z = lo; z < hi; ++z) {
        INFO("z = ", z);
        CHECK(got.contains(z) == want.member(z));
    }
}

}  // namespace

TEST_CASE("from_elements canonical form") {
    auto H = sg({3, 4, 5});
    auto E = RelativeIdeal::from_elements(H, {0, 1});
    CHECK(E.min() == 0);
    CHECK(E.window_members() == std::vector<i64>{0, 1});  // window [1,1,0]
    CHECK_FALSE(E.contains(2));
    CHECK(E.contains(3));

    CHECK(RelativeIdeal::from_elements(H, {0}) == RelativeIdeal::unit(H));

    auto H2 = sg({2, 3});
    auto M = RelativeIdeal::from_elements(H2, {2, 3});
    CHECK(M == RelativeIdeal::maximal_ideal(H2));
    CHECK(M.min() == 2);
    for (i64 z = 2; z < 10; ++z) CHECK(M.contains(z));
    CHECK_FALSE(M.contains(1));

    CHECK_THROWS_AS(RelativeIdeal::from_elements(H, {}), error);
}

TEST_CASE("add: window sums") {
    auto H = sg({3, 4, 5});
    auto K = RelativeIdeal::from_elements(H, {0, 1});
    auto KK = K.add(K);
    CHECK(KK == RelativeIdeal::from_elements(H, {0, 1, 2}));
    for (i64 z = 0; z < 8; ++z) CHECK(KK.contains(z));  // all of Z>=0

    auto H2 = sg({4, 5, 11});
    auto K2 = RelativeIdeal::from_elements(H2, {0, 1});
    auto K2sq = K2.add(K2);
    CHECK(K2sq == RelativeIdeal::from_elements(H2, {0, 1, 2}));
    CHECK_FALSE(K2sq.contains(3));
    CHECK(K2sq.contains(7));
}

TEST_CASE("add: H is the identity") {
    std::mt19937 rng(31337);
    auto H = sg({5, 7, 9});
    for (int t = 0; t < 30; ++t) {
        std::vector<i64> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(static_cast<i64>(rng() % 40) - 15);
        auto E = RelativeIdeal::from_elements(H, gens);
        CHECK(E.add(RelativeIdeal::unit(H)) == E);
    }
}

TEST_CASE("colon: frozen examples") {
    auto H = sg({3, 4, 5});
    auto one = RelativeIdeal::unit(H);
    auto K = RelativeIdeal::from_elements(H, {0, 1});
    auto M = RelativeIdeal::maximal_ideal(H);
    CHECK(one.colon(K) == M);
    CHECK(K.colon(one) == K);

    auto H2 = sg({2, 3});
    auto one2 = RelativeIdeal::unit(H2);
    auto M2 = RelativeIdeal::maximal_ideal(H2);
    CHECK(one2.colon(M2) == RelativeIdeal::from_elements(H2, {0, 1}));  // all of Z>=0
}

TEST_CASE("pow") {
    auto H = sg({4, 5, 11});
    auto K = RelativeIdeal::from_elements(H, {0, 1});
    CHECK(K.pow(3) == RelativeIdeal::from_elements(H, {0, 1, 2, 3}));
    CHECK(K.pow(1) == K);
    CHECK(K.pow(0) == RelativeIdeal::unit(H));

    auto H2 = sg({2, 3});
    auto M2 = RelativeIdeal::maximal_ideal(H2);
    CHECK(M2.pow(2) == RelativeIdeal::from_elements(H2, {4, 5}));
}

TEST_CASE("equality and containment") {
    auto H = sg({3, 4, 5});
    auto K = RelativeIdeal::from_elements(H, {0, 1});
    CHECK(K.pow(2) == K.pow(3));
    CHECK(RelativeIdeal::unit(H).subset_of(K));

    auto H2 = sg({2, 3});
    auto K2 = RelativeIdeal::from_elements(H2, {0});
    CHECK(K2 == RelativeIdeal::unit(H2));
}

TEST_CASE("shift and isomorphism") {
    auto H = sg({3, 4, 5});
    auto M = RelativeIdeal::maximal_ideal(H);
    CHECK(M.isomorphic_to(M.shift(7)));
    auto K = RelativeIdeal::from_elements(H, {0, 1});
    CHECK_FALSE(K.isomorphic_to(RelativeIdeal::unit(H)));
    auto E = RelativeIdeal::from_elements(H, {-2, 5});
    CHECK(E.shift(5).shift(-5) == E);
}

TEST_CASE("minimal generators") {
    auto H = sg({3, 4, 5});
    auto K = RelativeIdeal::from_elements(H, {0, 1});
    CHECK(K.minimal_generators() == std::vector<i64>{0, 1});
    CHECK(RelativeIdeal::unit(H).minimal_generators() == std::vector<i64>{0});
    auto H2 = sg({2, 3});
    auto Z = RelativeIdeal::from_elements(H2, {0, 1});
    CHECK(Z.minimal_generators() == std::vector<i64>{0, 1});
}

TEST_CASE("colength") {
    auto H = sg({3, 4, 5});
    auto one = RelativeIdeal::unit(H);
    auto K = RelativeIdeal::from_elements(H, {0, 1});
    CHECK(one.colength_in(K.shift(3)) == 2);  // H minus omega = {0, 5}
    CHECK(K.colength_in(K) == 0);
    auto Z = RelativeIdeal::from_elements(H, {0, 1, 2});
    CHECK(Z.colength_in(one) == 2);  // the gaps {1, 2}
    CHECK_THROWS_AS(RelativeIdeal::maximal_ideal(H).colength_in(one), error);
}

TEST_CASE("parent checks") {
    auto A = sg({2, 3});
    auto B = sg({3, 4, 5});
    auto EA = RelativeIdeal::unit(A);
    auto EB = RelativeIdeal::unit(B);
    CHECK_THROWS_AS(EA.add(EB), error);
    CHECK_THROWS_AS((void)(EA == EB), error);
    // structurally equal parents are interchangeable
    auto A2 = sg({2, 3});
    CHECK(RelativeIdeal::unit(A2) == EA);
}

TEST_CASE("algebraic properties on random ideals") {
    std::mt19937 rng(2024);
    auto H = sg({4, 7, 9});
    auto one = RelativeIdeal::unit(H);
    auto draw = [&]() {
        std::vector<i64> gens;
        const int k = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) gens.push_back(static_cast<i64>(rng() % 61) - 20);
        return RelativeIdeal::from_elements(H, gens);
    };
    for (int t = 0; t < 50; ++t) {
        auto E = draw(), F = draw(), G = draw();
        CHECK(E.add(F) == F.add(E));
        CHECK(E.add(F).add(G) == E.add(F.add(G)));
        CHECK(E.add(one) == E);
        // colon of an ideal by itself is shift-invariant
        const i64 s = static_cast<i64>(rng() % 21) - 10;
        CHECK(E.colon(E) == E.shift(s).colon(E.shift(s)));
    }
    // double dual grows the ideal: H - (H - E) contains E, for E inside H
    for (int t = 0; t < 30; ++t) {
        std::vector<i64> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(static_cast<i64>(rng() % 30));
        auto E = RelativeIdeal::from_elements(H, gens).intersect(one);
        CHECK(E.subset_of(one.colon(one.colon(E))));
    }
}

TEST_CASE("kernel ops agree with the naive explicit-set oracle") {
    std::mt19937 rng(555);
    int done = 0;
    for (int trial = 0; trial < 1500 && done < 400; ++trial) {
        std::vector<i64> sgens;
        const int k = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) sgens.push_back(2 + static_cast<i64>(rng() % 18));
        i64 g = 0;
        for (i64 v : sgens) g = std::gcd(g, v);
        if (g != 1) continue;
        auto H = sg(sgens);
        if (H->genus() > 12) continue;
        ++done;
        const i64 c = std::max<i64>(H->conductor(), 1);
        const i64 width = 10 * c + 4;

        auto draw_gens = [&]() {
            std::vector<i64> gens;
            const int n = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < n; ++i) gens.push_back(static_cast<i64>(rng() % 61) - 20);
            return gens;
        };
        const auto ge = draw_gens(), gf = draw_gens();
        const auto E = RelativeIdeal::from_elements(H, ge);
        const auto F = RelativeIdeal::from_elements(H, gf);
        const auto nE = oracle::ideal_from_gens(H->generators(), ge, width);
        const auto nF = oracle::ideal_from_gens(H->generators(), gf, width);

        check_same_window(E, nE, E.min() - 1, E.min() + 4 * c);

        const auto S = E.add(F);
        const auto nS = oracle::sum(nE, nF, width);
        check_same_window(S, nS, S.min() - 1, S.min() + 4 * c);

        const auto C = E.colon(F);
        const auto nC = oracle::colon(nE, nF, 5 * c + 2);
        check_same_window(C, nC, E.min() - F.min() - 1, E.min() - F.min() + 4 * c);

        const i64 n = 2 + static_cast<i64>(rng() % 2);
        const auto P = E.pow(n);
        const auto nP = oracle::power(nE, n, width);
        check_same_window(P, nP, P.min() - 1, P.min() + 4 * c);
    }
    CHECK(done == 400);
}
