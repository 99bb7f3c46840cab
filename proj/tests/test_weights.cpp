#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smtlab/parse.hpp"
#include "smtlab/weights.hpp"
#include "testutil.hpp"

#include <algorithm>

using namespace smtlab;

namespace {

const std::vector<std::string> P2 = {"x0", "x1", "x2"};
const std::vector<std::string> P3 = {"x0", "x1", "x2", "x3"};

Ideal conic() { return make_ideal(3, {parse_fixed_poly("x0*x2 - x1^2", P2)}); }

Ideal twisted_cubic() {
    return make_ideal(4, {parse_fixed_poly("x0*x2 - x1^2", P3), parse_fixed_poly("x1*x3 - x2^2", P3),
                          parse_fixed_poly("x0*x3 - x1*x2", P3)});
}

WeightVector W(std::vector<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    return make_weights(c);
}

} // namespace

TEST_CASE("max weight basis catalog") {
    SUBCASE("conic, u=2, c=(0,1,0)") {
        auto rep = max_weight_basis(conic(), 2, W({0, 1, 0}));
        CHECK(rep.value == 4);
        REQUIRE(rep.basis.size() == 5);
        std::vector<Monomial> expect = {Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({0, 2, 0}),
                                        Monomial({0, 1, 1}), Monomial({0, 0, 2})};
        for (const Monomial& m : expect)
            CHECK(std::count(rep.basis.begin(), rep.basis.end(), m) == 1);
    }
    SUBCASE("full quotient on P1") {
        auto rep = max_weight_basis(Ideal::zero(2), 2, W({3, 1}));
        CHECK(rep.value == 12);
        CHECK(rep.basis.size() == 3);
    }
    SUBCASE("degree one has no relations") {
        auto rep = max_weight_basis(conic(), 1, W({5, 7, 11}));
        CHECK(rep.value == 23);
    }
}

TEST_CASE("brute force oracle catalog") {
    CHECK(brute_force_hilbert_weight(conic(), 2, W({0, 1, 0})) == 4);
    CHECK(brute_force_hilbert_weight(Ideal::zero(2), 2, W({3, 1})) == 12);
    CHECK(brute_force_hilbert_weight(conic(), 2, W({1, 1, 1})) == 10);
    CHECK_THROWS_AS(brute_force_hilbert_weight(twisted_cubic(), 4, W({1, 1, 1, 1})), BudgetError);
}

TEST_CASE("greedy equals oracle on random weights") {
    testing::Rng rng(71);
    std::vector<Ideal> ideals = {Ideal::zero(2), Ideal::zero(3), conic()};
    for (const Ideal& I : ideals) {
        for (int u = 1; u <= 2; ++u) {
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<Rational> c;
                for (int i = 0; i < I.nvars; ++i) {
                    Rational x(rng.int_in(0, 12), rng.int_in(1, 4));
                    x.canonicalize();
                    c.push_back(x);
                }
                WeightVector w = make_weights(c);
                CHECK(max_weight_basis(I, u, w).value == brute_force_hilbert_weight(I, u, w));
            }
        }
    }
}

TEST_CASE("scaling and sum rules") {
    testing::Rng rng(73);
    Ideal I = conic();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> c;
        for (int i = 0; i < 3; ++i) c.push_back(Rational(rng.int_in(0, 9)));
        WeightVector w = make_weights(c);
        int u = static_cast<int>(rng.int_in(1, 4));
        auto base = max_weight_basis(I, u, w);
        Rational lambda(rng.int_in(1, 7), rng.int_in(1, 3));
        lambda.canonicalize();
        std::vector<Rational> scaled;
        for (const Rational& x : c) scaled.push_back(x * lambda);
        auto s = max_weight_basis(I, u, make_weights(scaled));
        CHECK(s.value == lambda * base.value);
        CHECK(s.basis == base.basis); // argmax invariance under scaling
    }
    for (int u = 1; u <= 5; ++u) {
        auto rep = max_weight_basis(I, u, W({1, 1, 1}));
        CHECK(rep.value == Rational(Int(u) * hilbert_function(I, u)));
    }
}

TEST_CASE("chow weight of linear varieties") {
    SUBCASE("full projective space") {
        std::vector<std::vector<Rational>> pts = {{Rational(1), Rational(0), Rational(0)},
                                                  {Rational(0), Rational(1), Rational(0)},
                                                  {Rational(0), Rational(0), Rational(1)}};
        CHECK(chow_weight_linear(pts, W({2, 3, 5})) == 10);
    }
    SUBCASE("coordinate line x2=0 in P2") {
        CHECK(chow_weight_linear_coords(3, {0, 1}, W({2, 3, 5})) == 5);
    }
    SUBCASE("single point") {
        std::vector<std::vector<Rational>> pts = {{Rational(1), Rational(0), Rational(0)}};
        CHECK(chow_weight_linear(pts, W({2, 3, 5})) == 2);
    }
    SUBCASE("skew line uses the best nonzero bracket") {
        // span{(1:0:1),(0:1:0)}: brackets [01]=1, [12]=1, [02]=0
        std::vector<std::vector<Rational>> pts = {{Rational(1), Rational(0), Rational(1)},
                                                  {Rational(0), Rational(1), Rational(0)}};
        CHECK(chow_weight_linear(pts, W({2, 3, 5})) == 8); // c1+c2, the [12] bracket
    }
    SUBCASE("degenerate span is rejected") {
        std::vector<std::vector<Rational>> pts = {{Rational(1), Rational(0), Rational(0)},
                                                  {Rational(2), Rational(0), Rational(0)}};
        CHECK_THROWS_AS(chow_weight_linear(pts, W({1, 1, 1})), DomainError);
    }
}

TEST_CASE("chow weight estimator") {
    SUBCASE("P1 is exact at every u") {
        CHECK(chow_weight_estimate(Ideal::zero(2), W({3, 1}), 10) == 4);
        CHECK(chow_weight_estimate(Ideal::zero(2), W({3, 1}), 2) == 4);
    }
    SUBCASE("uniform weights on P2") {
        CHECK(chow_weight_estimate(Ideal::zero(3), W({1, 1, 1}), 4) == 3);
    }
    SUBCASE("coordinate line in P2 approaches the linear chow weight") {
        Ideal line = make_ideal(3, {parse_fixed_poly("x2", P2)});
        Rational target = chow_weight_linear_coords(3, {0, 1}, W({5, 1, 0}));
        CHECK(target == 6);
        Rational prev_gap(-1);
        for (int u : {2, 4, 6, 8, 10}) {
            Rational gap = abs(chow_weight_estimate(line, W({5, 1, 0}), u) - target);
            if (prev_gap >= 0) CHECK(gap <= prev_gap);
            prev_gap = gap;
        }
    }
    SUBCASE("u <= degree is rejected") {
        CHECK_THROWS_AS(chow_weight_estimate(conic(), W({1, 1, 1}), 2), DomainError);
    }
}

TEST_CASE("ef inequality catalog") {
    SUBCASE("P1, J={0,1}, c=(3,1), u=10") {
        auto rep = ef_inequality_check(Ideal::zero(2), W({3, 1}), 10, {0, 1});
        CHECK(rep.holds);
        CHECK(rep.lhs == 2);
        CHECK(rep.rhs == Rational(2) - make_rational(9, 10));
        // equality before the slack term: lhs - rhs = (2n+1) delta max c / u
        CHECK(rep.slack == make_rational(9, 10));
    }
    SUBCASE("conic, J={0,2}, c=(1,1,1), u=5") {
        auto rep = ef_inequality_check(conic(), W({1, 1, 1}), 5, {0, 2});
        CHECK(rep.holds);
        CHECK(rep.lhs == 1);
        CHECK(rep.rhs == Rational(1) - make_rational(6, 5));
    }
    SUBCASE("emptiness precondition enforced") {
        CHECK_THROWS_AS(ef_inequality_check(conic(), W({1, 1, 1}), 5, {0, 1}), DomainError);
    }
}

TEST_CASE("ef inequality across the catalog") {
    testing::Rng rng(79);
    struct Case {
        Ideal I;
        std::vector<int> J;
    };
    std::vector<Case> cases;
    cases.push_back({Ideal::zero(2), {0, 1}});
    cases.push_back({Ideal::zero(3), {0, 1, 2}});
    cases.push_back({conic(), {0, 2}});
    cases.push_back({twisted_cubic(), {0, 3}});
    for (const Case& cs : cases) {
        for (int u = 2; u <= 5; ++u) {
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<Rational> c;
                for (int i = 0; i < cs.I.nvars; ++i) {
                    Rational x(rng.int_in(0, 20), rng.int_in(1, 5));
                    x.canonicalize();
                    c.push_back(x);
                }
                CHECK(ef_inequality_check(cs.I, make_weights(c), u, cs.J).holds);
            }
        }
    }
}
