#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smtlab/parse.hpp"
#include "smtlab/replace.hpp"
#include "testutil.hpp"

using namespace smtlab;

namespace {

const std::vector<std::string> P2 = {"x0", "x1", "x2"};

std::vector<Poly> fam(const std::vector<std::string>& polys, const std::vector<std::string>& vars) {
    std::vector<Poly> out;
    for (const auto& s : polys) out.push_back(parse_fixed_poly(s, vars));
    return out;
}

Thresholds T(std::vector<int> t) {
    Thresholds th;
    th.l = t.back();
    th.t = std::move(t);
    return th;
}

} // namespace

TEST_CASE("dimension profile catalog") {
    Ideal p2 = Ideal::zero(3);
    SUBCASE("concurrent triple plus closing line") {
        DimensionProfile p = dimension_profile(p2, fam({"x1", "x2", "x1 + x2", "x0"}, P2));
        REQUIRE(p.dims.size() == 4);
        CHECK(p.dims[0] == 1);
        CHECK(p.dims[1] == 0);
        CHECK(p.dims[2] == 0);
        CHECK(!p.dims[3].has_value());
    }
    SUBCASE("two lines on the conic") {
        Ideal conic = make_ideal(3, {parse_fixed_poly("x0*x2 - x1^2", P2)});
        DimensionProfile p = dimension_profile(conic, fam({"x1", "x2"}, P2));
        REQUIRE(p.dims.size() == 2);
        CHECK(p.dims[0] == 0);
        CHECK(p.dims[1] == 0);
    }
    SUBCASE("single hyperplane") {
        DimensionProfile p = dimension_profile(p2, fam({"x0"}, P2));
        REQUIRE(p.dims.size() == 1);
        CHECK(p.dims[0] == 1);
    }
    CHECK_THROWS_AS(dimension_profile(p2, fam({"x0", "x0*x1"}, P2)), DomainError);
}

TEST_CASE("thresholds catalog") {
    SUBCASE("profile (1,0,0,empty) with n=2") {
        DimensionProfile p{{1, 0, 0, std::nullopt}};
        Thresholds t = thresholds_from_profile(p, 2);
        CHECK(t.t == std::vector<int>{0, 1, 3});
        CHECK(t.l == 3);
    }
    SUBCASE("profile (1,0,empty) with n=2") {
        DimensionProfile p{{1, 0, std::nullopt}};
        Thresholds t = thresholds_from_profile(p, 2);
        CHECK(t.t == std::vector<int>{0, 1, 2});
    }
    SUBCASE("profile starting empty is invalid") {
        DimensionProfile p{{std::nullopt}};
        CHECK_THROWS_AS(thresholds_from_profile(p, 2), DomainError);
    }
    SUBCASE("profile that never empties is an error") {
        DimensionProfile p{{1, 0, 0}};
        CHECK_THROWS_AS(thresholds_from_profile(p, 2), DomainError);
    }
}

TEST_CASE("replacement catalog") {
    SUBCASE("P2 with concurrent triple plus closing line") {
        Ideal p2 = Ideal::zero(3);
        auto family = fam({"x1", "x2", "x1 + x2", "x0"}, P2);
        ReplacementResult r = replace_family(p2, family, 7);
        REQUIRE(r.replacements.size() == 3);
        CHECK(r.replacements[0] == family[0]);
        REQUIRE(r.certificate.size() == 3);
        CHECK(r.certificate[0] == 1);
        CHECK(r.certificate[1] <= 0);
        CHECK(!r.certificate[2].has_value());
        // re-verify the certificate through the variety module
        std::vector<Poly> prefix;
        for (std::size_t t = 0; t < r.replacements.size(); ++t) {
            prefix.push_back(r.replacements[t]);
            CHECK(projective_dimension(with_extra_generators(p2, prefix)) == r.certificate[t]);
        }
    }
    SUBCASE("conic with an emptying pair of lines") {
        Ideal conic = make_ideal(3, {parse_fixed_poly("x0*x2 - x1^2", P2)});
        ReplacementResult r = replace_family(conic, fam({"x1", "x0 - x2"}, P2), 11);
        REQUIRE(r.replacements.size() == 2);
        CHECK(r.certificate[0] == 0);
        CHECK(!r.certificate[1].has_value());
    }
    SUBCASE("family that cannot empty V is rejected") {
        // every combination of x1 and x2 vanishes at (1:0:0), which lies on
        // the conic, so the lemma hypotheses fail
        Ideal conic = make_ideal(3, {parse_fixed_poly("x0*x2 - x1^2", P2)});
        CHECK_THROWS_AS(replace_family(conic, fam({"x1", "x2"}, P2), 11), DomainError);
    }
    SUBCASE("already-generic family keeps its profile shape") {
        Ideal p2 = Ideal::zero(3);
        ReplacementResult r = replace_family(p2, fam({"x0", "x1", "x2"}, P2), 13);
        CHECK(r.certificate[0] == 1);
        CHECK(r.certificate[1] == 0);
        CHECK(!r.certificate[2].has_value());
    }
}

TEST_CASE("replacement determinism for fixed seed") {
    Ideal p2 = Ideal::zero(3);
    auto family = fam({"x1", "x2", "x1 + x2", "x0"}, P2);
    ReplacementResult a = replace_family(p2, family, 42);
    ReplacementResult b = replace_family(p2, family, 42);
    CHECK(a.coefficients == b.coefficients);
}

TEST_CASE("delta from thresholds catalog") {
    CHECK(delta_from_thresholds(T({1, 2, 3})) == 1);
    CHECK(delta_from_thresholds(T({1, 3, 4})) == 2);
    CHECK(delta_from_thresholds(T({0, 1, 3})) == make_rational(3, 2));
}

TEST_CASE("m sequence catalog") {
    CHECK(m_sequence(T({1, 3, 4})) == std::vector<Rational>{Rational(2), Rational(1), Rational(2)});
    CHECK(m_sequence(T({1, 2, 3})) == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    CHECK(m_sequence(T({1, 2})) == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("weighted product inequality catalog") {
    auto r1 = weighted_product_inequality(T({1, 2, 3}), {Rational(3), Rational(2)});
    CHECK(r1.holds);
    CHECK(r1.lhs == 6);
    CHECK(r1.rhs == 6);

    auto r2 = weighted_product_inequality(T({1, 3, 4}), {Rational(3), Rational(2)});
    CHECK(r2.holds);
    CHECK(r2.lhs == 18);
    CHECK(r2.rhs == 36);

    auto r3 = weighted_product_inequality(T({1, 3, 4}), {Rational(3), Rational(1)});
    CHECK(r3.holds);
    CHECK(r3.lhs == 9);
    CHECK(r3.rhs == 9);

    CHECK_THROWS_AS(weighted_product_inequality(T({1, 2, 3}), {Rational(1), Rational(2)}),
                    std::invalid_argument);
}

TEST_CASE("lemma 3.1 property suite") {
    testing::Rng rng(67);
    for (int trial = 0; trial < 500; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 5));
        std::vector<int> t{1};
        while (static_cast<int>(t.size()) < n + 1) {
            int next = t.back() + static_cast<int>(rng.int_in(1, 4));
            if (next > 20) next = t.back() + 1;
            t.push_back(next);
        }
        std::vector<Rational> a;
        for (int i = 0; i < n; ++i) {
            Rational x(rng.int_in(1, 100), rng.int_in(1, 10));
            x.canonicalize();
            if (x < 1) x = 1;
            a.push_back(x);
        }
        std::sort(a.begin(), a.end(), std::greater<Rational>());
        Thresholds th = T(t);
        CHECK(weighted_product_inequality(th, a).holds);
        auto m = m_sequence(th);
        CHECK(m.back() == delta_from_thresholds(th)); // m_0 = delta
    }
}
