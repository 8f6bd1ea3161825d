#include <doctest.h>

#include "surfenum/poly_system.hpp"
#include "surfenum/series.hpp"
#include "surfenum/series_json.hpp"

using namespace surfenum;

namespace {

TruncatedSeries y_series(int trunc) {
    return TruncatedSeries::monomial({"y"}, 0, trunc, {1}, 1);
}

}  // namespace

TEST_CASE("basic arithmetic: (1+y)(1-y) = 1-y^2") {
    auto one = TruncatedSeries::constant({"y"}, 0, 10, 1);
    auto y = y_series(10);
    auto prod = (one + y) * (one - y);
    CHECK(prod == one - y * y);
    CHECK(prod.coeff1(0) == 1);
    CHECK(prod.coeff1(1) == 0);
    CHECK(prod.coeff1(2) == -1);
}

TEST_CASE("truncation: results carry the minimum truncation") {
    auto a = TruncatedSeries::constant({"y"}, 0, 10, 1);
    auto b = TruncatedSeries::constant({"y"}, 0, 4, 1);
    CHECK((a * b).truncation() == 4);
    CHECK((a + b).truncation() == 4);
}

TEST_CASE("incompatible variable sets throw") {
    auto a = TruncatedSeries::constant({"y"}, 0, 5, 1);
    auto b = TruncatedSeries::constant({"v"}, 0, 5, 1);
    CHECK_THROWS_AS(a + b, IncompatibleVariables);
    CHECK_THROWS_AS(a * b, IncompatibleVariables);
}

TEST_CASE("inverse: geometric series and round trip") {
    auto one = TruncatedSeries::constant({"y"}, 0, 8, 1);
    auto y = y_series(8);
    auto g = (one - y).inverse();
    for (int k = 0; k <= 8; ++k) CHECK(g.coeff1(k) == 1);
    CHECK(g * (one - y) == one);
    CHECK_THROWS_AS(y.inverse(), DomainError);
}

TEST_CASE("exp and pointing") {
    auto y = y_series(6);
    auto e = y.exp();
    CHECK(e.coeff1(0) == 1);
    CHECK(e.coeff1(3) == Rational(1, 6));
    CHECK(e.coeff1(6) == Rational(1, 720));

    // Theta_y y^k = k y^k
    auto p = e.pointing("y");
    for (int k = 0; k <= 6; ++k) CHECK(p.coeff1(k) == e.coeff1(k) * k);
}

TEST_CASE("substitute: composition with y -> y^2 + y^3") {
    auto y = y_series(9);
    auto f = y * y + y;  // f(y) = y + y^2
    auto g = y * y + y * y * y;
    auto comp = f.substitute("y", g);
    // f(g) = g + g^2 = y^2 + y^3 + y^4 + 2y^5 + y^6
    CHECK(comp.coeff1(2) == 1);
    CHECK(comp.coeff1(3) == 1);
    CHECK(comp.coeff1(4) == 1);
    CHECK(comp.coeff1(5) == 2);
    CHECK(comp.coeff1(6) == 1);
    CHECK(comp.coeff1(7) == 0);
}

TEST_CASE("parser round trips and canonical text") {
    std::vector<std::string> syms = {"S", "y"};
    auto p = parse_polynomial("S^4 + 3S^3 + S^2(3+8y^3) + S(1-20y^3) - (1-16y^3)y^3", syms);
    auto q = parse_polynomial(
        "S + 3*S^3 + S^4 + 3*S^2 - y^3 + 8*S^2*y^3 - 20*S*y^3 + 16*y^6", syms);
    CHECK(polynomial_to_string(p, syms) == polynomial_to_string(q, syms));
    CHECK_THROWS_AS(parse_polynomial("S + bogus", syms), DomainError);
}

TEST_CASE("newton_solve: F = y(1+F)^2 gives shifted Catalan numbers") {
    PolynomialSystem sys;
    sys.unknowns = {"F"};
    sys.vars = {"y"};
    sys.add_equation("F = y(1+F)^2");
    auto sol = newton_solve(sys, 8, std::vector<Rational>{Rational(0)});
    REQUIRE(sol.size() == 1);
    const long catalan[] = {0, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int k = 0; k <= 8; ++k) CHECK(sol[0].coeff1(k) == catalan[k]);
    CHECK(residuals_vanish(sys, sol));
}

TEST_CASE("newton_solve: quartic near-triangulation equation") {
    PolynomialSystem sys;
    sys.unknowns = {"S"};
    sys.vars = {"y"};
    sys.add_equation("S^4 + 3S^3 + S^2(3+8y^3) + S(1-20y^3) - (1-16y^3)y^3 = 0");
    auto sol = newton_solve(sys, 21, std::vector<Rational>{Rational(0)});
    const long coeffs[] = {0, 1, 1, 3, 13, 68, 399, 2530};  // [y^{3k}]
    for (int k = 0; k <= 7; ++k) {
        CHECK(sol[0].coeff1(3 * k) == coeffs[k]);
        if (3 * k + 1 <= 21) CHECK(sol[0].coeff1(3 * k + 1) == 0);
        if (3 * k + 2 <= 21) CHECK(sol[0].coeff1(3 * k + 2) == 0);
    }
}

TEST_CASE("newton_solve: two-unknown system") {
    // F = y(1+G), G = y(1+F)  =>  F = G = y/(1-y) + O(trunc)... actually
    // F = y + y^2 + y^3 + ...  (F = y(1+y(1+F)) => F = (y+y^2)/(1-y^2)).
    PolynomialSystem sys;
    sys.unknowns = {"F", "G"};
    sys.vars = {"y"};
    sys.add_equation("F = y(1+G)");
    sys.add_equation("G = y(1+F)");
    auto sol = newton_solve(sys, 7, std::vector<Rational>{Rational(0), Rational(0)});
    for (int k = 1; k <= 7; ++k) {
        CHECK(sol[0].coeff1(k) == 1);
        CHECK(sol[1].coeff1(k) == 1);
    }
}

TEST_CASE("newton_solve: singular seed reports no unique branch") {
    // F^2 = y has no power-series branch at F(0) = 0.
    PolynomialSystem sys;
    sys.unknowns = {"F"};
    sys.vars = {"y"};
    sys.add_equation("F^2 = y");
    CHECK_THROWS_AS(newton_solve(sys, 6, std::vector<Rational>{Rational(0)}),
                    NoUniqueBranch);
}

TEST_CASE("univariate substitution with parity and weighting") {
    // vars (x, y, z, w): monomial x^2 y w^2 has 2k+l+m = 0+2+1 = 3 = 3n, n=1.
    TruncatedSeries s({"x", "y", "z", "w"}, 0, 4);
    s.add_term({2, 1, 0, 2}, 1);
    auto w = univariate_substitute(s, SubstitutionMode::weighted);
    CHECK(w.coeff1(1) == Rational(1, 4));
    auto uw = univariate_substitute(s, SubstitutionMode::unweighted);
    CHECK(uw.coeff1(1) == 1);
    auto si = univariate_substitute(s, SubstitutionMode::simple);
    CHECK(si.coeff1(1) == 0);

    // z-only monomial x^2 z^3 w^0: 2k+l+m = 6 != 3: parity violation
    TruncatedSeries bad({"x", "y", "z", "w"}, 0, 4);
    bad.add_term({2, 0, 1, 0}, 1);
    CHECK_THROWS_AS(univariate_substitute(bad, SubstitutionMode::weighted), ParityError);
}

TEST_CASE("theta identity 3 Theta_v = Theta_y after substitution") {
    // F = x^2 y^3 (a single triangle-free cubic-parity monomial)
    TruncatedSeries f({"x", "y", "z", "w"}, 0, 4);
    f.add_term({2, 3, 0, 0}, 1);
    CHECK(theta_v_check(f, SubstitutionMode::weighted));

    TruncatedSeries g({"x", "y", "z", "w"}, 0, 9);
    g.add_term({2, 3, 0, 0}, Rational(5, 3));
    g.add_term({4, 6, 0, 0}, 7);
    g.add_term({6, 9, 0, 0}, Rational(1, 9));
    CHECK(theta_v_check(g, SubstitutionMode::weighted));
    CHECK(theta_v_check(g, SubstitutionMode::unweighted));

    // non-cubic monomial x^2 y^2 is rejected outright
    TruncatedSeries bad({"x", "y", "z", "w"}, 0, 4);
    bad.add_term({2, 2, 0, 0}, 1);
    CHECK_THROWS_AS(theta_v_check(bad), ParityError);
}

TEST_CASE("dominance check") {
    auto y = y_series(5);
    auto two_y = y * Rational(2);
    CHECK(dominance_check(y, two_y));
    CHECK_FALSE(dominance_check(two_y, y));
    auto a = TruncatedSeries::constant({"y"}, 0, 3, 1);
    CHECK_THROWS_AS(dominance_check(y, a), TruncationMismatch);
}

TEST_CASE("JSON round trip with sorted terms") {
    TruncatedSeries s({"y", "u"}, 0, 5);
    s.add_term({3, 1}, Rational(7, 2));
    s.add_term({1, 0}, -2);
    s.add_term({2, 4}, 5);
    auto text = series_to_json(s);
    auto back = series_from_json(text);
    CHECK(back == s);
    // terms must appear in lexicographic exponent order
    auto p1 = text.find("[1,0,");
    auto p2 = text.find("[2,4,");
    auto p3 = text.find("[3,1,");
    REQUIRE(p1 != std::string::npos);
    REQUIRE(p2 != std::string::npos);
    REQUIRE(p3 != std::string::npos);
    CHECK(p1 < p2);
    CHECK(p2 < p3);
    CHECK(text.find("\"-2/1\"") != std::string::npos);  // always explicit num/den
}
