#include "mlde/errors.hpp"
#include "mlde/expr.hpp"
#include "mlde/forms.hpp"
#include "mlde/frobenius.hpp"
#include "mlde/operator.hpp"
#include "mlde/wronskian.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace mlde;
using namespace mlde::test;

namespace {

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Series psi(int i, long order) { return form_series(i == 1 ? "psi1" : "psi2", order); }

}  // namespace

TEST(Operator, FlatParameters) {
    EXPECT_EQ(flat_parameters(R("6/5")).alpha1, R("1/5"));
    EXPECT_EQ(flat_parameters(R("32/5")).alpha3, (R("32/5") - 18) * (R("32/5") + 6) * 38 * 38 / 8294400);
    EXPECT_EQ(flat_parameters(Rational(18)).alpha3, 0);
    EXPECT_EQ(flat_parameters(R("-6/5")).alpha2, 0);
}

TEST(Operator, Mu) {
    EXPECT_EQ(mu(R("19/5")), R("551/3600"));
    EXPECT_EQ(mu(Rational(0)), 0);
    EXPECT_EQ(mu(R("1/5")), R("11/3600"));
}

TEST(Operator, FlatIsMonicOrderFour) {
    MLDEOperator op = build_flat(R("2/5"));
    EXPECT_EQ(op.order(), 4);
    OperatorCoeffs c = op.coefficients(10);
    ASSERT_EQ(c.size(), 5u);
    EXPECT_TRUE(equal_to_precision(c[4], Series::one(10)));
    EXPECT_TRUE(equal_to_precision(c[3], -eisenstein(2, 10)));
}

TEST(Operator, WeightedAtZeroIsFlat) {
    for (const char* s : {"6/5", "-3/5", "18", "32/5", "-318/5"}) {
        OperatorCoeffs a = build_flat(R(s)).coefficients(20);
        OperatorCoeffs b = build_flat_weighted(R(s), Rational(0)).coefficients(20);
        EXPECT_EQ(first_operator_difference(a, b), -1) << s;
    }
}

TEST(Operator, WeightedAnnihilatesPsiForm) {
    Series f = psi(1, 45) * (pow(psi(1, 45), 5L) + pow(psi(2, 45), 5L) * Rational(2));
    Series image = apply(build_flat_weighted(R("6/5"), R("6/5")), f);
    EXPECT_TRUE(image.empty());
    EXPECT_GE(image.precision(), 40);
}

TEST(Operator, ApplyToMonomialGivesIndicialValue) {
    MLDEOperator op = build_flat(R("12/5"));
    std::vector<Rational> p = indicial_polynomial(op);
    Rational a = R("1/7");
    Series image = apply(op, Series::monomial(Rational(1), a, a + 10));
    EXPECT_EQ(image.coeff_at(a), evaluate_polynomial(p, a));
}

TEST(Operator, SerreDerivative) {
    EXPECT_TRUE(serre_derivative(Series::one(20), Rational(0)).empty());
    // 24 theta' = (E2 - theta^4 + 80 Delta4^4) theta
    Series th = form_series("theta", 40), d4 = form_series("Delta4", 40);
    Series lhs = serre_derivative(th, R("1/2")) * Rational(24);
    Series rhs = (Rational(0) - pow(th, 4L) + pow(d4, 4L) * Rational(80)) * th;
    EXPECT_TRUE(equal_to_precision(lhs, rhs));
}

TEST(Indicial, ClosedFormRoots) {
    EXPECT_EQ(indicial(build_flat(R("6/5"))).roots, rats({"-1/10", "1/10", "3/10", "7/10"}));
    EXPECT_EQ(indicial(build_flat(R("-3/5"))).roots, rats({"-1/40", "1/40", "9/40", "31/40"}));
    for (const char* s : {"2/5", "-66/5", "54/5", "7/3", "-100"}) {
        Rational x = R(s);
        std::vector<Rational> expect{-x / 24 - R("1/20"), -x / 24 + R("3/4"), x / 24 + R("1/4"), x / 24 + R("1/20")};
        IndicialReport r = indicial(build_flat(x));
        EXPECT_EQ(r.roots, sorted(expect)) << s;
        EXPECT_EQ(r.root_sum, 1) << s;
    }
}

TEST(Indicial, DegenerateAndResonant) {
    IndicialReport six = indicial(build_flat(Rational(6)));
    EXPECT_EQ(six.degenerate.size(), 1u);
    EXPECT_EQ(indicial(build_flat(R("-6/5"))).degenerate.size(), 1u);
    IndicialReport r = indicial(build_flat(R("42/5")));
    ASSERT_EQ(r.resonant.size(), 1u);
    EXPECT_EQ(r.roots[r.resonant[0].second] - r.roots[r.resonant[0].first], 1);
    EXPECT_TRUE(indicial(build_flat(R("6/5"))).resonant.empty());
}

TEST(Indicial, ThirdOrderSumOfRoots) {
    IndicialReport r = indicial(build_third_order(R("9/100"), R("19/5400")));
    EXPECT_EQ(r.roots.size(), 3u);
    EXPECT_EQ(r.root_sum, R("1/2"));
}

TEST(Frobenius, PrintedExpansions) {
    EXPECT_EQ(coeffs_of(frobenius_solve(build_flat(R("6/5")), R("-1/10"), 3), 4), ints({1, 8, 23, 68}));
    EXPECT_EQ(coeffs_of(frobenius_solve(build_flat(R("2/5")), R("-1/15"), 4), 5), ints({1, 4, 8, 20, 37}));
    EXPECT_EQ(coeffs_of(frobenius_solve(build_flat(R("-3/5")), R("-1/40"), 4), 5), ints({1, 1, 1, 2, 3}));
}

TEST(Frobenius, NotARoot) { EXPECT_THROW(frobenius_solve(build_flat(R("6/5")), R("1/7"), 3), NotIndicialRoot); }

TEST(Frobenius, ResonanceRaised) {
    // roots -2/5 and 3/5 differ by one at s = 42/5
    MLDEOperator op = build_flat(R("42/5"));
    IndicialReport r = indicial(op);
    ASSERT_FALSE(r.resonant.empty());
    Rational low = r.roots[r.resonant.front().first];
    EXPECT_THROW(frobenius_solve(op, low, 3 * r.grid), Resonance);
}

TEST(Frobenius, SolutionsAreAnnihilated) {
    MLDEOperator op = build_flat(R("22/5"));
    for (const auto& a : indicial(op).roots) {
        Series f = frobenius_solve(op, a, 30);
        EXPECT_TRUE(apply(op, f).empty()) << to_string(a);
    }
}

TEST(Frobenius, LogSolutionAtDoubleRoot) {
    MLDEOperator op = build_flat(Rational(6));
    LogSeries g = frobenius_solve_log(op, R("1/2"), 10);
    EXPECT_TRUE(equal_to_precision(g.log_part(), frobenius_solve(op, R("1/2"), 10)));
    EXPECT_EQ(g.plain().coeff_at(R("3/2")), R("-2530/81"));
    EXPECT_EQ(g.plain().coeff_at(R("5/2")), R("-191600/693"));
    EXPECT_EQ(g.plain().coeff_at(R("7/2")), R("-8906965/4788"));
    EXPECT_TRUE(apply(op, g).is_zero());
}

TEST(Frobenius, NoLogNeeded) { EXPECT_THROW(frobenius_solve_log(build_flat(R("6/5")), R("-1/10"), 5), NoLogNeeded); }

TEST(Wronskian, FundamentalSystemOverEtaConstant) {
    MLDEOperator op = build_flat(R("6/5"));
    std::vector<Series> sys;
    for (const auto& a : indicial(op).roots) sys.push_back(frobenius_solve(op, a, 34));
    Series w = modular_wronskian(sys);
    Series q = w * eta_power(Rational(-24), 34);
    EXPECT_EQ(q.base(), 0);
    EXPECT_NE(sgn(q.leading()), 0);
    EXPECT_GE(q.precision(), 30);
    EXPECT_TRUE(equal_to_precision(q, Series::constant(q.leading(), 29)));
}

TEST(Wronskian, DependentRowsVanish) {
    MLDEOperator op = build_flat(R("6/5"));
    auto roots = indicial(op).roots;
    Series f = frobenius_solve(op, roots[0], 20), g = frobenius_solve(op, roots[1], 20),
           h = frobenius_solve(op, roots[2], 20);
    EXPECT_TRUE(modular_wronskian(std::vector<Series>{f, f, g, h}).empty());
}

TEST(Wronskian, SingleSeries) {
    Series f = S("1/3", 1, {1, 4, 9});
    EXPECT_TRUE(modular_wronskian(std::vector<Series>{f}) == f);
}

TEST(Operator, ThirdOrderAuxiliary) {
    Series p1 = psi(1, 35), p2 = psi(2, 35);
    Series p5 = pow(p1, 5L), q5 = pow(p2, 5L);
    Series f = (p5 * p5 - p5 * q5 * Rational(36) - q5 * q5) * eta_power(Rational(-4), 35);
    Series image = apply(build_third_order(R("9/100"), R("19/5400")), f);
    EXPECT_TRUE(image.empty());
    EXPECT_GE(image.precision() - f.base(), 30);
}
