#include "mlde/errors.hpp"
#include "mlde/forms.hpp"
#include "mlde/log_series.hpp"
#include "mlde/series.hpp"
#include "mlde/series_json.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace mlde;
using namespace mlde::test;

TEST(Rational, ParsesAndPrintsLowestTerms) {
    EXPECT_EQ(to_string(R("6/4")), "3/2");
    EXPECT_EQ(to_string(R("-10/5")), "-2");
    EXPECT_EQ(to_string(R("123456789012345678901234567890/3")), "41152263004115226300411522630");
    EXPECT_THROW(R("1/0"), ParseError);
    EXPECT_THROW(R("abc"), ParseError);
    EXPECT_EQ(R("1/3") + R("1/6"), R("1/2"));
}

TEST(Series, AddSameGrid) {
    Series a = S("0", 1, {1, 1, 0});
    Series b = S("0", 1, {0, 1, 1});
    Series c = a + b;
    EXPECT_EQ(coeffs_of(c, 3), ints({1, 2, 1}));
    EXPECT_EQ(c.precision(), 3);
}

TEST(Series, AddZeroIsIdentity) {
    Series a = S("1/3", 3, {2, 0, -1, 5});
    EXPECT_TRUE(equal_to_precision(a + Series::zero(a.precision()), a));
}

TEST(Series, AddRegridsToLcm) {
    Series a = Series::monomial(Rational(1), R("1/2"), Rational(2));
    Series b = Series::monomial(Rational(1), R("1/3"), Rational(2));
    Series c = a + b;
    EXPECT_EQ(c.base(), R("1/3"));
    EXPECT_EQ(c.grid(), 6);
    EXPECT_EQ(c.coeff_at(R("1/3")), 1);
    EXPECT_EQ(c.coeff_at(R("1/2")), 1);
    EXPECT_EQ(c.coeff_at(R("5/6")), 0);
}

TEST(Series, PrecisionIsMinimumOfInputs) {
    Series a = S("0", 1, {1, 1, 1, 1, 1});
    Series b = S("0", 1, {1, 1});
    EXPECT_EQ((a + b).precision(), 2);
    EXPECT_EQ((a * b).precision(), 2);
}

TEST(Series, MultiplyDifferenceOfSquares) {
    Series p = S("0", 1, {1, 1, 0, 0, 0});
    Series m = S("0", 1, {1, -1, 0, 0, 0});
    EXPECT_EQ(coeffs_of(p * m, 5), ints({1, 0, -1, 0, 0}));
}

TEST(Series, E4SquaredIsE8) {
    Series e4 = eisenstein(4, 50), e8 = eisenstein(8, 50);
    EXPECT_TRUE(equal_to_precision(e4 * e4, e8));
    EXPECT_GE((e4 * e4).precision(), 51);
}

TEST(Series, EtaTimesInverseIsOne) {
    Series e = eta(50);
    Series prod = e * inverse(e);
    EXPECT_TRUE(equal_to_precision(prod, Series::one(49)));
    EXPECT_GE(prod.precision(), 50);
}

TEST(Series, InverseOfOneMinusQ) {
    Series inv = inverse(S("0", 1, {1, -1, 0, 0, 0, 0}));
    EXPECT_EQ(coeffs_of(inv, 6), ints({1, 1, 1, 1, 1, 1}));
}

TEST(Series, InverseOfEtaHasNegatedBase) { EXPECT_EQ(inverse(eta(10)).base(), R("-1/24")); }

TEST(Series, InverseOfZeroThrows) { EXPECT_THROW(inverse(Series::zero(Rational(5))), ZeroLeadingCoefficient); }

TEST(Series, RationalPowerBinomial) {
    Series g = pow(S("0", 1, {1, -1, 0, 0, 0}), R("2/5"));
    EXPECT_EQ(g.coeffs()[0], 1);
    EXPECT_EQ(g.coeffs()[1], R("-2/5"));
    EXPECT_EQ(g.coeffs()[2], R("-3/25"));
    EXPECT_EQ(g.coeffs()[3], R("-8/125"));
}

TEST(Series, PowerZeroIsOne) {
    Series g = pow(S("0", 1, {1, 3, -2, 7}), Rational(0));
    EXPECT_EQ(coeffs_of(g, 4), ints({1, 0, 0, 0}));
}

TEST(Series, EtaToTwoFifthsBase) { EXPECT_EQ(eta_power(R("2/5"), 10).base(), R("1/60")); }

TEST(Series, NonUnitRationalPowerThrows) { EXPECT_THROW(pow(S("0", 1, {2, 1}), R("1/2")), NonUnitBase); }

TEST(Series, SubstitutePower) {
    Series a = S("0", 1, {1, 1, 0});
    Series b = substitute_power(a, 2);
    EXPECT_EQ(b.coeff_at(Rational(0)), 1);
    EXPECT_EQ(b.coeff_at(Rational(1)), 0);
    EXPECT_EQ(b.coeff_at(Rational(2)), 1);
    EXPECT_EQ(b.precision(), 6);
    EXPECT_TRUE(equal_to_precision(substitute_power(a, 1), a));
}

TEST(Series, ThetaOfQFive) {
    Series t5 = substitute_power(form_series("theta", 10), 5);
    EXPECT_EQ(t5.coeff_at(Rational(0)), 1);
    EXPECT_EQ(t5.coeff_at(Rational(5)), 2);
    EXPECT_EQ(t5.coeff_at(Rational(20)), 2);
    EXPECT_EQ(t5.coeff_at(Rational(1)), 0);
    EXPECT_EQ(t5.coeff_at(Rational(45)), 2);
}

TEST(Series, EulerDerivative) {
    Series d = euler_derivative(Series::monomial(Rational(1), R("1/2"), Rational(3)));
    EXPECT_EQ(d.coeff_at(R("1/2")), R("1/2"));
    EXPECT_TRUE(euler_derivative(Series::constant(Rational(7), 5)).empty());
}

TEST(Series, EtaLogarithmicDerivative) {
    Series e = eta(50);
    Series lhs = euler_derivative(e) * Rational(24);
    Series rhs = eisenstein(2, 50) * e;
    EXPECT_TRUE(equal_to_precision(lhs, rhs));
}

TEST(Series, CoefficientBeyondPrecisionThrows) {
    Series a = S("0", 1, {1, 2});
    EXPECT_THROW(a.coeff_at(Rational(2)), InsufficientOrder);
}

TEST(Series, CftType) {
    EXPECT_TRUE(is_cft_type(S("-1/10", 1, {1, 8, 23}), 2));
    EXPECT_FALSE(is_cft_type(S("0", 1, {1, -26, -126}), 2));
    EXPECT_FALSE(is_cft_type(S("0", 1, {2, 1}), 1));
    EXPECT_TRUE(is_character_type(S("0", 1, {2, 1, 4}), 2));
    EXPECT_FALSE(is_character_type(S("0", 1, {2, -1, 4}), 2));
}

TEST(Series, IntegrateInvertsDerivative) {
    Series f = S("1/5", 5, {1, 0, 3, -2, 0, 7});
    EXPECT_TRUE(equal_to_precision(euler_derivative(integrate_q(f)), f));
    EXPECT_THROW(integrate_q(S("0", 1, {1, 1})), ConstantTermPresent);
}

TEST(LogSeries, ProductRule) {
    // D(l q) = q + l q
    LogSeries f(Series::zero(Rational(4)), S("1", 1, {1, 0, 0}));
    LogSeries d = euler_derivative(f);
    EXPECT_EQ(d.plain().coeff_at(Rational(1)), 1);
    EXPECT_EQ(d.log_part().coeff_at(Rational(1)), 1);
}

TEST(LogSeries, SecondDerivativeTwoWays) {
    // D^2(p + l g) = D^2 p + 2 D g + l D^2 g
    Series p = S("1/3", 3, {1, 2, 0, -1, 4, 0, 5});
    Series g = S("1/3", 3, {3, 0, 1, 1, 0, 2, 1});
    LogSeries twice = euler_derivative(euler_derivative(LogSeries(p, g)));
    Series plain = euler_derivative(p, 2) + euler_derivative(g) * Rational(2);
    EXPECT_TRUE(equal_to_precision(twice.plain(), plain));
    EXPECT_TRUE(equal_to_precision(twice.log_part(), euler_derivative(g, 2)));
}

TEST(Json, SeriesRoundTrip) {
    Series a = S("-7/60", 60, {1, 0, -3, 5, 0, 11});
    a *= R("3/7");
    Json j = to_json(a);
    EXPECT_EQ(j["base_exponent"], "-7/60");
    EXPECT_EQ(j["coeffs"][0], "3/7");
    EXPECT_TRUE(series_from_json(j) == a);
    EXPECT_TRUE(parse_series(dump_series(a)) == a);
}

TEST(Json, LogSeriesRoundTrip) {
    LogSeries a(S("1/2", 1, {0, 5, 7}), S("1/2", 1, {1, 2, 3}));
    Json j = to_json(a);
    ASSERT_TRUE(j.contains("log_coeffs"));
    LogSeries b = log_series_from_json(j);
    EXPECT_TRUE(equal_to_precision(a.plain(), b.plain()));
    EXPECT_TRUE(equal_to_precision(a.log_part(), b.log_part()));
}
