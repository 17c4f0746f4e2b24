#include "mlde/classifier.hpp"
#include "mlde/frobenius.hpp"
#include "mlde/operator.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace mlde;
using namespace mlde::test;

namespace {

std::vector<Rational> set_of(std::initializer_list<const char*> v) {
    std::vector<Rational> r = rats(v);
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<Rational> raw_s(int c) {
    std::vector<Rational> r;
    for (const auto& x : enumerate_case(case_spec(c))) r.push_back(x.s);
    return r;
}

}  // namespace

TEST(Classifier, CaseConstants) {
    EXPECT_EQ(case_spec(1).printed_rhs, -2880);
    EXPECT_EQ(case_spec(2).printed_rhs, 100800);
    EXPECT_EQ(case_spec(3).printed_rhs, 4200);
    EXPECT_EQ(case_spec(4).printed_rhs, 180);
    EXPECT_EQ(case_spec(1).excluded_linear_root, R("54/5"));
    EXPECT_EQ(case_spec(2).excluded_linear_root, 18);
    EXPECT_EQ(case_spec(3).excluded_linear_root, -6);
    EXPECT_EQ(case_spec(4).excluded_linear_root, R("-66/5"));
    std::vector<long> depths;
    for (int c = 1; c <= 4; ++c) depths.push_back(case_spec(c).filter_depth);
    EXPECT_EQ(depths, (std::vector<long>{4, 32, 23, 3}));
}

TEST(Classifier, RootsPerCase) {
    Rational s = R("6/5");
    EXPECT_EQ(case_root(case_spec(1), s), -s / 24 - R("1/20"));
    EXPECT_EQ(case_root(case_spec(2), s), -s / 24 + R("3/4"));
    EXPECT_EQ(case_root(case_spec(3), s), s / 24 + R("1/4"));
    EXPECT_EQ(case_root(case_spec(4), s), s / 24 + R("1/20"));
}

TEST(Classifier, RawCaseOneMatchesPrintedList) {
    EXPECT_EQ(raw_s(1), set_of({"-2838/5", "-1398/5", "-918/5", "-678/5", "-534/5", "-438/5", "-318/5", "-278/5",
                                 "-246/5",  "-198/5",  "-30",    "-138/5", "-118/5", "-102/5", "-78/5",  "-54/5",
                                 "-48/5",   "-38/5",   "-6",     "-22/5",  "-18/5",  "-6/5",   "-3/5",   "2/5",
                                 "6/5",     "2",       "12/5",   "18/5",   "22/5",   "24/5",   "26/5",   "27/5",
                                 "6",       "32/5",    "33/5",   "34/5",   "36/5",   "37/5",   "38/5",   "39/5",
                                 "8",       "41/5"}));
}

TEST(Classifier, RawCaseFourMatchesPrintedList) {
    EXPECT_EQ(raw_s(4), set_of({"-17/5", "-16/5", "-3", "-14/5", "-13/5", "-12/5", "-9/5", "-8/5", "-6/5", "-3/5",
                                 "0", "2/5", "12/5", "18/5", "27/5", "42/5", "72/5", "162/5"}));
}

TEST(Classifier, RawCaseThreeEndsWithPrintedValues) {
    auto r = raw_s(3);
    ASSERT_GE(r.size(), 2u);
    EXPECT_EQ(r[r.size() - 2], R("2022/5"));
    EXPECT_EQ(r.back(), R("4122/5"));
    EXPECT_EQ(r.front(), R("-77/5"));
}

TEST(Classifier, RawCaseTwoIncludesPrintedSurvivors) {
    auto r = raw_s(2);
    for (const auto& s : set_of({"-498/5", "-318/5", "-138/5", "-3/5", "6/5", "42/5", "87/5", "96/5"}))
        EXPECT_TRUE(std::binary_search(r.begin(), r.end(), s)) << to_string(s);
}

TEST(Classifier, FilteredSets) {
    EXPECT_EQ(classify_case(1, 4).final, set_of({"-318/5", "-198/5", "-138/5", "-78/5", "-48/5", "-38/5", "-18/5",
                                                 "-6/5", "-3/5", "2/5", "6/5", "12/5", "18/5", "22/5", "27/5", "6",
                                                 "32/5"}));
    EXPECT_EQ(classify_case(2, 32).final, set_of({"-3/5", "6/5", "42/5"}));
    EXPECT_EQ(classify_case(3, 23).final, set_of({"-66/5", "-18/5", "-8/5", "-3/5", "6/5"}));
    EXPECT_EQ(classify_case(4, 3).final, set_of({"-8/5", "-6/5", "-3/5", "2/5", "12/5", "42/5"}));
}

TEST(Classifier, DepthTwoSurvivorsMatchPrintedIntermediateSets) {
    EXPECT_EQ(classify_case(1, 2).final,
              set_of({"-438/5", "-318/5", "-198/5", "-30", "-138/5", "-78/5", "-48/5", "-38/5", "-18/5", "-6/5",
                      "-3/5", "2/5", "6/5", "12/5", "18/5", "22/5", "27/5", "6", "32/5", "39/5"}));
    EXPECT_EQ(classify_case(4, 2).final, set_of({"-3", "-8/5", "-6/5", "-3/5", "2/5", "12/5", "42/5"}));
}

TEST(Classifier, FinalList) {
    EXPECT_EQ(classify_all(), set_of({"-318/5", "-198/5", "-138/5", "-78/5", "-48/5", "-38/5", "-18/5", "-6/5",
                                      "-3/5", "2/5", "6/5", "12/5", "18/5", "22/5", "27/5", "6", "32/5", "54/5",
                                      "42/5", "18", "-66/5", "-6", "-8/5"}));
}

TEST(Classifier, ModularCandidates) {
    EXPECT_EQ(modular_candidates(), set_of({"-48/5", "-38/5", "-6/5", "-3/5", "2/5", "6/5", "12/5", "18/5", "22/5",
                                            "27/5", "6", "32/5", "54/5", "18", "-66/5", "-6", "-8/5"}));
    EXPECT_EQ(quasimodular_values().size(), 6u);
}

TEST(Classifier, ShallowFilterIsSuperset) {
    std::map<int, long> ones{{1, 1}, {2, 1}, {3, 1}, {4, 1}};
    auto wide = classify_all(ones), tight = classify_all();
    EXPECT_TRUE(std::includes(wide.begin(), wide.end(), tight.begin(), tight.end()));
    EXPECT_GT(wide.size(), tight.size());
}

TEST(Classifier, SurvivorsMonotoneInDepth) {
    CandidateReport r = classify_case(3, 23);
    std::vector<Rational> prev;
    bool first = true;
    for (const auto& [d, v] : r.survivors_by_depth) {
        if (!first) EXPECT_TRUE(std::includes(prev.begin(), prev.end(), v.begin(), v.end())) << d;
        prev = v;
        first = false;
    }
}

TEST(Classifier, StableBeyondDefaultDepth) {
    std::map<int, long> deeper;
    for (int c = 1; c <= 4; ++c) deeper[c] = case_spec(c).filter_depth + 10;
    EXPECT_EQ(classify_all(deeper), classify_all());
}

TEST(Classifier, EnumeratedA1MatchesRecursion) {
    for (int c = 1; c <= 4; ++c) {
        CandidateReport r = classify_case(c, 1);
        EXPECT_TRUE(r.a1_mismatches.empty()) << c;
        EXPECT_TRUE(r.weight_violations.empty()) << c;
    }
}

TEST(Classifier, NOnePolynomialFixtures) {
    EXPECT_EQ(n1_polynomial_fixture(1, R("6/5"), Rational(8)), 0);
    EXPECT_NE(n1_polynomial_fixture(1, R("6/5"), Rational(9)), 0);
    for (long a1 : {0L, 3L, 17L}) EXPECT_EQ(n1_polynomial_fixture(3, Rational(-6), Rational(a1)), 0);
}

TEST(Classifier, NTwoPolynomialsOnRecursionTriples) {
    for (int c = 1; c <= 4; ++c) {
        const CaseSpec& spec = case_spec(c);
        for (const auto& s : classify_case(c, 2).final) {
            MLDEOperator op = build_flat(s);
            Rational alpha = case_root(spec, s);
            Series f = frobenius_solve(op, alpha, 2 * indicial(op).grid);
            Rational a1 = f.coeff_at(alpha + 1), a2 = f.coeff_at(alpha + 2);
            Rational residual = n2_polynomial_fixture(c, s, a1, a2);
            if (c == 1)
                // printed -255500 s^2 should be -355500 s^2
                EXPECT_EQ(residual, 100000 * s * s) << to_string(s);
            else
                EXPECT_EQ(residual, 0) << c << " " << to_string(s);
        }
    }
}
