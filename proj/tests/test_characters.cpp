#include "mlde/characters.hpp"
#include "mlde/errors.hpp"
#include "mlde/forms.hpp"
#include "mlde/frobenius.hpp"
#include "mlde/lattice.hpp"
#include "mlde/operator.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace mlde;
using namespace mlde::test;

namespace {

// Brute-force oracle: every vector in the box [-b, b]^n.
std::map<Rational, Integer> brute_theta(const IntegralLattice& L, long b, const Rational& bound) {
    const std::size_t n = L.rank();
    std::map<Rational, Integer> out;
    std::vector<long> z(n, -b);
    while (true) {
        Rational norm = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational xi = Rational(z[i]) + (L.offset.empty() ? Rational(0) : L.offset[i]);
                Rational xj = Rational(z[j]) + (L.offset.empty() ? Rational(0) : L.offset[j]);
                norm += xi * xj * L.gram[i][j];
            }
        if (norm / 2 < bound) out[norm / 2] += 1;
        std::size_t k = 0;
        while (k < n && z[k] == b) z[k++] = -b;
        if (k == n) break;
        ++z[k];
    }
    return out;
}

}  // namespace

TEST(Minimal, Weights) {
    EXPECT_EQ(minimal_central_charge(), R("-3/5"));
    EXPECT_EQ(minimal_weights(), rats({"0", "-1/20", "1/5", "3/4"}));
    EXPECT_THROW(minimal_character(R("1/2"), 5), UnknownWeight);
}

TEST(Minimal, VacuumHasNoWeightOneState) {
    Series v = minimal_character(Rational(0), 10).series;
    EXPECT_EQ(v.base(), R("1/40"));
    EXPECT_EQ(coeffs_of(v, 8), ints({1, 0, 1, 1, 2, 2, 4, 4}));
}

TEST(Minimal, MinusOneTwentieth) {
    Series c = minimal_character(R("-1/20"), 10).series;
    EXPECT_EQ(c.base(), R("-1/40"));
    EXPECT_EQ(coeffs_of(c, 5), ints({1, 1, 1, 2, 3}));
}

TEST(Minimal, NonNegativeIntegersToFifty) {
    for (const auto& h : minimal_weights()) {
        Series c = minimal_character(h, 50).series;
        EXPECT_EQ(c.base(), h + R("1/40"));
        EXPECT_GE(c.precision(), c.base() + 51);
        EXPECT_TRUE(is_cft_type(c, 50)) << to_string(h);
    }
}

TEST(Minimal, SolveTheMinusThreeFifthsEquation) {
    MLDEOperator op = build_flat(R("-3/5"));
    for (const auto& h : minimal_weights()) {
        Series c = minimal_character(h, 30).series;
        Series f = frobenius_solve(op, c.base(), 30);
        EXPECT_TRUE(equal_to_precision(c, f)) << to_string(h);
    }
}

TEST(Lattice, LdlRejectsIndefinite) {
    EXPECT_THROW(ldl_decomposition({{1, 2}, {2, 1}}), NotPositiveDefinite);
    EXPECT_THROW(ldl_decomposition({{2, 1}, {0, 2}}), NotPositiveDefinite);
    EXPECT_THROW(lattice_theta({{{0}}, {}}, 5), NotPositiveDefinite);
    LDL f = ldl_decomposition(cartan_a(2));
    EXPECT_EQ(f.d, rats({"2", "3/2"}));
}

TEST(Lattice, ThetaOfRootTwo) {
    Series t = lattice_theta({{{2}}, {}}, 20);
    EXPECT_TRUE(equal_to_precision(t, form_series("theta", 20)));
    EXPECT_EQ(t.precision(), 21);
}

TEST(Lattice, ShiftedCosetWeight) {
    Series t = lattice_theta({{{6}}, {R("1/6")}}, 10);
    EXPECT_EQ(t.base(), R("1/12"));
    EXPECT_EQ(t.leading(), 1);
}

TEST(Lattice, ProductOfThetas) {
    Series t = lattice_theta({{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, {}}, 20);
    Series th = form_series("theta", 20);
    EXPECT_TRUE(equal_to_precision(t, th * th * th));
}

TEST(Lattice, AgainstBruteForce) {
    std::vector<IntegralLattice> cases{
        {cartan_a(2), {}},
        {cartan_a(2), fundamental_weight(cartan_a(2), 0)},
        {cartan_d(4), fundamental_weight(cartan_d(4), 3)},
        {{{4, 1, 0}, {1, 3, -1}, {0, -1, 5}}, {R("1/2"), R("-1/3"), R("0")}},
    };
    for (const auto& L : cases) {
        Series fast = lattice_theta(L, 6);
        Series slow = series_from_terms(brute_theta(L, 6, Rational(7)), Rational(7));
        EXPECT_TRUE(fast == slow);
    }
}

TEST(Lattice, VoaCharacters) {
    Series n0 = lattice_voa_character({{{6}}, {}}, 10);
    EXPECT_EQ(n0.base(), R("-1/24"));
    Series n3 = lattice_voa_character({{{6}}, {R("1/2")}}, 10);
    EXPECT_EQ(n3.base(), R("3/4") - R("1/24"));
    Series d = lattice_voa_character({{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, {R("1/2"), R("1/2"), R("0")}}, 10);
    EXPECT_EQ(d.base(), R("1/2") - R("3/24"));
}

TEST(Lattice, ModuleWeights) {
    EXPECT_EQ(lattice_module_weights("A2"), rats({"0", "1/12", "1/3", "3/4", "1/3", "1/12"}));
    EXPECT_EQ(lattice_module_weights("E6"), rats({"0", "5/12", "2/3", "3/4", "2/3", "5/12"}));
    EXPECT_EQ(lattice_module_weights("E7"), rats({"0", "1/2", "3/4", "3/4"}));
    EXPECT_EQ(lattice_module_weights("E8"), rats({"0", "3/4"}));
}

TEST(Assemble, ZeroPartnerIsSingleProduct) {
    Series chi = lattice_voa_character({{{6}}, {}}, 12);
    Series zero = Series::zero(Rational(20));
    Series a = assemble_L_character(chi, zero, R("-1/20"), 10);
    EXPECT_TRUE(equal_to_precision(a, chi * minimal_character(R("-1/20"), 10).series));
    EXPECT_THROW(assemble_L_character(chi, chi, Rational(0), 5), UnknownWeight);
}

TEST(Assemble, Fusion) {
    EXPECT_EQ(fuse_with_three_quarters(R("-1/20")), R("1/5"));
    EXPECT_EQ(fuse_with_three_quarters(R("3/4")), 0);
}

TEST(Deligne, Table) {
    const auto& t = deligne_table();
    ASSERT_EQ(t.size(), 10u);
    std::vector<Rational> c;
    for (const auto& d : t) {
        EXPECT_EQ(d.s, 6 * (7 * d.h_vee - 18) / (5 * (d.h_vee + 6)));
        if (!d.formal) EXPECT_EQ(deligne_dimension(d.h_vee), Rational(d.dim)) << d.name;
        if (d.name != "A1" && !d.formal) c.push_back(d.central_charge_w);
    }
    EXPECT_EQ(c, rats({"2/5", "6/5", "12/5", "18/5", "22/5", "27/5", "32/5"}));
    EXPECT_EQ(deligne_datum("formal24").s, 6);
    EXPECT_EQ(deligne_datum("formal3/2").s, R("-6/5"));
}

TEST(Deligne, ExponentListsAreIndicialRoots) {
    for (const auto& d : deligne_table()) {
        if (d.formal || d.name == "E8") continue;
        std::vector<Rational> e = d.ramond_exponents;
        EXPECT_EQ(e, indicial(build_flat(d.s)).roots) << d.name;
        Rational sum = 0;
        for (const auto& x : e) sum += x;
        EXPECT_EQ(sum, 1) << d.name;
    }
    EXPECT_EQ(deligne_datum("E8").ramond_exponents, rats({"-19/60", "29/60"}));
}

TEST(Theorem71, A2) {
    Theorem71Report r = verify_theorem71("A2", 25);
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.exponents, rats({"-1/15", "1/15", "4/15", "11/15"}));
    std::vector<Rational> w;
    for (const auto& c : r.characters) w.push_back(c.weight);
    EXPECT_EQ(w, rats({"-1/20", "1/12", "17/60", "3/4"}));
}

TEST(Theorem71, D4AndE6) {
    for (std::string n : {"D4", "E6"}) {
        Theorem71Report r = verify_theorem71(n, 25);
        EXPECT_TRUE(r.annihilated) << n;
        EXPECT_TRUE(r.matches_frobenius) << n;
        EXPECT_TRUE(r.nonnegative_integral) << n;
        EXPECT_TRUE(r.verified) << n;
    }
}

TEST(Theorem71, ExponentOnly) {
    for (std::string n : {"G2", "F4", "A1"}) EXPECT_TRUE(verify_theorem71(n, 25, false).verified) << n;
    EXPECT_THROW(verify_theorem71("G2", 25, true), CharacterConstructionUnavailable);
    EXPECT_THROW(ramond_characters("F4", 5), CharacterConstructionUnavailable);
}
