#pragma once

#include "mlde/lattice.hpp"
#include "mlde/series.hpp"

#include <string>
#include <vector>

namespace mlde {

// c of the (3,5) minimal model
Rational minimal_central_charge();
// 0, -1/20, 1/5, 3/4
const std::vector<Rational>& minimal_weights();

struct MinimalCharacter {
    Rational h;
    Series series;  // leading exponent h - c/24
};
// Exact below q^{h - c/24 + order + 1}. Throws UnknownWeight.
MinimalCharacter minimal_character(const Rational& h, long order);

// -1/20 -> 1/5, 3/4 -> 0.  Throws UnknownWeight for other h.
Rational fuse_with_three_quarters(const Rational& h);

// chi_M chi_h + chi_MP chi_{h x 3/4}; h is -1/20 or 3/4.
Series assemble_L_character(const Series& chi_m, const Series& chi_mp, const Rational& h, long order);

struct DeligneDatum {
    std::string name;
    Rational h_vee;
    Rational s;
    Rational central_charge_w;
    std::vector<Rational> ramond_exponents;  // ascending
    long dim = 0;                            // 0 for the formal entries
    bool formal = false;
    bool lattice_case = false;
};
const std::vector<DeligneDatum>& deligne_table();
// Throws Error for an unknown name.
const DeligneDatum& deligne_datum(const std::string& name);
Rational deligne_s(const Rational& h_vee);
Rational deligne_dimension(const Rational& h_vee);

// One Ramond-twisted basis element L(N;h).
struct RamondCharacter {
    std::string label;  // e.g. "L(N0;-1/20)"
    Rational weight;    // conformal weight
    Series series;
};
// Lattice cases only (A2, D4, E6, E7, E8); CharacterConstructionUnavailable otherwise.
std::vector<RamondCharacter> ramond_characters(const std::string& name, long order);
// Coset weights of the lattice modules N_k, as realized.
std::vector<Rational> lattice_module_weights(const std::string& name);

struct Theorem71Report {
    std::string name;
    Rational s;
    std::vector<Rational> exponents;  // observed, ascending
    std::vector<Rational> roots;      // indicial roots of flat(s)
    bool exponents_match = false;
    bool annihilated = false;         // full mode
    bool matches_frobenius = false;   // full mode
    bool nonnegative_integral = false;
    bool second_order = false;        // E8: killed by the second order sharp equation
    bool cft_type = false;            // exponent-only mode
    bool full = false;
    bool verified = false;
    std::vector<RamondCharacter> characters;
    std::vector<std::string> notes;
};
// full = true needs a lattice case; exponent-only mode works for all eight algebras.
Theorem71Report verify_theorem71(const std::string& name, long order, bool full = true);

}  // namespace mlde
