#pragma once

#include "mlde/expr.hpp"
#include "mlde/log_series.hpp"
#include "mlde/operator.hpp"
#include "mlde/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mlde {

// The operator an entry is checked against: (flat_s) unless third_order.
struct DesignatedOperator {
    bool third_order = false;
    Rational a, b;  // f''' - E2 f''/2 + (E2'/2 - a E4) f' + b E6 f
};

// f = c1 * D(X(psi1, psi2)) / eta^w + rest, X homogeneous.
struct QuasiData {
    Poly x{2};
    Rational c1;
    Rational eta_weight;
    Expr rest;
};

struct CatalogEntry {
    std::string label;    // "B.f.f0"
    std::string section;  // "B.f"
    Rational s;
    Rational r;
    Rational exponent;  // leading exponent of the printed expansion
    std::vector<Rational> printed_prefix;
    Expr recipe;
    DesignatedOperator op;
    bool fundamental = false;
    bool contains_integral = false;
    bool suspected_nonmodular = false;
    int quasimodular_depth = 0;
    std::optional<QuasiData> quasi;
    // set on restated variants of printed entries
    std::string restates;
    std::string correction;
    long verify_order = 40;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& label);
std::vector<std::string> catalog_labels();
// "B.k.log" and the companions "C.x.G<r>" of the quasimodular entries.
std::vector<std::string> log_entry_labels();

MLDEOperator designated_operator(const CatalogEntry& e);

// Relative order `order` past the leading exponent.
Series build_entry(const std::string& label, long order);
LogSeries build_log_entry(const std::string& label, long order);

// G(f) = l f + 12 A where f = A E2 + B.
LogSeries log_companion(const CatalogEntry& e, long order);
// Rebuilds f from A E2 + B with B computed from the psi derivation rules
// (no q-series derivative involved); zero residual means the split holds.
std::optional<std::pair<Rational, Rational>> quasimodular_residual(const CatalogEntry& e, long order);

enum class EntryStatus { Verified, Quarantined };

struct EntryReport {
    std::string label;
    EntryStatus status = EntryStatus::Quarantined;
    long order = 0;
    bool prefix_ok = false;
    std::optional<long> prefix_mismatch;  // position
    // printed prefix against the recursion of the designated operator
    std::optional<bool> prefix_matches_recursion;
    bool annihilated = false;
    std::optional<Rational> first_bad_exponent;
    std::optional<bool> quasimodular_ok;
    std::string note;
};

EntryReport verify_entry(const std::string& label, std::optional<long> order = std::nullopt);
EntryReport verify_log_entry(const std::string& label, std::optional<long> order = std::nullopt);

// Printed entries that fail verification as printed.
const std::vector<std::string>& documented_catalog_quarantine();
// Label to use in place of a quarantined printed entry.
std::string preferred_label(const std::string& label);

struct SystemMember {
    std::string label;
    Rational exponent;
    LogSeries series;
};

std::vector<Rational> catalog_s_values();
std::vector<SystemMember> fundamental_system(const Rational& s, long order);

struct SystemReport {
    Rational s;
    std::vector<std::string> labels;
    bool exponents_match_roots = false;
    Rational root_sum;
    bool wronskian_constant = false;
    std::optional<Rational> wronskian_constant_value;
    bool wronskian_nonzero = false;
};
SystemReport check_fundamental_system(const Rational& s, long order);

// eta^12 = eta^{36/5} psi1 psi2 (psi1^10 - 11 psi1^5 psi2^5 - psi2^10)
bool eta12_identity(long order);

// Frobenius solution at -s/24 - 1/20 scaled by 5; first index n < n_max
// whose coefficient is not a non-negative integer.
std::optional<long> scaled_solution_defect(const Rational& s, long n_max);

const char* status_name(EntryStatus s);

}  // namespace mlde
