#pragma once

#include "mlde/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mlde {

// Orders below are relative: coefficients 0..order after the leading exponent.

// E_k for k in {2, 4, 6, 8}.
Series eisenstein(int k, long order);
// q^{1/24} prod (1 - q^n)
Series eta(long order);
// eta^r for rational r
Series eta_power(const Rational& r, long order);
// prod_{n>=1} (1 - q^{m n})^r, no q-power prefactor
Series eta_product(long m, long r, long order);
// prod_i eta(q^{m_i})^{r_i}
Series eta_quotient(const std::vector<std::pair<long, long>>& factors, long order);

struct NamedForm {
    std::string name;
    Rational weight;
    long level = 1;
    bool quasimodular = false;
    Series series;
};

// E2, E4, E6, E8, eta and the level 2..15 forms
// H2, Delta2, I3, Delta3, theta, Delta4, psi1, psi2, I15, Delta15.
NamedForm named_form(const std::string& name, long order);
const std::vector<std::string>& named_form_names();
// Canonical spelling for an accepted alias; throws UnknownForm.
std::string canonical_form_name(const std::string& name);

// Memoized named_form(name, order).series; safe to call from several threads.
Series form_series(const std::string& name, long order);

}  // namespace mlde
