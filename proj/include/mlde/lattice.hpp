#pragma once

#include "mlde/series.hpp"

#include <map>
#include <vector>

namespace mlde {

// Coset offset + Z^rank with the quadratic form of `gram`.
struct IntegralLattice {
    std::vector<std::vector<long>> gram;
    std::vector<Rational> offset;  // in basis coordinates; empty means 0

    std::size_t rank() const { return gram.size(); }
};

// gram = L^T diag(d) L with L unit upper triangular:
// x^T gram x = sum_i d_i (x_i + sum_{j>i} l[i][j] x_j)^2.
struct LDL {
    std::vector<Rational> d;
    std::vector<std::vector<Rational>> l;
};
// Throws NotPositiveDefinite.
LDL ldl_decomposition(const std::vector<std::vector<long>>& gram);

// sum over v in the coset of q^{<v,v>/2}, known strictly below q^{order+1}.
Series lattice_theta(const IntegralLattice& lattice, long order);
// theta / eta^rank
Series lattice_voa_character(const IntegralLattice& lattice, long order);
// min <v,v>/2 over the coset
Rational minimal_weight(const IntegralLattice& lattice);

// sum over (exponent -> multiplicity) below `precision`
Series series_from_terms(const std::map<Rational, Integer>& terms, const Rational& precision);

// Cartan matrices of simply laced root systems
std::vector<std::vector<long>> cartan_a(int n);
std::vector<std::vector<long>> cartan_d(int n);
std::vector<std::vector<long>> cartan_e(int n);
// Fundamental weight i (0-based) in simple-root coordinates.
std::vector<Rational> fundamental_weight(const std::vector<std::vector<long>>& cartan, std::size_t i);

}  // namespace mlde
