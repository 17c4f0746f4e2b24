#pragma once

#include "mlde/operator.hpp"

#include <utility>
#include <vector>

namespace mlde {

// Coefficients p_0..p_n of P(x) = sum_j c_j(0) x^j.
std::vector<Rational> indicial_polynomial(const MLDEOperator& op);
Rational evaluate_polynomial(const std::vector<Rational>& p, const Rational& x);
// All rational roots with multiplicity; NonRationalRoot if a factor is left.
std::vector<Rational> rational_roots(const std::vector<Rational>& p);

struct IndicialReport {
    std::vector<Rational> roots;  // ascending, with multiplicity
    Rational root_sum;
    // pairs (i, j), i < j, of positions in `roots`
    std::vector<std::pair<std::size_t, std::size_t>> degenerate;
    std::vector<std::pair<std::size_t, std::size_t>> resonant;  // positive integer gap
    long grid = 1;
};
IndicialReport indicial(const MLDEOperator& op);

// q^alpha (1 + sum a_n q^{n/grid}) to relative order `order`.
Series frobenius_solve(const MLDEOperator& op, const Rational& alpha, long order);
// Same recursion; at a resonance with a vanishing right-hand side the free
// coefficient is set to 0 instead of raising Resonance.
Series frobenius_solve_lenient(const MLDEOperator& op, const Rational& alpha, long order);

// f0 + l f1 with f1 the power-series solution at the upper exponent; the
// coefficient of q^{upper} in f0 is 0.
LogSeries frobenius_solve_log(const MLDEOperator& op, const Rational& alpha, long order);

}  // namespace mlde
