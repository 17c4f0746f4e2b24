#pragma once

#include "mlde/series.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace mlde::test {

inline Rational R(const std::string& s) { return parse_rational(s); }

// q^base (c_0 + c_1 q^{1/grid} + ...), coefficients given as integers.
inline Series S(const std::string& base, long grid, std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Series(R(base), grid, std::move(v));
}

inline std::vector<Rational> coeffs_of(const Series& s, std::size_t n) {
    std::vector<Rational> out(s.coeffs().begin(), s.coeffs().begin() + static_cast<long>(std::min(n, s.coeffs().size())));
    return out;
}

inline std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

inline std::vector<Rational> rats(std::initializer_list<const char*> v) {
    std::vector<Rational> out;
    for (const char* x : v) out.push_back(R(x));
    return out;
}

// Small random rationals and series for the property suites.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long span = 9, long max_den = 6) {
        return make_rational(integer(-span, span), integer(1, max_den));
    }

    // q^{k/grid} (c_0 + ...), c_0 != 0 unless allow_zero_lead
    Series series(long min_order = 4, long max_order = 12, bool unit_lead = false) {
        long grid = integer(1, 3);
        long n = integer(min_order, max_order);
        std::vector<Rational> c(static_cast<std::size_t>(n + 1));
        for (auto& x : c) x = rational();
        if (unit_lead)
            c[0] = 1;
        else if (sgn(c[0]) == 0)
            c[0] = integer(1, 5);
        Rational base = make_rational(integer(-2, 3), grid);
        return Series(base, grid, std::move(c));
    }

    // constant term 1, exponent 0
    Series unit_series(long order = 10) {
        std::vector<Rational> c(static_cast<std::size_t>(order + 1));
        c[0] = 1;
        for (std::size_t i = 1; i < c.size(); ++i) c[i] = rational();
        return Series(Rational(0), 1, std::move(c));
    }

private:
    std::mt19937 rng_;
};

}  // namespace mlde::test
