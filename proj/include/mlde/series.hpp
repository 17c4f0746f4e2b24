#pragma once

#include "mlde/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mlde {

// Truncation order used when a caller does not ask for one.
// Overridable with MLDE_DEFAULT_ORDER.
long default_order();

// q^base * sum_{n=0}^{N} c_n q^{n/grid}, exact modulo q^{base + (N+1)/grid}.
//
// Normal form: the leading stored coefficient is nonzero (so base is the
// valuation) and grid is the smallest denominator compatible with the stored
// exponents and the truncation point.  A series with no known nonzero
// coefficient is stored with base equal to its precision.
class Series {
public:
    Series();
    Series(Rational base, long grid, std::vector<Rational> coeffs);

    static Series zero(const Rational& precision);
    // c + O(q^{order+1})
    static Series constant(const Rational& c, long order);
    static Series one(long order) { return constant(Rational(1), order); }
    // c q^e + O(q^precision)
    static Series monomial(const Rational& c, const Rational& e, const Rational& precision);

    const Rational& base() const { return base_; }
    long grid() const { return grid_; }
    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational precision() const;
    Rational exponent(long index) const;

    bool empty() const { return coeffs_.empty(); }
    const Rational& leading() const;
    // Coefficient of q^e; throws InsufficientOrder at or beyond precision.
    Rational coeff_at(const Rational& e) const;

    // Keep only exponents below p (no-op when p >= precision).
    Series truncated(const Rational& p) const;
    // Keep the first n+1 stored coefficients.
    Series truncated_order(long n) const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator*=(const Rational& c);
    Series& operator/=(const Rational& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }
    friend Series operator/(Series a, const Rational& c) { return a /= c; }
    friend Series operator+(const Series& a, const Rational& c);
    friend Series operator+(const Rational& c, const Series& a) { return a + c; }
    friend Series operator-(const Series& a, const Rational& c) { return a + Rational(-c); }
    friend Series operator-(const Rational& c, const Series& a) { return (-a) + c; }

    // Structural equality of the normal form (including precision).
    friend bool operator==(const Series& a, const Series& b);

private:
    void normalize();

    Rational base_;
    long grid_ = 1;
    std::vector<Rational> coeffs_;
};

// a^r.  Needs leading coefficient 1 unless r is an integer.
Series pow(const Series& a, const Rational& r);
Series pow(const Series& a, long r);
Series inverse(const Series& a);
Series divide(const Series& a, const Series& b);
// q -> q^m
Series substitute_power(const Series& a, long m);
// D = q d/dq
Series euler_derivative(const Series& a);
Series euler_derivative(const Series& a, int times);
// c q^e -> (c/e) q^e
Series integrate_q(const Series& a);
// q^e * a
Series shift(const Series& a, const Rational& e);

// q^base (1 + sum a_n q^n) with a_n nonnegative integers for n <= depth.
bool is_cft_type(const Series& a, long depth);
// Some positive integer multiple of the normalized series has nonnegative
// integer coefficients up to depth.
bool is_character_type(const Series& a, long depth);

// First exponent below min precision where a and b differ.
std::optional<std::pair<Rational, Rational>> first_difference(const Series& a, const Series& b);
bool equal_to_precision(const Series& a, const Series& b);
// Throws InsufficientOrder when s is not known strictly below p.
void require_precision(const Series& s, const Rational& p, const char* what = "series");

}  // namespace mlde
