#pragma once

#include "mlde/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace mlde {

struct PolynomialTerm {
    Integer coeff;
    std::vector<int> exponents;
};

struct PolynomialData {
    std::string name;
    std::vector<std::string> variables;
    int degree = 0;
    std::vector<PolynomialTerm> terms;
    std::string checksum;
};

// Tables compiled into the library; checksums are verified on first use.
const std::vector<PolynomialData>& polynomial_tables();
const PolynomialData& polynomial(const std::string& name);
std::string polynomial_checksum(const PolynomialData& p);

// Sum of c * prod args_i^{e_i}.
Series evaluate_polynomial(const PolynomialData& p, const std::vector<Series>& args);

// Sparse multivariate polynomial with rational coefficients.
class Poly {
public:
    using Monomial = std::vector<int>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
    static Poly from_data(const PolynomialData& p);
    static Poly variable(std::size_t nvars, std::size_t i);
    static Poly constant(std::size_t nvars, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly partial(std::size_t i) const;
    // sum_i dP/dx_i * images[i]
    Poly derivation(const std::vector<Poly>& images) const;
    // P(images_0, images_1, ...)
    Poly compose(const std::vector<Poly>& images) const;
    // total degree if homogeneous, otherwise -1
    int homogeneous_degree() const;
    Series evaluate(const std::vector<Series>& args) const;

private:
    void add_term(const Monomial& m, const Rational& c);

    std::size_t nvars_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace mlde
