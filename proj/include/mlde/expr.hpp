#pragma once

#include "mlde/series.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mlde {

struct PolynomialData;
class Poly;

// Immutable expression tree over named forms.
class Expr {
public:
    enum class Kind { Form, Const, Add, Sub, Mul, Neg, Pow, Deriv, Integrate, Subst, Poly };

    Expr() = default;
    static Expr form(const std::string& name);
    static Expr constant(const Rational& c);
    static Expr polynomial(const std::string& table_name, std::vector<Expr> args);
    // `label` is only used by str()
    static Expr polynomial(const Poly& p, const std::string& label, std::vector<Expr> args);

    Kind kind() const;
    std::string str() const;
    bool valid() const { return static_cast<bool>(node_); }

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr pow(const Expr& a, const Rational& r);
    friend Expr deriv(const Expr& a);
    friend Expr integrate(const Expr& a);
    // a(q^m)
    friend Expr subst(const Expr& a, long m);

    // Evaluates with every leaf known to `leaf_order` coefficients.
    Series eval_leaf_order(long leaf_order) const;
    // Result known at least through exponent base + order (relative).
    Series eval(long order) const;
    // Result known strictly below q^p (absolute).
    Series eval_to_precision(const Rational& p) const;

    struct Node;
    friend struct ExprAccess;

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

inline Expr operator*(const Rational& c, const Expr& a) { return Expr::constant(c) * a; }
inline Expr operator*(long c, const Expr& a) { return Expr::constant(Rational(c)) * a; }
inline Expr operator+(const Expr& a, long c) { return a + Expr::constant(Rational(c)); }
inline Expr operator/(const Expr& a, const Rational& c) { return Expr::constant(Rational(1 / c)) * a; }
inline Expr operator/(const Expr& a, long c) { return a / Rational(c); }
inline Expr pow(const Expr& a, long r) { return pow(a, Rational(r)); }

}  // namespace mlde
