#include "mlde/expr.hpp"

#include "mlde/errors.hpp"
#include "mlde/forms.hpp"
#include "mlde/polynomial.hpp"

#include <unordered_map>

namespace mlde {

struct Expr::Node {
    Node(Kind k, std::string n, Rational v, long mm, std::vector<Expr> ks)
        : kind(k), name(std::move(n)), value(std::move(v)), m(mm), kids(std::move(ks)) {}
    Kind kind;
    std::string name;
    Rational value;
    long m = 1;
    std::vector<Expr> kids;
    std::shared_ptr<const Poly> poly;
};

namespace {

struct Value {
    bool is_const = false;
    Rational c;
    Series s;
};

struct EvalContext {
    long leaf_order;
    std::unordered_map<const void*, std::pair<long, Value>> memo;
};

Value constant(const Rational& c) { return Value{true, c, Series()}; }
Value series(Series s) { return Value{false, Rational(0), std::move(s)}; }

}  // namespace

namespace {
Value evaluate(const Expr::Node& n, long order, EvalContext& ctx);

Value evaluate_child(const Expr& e, long order, EvalContext& ctx);
}  // namespace

// access for helpers
struct ExprAccess {
    static const Expr::Node& node(const Expr& e) { return *e.node_; }
    static Expr make(Expr::Node n) { return Expr(std::make_shared<const Expr::Node>(std::move(n))); }
};

namespace {

Value evaluate_child(const Expr& e, long order, EvalContext& ctx) {
    const Expr::Node& n = ExprAccess::node(e);
    auto it = ctx.memo.find(&n);
    if (it != ctx.memo.end() && it->second.first == order) return it->second.second;
    Value v = evaluate(n, order, ctx);
    ctx.memo[&n] = {order, v};
    return v;
}

Value evaluate(const Expr::Node& n, long order, EvalContext& ctx) {
    using K = Expr::Kind;
    switch (n.kind) {
        case K::Form: return series(form_series(n.name, order));
        case K::Const: return constant(n.value);
        case K::Add:
        case K::Sub: {
            Value a = evaluate_child(n.kids[0], order, ctx);
            Value b = evaluate_child(n.kids[1], order, ctx);
            bool sub = n.kind == K::Sub;
            if (a.is_const && b.is_const) return constant(sub ? Rational(a.c - b.c) : Rational(a.c + b.c));
            if (a.is_const) return series(sub ? a.c - b.s : a.c + b.s);
            if (b.is_const) return series(sub ? a.s - b.c : a.s + b.c);
            return series(sub ? a.s - b.s : a.s + b.s);
        }
        case K::Mul: {
            Value a = evaluate_child(n.kids[0], order, ctx);
            Value b = evaluate_child(n.kids[1], order, ctx);
            if (a.is_const && b.is_const) return constant(a.c * b.c);
            if (a.is_const) return series(b.s * a.c);
            if (b.is_const) return series(a.s * b.c);
            return series(a.s * b.s);
        }
        case K::Neg: {
            Value a = evaluate_child(n.kids[0], order, ctx);
            if (a.is_const) return constant(-a.c);
            return series(-a.s);
        }
        case K::Pow: {
            Value a = evaluate_child(n.kids[0], order, ctx);
            if (a.is_const) {
                if (!is_integer(n.value)) throw NonUnitBase("fractional power of a constant");
                return constant(rpow(a.c, to_long(n.value.get_num())));
            }
            if (is_integer(n.value)) return series(pow(a.s, to_long(n.value.get_num())));
            return series(pow(a.s, n.value));
        }
        case K::Deriv: {
            Value a = evaluate_child(n.kids[0], order, ctx);
            if (a.is_const) return constant(Rational(0));
            return series(euler_derivative(a.s));
        }
        case K::Integrate: {
            Value a = evaluate_child(n.kids[0], order, ctx);
            if (a.is_const) {
                if (sgn(a.c) != 0) throw ConstantTermPresent("integral of a nonzero constant");
                return a;
            }
            return series(integrate_q(a.s));
        }
        case K::Subst: {
            long inner = order / n.m + 1;
            Value a = evaluate_child(n.kids[0], inner, ctx);
            if (a.is_const) return a;
            return series(substitute_power(a.s, n.m));
        }
        case K::Poly: {
            std::vector<Series> args;
            for (const auto& k : n.kids) {
                Value v = evaluate_child(k, order, ctx);
                if (v.is_const) throw Error("constant polynomial argument in " + n.name);
                args.push_back(v.s);
            }
            if (n.poly) return series(n.poly->evaluate(args));
            return series(evaluate_polynomial(polynomial(n.name), args));
        }
    }
    throw Error("internal: unknown expression node");
}

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

}  // namespace

Expr Expr::form(const std::string& name) {
    return ExprAccess::make(Node{Kind::Form, canonical_form_name(name), Rational(0), 1, {}});
}

Expr Expr::constant(const Rational& c) { return ExprAccess::make(Node{Kind::Const, "", c, 1, {}}); }

Expr Expr::polynomial(const std::string& table_name, std::vector<Expr> args) {
    const PolynomialData& p = mlde::polynomial(table_name);
    if (p.variables.size() != args.size())
        throw Error("polynomial " + table_name + " takes " + std::to_string(p.variables.size()) + " arguments");
    return ExprAccess::make(Node{Kind::Poly, table_name, Rational(0), 1, std::move(args)});
}

Expr Expr::polynomial(const Poly& p, const std::string& label, std::vector<Expr> args) {
    if (p.nvars() != args.size())
        throw Error("polynomial " + label + " takes " + std::to_string(p.nvars()) + " arguments");
    Node n{Kind::Poly, label, Rational(0), 1, std::move(args)};
    n.poly = std::make_shared<const Poly>(p);
    return ExprAccess::make(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }

Expr operator+(const Expr& a, const Expr& b) { return ExprAccess::make({Expr::Kind::Add, "", Rational(0), 1, {a, b}}); }
Expr operator-(const Expr& a, const Expr& b) { return ExprAccess::make({Expr::Kind::Sub, "", Rational(0), 1, {a, b}}); }
Expr operator*(const Expr& a, const Expr& b) { return ExprAccess::make({Expr::Kind::Mul, "", Rational(0), 1, {a, b}}); }
Expr operator/(const Expr& a, const Expr& b) { return a * pow(b, Rational(-1)); }
Expr operator-(const Expr& a) { return ExprAccess::make({Expr::Kind::Neg, "", Rational(0), 1, {a}}); }
Expr pow(const Expr& a, const Rational& r) { return ExprAccess::make({Expr::Kind::Pow, "", r, 1, {a}}); }
Expr deriv(const Expr& a) { return ExprAccess::make({Expr::Kind::Deriv, "", Rational(0), 1, {a}}); }
Expr integrate(const Expr& a) { return ExprAccess::make({Expr::Kind::Integrate, "", Rational(0), 1, {a}}); }
Expr subst(const Expr& a, long m) {
    if (m < 1) throw Error("substitution needs a positive integer");
    return ExprAccess::make({Expr::Kind::Subst, "", Rational(0), m, {a}});
}

std::string Expr::str() const {
    const Node& n = *node_;
    auto wrap = [&](const Expr& k, int prec) {
        std::string s = k.str();
        return precedence(k.kind()) < prec ? "(" + s + ")" : s;
    };
    switch (n.kind) {
        case Kind::Form: return n.name;
        case Kind::Const: return sgn(n.value) < 0 ? "(" + to_string(n.value) + ")" : to_string(n.value);
        case Kind::Add: return wrap(n.kids[0], 1) + " + " + wrap(n.kids[1], 2);
        case Kind::Sub: return wrap(n.kids[0], 1) + " - " + wrap(n.kids[1], 2);
        case Kind::Mul: return wrap(n.kids[0], 2) + "*" + wrap(n.kids[1], 3);
        case Kind::Neg: return "-" + wrap(n.kids[0], 4);
        case Kind::Pow: {
            std::string e = to_string(n.value);
            if (!is_integer(n.value) || sgn(n.value) < 0) e = "(" + e + ")";
            return wrap(n.kids[0], 5) + "^" + e;
        }
        case Kind::Deriv: return "D(" + n.kids[0].str() + ")";
        case Kind::Integrate: return "Int(" + n.kids[0].str() + " dq/q)";
        case Kind::Subst: return "[" + n.kids[0].str() + "](q^" + std::to_string(n.m) + ")";
        case Kind::Poly: {
            std::string s = n.name + "(";
            for (std::size_t i = 0; i < n.kids.size(); ++i) s += (i ? ", " : "") + n.kids[i].str();
            return s + ")";
        }
    }
    return "?";
}

Series Expr::eval_leaf_order(long leaf_order) const {
    EvalContext ctx{leaf_order, {}};
    Value v = evaluate_child(*this, leaf_order, ctx);
    if (v.is_const) return Series::constant(v.c, leaf_order);
    return v.s;
}

Series Expr::eval(long order) const {
    long leaf = order + 2;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Series s = eval_leaf_order(leaf);
        if (s.empty()) return s;
        Rational known = (s.precision() - s.base());
        if (known > order) return s.truncated(s.base() + order + 1);
        leaf += to_long(ceil(Rational(order + 1 - known))) + 2;
    }
    throw InsufficientOrder("could not reach relative order " + std::to_string(order) + " for " + str());
}

Series Expr::eval_to_precision(const Rational& p) const {
    long leaf = std::max(0L, to_long(ceil(p))) + 2;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Series s = eval_leaf_order(leaf);
        if (s.precision() >= p) return s.truncated(p);
        leaf += to_long(ceil(Rational(p - s.precision()))) + 2;
    }
    throw InsufficientOrder("could not reach precision q^" + to_string(p) + " for " + str());
}

}  // namespace mlde
