#include "mlde/operator.hpp"

#include "mlde/errors.hpp"
#include "mlde/forms.hpp"

#include <algorithm>
#include <mutex>

namespace mlde {

struct MLDEOperator::Cache {
    Builder builder;
    std::mutex mu;
    OperatorCoeffs coeffs;
    long order = -1;
};

MLDEOperator::MLDEOperator(std::string tag, Rational weight, int order, Builder builder)
    : tag_(std::move(tag)), weight_(std::move(weight)), order_(order), cache_(std::make_shared<Cache>()) {
    cache_->builder = std::move(builder);
}

MLDEOperator MLDEOperator::from_coefficients(std::string tag, Rational weight, OperatorCoeffs coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    auto shared = std::make_shared<OperatorCoeffs>(std::move(coeffs));
    return MLDEOperator(std::move(tag), std::move(weight), n, [shared](long order) {
        OperatorCoeffs out;
        for (const auto& c : *shared) {
            if (c.precision() < order + 1)
                throw InsufficientOrder("operator coefficients are known only to a lower order");
            out.push_back(c.truncated(Rational(order + 1)));
        }
        return out;
    });
}

OperatorCoeffs MLDEOperator::coefficients(long order) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->order < order) {
        cache_->coeffs = cache_->builder(order);
        cache_->order = order;
    }
    OperatorCoeffs out;
    for (const auto& c : cache_->coeffs) out.push_back(c.truncated(Rational(order + 1)));
    return out;
}

FlatParameters flat_parameters(const Rational& s) {
    FlatParameters p;
    p.alpha1 = (Rational(-25) * s * s + 120 * s + 1332) / 7200;
    Rational t = 5 * s + 6;
    p.alpha2 = t * t / 14400;
    p.alpha3 = (s - 18) * (s + 6) * t * t / 8294400;
    return p;
}

Rational mu(const Rational& t) { return t * (t + 2) / 144; }

namespace {

std::string rat_tag(const std::string& head, const Rational& s) { return head + "(" + to_string(s) + ")"; }

OperatorCoeffs flat_coefficients(const Rational& s, long n) {
    auto p = flat_parameters(s);
    Series e2 = eisenstein(2, n), e4 = eisenstein(4, n), e6 = eisenstein(6, n), e8 = eisenstein(8, n);
    Series de2 = euler_derivative(e2), d2e2 = euler_derivative(de2), de4 = euler_derivative(e4);
    OperatorCoeffs c(5);
    c[4] = Series::one(n);
    c[3] = -e2;
    c[2] = 3 * de2 + p.alpha1 * e4;
    c[1] = -(d2e2 + Rational(p.alpha1 / 2) * de4 - p.alpha2 * e6);
    c[0] = p.alpha3 * e8;
    return c;
}

}  // namespace

OperatorCoeffs add(const OperatorCoeffs& a, const OperatorCoeffs& b) {
    OperatorCoeffs r = a.size() >= b.size() ? a : b;
    const OperatorCoeffs& o = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < o.size(); ++i) r[i] += o[i];
    return r;
}

OperatorCoeffs scale(const Series& g, const OperatorCoeffs& a) {
    OperatorCoeffs r;
    for (const auto& c : a) r.push_back(g * c);
    return r;
}

// (sum a_i D^i) o (sum b_j D^j) = sum_{i,j,t} a_i C(i,t) D^t(b_j) D^{i-t+j}
OperatorCoeffs compose(const OperatorCoeffs& a, const OperatorCoeffs& b) {
    const std::size_t n = a.size() - 1 + b.size() - 1;
    std::vector<std::vector<Series>> terms(n + 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
        std::vector<Series> dbj{b[j]};
        for (std::size_t i = 0; i < a.size(); ++i) {
            while (dbj.size() <= i) dbj.push_back(euler_derivative(dbj.back()));
            Integer binom(1);
            for (std::size_t t = 0; t <= i; ++t) {
                if (t > 0) binom = binom * Integer(static_cast<long>(i - t + 1)) / Integer(static_cast<long>(t));
                terms[i - t + j].push_back(a[i] * dbj[t] * Rational(binom));
            }
        }
    }
    OperatorCoeffs r;
    for (auto& list : terms) {
        Series acc = list.front();
        for (std::size_t k = 1; k < list.size(); ++k) acc += list[k];
        r.push_back(std::move(acc));
    }
    return r;
}

OperatorCoeffs serre_operator(const Rational& k, long order) {
    return {eisenstein(2, order) * Rational(-k / 12), Series::one(order)};
}

int first_operator_difference(const OperatorCoeffs& a, const OperatorCoeffs& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= a.size() || i >= b.size()) {
            const Series& x = i < a.size() ? a[i] : b[i];
            if (!x.empty()) return static_cast<int>(i);
            continue;
        }
        if (!equal_to_precision(a[i], b[i])) return static_cast<int>(i);
    }
    return -1;
}

MLDEOperator build_flat(const Rational& s) {
    return MLDEOperator(rat_tag("flat", s), Rational(0), 4, [s](long n) { return flat_coefficients(s, n); });
}

MLDEOperator build_sharp(const Rational& s) {
    return MLDEOperator(rat_tag("sharp", s), Rational(0), 2, [s](long n) {
        return OperatorCoeffs{eisenstein(4, n) * Rational(-s), eisenstein(2, n) * Rational(-1, 6), Series::one(n)};
    });
}

namespace {

OperatorCoeffs serre_power_coeffs(const Rational& k, int i, long n) {
    OperatorCoeffs r = serre_operator(k, n);
    for (int m = 2; m <= i; ++m) r = compose(serre_operator(k + 2 * (m - 1), n), r);
    return r;
}

}  // namespace

MLDEOperator build_serre_power(const Rational& k, int i) {
    return MLDEOperator("serre^" + std::to_string(i) + "(" + to_string(k) + ")", k, i,
                        [k, i](long n) { return serre_power_coeffs(k, i, n); });
}

MLDEOperator build_flat_weighted(const Rational& s, const Rational& k) {
    return MLDEOperator("flat(" + to_string(s) + ";k=" + to_string(k) + ")", k, 4, [s, k](long n) {
        auto p = flat_parameters(s);
        Series e4 = eisenstein(4, n), e6 = eisenstein(6, n), e8 = eisenstein(8, n);
        OperatorCoeffs r = serre_power_coeffs(k, 4, n);
        r = add(r, scale(e4 * Rational(p.alpha1 - Rational(11, 36)), serre_power_coeffs(k, 2, n)));
        Rational c6 = (36 * p.alpha1 + 216 * p.alpha2 - 5) / 216;
        r = add(r, scale(e6 * c6, serre_power_coeffs(k, 1, n)));
        r[0] += p.alpha3 * e8;
        return r;
    });
}

MLDEOperator build_third_order(const Rational& a, const Rational& b) {
    return MLDEOperator("third(" + to_string(a) + "," + to_string(b) + ")", Rational(0), 3, [a, b](long n) {
        Series e2 = eisenstein(2, n);
        return OperatorCoeffs{b * eisenstein(6, n), Rational(1, 2) * euler_derivative(e2) - a * eisenstein(4, n),
                              e2 * Rational(-1, 2), Series::one(n)};
    });
}

MLDEOperator compose(const MLDEOperator& a, const MLDEOperator& b, std::string tag) {
    return MLDEOperator(std::move(tag), a.weight(), a.order() + b.order(),
                        [a, b](long n) { return compose(a.coefficients(n), b.coefficients(n)); });
}

MLDEOperator factored_flat(const MLDEOperator& sharp, const Rational& c, std::string tag) {
    return MLDEOperator(std::move(tag), Rational(0), sharp.order() + 2, [sharp, c](long n) {
        OperatorCoeffs l = sharp.coefficients(n);
        OperatorCoeffs outer = compose(serre_operator(Rational(6), n), serre_operator(Rational(4), n));
        OperatorCoeffs r = compose(outer, l);
        return add(r, scale(eisenstein(4, n) * Rational(-c), l));
    });
}

namespace {

long relative_order(const Series& f) {
    if (f.empty()) return 0;
    return to_long(ceil(Rational(f.precision() - f.base()))) + 1;
}

}  // namespace

Series apply(const MLDEOperator& op, const Series& f) {
    long n = relative_order(f);
    OperatorCoeffs c = op.coefficients(n);
    Series acc = c[0] * f;
    Series d = f;
    for (std::size_t j = 1; j < c.size(); ++j) {
        d = euler_derivative(d);
        acc += c[j] * d;
    }
    return acc;
}

LogSeries apply(const MLDEOperator& op, const LogSeries& f) {
    // L(p + l g) = L(p) + l L(g) + sum_j j c_j D^{j-1} g
    long n = std::max(relative_order(f.plain()), relative_order(f.log_part()));
    OperatorCoeffs c = op.coefficients(n);
    const Series& g = f.log_part();
    Series extra = c[1] * g;
    Series d = g;
    for (std::size_t j = 2; j < c.size(); ++j) {
        d = euler_derivative(d);
        extra += c[j] * d * Rational(static_cast<long>(j));
    }
    return LogSeries(apply(op, f.plain()) + extra, apply(op, g));
}

Series serre_derivative(const Series& f, const Rational& k) {
    if (f.empty()) return f;
    return euler_derivative(f) - eisenstein(2, relative_order(f)) * f * Rational(k / 12);
}

LogSeries serre_derivative(const LogSeries& f, const Rational& k) {
    return LogSeries(serre_derivative(f.plain(), k) + f.log_part(), serre_derivative(f.log_part(), k));
}

}  // namespace mlde
