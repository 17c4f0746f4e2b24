#pragma once

#include "mlde/log_series.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace mlde {

// Coefficient list c_0..c_n of sum_j c_j D^j, each a power series in q.
using OperatorCoeffs = std::vector<Series>;

// Linear differential operator in D = q d/dq with q-series coefficients,
// built lazily to whatever order an application needs.
class MLDEOperator {
public:
    using Builder = std::function<OperatorCoeffs(long order)>;

    MLDEOperator(std::string tag, Rational weight, int order, Builder builder);
    // Fixed coefficients; requests beyond their order raise InsufficientOrder.
    static MLDEOperator from_coefficients(std::string tag, Rational weight, OperatorCoeffs coeffs);

    const std::string& tag() const { return tag_; }
    const Rational& weight() const { return weight_; }
    int order() const { return order_; }
    // Coefficients known to relative order `order` (memoized).
    OperatorCoeffs coefficients(long order) const;

private:
    std::string tag_;
    Rational weight_;
    int order_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

struct FlatParameters {
    Rational alpha1, alpha2, alpha3;
};
FlatParameters flat_parameters(const Rational& s);
// mu(t) = t (t + 2) / 144
Rational mu(const Rational& t);

MLDEOperator build_flat(const Rational& s);
MLDEOperator build_sharp(const Rational& s);
MLDEOperator build_flat_weighted(const Rational& s, const Rational& k);
// f''' - E2/2 f'' + (E2'/2 - a E4) f' + b E6 f
MLDEOperator build_third_order(const Rational& a, const Rational& b);
// theta_{k+2(i-1)} o ... o theta_k
MLDEOperator build_serre_power(const Rational& k, int i);

Series apply(const MLDEOperator& op, const Series& f);
LogSeries apply(const MLDEOperator& op, const LogSeries& f);

// theta_k f = D f - (k/12) E2 f
Series serre_derivative(const Series& f, const Rational& k);
LogSeries serre_derivative(const LogSeries& f, const Rational& k);

// Coefficient-level operator algebra.
OperatorCoeffs compose(const OperatorCoeffs& a, const OperatorCoeffs& b);
OperatorCoeffs add(const OperatorCoeffs& a, const OperatorCoeffs& b);
OperatorCoeffs scale(const Series& g, const OperatorCoeffs& a);
OperatorCoeffs serre_operator(const Rational& k, long order);
// Position of the first coefficient where two operators differ, or -1.
int first_operator_difference(const OperatorCoeffs& a, const OperatorCoeffs& b);

MLDEOperator compose(const MLDEOperator& a, const MLDEOperator& b, std::string tag);
// theta_6 o theta_4 o L - c E4 L
MLDEOperator factored_flat(const MLDEOperator& sharp, const Rational& c, std::string tag);

}  // namespace mlde
