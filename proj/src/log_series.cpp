#include "mlde/log_series.hpp"

#include <algorithm>

namespace mlde {

Rational LogSeries::precision() const { return std::min(plain_.precision(), log_.precision()); }

LogSeries& LogSeries::operator+=(const LogSeries& o) {
    plain_ += o.plain_;
    log_ += o.log_;
    return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& o) {
    plain_ -= o.plain_;
    log_ -= o.log_;
    return *this;
}

LogSeries& LogSeries::operator*=(const Rational& c) {
    plain_ *= c;
    log_ *= c;
    return *this;
}

LogSeries operator*(const Series& f, const LogSeries& a) { return LogSeries(f * a.plain_, f * a.log_); }

LogSeries euler_derivative(const LogSeries& a) {
    return LogSeries(euler_derivative(a.plain()) + a.log_part(), euler_derivative(a.log_part()));
}

}  // namespace mlde
