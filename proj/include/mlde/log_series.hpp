#pragma once

#include "mlde/series.hpp"

namespace mlde {

// plain + l * log_part, where l = log q (so D l = 1).
class LogSeries {
public:
    LogSeries() = default;
    LogSeries(Series plain, Series log_part) : plain_(std::move(plain)), log_(std::move(log_part)) {}
    explicit LogSeries(Series plain) : plain_(std::move(plain)), log_(Series::zero(plain_.precision())) {}

    const Series& plain() const { return plain_; }
    const Series& log_part() const { return log_; }
    bool has_log() const { return !log_.empty(); }
    Rational precision() const;

    LogSeries& operator+=(const LogSeries& o);
    LogSeries& operator-=(const LogSeries& o);
    LogSeries& operator*=(const Rational& c);

    friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
    friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
    friend LogSeries operator*(LogSeries a, const Rational& c) { return a *= c; }
    friend LogSeries operator*(const Rational& c, LogSeries a) { return a *= c; }
    friend LogSeries operator*(const Series& f, const LogSeries& a);
    friend LogSeries operator*(const LogSeries& a, const Series& f) { return f * a; }

    // both parts vanish to their precision
    bool is_zero() const { return plain_.empty() && log_.empty(); }

private:
    Series plain_;
    Series log_;
};

LogSeries euler_derivative(const LogSeries& a);

}  // namespace mlde
