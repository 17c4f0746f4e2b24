#include "mlde/wronskian.hpp"

#include "mlde/errors.hpp"
#include "mlde/operator.hpp"

#include <map>

namespace mlde {

namespace {

// polynomial in l = log q with series coefficients; absent powers are exactly 0
using LogPoly = std::map<int, Series>;

LogPoly mul(const LogPoly& a, const LogPoly& b) {
    LogPoly r;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            Series t = x * y;
            auto it = r.find(i + j);
            if (it == r.end())
                r.emplace(i + j, std::move(t));
            else
                it->second += t;
        }
    return r;
}

void accumulate(LogPoly& acc, const LogPoly& t, bool negate) {
    for (const auto& [i, x] : t) {
        auto it = acc.find(i);
        if (it == acc.end())
            acc.emplace(i, negate ? -x : x);
        else if (negate)
            it->second -= x;
        else
            it->second += x;
    }
}

LogPoly det(const std::vector<std::vector<LogPoly>>& m, const std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.size() == 1) return m[row][cols[0]];
    LogPoly acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> rest(cols);
        rest.erase(rest.begin() + static_cast<long>(k));
        accumulate(acc, mul(m[row][cols[k]], det(m, rest, row + 1)), k % 2 == 1);
    }
    return acc;
}

Series wronskian(const std::vector<LogSeries>& system) {
    const std::size_t n = system.size();
    if (n == 0) throw Error("empty solution system");
    std::vector<std::vector<LogPoly>> m(n, std::vector<LogPoly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        LogSeries f = system[j];
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) f = serre_derivative(f, Rational(2 * static_cast<long>(i) - 2));
            m[i][j][0] = f.plain();
            if (f.has_log()) m[i][j][1] = f.log_part();
        }
    }
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    LogPoly d = det(m, cols, 0);
    for (const auto& [k, s] : d)
        if (k > 0 && !s.empty()) throw Error("logarithmic terms do not cancel in the Wronskian");
    auto it = d.find(0);
    if (it == d.end()) throw Error("internal: empty determinant");
    return it->second;
}

}  // namespace

Series modular_wronskian(const std::vector<Series>& system) {
    std::vector<LogSeries> v;
    for (const auto& s : system) v.emplace_back(s);
    return wronskian(v);
}

Series modular_wronskian(const std::vector<LogSeries>& system) { return wronskian(system); }

}  // namespace mlde
