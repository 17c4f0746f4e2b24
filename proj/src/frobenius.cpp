#include "mlde/frobenius.hpp"

#include "mlde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace mlde {

namespace {

long coefficient_grid(const OperatorCoeffs& c) {
    long g = 1;
    for (const auto& s : c) {
        if (s.empty()) continue;
        if (s.base() < 0) throw Error("operator coefficient with a negative q-power");
        g = lcm_long(g, s.grid());
        g = lcm_long(g, den_long(s.base()));
    }
    return g;
}

// c_j as dense vectors on grid g starting at q^0, length n+1
std::vector<std::vector<Rational>> dense(const OperatorCoeffs& c, long g, long n) {
    std::vector<std::vector<Rational>> out(c.size(), std::vector<Rational>(n + 1));
    for (std::size_t j = 0; j < c.size(); ++j) {
        require_precision(c[j], make_rational(n + 1, g), "operator coefficient");
        const Series& s = c[j];
        for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
            Rational k = s.exponent(static_cast<long>(i)) * g;
            long idx = to_long(k.get_num());
            if (idx > n) break;
            out[j][idx] = s.coeffs()[i];
        }
    }
    return out;
}

std::vector<Rational> poly_div_linear(const std::vector<Rational>& p, const Rational& r) {
    // p(x) = (x - r) q(x), exact
    const std::size_t n = p.size() - 1;
    std::vector<Rational> q(n);
    Rational carry(0);
    for (std::size_t i = n; i-- > 0;) {
        carry = p[i + 1] + carry * r;
        q[i] = carry;
    }
    return q;
}

void trim(std::vector<Rational>& p) {
    while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Integer, int>> f;
    for (Integer d = 2; d * d <= n && d < 2000000; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        f.emplace_back(d, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    std::vector<Integer> out{Integer(1)};
    for (auto& [p, e] : f) {
        std::size_t m = out.size();
        Integer pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

// Complex roots by Aberth iteration, as candidates for exact checks.
std::vector<std::complex<long double>> numeric_roots(const std::vector<Rational>& p) {
    using C = std::complex<long double>;
    const std::size_t n = p.size() - 1;
    std::vector<C> a(n + 1);
    for (std::size_t i = 0; i <= n; ++i) a[i] = C(static_cast<long double>(p[i].get_d() / p[n].get_d()), 0);
    auto eval = [&](C x, C& d) {
        C v = 0;
        d = 0;
        for (std::size_t i = n + 1; i-- > 0;) {
            d = d * x + v;
            v = v * x + a[i];
        }
        return v;
    };
    long double bound = 1;
    for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, 1 + std::abs(a[i]));
    std::vector<C> z(n);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(bound * 0.5L, 2 * 3.14159265358979323846L * (k + 0.25L) / n);
    for (int it = 0; it < 2000; ++it) {
        long double move = 0;
        for (std::size_t k = 0; k < n; ++k) {
            C d;
            C v = eval(z[k], d);
            if (v == C(0)) continue;
            C ratio = v / d;
            C s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) s += C(1) / (z[k] - z[j]);
            C w = ratio / (C(1) - ratio * s);
            z[k] -= w;
            move = std::max(move, std::abs(w));
        }
        if (move < 1e-30L) break;
    }
    return z;
}

}  // namespace

Rational evaluate_polynomial(const std::vector<Rational>& p, const Rational& x) {
    Rational v(0);
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& poly) {
    std::vector<Rational> p = poly;
    trim(p);
    std::vector<Rational> roots;
    while (p.size() > 1 && sgn(p[0]) == 0) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }
    if (p.size() > 1) {
        Integer den(1);
        for (const auto& c : p) den = lcm(den, c.get_den());
        Integer lead = Rational(p.back() * den).get_num();
        std::vector<Integer> qs = divisors(lead);
        bool progress = true;
        while (p.size() > 1 && progress) {
            progress = false;
            for (const auto& z : numeric_roots(p)) {
                long double scale = std::max<long double>(1, std::abs(z.real()));
                if (std::abs(z.imag()) > 1e-6L * scale) continue;
                for (const auto& q : qs) {
                    long double t = z.real() * q.get_d();
                    if (std::abs(t) > 1e30L) continue;
                    Integer c(static_cast<double>(std::llround(t)));
                    for (int delta = -1; delta <= 1 && !progress; ++delta) {
                        Rational r(c + delta, q);
                        r.canonicalize();
                        if (sgn(evaluate_polynomial(p, r)) == 0) {
                            roots.push_back(r);
                            p = poly_div_linear(p, r);
                            progress = true;
                        }
                    }
                    if (progress) break;
                }
                if (progress) break;
            }
        }
    }
    if (p.size() > 1) {
        std::string s;
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
        throw NonRationalRoot("indicial polynomial has a factor without rational roots: [" + s + "]");
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rational> indicial_polynomial(const MLDEOperator& op) {
    OperatorCoeffs c = op.coefficients(0);
    std::vector<Rational> p(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) p[j] = c[j].coeff_at(Rational(0));
    return p;
}

IndicialReport indicial(const MLDEOperator& op) {
    IndicialReport r;
    r.grid = coefficient_grid(op.coefficients(1));
    r.roots = rational_roots(indicial_polynomial(op));
    r.root_sum = 0;
    for (const auto& x : r.roots) r.root_sum += x;
    for (std::size_t i = 0; i < r.roots.size(); ++i)
        for (std::size_t j = i + 1; j < r.roots.size(); ++j) {
            Rational d = (r.roots[j] - r.roots[i]) * r.grid;
            if (sgn(d) == 0)
                r.degenerate.emplace_back(i, j);
            else if (is_integer(d))
                r.resonant.emplace_back(i, j);
        }
    return r;
}

namespace {

struct Recursion {
    long g;
    long n;
    Rational alpha;
    std::vector<std::vector<Rational>> c;  // c[j][i]
    std::vector<std::vector<Rational>> pw;  // pw[m][j] = (alpha + m/g)^j

    Recursion(const MLDEOperator& op, const Rational& a, long order) : alpha(a) {
        OperatorCoeffs raw = op.coefficients(order + 1);
        g = coefficient_grid(raw);
        n = order;
        raw = op.coefficients(order / g + 2);
        c = dense(raw, g, n);
        pw.assign(n + 1, std::vector<Rational>(c.size()));
        for (long m = 0; m <= n; ++m) {
            Rational e = alpha + make_rational(m, g);
            pw[m][0] = 1;
            for (std::size_t j = 1; j < c.size(); ++j) pw[m][j] = pw[m][j - 1] * e;
        }
    }

    Rational P(long m) const {
        Rational v(0);
        for (std::size_t j = 0; j < c.size(); ++j) v += c[j][0] * pw[m][j];
        return v;
    }

    Rational dP(long m) const {
        Rational v(0), e = alpha + make_rational(m, g), p(1);
        for (std::size_t j = 1; j < c.size(); ++j) {
            v += c[j][0] * p * Rational(static_cast<long>(j));
            p *= e;
        }
        return v;
    }

    // sum_{i=1}^{m} sum_j c_j[i] (alpha + (m-i)/g)^j a_{m-i}
    Rational tail(const std::vector<Rational>& a, long m) const {
        Rational acc(0), t;
        for (long i = 1; i <= m; ++i) {
            const Rational& am = a[m - i];
            if (sgn(am) == 0) continue;
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (sgn(c[j][i]) == 0) continue;
                mpq_mul(t.get_mpq_t(), c[j][i].get_mpq_t(), pw[m - i][j].get_mpq_t());
                mpq_mul(t.get_mpq_t(), t.get_mpq_t(), am.get_mpq_t());
                mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
            }
        }
        return acc;
    }
};

Series solve(const MLDEOperator& op, const Rational& alpha, long order, bool lenient) {
    Recursion rec(op, alpha, order);
    if (sgn(rec.P(0)) != 0)
        throw NotIndicialRoot(to_string(alpha) + " is not a root of the indicial polynomial of " + op.tag());
    std::vector<Rational> a(order + 1);
    a[0] = 1;
    for (long m = 1; m <= order; ++m) {
        Rational rhs = -rec.tail(a, m);
        Rational pm = rec.P(m);
        if (sgn(pm) == 0) {
            if (lenient && sgn(rhs) == 0) continue;
            throw Resonance(m, "recursion coefficient vanishes at q^" + to_string(Rational(alpha + make_rational(m, rec.g))) +
                                   " for " + op.tag());
        }
        a[m] = rhs / pm;
    }
    return Series(alpha, rec.g, std::move(a));
}

}  // namespace

Series frobenius_solve(const MLDEOperator& op, const Rational& alpha, long order) {
    return solve(op, alpha, order, false);
}

Series frobenius_solve_lenient(const MLDEOperator& op, const Rational& alpha, long order) {
    return solve(op, alpha, order, true);
}

LogSeries frobenius_solve_log(const MLDEOperator& op, const Rational& alpha, long order) {
    IndicialReport rep = indicial(op);
    long mult = std::count(rep.roots.begin(), rep.roots.end(), alpha);
    if (mult == 0) throw NotIndicialRoot(to_string(alpha) + " is not an indicial root of " + op.tag());
    std::vector<long> gaps;
    for (const auto& r : rep.roots) {
        Rational d = (r - alpha) * rep.grid;
        if (sgn(d) > 0 && is_integer(d)) gaps.push_back(to_long(d.get_num()));
    }
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    if (mult > 2) throw Error("indicial root of multiplicity above 2 needs deeper logarithms");
    if (mult == 1 && gaps.empty())
        throw NoLogNeeded(to_string(alpha) + " is a simple root without resonance for " + op.tag());
    if (mult == 2 && !gaps.empty())
        throw Error("double root with an integer gap is not supported");
    if (gaps.size() > 1) throw Error("several resonances above one root are not supported");

    Recursion rec(op, alpha, order);
    const long m = mult == 2 ? 0 : gaps.front();
    if (m > order) throw InsufficientOrder("resonance lies beyond the requested order");
    const Rational upper = alpha + make_rational(m, rec.g);
    if (mult == 1 && sgn(rec.dP(m)) == 0) throw Error("resonant upper root is not simple");

    // upper solution on the same grid, padded to start at alpha
    Series g = frobenius_solve(op, upper, order - m);
    std::vector<Rational> gv(order + 1);
    for (long i = 0; i + m <= order; ++i) gv[i + m] = g.coeff_at(Rational(upper + make_rational(i, rec.g)));

    // rhs_n = [sum_j j c_j D^{j-1} g] at q^{alpha + n/g}
    auto log_forcing = [&](long n) {
        Rational acc(0);
        for (long i = 0; i <= n; ++i) {
            const Rational& gi = gv[n - i];
            if (sgn(gi) == 0) continue;
            Rational e = alpha + make_rational(n - i, rec.g), p(1);
            for (std::size_t j = 1; j < rec.c.size(); ++j) {
                acc += rec.c[j][i] * p * gi * Rational(static_cast<long>(j));
                p *= e;
            }
        }
        return acc;
    };

    std::vector<Rational> h(order + 1);
    Rational lambda(1);
    h[0] = mult == 2 ? 0 : 1;
    for (long n = 1; n <= order; ++n) {
        Rational rhs = -rec.tail(h, n);
        if (n == m) {
            // P(upper) = 0: fixes the multiple of the log term, h_m = 0
            lambda = rhs / (rec.dP(m) * gv[m]);
            h[n] = 0;
            continue;
        }
        if (n > m || mult == 2) rhs -= lambda * log_forcing(n);
        h[n] = rhs / rec.P(n);
    }
    return LogSeries(Series(alpha, rec.g, std::move(h)), g * lambda);
}

}  // namespace mlde
