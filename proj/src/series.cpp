#include "mlde/series.hpp"

#include "mlde/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace mlde {

long default_order() {
    if (const char* env = std::getenv("MLDE_DEFAULT_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return v;
    }
    return 50;
}

namespace {

long index_count(const Rational& span, long grid) {
    // span * grid is an integer by construction
    Rational n = span * grid;
    if (!is_integer(n)) throw Error("internal: truncation point off the exponent lattice");
    return to_long(n.get_num());
}

// Coefficient vector of s re-expressed on base `b`, grid `g`, with `size` slots.
void scatter(const Series& s, const Rational& b, long g, long size, std::vector<Rational>& out, bool negate) {
    const long step = g / s.grid();
    const long offset = index_count(s.base() - b, g);
    const auto& c = s.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        long k = offset + static_cast<long>(i) * step;
        if (k >= size) break;
        if (sgn(c[i]) == 0) continue;
        if (negate)
            out[k] -= c[i];
        else
            out[k] += c[i];
    }
}

long common_grid(const Series& a, const Series& b) {
    long g = lcm_long(a.grid(), b.grid());
    return lcm_long(g, den_long(Rational(a.base() - b.base())));
}

Series combine(const Series& a, const Series& b, bool subtract) {
    const long g = common_grid(a, b);
    const Rational p = std::min(a.precision(), b.precision());
    const Rational lo = std::min(a.base(), b.base());
    if (p <= lo) return Series::zero(p);
    const long size = index_count(p - lo, g);
    std::vector<Rational> out(size);
    scatter(a, lo, g, size, out, false);
    scatter(b, lo, g, size, out, subtract);
    return Series(lo, g, std::move(out));
}

}  // namespace

Series::Series() : base_(0), grid_(1) {}

Series::Series(Rational base, long grid, std::vector<Rational> coeffs)
    : base_(std::move(base)), grid_(grid), coeffs_(std::move(coeffs)) {
    if (grid_ < 1) throw Error("series grid must be positive");
    normalize();
}

Series Series::zero(const Rational& precision) { return Series(precision, 1, {}); }

Series Series::constant(const Rational& c, long order) {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(order + 1, 0L)));
    if (!v.empty()) v[0] = c;
    return Series(Rational(0), 1, std::move(v));
}

Series Series::monomial(const Rational& c, const Rational& e, const Rational& precision) {
    if (precision <= e) return zero(precision);
    long g = den_long(Rational(precision - e));
    long size = index_count(precision - e, g);
    std::vector<Rational> v(size);
    v[0] = c;
    return Series(e, g, std::move(v));
}

void Series::normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (first == coeffs_.end()) {
        base_ += make_rational(static_cast<long>(coeffs_.size()), grid_);
        coeffs_.clear();
        grid_ = 1;
        return;
    }
    long lead = static_cast<long>(first - coeffs_.begin());
    if (lead > 0) {
        base_ += make_rational(lead, grid_);
        coeffs_.erase(coeffs_.begin(), first);
    }
    long g = gcd_long(grid_, static_cast<long>(coeffs_.size()));
    for (std::size_t i = 1; i < coeffs_.size() && g > 1; ++i)
        if (sgn(coeffs_[i]) != 0) g = gcd_long(g, static_cast<long>(i));
    if (g > 1) {
        std::vector<Rational> r(coeffs_.size() / g);
        for (std::size_t j = 0; j < r.size(); ++j) r[j].swap(coeffs_[j * g]);
        coeffs_.swap(r);
        grid_ /= g;
    }
}

Rational Series::precision() const { return base_ + make_rational(static_cast<long>(coeffs_.size()), grid_); }

Rational Series::exponent(long index) const { return base_ + make_rational(index, grid_); }

const Rational& Series::leading() const {
    if (coeffs_.empty()) throw ZeroLeadingCoefficient("series has no known nonzero coefficient");
    return coeffs_[0];
}

Rational Series::coeff_at(const Rational& e) const {
    if (e >= precision())
        throw InsufficientOrder("coefficient of q^" + to_string(e) + " requested beyond precision q^" +
                                to_string(precision()));
    if (e < base_) return Rational(0);
    Rational k = (e - base_) * grid_;
    if (!is_integer(k)) return Rational(0);
    return coeffs_[to_long(k.get_num())];
}

Series Series::truncated(const Rational& p) const {
    if (p >= precision()) return *this;
    if (p <= base_) return zero(p);
    long n = to_long(ceil(Rational((p - base_) * grid_)));
    // the cut lands between lattice points: everything up to the next point is known
    // no lattice point lies between p and the next stored exponent
    return Series(base_, grid_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n));
}

Series Series::truncated_order(long n) const {
    if (n + 1 >= static_cast<long>(coeffs_.size())) return *this;
    if (n < 0) return zero(base_);
    return Series(base_, grid_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& o) { return *this = combine(*this, o, false); }
Series& Series::operator-=(const Series& o) { return *this = combine(*this, o, true); }
Series& Series::operator*=(const Series& o) { return *this = *this * o; }

Series& Series::operator*=(const Rational& c) {
    if (sgn(c) == 0) return *this = zero(precision());
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Series& Series::operator/=(const Rational& c) {
    if (sgn(c) == 0) throw Error("division of a series by zero");
    for (auto& x : coeffs_) x /= c;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    const Rational p = std::min(a.base_ + b.precision(), a.precision() + b.base_);
    const Rational lo = a.base_ + b.base_;
    if (a.empty() || b.empty() || p <= lo) return Series::zero(p);
    const long g = lcm_long(a.grid_, b.grid_);
    const long size = index_count(p - lo, g);
    const long sa = g / a.grid_, sb = g / b.grid_;
    std::vector<Rational> out(size);
    mpq_t t;
    mpq_init(t);
    const long na = static_cast<long>(a.coeffs_.size()), nb = static_cast<long>(b.coeffs_.size());
    for (long i = 0; i < na; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        const long ki = i * sa;
        if (ki >= size) break;
        for (long j = 0; j < nb; ++j) {
            long k = ki + j * sb;
            if (k >= size) break;
            if (sgn(b.coeffs_[j]) == 0) continue;
            mpq_mul(t, a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            mpq_add(out[k].get_mpq_t(), out[k].get_mpq_t(), t);
        }
    }
    mpq_clear(t);
    return Series(lo, g, std::move(out));
}

Series operator+(const Series& a, const Rational& c) {
    const Rational p = a.precision();
    if (sgn(c) == 0 || p <= 0) return a;
    return a + Series::monomial(c, Rational(0), p);
}

bool operator==(const Series& a, const Series& b) {
    return a.base_ == b.base_ && a.grid_ == b.grid_ && a.coeffs_ == b.coeffs_;
}

Series pow(const Series& a, const Rational& r) {
    if (a.empty()) {
        if (r == 0) throw ZeroLeadingCoefficient("0^0 is undefined for a series without known terms");
        if (r < 0) throw ZeroLeadingCoefficient("negative power of a series with no known nonzero term");
        // valuation at least base * r, nothing more is known
        return Series::zero(a.base() * r);
    }
    Rational scale(1);
    const Rational& c0 = a.leading();
    if (c0 != 1) {
        if (!is_integer(r))
            throw NonUnitBase("fractional power needs leading coefficient 1, got " + to_string(c0));
        scale = rpow(c0, to_long(r.get_num()));
    }
    const auto& u = a.coeffs();
    const long n = static_cast<long>(u.size());
    std::vector<Rational> un(u.begin(), u.end());
    if (c0 != 1)
        for (auto& x : un) x /= c0;
    std::vector<Rational> g(n);
    g[0] = 1;
    Rational acc, w, t;
    for (long m = 1; m < n; ++m) {
        acc = 0;
        for (long k = 1; k <= m; ++k) {
            if (sgn(un[k]) == 0) continue;
            // (r k - (m - k)) u_k g_{m-k}
            w = r * k - (m - k);
            mpq_mul(t.get_mpq_t(), w.get_mpq_t(), un[k].get_mpq_t());
            mpq_mul(t.get_mpq_t(), t.get_mpq_t(), g[m - k].get_mpq_t());
            mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
        }
        g[m] = acc / m;
    }
    if (scale != 1)
        for (auto& x : g) x *= scale;
    return Series(a.base() * r, a.grid(), std::move(g));
}

Series pow(const Series& a, long r) {
    if (r == 1) return a;
    if (r == 2) return a * a;
    return pow(a, Rational(r));
}

Series inverse(const Series& a) {
    if (a.empty()) throw ZeroLeadingCoefficient("cannot invert a series with no known nonzero coefficient");
    return pow(a, Rational(-1));
}

Series divide(const Series& a, const Series& b) { return a * inverse(b); }

Series substitute_power(const Series& a, long m) {
    if (m < 1) throw Error("substitute_power needs a positive integer");
    if (m == 1) return a;
    const auto& c = a.coeffs();
    std::vector<Rational> v(c.size() * m);
    for (std::size_t i = 0; i < c.size(); ++i) v[i * m] = c[i];
    return Series(a.base() * m, a.grid(), std::move(v));
}

Series euler_derivative(const Series& a) {
    std::vector<Rational> v(a.coeffs());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) v[i] *= a.exponent(static_cast<long>(i));
    return Series(a.base(), a.grid(), std::move(v));
}

Series euler_derivative(const Series& a, int times) {
    Series r = a;
    for (int i = 0; i < times; ++i) r = euler_derivative(r);
    return r;
}

Series integrate_q(const Series& a) {
    std::vector<Rational> v(a.coeffs());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Rational e = a.exponent(static_cast<long>(i));
        if (sgn(e) == 0) throw ConstantTermPresent("integrand has a nonzero q^0 term: " + to_string(v[i]));
        v[i] /= e;
    }
    return Series(a.base(), a.grid(), std::move(v));
}

Series shift(const Series& a, const Rational& e) {
    return Series(a.base() + e, a.grid(), a.coeffs());
}

namespace {

bool integral_steps(const Series& a, long depth, bool require_unit, Integer* content_den) {
    if (a.empty()) return false;
    if (a.precision() <= a.base() + depth)
        throw InsufficientOrder("series not known to depth " + std::to_string(depth));
    const Rational& c0 = a.leading();
    if (require_unit && c0 != 1) return false;
    Integer den(1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        Rational off = make_rational(static_cast<long>(i), a.grid());
        if (off > depth) break;
        Rational c = a.coeffs()[i] / c0;
        if (!is_integer(off)) {
            if (sgn(c) != 0) return false;
            continue;
        }
        if (sgn(c) < 0) return false;
        if (require_unit && !is_integer(c)) return false;
        den = lcm(den, c.get_den());
    }
    if (content_den) *content_den = den;
    return true;
}

}  // namespace

bool is_cft_type(const Series& a, long depth) { return integral_steps(a, depth, true, nullptr); }

bool is_character_type(const Series& a, long depth) { return integral_steps(a, depth, false, nullptr); }

std::optional<std::pair<Rational, Rational>> first_difference(const Series& a, const Series& b) {
    Series d = a - b;
    if (d.empty()) return std::nullopt;
    return std::make_pair(d.base(), d.leading());
}

bool equal_to_precision(const Series& a, const Series& b) { return !first_difference(a, b).has_value(); }

void require_precision(const Series& s, const Rational& p, const char* what) {
    if (s.precision() < p)
        throw InsufficientOrder(std::string(what) + " known only below q^" + to_string(s.precision()) +
                                ", needed below q^" + to_string(p));
}

}  // namespace mlde
