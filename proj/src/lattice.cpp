#include "mlde/lattice.hpp"

#include "mlde/errors.hpp"
#include "mlde/forms.hpp"

#include <map>

namespace mlde {

LDL ldl_decomposition(const std::vector<std::vector<long>>& gram) {
    const std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw NotPositiveDefinite("gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw NotPositiveDefinite("gram matrix is not symmetric");
    // eliminate from the last coordinate so that each x_i only couples to x_j, j > i
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram[i][j]);
    LDL r;
    r.d.assign(n, Rational(0));
    r.l.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i][i]) <= 0) throw NotPositiveDefinite("gram matrix is not positive definite");
        r.d[i] = a[i][i];
        r.l[i][i] = 1;
        for (std::size_t j = i + 1; j < n; ++j) r.l[i][j] = a[i][j] / a[i][i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) a[j][k] -= r.l[i][j] * a[i][k];
    }
    return r;
}

Series series_from_terms(const std::map<Rational, Integer>& terms, const Rational& precision) {
    std::map<Rational, Integer> kept;
    for (const auto& [e, c] : terms)
        if (e < precision && c != 0) kept.emplace(e, c);
    if (kept.empty()) return Series::zero(precision);
    Rational base = kept.begin()->first;
    long grid = den_long(precision - base);
    for (const auto& [e, c] : kept) grid = lcm_long(grid, den_long(e - base));
    Rational span = (precision - base) * grid;
    std::vector<Rational> coeffs(static_cast<std::size_t>(to_long(span.get_num())));
    for (const auto& [e, c] : kept) {
        Rational idx = (e - base) * grid;
        coeffs[static_cast<std::size_t>(to_long(idx.get_num()))] = Rational(c);
    }
    return Series(base, grid, std::move(coeffs));
}

namespace {

Integer isqrt_floor(const Rational& b) {
    // floor(sqrt(num/den)) = floor(isqrt(num*den)/den)
    Integer prod = b.get_num() * b.get_den();
    Integer s;
    mpz_sqrt(s.get_mpz_t(), prod.get_mpz_t());
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), s.get_mpz_t(), b.get_den().get_mpz_t());
    return q;
}

// Ranges come from the exact LDL form; norms are accumulated as integers in
// the coordinates y = m (z + offset).
struct Enumerator {
    const LDL& f;
    const std::vector<std::vector<long>>& gram;
    std::vector<Rational> off;
    long m;
    Rational bound;                  // on <v,v>
    long scaled_bound;               // on m^2 <v,v>
    std::vector<long long> counts;   // indexed by m^2 <v,v>
    std::vector<Rational> x;
    std::vector<long> y;

    void run(std::size_t level, const Rational& used, long long partial) {
        Rational c = 0;
        long long h = 0;
        for (std::size_t j = level + 1; j < x.size(); ++j) {
            c += f.l[level][j] * x[j];
            h += gram[level][j] * static_cast<long long>(y[j]);
        }
        Rational room = (bound - used) / f.d[level];
        if (sgn(room) < 0) return;
        Integer r = isqrt_floor(room) + 1;
        Rational centre = -(off[level] + c);
        long lo = to_long(floor(centre) - r), hi = to_long(ceil(centre) + r);
        const long g = gram[level][level];
        const long shift = to_long(Rational(off[level] * m).get_num());
        for (long z = lo; z <= hi; ++z) {
            long yv = m * z + shift;
            long long p = partial + g * static_cast<long long>(yv) * yv + 2 * yv * h;
            y[level] = yv;
            if (level == 0) {
                if (p <= scaled_bound) ++counts[static_cast<std::size_t>(p)];
                continue;
            }
            Rational xv = Rational(z) + off[level];
            Rational t = xv + c;
            if (t * t > room) continue;
            x[level] = xv;
            run(level - 1, used + f.d[level] * t * t, p);
        }
    }
};

}  // namespace

Series lattice_theta(const IntegralLattice& lattice, long order) {
    const std::size_t n = lattice.rank();
    if (n == 0) return Series::one(order);
    LDL f = ldl_decomposition(lattice.gram);
    std::vector<Rational> off = lattice.offset;
    if (off.empty()) off.assign(n, Rational(0));
    if (off.size() != n) throw Error("coset offset has the wrong length");
    Rational precision(order + 1);
    long m = 1;
    for (const auto& o : off) m = lcm_long(m, den_long(o));
    const long scaled = 2 * (order + 1) * m * m;
    Enumerator e{f, lattice.gram, off, m, Rational(2 * (order + 1)), scaled,
                 std::vector<long long>(static_cast<std::size_t>(scaled) + 1, 0), std::vector<Rational>(n),
                 std::vector<long>(n, 0)};
    e.run(n - 1, Rational(0), 0);
    std::map<Rational, Integer> terms;
    for (long k = 0; k <= scaled; ++k)
        if (e.counts[static_cast<std::size_t>(k)] != 0)
            terms[make_rational(k, 2 * m * m)] = Integer(static_cast<long>(e.counts[static_cast<std::size_t>(k)]));
    return series_from_terms(terms, precision);
}

Series lattice_voa_character(const IntegralLattice& lattice, long order) {
    Series th = lattice_theta(lattice, order);
    long rank = static_cast<long>(lattice.rank());
    return th * eta_power(Rational(-rank), order + 2);
}

Rational minimal_weight(const IntegralLattice& lattice) {
    for (long order = 1;; order *= 2) {
        Series th = lattice_theta(lattice, order);
        if (!th.empty()) return th.base();
    }
}

std::vector<std::vector<long>> cartan_a(int n) {
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
}

// nodes 0..n-3 form a chain, n-2 and n-1 both attach to n-3
std::vector<std::vector<long>> cartan_d(int n) {
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (int i = 0; i + 1 < n - 1; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    c[n - 3][n - 2] = c[n - 2][n - 3] = -1;
    c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
    c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
    return c;
}

// Bourbaki labels 1..n mapped to 0..n-1: chain 1-3-4-5-...-n, node 2 on node 4
std::vector<std::vector<long>> cartan_e(int n) {
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
    link(1, 3);
    link(2, 4);
    for (int i = 3; i < n; ++i) link(i, i + 1);
    return c;
}

std::vector<Rational> fundamental_weight(const std::vector<std::vector<long>>& cartan, std::size_t i) {
    // solve cartan * w = e_i
    const std::size_t n = cartan.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) a[r][k] = Rational(cartan[r][k]);
        a[r][n] = r == i ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (sgn(a[p][col]) == 0) ++p;
        std::swap(a[p], a[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    std::vector<Rational> w(n);
    for (std::size_t r = 0; r < n; ++r) w[r] = a[r][n] / a[r][r];
    return w;
}

}  // namespace mlde
