#include "mlde/polynomial.hpp"

#include "mlde/errors.hpp"
#include "mlde/series_json.hpp"

#include <cstdint>
#include <cstdio>
#include <set>

namespace mlde {

namespace detail {
extern const char* const kPolynomialJson;
}

namespace {

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : s) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<PolynomialData> load() {
    std::vector<PolynomialData> out;
    Json j = Json::parse(detail::kPolynomialJson);
    for (const auto& p : j.at("polynomials")) {
        PolynomialData d;
        d.name = p.at("name").get<std::string>();
        d.variables = p.at("variables").get<std::vector<std::string>>();
        d.degree = p.at("degree").get<int>();
        d.checksum = p.at("checksum").get<std::string>();
        for (const auto& t : p.at("terms")) {
            PolynomialTerm term;
            const auto& c = t.at(0);
            term.coeff = c.is_string() ? Integer(c.get<std::string>(), 10) : Integer(c.dump(), 10);
            term.exponents = t.at(1).get<std::vector<int>>();
            if (term.exponents.size() != d.variables.size())
                throw ParseError("polynomial " + d.name + " has a term of the wrong arity");
            d.terms.push_back(std::move(term));
        }
        if (polynomial_checksum(d) != d.checksum)
            throw ChecksumMismatch("polynomial " + d.name + " does not match its checksum");
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

std::string polynomial_checksum(const PolynomialData& p) {
    std::string canon;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        if (i) canon += ';';
        canon += p.terms[i].coeff.get_str() + ':';
        for (std::size_t k = 0; k < p.terms[i].exponents.size(); ++k) {
            if (k) canon += ',';
            canon += std::to_string(p.terms[i].exponents[k]);
        }
    }
    return fnv1a(canon);
}

const std::vector<PolynomialData>& polynomial_tables() {
    static const std::vector<PolynomialData> tables = load();
    return tables;
}

const PolynomialData& polynomial(const std::string& name) {
    for (const auto& p : polynomial_tables())
        if (p.name == name) return p;
    throw UnknownLabel("no polynomial named '" + name + "'");
}

Series evaluate_polynomial(const PolynomialData& p, const std::vector<Series>& args) {
    return Poly::from_data(p).evaluate(args);
}

Poly Poly::from_data(const PolynomialData& p) {
    Poly r(p.variables.size());
    for (const auto& t : p.terms) r.add_term(t.exponents, Rational(t.coeff));
    return r;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
    Poly r(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    r.add_term(m, Rational(1));
    return r;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly r(nvars);
    r.add_term(Monomial(nvars, 0), c);
    return r;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Poly::Monomial m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly Poly::partial(std::size_t i) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d(m);
        d[i] -= 1;
        r.add_term(d, c * m[i]);
    }
    return r;
}

Poly Poly::derivation(const std::vector<Poly>& images) const {
    Poly r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) r += partial(i) * images.at(i);
    return r;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
    if (images.size() != nvars_) throw Error("polynomial composed with the wrong number of images");
    std::size_t n = images.empty() ? 0 : images[0].nvars();
    std::vector<std::map<int, Poly>> powers(nvars_);
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto it = powers[i].find(e);
        if (it != powers[i].end()) return it->second;
        Poly r = Poly::constant(n, Rational(1));
        for (int k = 0; k < e; ++k) r = r * images[i];
        return powers[i].emplace(e, std::move(r)).first->second;
    };
    Poly r(n);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(n, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i]) t = t * power(i, m[i]);
        r += t;
    }
    return r;
}

int Poly::homogeneous_degree() const {
    std::set<int> d;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d.insert(s);
    }
    return d.size() == 1 ? *d.begin() : -1;
}

Series Poly::evaluate(const std::vector<Series>& args) const {
    if (args.size() != nvars_) throw Error("polynomial evaluated with the wrong number of arguments");
    if (terms_.empty()) throw Error("evaluating the zero polynomial needs a precision");
    // distinct powers of each argument, computed once
    std::vector<std::map<int, Series>> powers(nvars_);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i] > 0) powers[i].emplace(m[i], Series());
    for (std::size_t i = 0; i < nvars_; ++i)
        for (auto& [e, s] : powers[i]) s = pow(args[i], static_cast<long>(e));
    bool have = false;
    Series total;
    Rational constant_term(0);
    for (const auto& [m, c] : terms_) {
        Series t;
        bool started = false;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            const Series& p = powers[i].at(m[i]);
            t = started ? t * p : p;
            started = true;
        }
        if (!started) {
            constant_term += c;
            continue;
        }
        t *= c;
        total = have ? total + t : t;
        have = true;
    }
    if (!have) throw Error("constant polynomial evaluated without a precision");
    return sgn(constant_term) ? total + constant_term : total;
}

}  // namespace mlde
