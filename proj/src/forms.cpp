#include "mlde/forms.hpp"

#include "mlde/errors.hpp"

#include <map>
#include <mutex>

namespace mlde {

namespace {

std::vector<Integer> divisor_power_sums(long order, int k) {
    std::vector<Integer> s(order + 1);
    for (long d = 1; d <= order; ++d) {
        Integer dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        for (long n = d; n <= order; n += d) s[n] += dk;
    }
    return s;
}

Series from_integers(const Rational& base, const std::vector<Integer>& v) {
    std::vector<Rational> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
    return Series(base, 1, std::move(c));
}

void multiply_one_minus(std::vector<Integer>& a, long step, long r) {
    const long n = static_cast<long>(a.size()) - 1;
    if (step > n) return;
    for (long t = 0; t < (r > 0 ? r : -r); ++t) {
        if (r > 0)
            for (long k = n; k >= step; --k) a[k] -= a[k - step];
        else
            for (long k = step; k <= n; ++k) a[k] += a[k - step];
    }
}

// q^{shift} / prod_{n : n mod 5 in residues} (1 - q^n)
Series restricted_inverse_product(std::initializer_list<long> residues, const Rational& shift, long order) {
    std::vector<Integer> a(order + 1);
    a[0] = 1;
    for (long n = 1; n <= order; ++n)
        for (long r : residues)
            if (n % 5 == r) multiply_one_minus(a, n, -1);
    return from_integers(shift, a);
}

Series divisor_form(long order, const Integer& scale, long (*weight)(long)) {
    std::vector<Integer> a(order + 1);
    a[0] = 1;
    for (long d = 1; d <= order; ++d) {
        long w = weight(d);
        if (w == 0) continue;
        for (long n = d; n <= order; n += d) a[n] += scale * w;
    }
    return from_integers(Rational(0), a);
}

Series theta_series(long order) {
    std::vector<Integer> a(order + 1);
    a[0] = 1;
    for (long n = 1; n * n <= order; ++n) a[n * n] = 2;
    return from_integers(Rational(0), a);
}

Series psi_series(int which, long order) {
    Series rest = which == 1 ? restricted_inverse_product({1, 4}, Rational(-1, 60), order)
                             : restricted_inverse_product({2, 3}, Rational(11, 60), order);
    return eta_power(Rational(2, 5), order) * rest;
}

struct FormInfo {
    const char* name;
    Rational weight;
    long level;
    bool quasi;
};

const std::vector<FormInfo>& infos() {
    static const std::vector<FormInfo> v = {
        {"E2", Rational(2), 1, true},        {"E4", Rational(4), 1, false},
        {"E6", Rational(6), 1, false},       {"E8", Rational(8), 1, false},
        {"eta", Rational(1, 2), 1, false},   {"H2", Rational(2), 2, false},
        {"Delta2", Rational(2), 2, false},   {"I3", Rational(1), 3, false},
        {"Delta3", Rational(1), 3, false},   {"theta", Rational(1, 2), 4, false},
        {"Delta4", Rational(1, 2), 4, false}, {"psi1", Rational(1, 5), 5, false},
        {"psi2", Rational(1, 5), 5, false},  {"I15", Rational(1), 15, false},
        {"Delta15", Rational(1), 15, false},
    };
    return v;
}

Series build(const std::string& name, long order) {
    if (name == "E2" || name == "E4" || name == "E6" || name == "E8") return eisenstein(name[1] - '0', order);
    if (name == "eta") return eta(order);
    if (name == "H2")
        return divisor_form(order, Integer(24), [](long d) -> long { return d % 2 ? d : 0; });
    if (name == "I3")
        return divisor_form(order, Integer(6), [](long d) -> long { return d % 3 == 0 ? 0 : (d % 3 == 1 ? 1 : -1); });
    if (name == "theta") return theta_series(order);
    if (name == "Delta2") return eta_quotient({{2, 8}, {1, -4}}, order);
    if (name == "Delta3") return eta_quotient({{3, 3}, {1, -1}}, order);
    if (name == "Delta4") return eta_quotient({{4, 2}, {2, -1}}, order);
    if (name == "I15") return eta_quotient({{3, 2}, {5, 2}, {1, -1}, {15, -1}}, order);
    if (name == "Delta15") return eta_quotient({{1, 2}, {15, 2}, {3, -1}, {5, -1}}, order);
    if (name == "psi1") return psi_series(1, order);
    if (name == "psi2") return psi_series(2, order);
    throw UnknownForm("unknown form '" + name + "'");
}

}  // namespace

Series eisenstein(int k, long order) {
    Integer scale;
    switch (k) {
        case 2: scale = -24; break;
        case 4: scale = 240; break;
        case 6: scale = -504; break;
        case 8: scale = 480; break;
        default: throw UnknownForm("Eisenstein series E" + std::to_string(k) + " is not provided");
    }
    auto s = divisor_power_sums(order, k - 1);
    std::vector<Integer> a(order + 1);
    a[0] = 1;
    for (long n = 1; n <= order; ++n) a[n] = scale * s[n];
    return from_integers(Rational(0), a);
}

Series eta_product(long m, long r, long order) {
    std::vector<Integer> a(order + 1);
    a[0] = 1;
    for (long n = 1; m * n <= order; ++n) multiply_one_minus(a, m * n, r);
    return from_integers(Rational(0), a);
}

Series eta(long order) { return shift(eta_product(1, 1, order), Rational(1, 24)); }

Series eta_power(const Rational& r, long order) {
    if (is_integer(r)) return shift(eta_product(1, to_long(r.get_num()), order), r / 24);
    return shift(pow(eta_product(1, 1, order), r), r / 24);
}

Series eta_quotient(const std::vector<std::pair<long, long>>& factors, long order) {
    std::vector<Integer> a(order + 1);
    a[0] = 1;
    Rational base(0);
    for (auto [m, r] : factors) {
        for (long n = 1; m * n <= order; ++n) multiply_one_minus(a, m * n, r);
        base += make_rational(m * r, 24);
    }
    return from_integers(base, a);
}

const std::vector<std::string>& named_form_names() {
    static const std::vector<std::string> v = [] {
        std::vector<std::string> r;
        for (const auto& i : infos()) r.emplace_back(i.name);
        return r;
    }();
    return v;
}

std::string canonical_form_name(const std::string& name) {
    static const std::map<std::string, std::string> alias = {
        {"η", "eta"},        {"Δ" "2", "Delta2"}, {"Δ" "3", "Delta3"},
        {"Δ" "4", "Delta4"}, {"Δ" "15", "Delta15"}, {"θ", "theta"},
        {"ψ" "1", "psi1"},   {"ψ" "2", "psi2"},   {"D2", "Delta2"},
        {"D3", "Delta3"},         {"D4", "Delta4"},         {"D15", "Delta15"},
    };
    for (const auto& i : infos())
        if (name == i.name) return name;
    auto it = alias.find(name);
    if (it != alias.end()) return it->second;
    throw UnknownForm("unknown form '" + name + "'");
}

NamedForm named_form(const std::string& name, long order) {
    std::string c = canonical_form_name(name);
    for (const auto& i : infos())
        if (c == i.name) return NamedForm{c, i.weight, i.level, i.quasi, form_series(c, order)};
    throw UnknownForm("unknown form '" + name + "'");
}

Series form_series(const std::string& name, long order) {
    static std::mutex mu;
    static std::map<std::string, Series> cache;
    std::string c = canonical_form_name(name);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(c);
        if (it != cache.end() && it->second.order() >= order) return it->second.truncated_order(order);
    }
    Series s = build(c, order);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[c];
    if (slot.order() < s.order()) slot = s;
    return s;
}

}  // namespace mlde
