#include "mlde/rational.hpp"

#include "mlde/errors.hpp"

#include <numeric>

namespace mlde {

Rational make_rational(long num, long den) {
    if (den == 0) throw ParseError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ParseError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::string t(s);
    std::size_t i = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t k = i; k < t.size(); ++k)
        if (t[k] < '0' || t[k] > '9')
            throw ParseError("malformed rational '" + std::string(whole) + "'");
    if (t[0] == '+') t.erase(0, 1);
    return Integer(t, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-')
        throw ParseError("negative denominator in '" + std::string(text) + "'");
    return make_rational(num, parse_integer(den_text, text));
}

std::string to_string(const Rational& r) { return r.get_str(10); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw Error("integer " + z.get_str() + " exceeds machine range");
    return z.get_si();
}

long den_long(const Rational& r) { return to_long(r.get_den()); }

Rational rpow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw ZeroLeadingCoefficient("0 raised to a negative power");
        return rpow(1 / base, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

}  // namespace mlde
