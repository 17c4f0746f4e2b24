#include "mlde/series_json.hpp"

#include "mlde/errors.hpp"

namespace mlde {

namespace {

Json coeff_array(const Series& s) {
    Json a = Json::array();
    for (const auto& c : s.coeffs()) a.push_back(to_string(c));
    return a;
}

Series read_part(const Json& j, const char* key, const Rational& base, long grid) {
    std::vector<Rational> v;
    for (const auto& c : j.at(key)) v.push_back(rational_from_json(c));
    return Series(base, grid, std::move(v));
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
    throw ParseError("expected a rational string, got " + j.dump());
}

Json to_json(const Series& s) {
    Json j;
    j["base_exponent"] = to_string(s.base());
    j["grid"] = s.grid();
    j["order"] = s.order();
    j["coeffs"] = coeff_array(s);
    return j;
}

// Both parts are written on a shared base and grid so that one header
// describes both coefficient lists.
Json to_json(const LogSeries& s) {
    if (!s.has_log()) return to_json(s.plain());
    Rational p = s.precision();
    Series plain = s.plain().truncated(p), lg = s.log_part().truncated(p);
    Rational lo = std::min(plain.base(), lg.base());
    long g = lcm_long(lcm_long(plain.grid(), lg.grid()),
                      lcm_long(den_long(Rational(plain.base() - lo)), den_long(Rational(lg.base() - lo))));
    g = lcm_long(g, den_long(Rational(p - lo)));
    long size = to_long(Rational((p - lo) * g).get_num());
    auto spread = [&](const Series& x) {
        Json a = Json::array();
        std::vector<Rational> v(size);
        for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
            Rational k = (x.exponent(static_cast<long>(i)) - lo) * g;
            v[to_long(k.get_num())] = x.coeffs()[i];
        }
        for (const auto& c : v) a.push_back(to_string(c));
        return a;
    };
    Json j;
    j["base_exponent"] = to_string(lo);
    j["grid"] = g;
    j["order"] = size - 1;
    j["coeffs"] = spread(plain);
    j["log_coeffs"] = spread(lg);
    return j;
}

Series series_from_json(const Json& j) {
    try {
        Rational base = rational_from_json(j.at("base_exponent"));
        long grid = j.at("grid").get<long>();
        if (grid < 1) throw ParseError("grid must be a positive integer");
        Series s = read_part(j, "coeffs", base, grid);
        if (j.contains("order") && j.at("order").get<long>() + 1 != static_cast<long>(j.at("coeffs").size()))
            throw ParseError("order does not match the number of coefficients");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed series JSON: ") + e.what());
    }
}

LogSeries log_series_from_json(const Json& j) {
    Series plain = series_from_json(j);
    if (!j.contains("log_coeffs")) return LogSeries(plain);
    try {
        Rational base = rational_from_json(j.at("base_exponent"));
        long grid = j.at("grid").get<long>();
        if (j.at("log_coeffs").size() != j.at("coeffs").size())
            throw ParseError("log_coeffs and coeffs differ in length");
        return LogSeries(plain, read_part(j, "log_coeffs", base, grid));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed series JSON: ") + e.what());
    }
}

std::string dump_series(const Series& s) { return to_json(s).dump(); }

Series parse_series(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return series_from_json(j);
}

}  // namespace mlde
