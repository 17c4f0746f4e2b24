#pragma once

#include "mlde/log_series.hpp"

#include "json.hpp"

#include <string>

namespace mlde {

using Json = nlohmann::ordered_json;

Json to_json(const Series& s);
Json to_json(const LogSeries& s);
Json to_json(const Rational& r);

Series series_from_json(const Json& j);
// Accepts series without "log_coeffs" as well.
LogSeries log_series_from_json(const Json& j);
Rational rational_from_json(const Json& j);

std::string dump_series(const Series& s);
Series parse_series(const std::string& text);

}  // namespace mlde
