#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "pencils/covariant.hpp"
#include "pencils/forms.hpp"
#include "pencils/heights.hpp"
#include "pencils/orbits.hpp"
#include "pencils/pencil.hpp"
#include "pencils/reduce.hpp"

namespace pencils::json_io {

using nlohmann::json;

/// Significant decimal digits that represent `bits` of binary precision.
int decimal_digits(long bits);
std::string real_string(const Real& x);
/// Accepts integers, "p/q" and plain decimals such as "0.99" or "-1.5e-3".
Rational parse_decimal(std::string_view text);
Real parse_real(const std::string& text, long precision);

json to_json(const BinaryForm& f);
BinaryForm form_from_json(const json& j);

json to_json(const IntMatrix& m);
json to_json(const RatMatrix& m);
json to_json(const Pencil& p);
json to_json(const RationalPencil& p);
Pencil pencil_from_json(const json& j);
RationalPencil rational_pencil_from_json(const json& j);

json to_json(const GramMatrix& h);
GramMatrix gram_from_json(const json& j, long precision);

json to_json(const OrbitDatum& d);
OrbitDatum datum_from_json(const json& j);
json to_json(const DivisorSpec& ds);
DivisorSpec divisor_from_json(const json& j);

json to_json(const ReductionResult& r);
json to_json(const BoundCheck& b);

}  // namespace pencils::json_io
