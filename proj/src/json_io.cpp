#include "pencils/json_io.hpp"

#include <cmath>

#include "pencils/errors.hpp"

namespace pencils::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  bad("expected a decimal string, got " + v.dump());
}

template <class T, class Parse>
Matrix<T> matrix_from_json(const json& j, std::size_t n, Parse parse) {
  if (!j.is_array() || j.size() != n) bad("matrix must have " + std::to_string(n) + " rows");
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) bad("matrix row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = parse(text_of(j[i][k]));
  }
  return m;
}

std::size_t dimension(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long>() < 1) bad("'n' must be a positive integer");
  return n.get<std::size_t>();
}

}  // namespace

int decimal_digits(long bits) { return static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))) + 1; }

std::string real_string(const Real& x) { return x.to_string(decimal_digits(x.precision())); }

Rational parse_decimal(std::string_view text) {
  std::string s(text);
  if (s.find('/') != std::string::npos) return parse_rational(s);
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exp10 = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) bad("bad exponent in '" + s + "'");
    } catch (const std::logic_error&) {
      bad("bad exponent in '" + s + "'");
    }
    s.resize(e);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    exp10 -= static_cast<long>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  if (s.empty() || s == "-" || s == "+") bad("not a number: '" + std::string(text) + "'");
  Rational q(parse_integer(s));
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  if (exp10 >= 0) q *= scale;
  else q /= scale;
  q.canonicalize();
  return q;
}

Real parse_real(const std::string& text, long precision) {
  Real r(0.0, precision);
  if (mpfr_set_str(r.raw(), text.c_str(), 10, MPFR_RNDN) != 0) bad("not a real number: '" + text + "'");
  return r;
}

json to_json(const BinaryForm& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(to_string(c));
  return {{"degree", f.degree()}, {"coeffs", coeffs}};
}

BinaryForm form_from_json(const json& j) {
  const json& c = field(j, "coeffs");
  if (!c.is_array() || c.empty()) bad("'coeffs' must be a nonempty array");
  std::vector<Integer> coeffs;
  for (const auto& v : c) coeffs.push_back(parse_integer(text_of(v)));
  if (j.contains("degree") && j["degree"] != static_cast<long>(coeffs.size()) - 1)
    bad("'degree' disagrees with the number of coefficients");
  return BinaryForm(std::move(coeffs));
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Pencil& p) { return {{"n", p.n()}, {"A", to_json(p.A)}, {"B", to_json(p.B)}}; }
json to_json(const RationalPencil& p) { return {{"n", p.n()}, {"A", to_json(p.A)}, {"B", to_json(p.B)}}; }

Pencil pencil_from_json(const json& j) {
  std::size_t n = dimension(j);
  auto parse = [](const std::string& s) { return parse_integer(s); };
  IntMatrix a = matrix_from_json<Integer>(field(j, "A"), n, parse);
  IntMatrix b = matrix_from_json<Integer>(field(j, "B"), n, parse);
  try {
    return Pencil(std::move(a), std::move(b));
  } catch (const Error& e) {
    bad(e.what());
  }
}

RationalPencil rational_pencil_from_json(const json& j) {
  std::size_t n = dimension(j);
  auto parse = [](const std::string& s) { return parse_rational(s); };
  RatMatrix a = matrix_from_json<Rational>(field(j, "A"), n, parse);
  RatMatrix b = matrix_from_json<Rational>(field(j, "B"), n, parse);
  try {
    return RationalPencil(std::move(a), std::move(b));
  } catch (const Error& e) {
    bad(e.what());
  }
}

json to_json(const GramMatrix& h) {
  json rows = json::array();
  for (std::size_t i = 0; i < h.n(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < h.n(); ++k) row.push_back(real_string(h(i, k)));
    rows.push_back(row);
  }
  return {{"n", h.n()},
          {"entries", rows},
          {"error_bound", h.error_bound.to_string(6)},
          {"precision", h.precision}};
}

GramMatrix gram_from_json(const json& j, long precision) {
  std::size_t n = dimension(j);
  if (j.contains("precision") && j["precision"].is_number_integer()) precision = j["precision"].get<long>();
  GramMatrix h;
  h.entries = matrix_from_json<Real>(field(j, "entries"), n,
                                     [&](const std::string& s) { return parse_real(s, precision); });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < i; ++k)
      if (h.entries(i, k) != h.entries(k, i)) bad("Gram matrix is not symmetric");
  h.precision = precision;
  h.error_bound = j.contains("error_bound") ? parse_real(text_of(j["error_bound"]), precision) : Real(0.0, precision);
  return h;
}

json to_json(const OrbitDatum& d) {
  json alpha = json::array();
  for (const auto& c : d.alpha.coeffs) alpha.push_back(to_string(c));
  return {{"f", to_json(d.f)}, {"alpha", alpha}, {"z", to_string(d.z)}};
}

OrbitDatum datum_from_json(const json& j) {
  OrbitDatum d;
  d.f = form_from_json(field(j, "f"));
  const json& a = field(j, "alpha");
  if (!a.is_array()) bad("'alpha' must be an array");
  std::vector<Rational> poly;
  for (const auto& v : a) poly.push_back(parse_rational(text_of(v)));
  if (d.f.degree() < 1 || d.f[0] == 0) throw Error(ErrorKind::InvalidDatum, "f needs degree >= 1 and f_0 != 0");
  d.alpha = AlgebraElement(d.f, std::move(poly));
  d.z = parse_rational(text_of(field(j, "z")));
  return d;
}

json to_json(const DivisorSpec& ds) { return {{"f", to_json(ds.f)}, {"U", to_json(ds.U)}, {"w", to_string(ds.w)}}; }

DivisorSpec divisor_from_json(const json& j) {
  return DivisorSpec{form_from_json(field(j, "f")), form_from_json(field(j, "U")), parse_rational(text_of(field(j, "w")))};
}

json to_json(const ReductionResult& r) {
  return {{"g", to_json(r.g.matrix())},
          {"det_g", r.det_g},
          {"reduced", to_json(r.reduced)},
          {"gram_reduced", to_json(r.gram_reduced)}};
}

json to_json(const BoundCheck& b) {
  return {{"lhs", real_string(b.lhs)},
          {"rhs", real_string(b.rhs)},
          {"error", b.error.to_string(6)},
          {"holds", b.holds},
          {"flags", b.flags}};
}

}  // namespace pencils::json_io
