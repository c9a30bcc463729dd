#include "pencils/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pencils/covariant.hpp"
#include "pencils/equidist.hpp"
#include "pencils/errors.hpp"
#include "pencils/heights.hpp"
#include "pencils/json_io.hpp"
#include "pencils/orbits.hpp"
#include "pencils/reduce.hpp"

namespace pencils::cli {

namespace {

using json_io::json;

constexpr const char* kMeasureCaveat =
    "entries uniform in a box [-B, B]; this is not the height-ball measure on pencils, so frequencies are a "
    "qualitative analogue only";

struct Options {
  std::string command;
  std::string input;
  std::string output;
  long precision = 256;
  std::uint64_t seed = 0;
  std::string eps_list = "2,0.8,0.5,0.3,0.1,0.05";
  std::optional<std::string> delta;
  std::string cutoff_x;
  long box_bound = 3;
  std::size_t count = 1000;
  int n = 4;
  std::string format = "json";
};

/// Usage and I/O failures; exit status 1.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> number_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Failure(std::string(flag) + ": not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw Failure(std::string(flag) + " needs at least one value");
  return out;
}

json read_input(const Options& o) {
  std::string text;
  std::size_t first = o.input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (o.input[first] == '{' || o.input[first] == '[')) {
    text = o.input;
  } else if (o.input.empty() || o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.input);
    if (!in) throw Failure("cannot read input file '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("input is not valid JSON: ") + e.what());
  }
}

double family_delta(const Options& o) { return o.delta ? json_io::parse_decimal(*o.delta).get_d() : 0.3; }

json representative_json(const RationalPencil& p, const std::vector<Rational>& one_bar) {
  json one = json::array();
  for (const auto& c : one_bar) one.push_back(to_string(c));
  json out = {{"pencil", json_io::to_json(p)}, {"one_bar", one}};
  try {
    IntegralRepresentative r = integralize(p, one_bar);
    json rone = json::array();
    for (const auto& c : r.one_bar) rone.push_back(to_string(c));
    out["integral"] = {{"pencil", json_io::to_json(r.pencil)}, {"basis", json_io::to_json(r.basis)}, {"one_bar", rone}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFound) throw;
    out["integral"] = nullptr;
  }
  return out;
}

/// Shortest decimal that reads back as x.
std::string csv_number(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// The artifact as text: JSON documents, or CSV for the table commands.
std::string execute(const Options& o) {
  const bool csv = o.format == "csv";
  if (csv && o.command != "sample" && o.command != "density")
    throw Failure("--format csv is only available for sample and density");
  const long prec = o.precision;

  if (o.command == "invariant") {
    Pencil p = json_io::pencil_from_json(read_input(o));
    return json_io::to_json(invariant_form(p)).dump(2);
  }
  if (o.command == "covariant") {
    Pencil p = json_io::pencil_from_json(read_input(o));
    return json_io::to_json(reduction_covariant(p, prec)).dump(2);
  }
  if (o.command == "reduce") {
    Pencil p = json_io::pencil_from_json(read_input(o));
    Rational delta = o.delta ? json_io::parse_decimal(*o.delta) : Rational(99, 100);
    return json_io::to_json(lll_reduce(p, delta, prec)).dump(2);
  }
  if (o.command == "orbit") {
    OrbitDatum d = json_io::datum_from_json(read_input(o));
    DatumPencil dp = pencil_from_datum(d);
    return representative_json(dp.pencil, dp.one_bar).dump(2);
  }
  if (o.command == "divisor-orbit") {
    DivisorSpec ds = json_io::divisor_from_json(read_input(o));
    OrbitDatum d = datum_from_divisor(ds);
    DatumPencil dp = pencil_from_datum(d);
    json out = representative_json(dp.pencil, dp.one_bar);
    out["datum"] = json_io::to_json(d);
    return out.dump(2);
  }
  if (o.command == "norm-check") {
    DivisorSpec ds = json_io::divisor_from_json(read_input(o));
    DatumPencil dp = pencil_from_datum(datum_from_divisor(ds));
    Estimate formula = norm_of_one_formula(ds, prec);
    Real direct = quadratic_value(reduction_covariant(dp.pencil, prec), dp.one_bar);
    Real slack = Real(1e-8, prec) + formula.error;
    json flags = json::array();
    for (const auto& t : norm_of_one_terms(ds, prec))
      if (t.boundary) flags.push_back("boundary_root");
    json out = {{"lhs", json_io::real_string(formula.value)},
                {"rhs", json_io::real_string(direct)},
                {"error", formula.error.to_string(6)},
                {"holds", abs(formula.value - direct) <= slack},
                {"flags", flags}};
    return out.dump(2);
  }
  if (o.command == "height-check") {
    DivisorSpec ds = json_io::divisor_from_json(read_input(o));
    std::vector<double> xs = number_list(o.cutoff_x, "--cutoff-X");
    if (xs.size() != 1) throw Failure("height-check needs exactly one --cutoff-X value");
    FamilyParams fp{xs[0], family_delta(o)};
    json out = {{"X", csv_number(fp.X)},
                {"delta", csv_number(fp.delta)},
                {"prop", json_io::to_json(prop_bound_check(ds.f, ds.U, fp, prec))},
                {"vector_length", json_io::to_json(vector_length_bound_check(ds, fp, prec))}};
    return out.dump(2);
  }
  if (o.command == "sample") {
    if (o.n < 2) throw Error(ErrorKind::RangeError, "--n must be at least 2");
    if (o.box_bound < 1) throw Error(ErrorKind::RangeError, "--box-bound must be positive");
    std::vector<double> eps = number_list(o.eps_list, "--eps-list");
    SampleBatch batch = sample_pencils(static_cast<std::size_t>(o.n), o.box_bound, o.count, o.seed, prec);
    std::vector<FrequencyRow> rows = small_vector_frequency(batch, eps);
    if (csv) {
      std::ostringstream s;
      s << "# seed=" << o.seed << "\n# B=" << o.box_bound << "\n# n=" << o.n << "\n# count=" << o.count
        << "\n# nondegenerate=" << batch.nondegenerate_count() << "\n# measure=" << kMeasureCaveat
        << "\neps,frequency,count\n";
      for (const auto& r : rows) s << csv_number(r.eps) << ',' << csv_number(r.frequency) << ',' << r.count << '\n';
      return s.str();
    }
    json table = json::array();
    for (const auto& r : rows) table.push_back({{"eps", r.eps}, {"frequency", r.frequency}, {"count", r.count}});
    json components = json::object();
    for (const auto& [m, c] : component_histogram(batch)) components[std::to_string(m)] = c;
    json out = {{"metadata",
                 {{"seed", o.seed},
                  {"B", o.box_bound},
                  {"n", o.n},
                  {"count", o.count},
                  {"nondegenerate", batch.nondegenerate_count()},
                  {"measure", kMeasureCaveat}}},
                {"frequency", table},
                {"components", components}};
    return out.dump(2);
  }
  if (o.command == "density") {
    if (o.n < 2) throw Error(ErrorKind::RangeError, "--n must be at least 2");
    std::vector<double> xs = number_list(o.cutoff_x.empty() ? "10,100,1000" : o.cutoff_x, "--cutoff-X");
    double delta = family_delta(o);
    std::vector<DensityRow> rows = density_trend(o.n, delta, xs, o.count, o.seed);
    if (csv) {
      std::ostringstream s;
      s << "# seed=" << o.seed << "\n# n=" << o.n << "\n# delta=" << csv_number(delta)
        << "\n# samples_per_X=" << o.count
        << "\n# measure=coefficients uniform in (-X, X)\nX,fraction,count\n";
      for (const auto& r : rows) s << csv_number(r.X) << ',' << csv_number(r.fraction) << ',' << r.count << '\n';
      return s.str();
    }
    json table = json::array();
    for (const auto& r : rows) table.push_back({{"X", r.X}, {"fraction", r.fraction}, {"count", r.count}});
    json out = {{"metadata",
                 {{"seed", o.seed},
                  {"n", o.n},
                  {"delta", delta},
                  {"samples_per_X", o.count},
                  {"measure", "coefficients uniform in (-X, X)"}}},
                {"density", table}};
    return out.dump(2);
  }
  throw Failure("unknown command '" + o.command + "'");
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty() || o.output == "-") {
    out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    return;
  }
  std::ofstream f(o.output);
  f << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  if (!f) throw Failure("cannot write output file '" + o.output + "'");
}

json error_object(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reduction theory of pencils of integral symmetric matrices", "pencils"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"invariant", "invariant binary form of a pencil"},
      {"covariant", "reduction covariant H of a pencil"},
      {"reduce", "LLL reduction of a pencil through its covariant"},
      {"orbit", "pencil of an algebra datum (f, alpha, z), with an integral representative"},
      {"divisor-orbit", "orbit datum and pencil of a divisor on y^2 = f"},
      {"norm-check", "norm of 1-bar: root formula against the covariant"},
      {"height-check", "both height inequalities for a divisor"},
      {"sample", "frequency of small covariant vectors over random pencils"},
      {"density", "fraction of random forms in the height family"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&o, name = std::string(name)] { o.command = name; });
  }
  app.add_option("--input", o.input, "input JSON file, inline JSON, or - for stdin");
  app.add_option("--output", o.output, "output file (stdout when omitted)");
  app.add_option("--precision", o.precision, "working precision in bits")->check(CLI::Range(32L, 1L << 20));
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--eps-list", o.eps_list, "comma separated, descending eps values");
  app.add_option("--delta", o.delta, "LLL parameter for reduce (default 0.99), family slack otherwise (default 0.3)");
  app.add_option("--cutoff-X", o.cutoff_x, "height cutoff; a comma separated list for density");
  app.add_option("--box-bound", o.box_bound, "entry bound B for sample");
  app.add_option("--count", o.count, "items for sample, samples per X for density");
  app.add_option("--n", o.n, "dimension for sample and density");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json_io::json(error_object("UsageError", e.what())).dump() << "\n";
    return 1;
  }

  try {
    emit(o, execute(o), out);
    return 0;
  } catch (const Error& e) {
    std::string kind(to_string(e.kind()));
    if (e.kind() == ErrorKind::ParseError) {
      err << error_object(kind, e.what()).dump() << "\n";
      return 1;
    }
    json obj = error_object(kind, e.what());
    err << obj.dump() << "\n";
    try {
      emit(o, obj.dump(2), out);
    } catch (const Failure&) {
    }
    return 2;
  } catch (const Failure& e) {
    err << error_object("UsageError", e.what()).dump() << "\n";
    return 1;
  } catch (const json_io::json::exception& e) {
    err << error_object("ParseError", e.what()).dump() << "\n";
    return 1;
  }
}

}  // namespace pencils::cli
