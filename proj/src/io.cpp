#include "bernstein/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

void dump_to(const Json& j, std::string& out) {
  switch (j.type()) {
  case Json::value_t::object: {
    out += '{';
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += Json(key).dump();
      out += ':';
      dump_to(value, out);
    }
    out += '}';
    break;
  }
  case Json::value_t::array: {
    out += '[';
    bool first = true;
    for (const auto& value : j) {
      if (!first) {
        out += ',';
      }
      first = false;
      dump_to(value, out);
    }
    out += ']';
    break;
  }
  case Json::value_t::number_float: {
    const double x = j.get<double>();
    if (!std::isfinite(x)) {
      out += "null";
    } else {
      std::string text = format_double(x);
      // Keep integral floats recognisable as floats.
      if (text.find_first_of(".eE") == std::string::npos) {
        text += ".0";
      }
      out += text;
    }
    break;
  }
  default:
    out += j.dump();
  }
}

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

} // namespace

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(what), line_(line), column_(column) {}

std::string format_double(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string dump(const Json& j) {
  std::string out;
  dump_to(j, out);
  return out;
}

Json to_json(const LaurentPolynomial& t) {
  Json coeffs = Json::array();
  for (const Complex c : t.coeffs()) {
    coeffs.push_back(Json::array({c.real(), c.imag()}));
  }
  return Json{{"n", t.degree_bound()}, {"coeffs", std::move(coeffs)}};
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  const auto fail = [](const std::string& what) { return ParseError(what, 1, 1); };
  if (!j.is_object()) {
    throw fail("polynomial must be a JSON object");
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw fail("field \"n\" must be an integer");
  }
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > 100000) {
    throw fail("field \"n\" out of range");
  }
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw fail("field \"coeffs\" must be an array");
  }
  const Json& coeffs = j["coeffs"];
  if (static_cast<long long>(coeffs.size()) != 2 * n + 1) {
    throw fail("\"coeffs\" has " + std::to_string(coeffs.size()) + " entries, expected 2n+1 = " +
               std::to_string(2 * n + 1));
  }
  CoeffVector c(2 * n + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Json& pair = coeffs[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw fail("coefficient " + std::to_string(k) + " must be [re, im]");
    }
    c[static_cast<Eigen::Index>(k)] = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return {static_cast<int>(n), std::move(c)};
}

LaurentPolynomial parse_polynomial(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, column);
  }
  return polynomial_from_json(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LaurentPolynomial read_polynomial_file(const std::string& path) { return parse_polynomial(read_file(path)); }

Json to_json(const MeanResult& r) {
  return Json{{"p", to_string(r.p)},
              {"value", r.value},
              {"err", r.err_estimate},
              {"method", std::string(to_string(r.method))}};
}

Json to_json(const VerificationReport& r) {
  return Json{{"claim", std::string(to_string(r.claim))},
              {"passed", r.passed()},
              {"outcome", std::string(to_string(r.outcome))},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"margin", r.margin},
              {"tolerance_used", r.tolerance_used},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
              {"parameters", r.parameters},
              {"details", r.details}};
}

Json to_json(const RatioTrace& t) {
  Json history = Json::array();
  for (const auto& [iteration, ratio] : downsample(t.history)) {
    history.push_back(Json::array({iteration, ratio}));
  }
  return Json{{"n", t.n},
              {"p", to_string(t.p)},
              {"best_ratio", t.best_ratio},
              {"best_poly", to_json(t.best_poly)},
              {"iterations", t.iterations},
              {"evaluations", t.evaluations},
              {"max_evaluated_ratio", t.max_evaluated_ratio},
              {"inconsistency", t.inconsistency},
              {"history", std::move(history)}};
}

Json to_json(const QuadratureConfig& c) {
  return Json{{"start_nodes", c.start_nodes}, {"max_nodes", c.max_nodes}, {"rel_tol", c.rel_tol}};
}

std::string csv_row(const MeanResult& r) {
  return to_string(r.p) + "," + format_double(r.value) + "," + format_double(r.err_estimate) + "," +
         std::string(to_string(r.method));
}

} // namespace bernstein
