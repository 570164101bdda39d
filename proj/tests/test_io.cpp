#include <doctest.h>

#include <cmath>
#include <limits>

#include "bernstein/errors.hpp"
#include "bernstein/io.hpp"
#include "oracles.hpp"

using namespace bernstein;

TEST_CASE("polynomial round trip") {
  oracle::Generator gen(71);
  for (int n = 0; n <= 8; ++n) {
    const LaurentPolynomial t = gen.laurent(n);
    CHECK(parse_polynomial(dump(to_json(t))) == t);
    CHECK(polynomial_from_json(to_json(t)) == t);
  }
  const LaurentPolynomial t = parse_polynomial(R"({"n": 1, "coeffs": [[0, 0], [-2, 0], [1, 0]]})");
  CHECK(t.coeff(0) == Complex(-2.0));
  CHECK(t.coeff(1) == Complex(1.0));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_polynomial("{\"n\": 1,\n \"coeffs\": [[0, 0], [1 0]]}");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 19);
  }
}

TEST_CASE("structural errors") {
  for (const char* text : {R"({"coeffs": [[1, 0]]})", R"({"n": 1, "coeffs": [[1, 0]]})",
                           R"({"n": -1, "coeffs": []})", R"({"n": 0, "coeffs": [[1]]})",
                           R"({"n": 0, "coeffs": [["a", 0]]})", R"({"n": 0.5, "coeffs": [[1, 0]]})", "[1, 2]"}) {
    CAPTURE(text);
    try {
      parse_polynomial(text);
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 1);
    }
  }
  CHECK_THROWS(read_file("/nonexistent/poly.json"));
}

TEST_CASE("float formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(dump(Json{{"a", 2.0}}) == R"({"a":2.0})");
  CHECK(dump(Json{{"a", 0.1}}) == R"({"a":0.10000000000000001})");
  CHECK(dump(Json{{"a", std::nan("")}, {"b", 1}}) == R"({"a":null,"b":1})");
  CHECK(dump(Json{{"a", -std::numeric_limits<double>::infinity()}}) == R"({"a":null})");
  const double x = 0.123456789012345678;
  CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("report and mean serialization") {
  const MeanResult m{MeanOrder::zero(), 2.0, 1e-12, MeanMethod::jensen_product};
  const Json j = to_json(m);
  CHECK(j["p"] == "0");
  CHECK(j["value"] == 2.0);
  CHECK(csv_row(m).rfind("0,2,", 0) == 0);

  VerificationReport r;
  r.claim = Claim::lemma_2_1;
  r.outcome = Outcome::passed;
  r.lhs = 0.5;
  r.rhs = 1.0;
  r.margin = 0.5;
  const Json rj = to_json(r);
  CHECK(rj["claim"] == "lemma-2-1");
  CHECK(rj["passed"] == true);
  CHECK(rj["outcome"] == "passed");
  CHECK(rj["witness"].is_null());
  std::vector<std::string> keys;
  for (const auto& [k, v] : rj.items()) {
    keys.push_back(k);
  }
  CHECK(keys == std::vector<std::string>{"claim", "passed", "outcome", "lhs", "rhs", "margin", "tolerance_used",
                                         "witness", "parameters", "details"});
}
