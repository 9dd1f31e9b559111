#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "hopfkit/certify.hpp"
#include "hopfkit/errors.hpp"

using namespace hopfkit;

TEST_CASE("CycNumber JSON") {
  const CycNumber x = CycNumber::from_powers(12, {Rational(1, 3), Rational(-7, 2), 0, Rational(5)});
  const Json j = to_json(x);
  CHECK(j["conductor"] == 12);
  CHECK(j["coeffs"].size() == 4);
  CHECK(cyc_from_json(j) == x);
  CHECK(to_json(cyc_from_json(j)).dump() == j.dump());
  CHECK(j["coeffs"][0] == "1/3");

  // wrong length, noncanonical conductor, bad rationals
  CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"conductor": 12, "coeffs": ["1/1"]})")), ParseError);
  CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"conductor": 0, "coeffs": []})")), ParseError);
  CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"conductor": 3, "coeffs": ["1/0", "0/1"]})")), ParseError);
  CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"conductor": 3, "coeffs": ["x", "0/1"]})")), ParseError);
  CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"coeffs": []})")), ParseError);
}

TEST_CASE("Hopf algebra JSON round trips exactly") {
  for (const Family& f : {taft(3), h8p(3, 1), a4p(3)}) {
    const Json j = to_json(f.algebra);
    const HopfAlgebra back = hopf_from_json(j);
    CHECK(back == f.algebra);
    CHECK(to_json(back).dump() == j.dump());
    // zero products are omitted
    for (const auto& e : j["mult"]) CHECK(e.size() == 3);
  }
}

TEST_CASE("sidecars and data round trip") {
  const Family f = h8p(3, 1);
  const Json side = sidecar_json(f);
  const CandidateData c = candidates_from_json(side["candidates"], f.algebra.conductor);
  CHECK(to_json(c).dump() == side["candidates"].dump());
  CHECK(params_to_json(params_from_json(side["params"])).dump() == side["params"].dump());
  // certification from the parsed sidecar matches the in-memory one
  const auto a = certify("h8p", "p=3", f.algebra, c);
  const auto b = certify("h8p", "p=3", f.algebra, f.candidates);
  CHECK(to_json(a).dump() == to_json(b).dump());

  const YDDatum d = fun_dic_datum(3);
  const YDDatum e = datum_from_json(to_json(d));
  CHECK(e.label == d.label);
  CHECK(e.algebra == d.algebra);
  CHECK(e.chi == d.chi);
  CHECK(e.q == d.q);
}

TEST_CASE("a corrupted file names the failing axiom") {
  Json j = to_json(taft(2).algebra);
  // perturb one structure constant of the product
  auto& entry = j["mult"][3][2];
  for (auto& c : entry)
    if (c["coeffs"][0] != "0/1") {
      c["coeffs"][0] = "2/1";
      break;
    }
  const HopfAlgebra h = hopf_from_json(j);
  const auto r = verify_hopf(h);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.first_failure().empty());
}

TEST_CASE("file errors") {
  const std::string path = "hopfkit_io_test_empty.json";
  { std::ofstream(path).close(); }
  CHECK_THROWS_AS(read_json_file(path), ParseError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("does/not/exist.json"), ParseError);
  CHECK_THROWS_AS(hopf_from_json(Json::parse(R"({"dim": 2})")), ParseError);
  CHECK_THROWS_AS(hopf_from_json(Json::parse("[1, 2]")), ParseError);

  const std::string out = "hopfkit_io_test_out.json";
  write_json_file(out, to_json(taft(2).algebra));
  CHECK(hopf_from_json(read_json_file(out)) == taft(2).algebra);
  std::remove(out.c_str());
}
