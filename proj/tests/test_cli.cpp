#include <doctest.h>

#include <sstream>

#include "ghostslopes/cli.hpp"
#include "ghostslopes/serialize.hpp"

using namespace ghostslopes;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json payload(const Run& r) { return Json::parse(r.out).at("payload"); }

const std::vector<std::string> base{"--p", "11", "--a", "2", "--s", "0"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail = base) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

template <class T>
void round_trip(const Json& j) {
  const T value = j.get<T>();
  CHECK(Json(value) == j);
}

}  // namespace

TEST_CASE("params") {
  const Run r = run({"params", "--p", "11", "--a", "2", "--s", "9"});
  CHECK(r.code == cli::ok);
  const Json p = payload(r);
  CHECK(p.at("delta") == 1);
  CHECK(p.at("t1") == 3);
  CHECK(p.at("t2") == 11);
  CHECK(p.at("k_eps") == 2);
  CHECK(Json::parse(r.out).at("command") == "params");
  round_trip<Setting>(p);
}

TEST_CASE("global flags may precede the subcommand") {
  const Run r = run({"--p", "11", "--a", "2", "--s", "9", "params", "--format", "csv"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("delta,1") != std::string::npos);
}

TEST_CASE("slopes") {
  Run r = run(with({"slopes", "--k-bullet", "0", "--bound", "3", "--format", "json"}));
  CHECK(r.code == cli::ok);
  const Json p = payload(r);
  CHECK(p.at("certified") == true);
  CHECK(p.at("entries") == Json::parse(R"([{"slope":"0/1","mult":1},{"slope":"3/1","mult":1}])"));
  round_trip<SlopeMultiset>(Json{{"bound", p["bound"]},
                                 {"certified", p["certified"]},
                                 {"truncation", p["truncation"]},
                                 {"total_multiplicity", p["total_multiplicity"]},
                                 {"entries", p["entries"]},
                                 {"segments", p["segments"]},
                                 {"certificate", p["certificate"]}});
  r = run(with({"slopes", "--k-bullet", "0", "--bound", "3", "--format", "csv"}));
  CHECK(r.out == "slope,mult\n0/1,1\n3/1,1\n");
  r = run(with({"slopes", "--k", "14", "--bound", "0", "--format", "tsv"}));
  CHECK(r.out == "slope\tmult\n0/1\t1\n");
}

TEST_CASE("certification failure exits with 3") {
  const Run r = run(with({"slopes", "--k-bullet", "0", "--bound", "40", "--n-max", "3"}));
  CHECK(r.code == cli::certification_failed);
  CHECK(payload(r).at("certified") == false);
}

TEST_CASE("usage and validation errors exit with 2") {
  CHECK(run({"params", "--p", "12", "--a", "2", "--s", "0"}).code == cli::usage_error);
  const Run bad_a = run({"params", "--p", "11", "--a", "7", "--s", "0"});
  CHECK(bad_a.code == cli::usage_error);
  CHECK(bad_a.err.find("a out of range") != std::string::npos);
  CHECK(run(with({"frobnicate"})).code == cli::usage_error);
  CHECK(run({"params"}).code == cli::usage_error);
  CHECK(run(with({"slopes", "--k", "15"})).code == cli::usage_error);
  CHECK(run(with({"slopes"})).code == cli::usage_error);
  CHECK(run(with({"dims", "--format", "xml"})).code == cli::usage_error);
  CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("strict and relaxed primes") {
  CHECK(run({"params", "--p", "7", "--a", "2", "--s", "0"}).code == cli::usage_error);
  const Run r = run({"params", "--p", "7", "--a", "2", "--s", "0", "--no-strict"});
  CHECK(r.code == cli::ok);
  CHECK(r.err.find("outside theorem range") != std::string::npos);
  CHECK(payload(r).at("outside_theorem_range") == true);
}

TEST_CASE("dims, ghost, np, delta and ns") {
  Run r = run(with({"dims", "--from", "0", "--to", "16", "--format", "csv"}));
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("12,124,3,26,20\n") != std::string::npos);
  r = run(with({"dims", "--to", "3"}));
  Json row = payload(r)[2];
  CHECK(row["k_bullet"] == 2);
  row.erase("k_bullet");
  row.erase("k");
  round_trip<DimTriple>(row);

  r = run(with({"ghost", "--k-bullet", "14642", "--n-to", "3", "--format", "tsv"}));
  CHECK(r.out == "n\tvaluation\n0\t0\n1\t0\n2\t7\n3\t12\n");
  r = run(with({"ghost", "--k", "14", "--hat-k", "14", "--n-to", "3", "--format", "csv"}));
  CHECK(r.out == "n,valuation\n0,0\n1,0\n2,2\n3,12\n");
  r = run(with({"ghost", "--k", "24", "--n-to", "3"}));
  CHECK(payload(r).at("coefficients")[2].at("valuation") == "inf");

  r = run(with({"np", "--k-bullet", "14642", "--N", "3"}));
  const NewtonPolygon np = payload(r).at("polygon").get<NewtonPolygon>();
  CHECK(np.vertices() == std::vector<Vertex>{{0, 0}, {1, 0}, {3, 12}});
  round_trip<NewtonPolygon>(payload(r).at("polygon"));

  r = run(with({"delta", "--k", "14"}));
  CHECK(payload(r).at("raw") == Json::parse(R"(["6/1","2/1","6/1"])"));
  Json profile = payload(r);
  profile["k"] = Json{{"k_bullet", profile["k"]["k_bullet"]}};
  round_trip<DeltaProfile>(profile);

  r = run(with({"ns", "--k-bullet", "14642", "--window", "100"}));
  const Json ns = payload(r);
  CHECK(ns.at("nested") == true);
  bool found = false;
  for (const Json& range : ns.at("ranges")) {
    if (range.at("k").at("k_bullet") == "1") {
      found = range.at("lo") == 1 && range.at("hi") == 3 && range.at("maximal") == true;
    }
  }
  CHECK(found);
}

TEST_CASE("verify") {
  const Run r = run(with({"verify", "--m", "4", "--k1", "14", "--pairs", "2", "--sharpness"}));
  CHECK(r.code == cli::ok);
  const Json p = payload(r);
  CHECK(p.at("local_constancy").at("all_equal") == true);
  round_trip<LocalConstancyReport>(Json{{"m", p["local_constancy"]["m"]},
                                        {"bound", p["local_constancy"]["bound"]},
                                        {"all_equal", p["local_constancy"]["all_equal"]},
                                        {"weights_exceed_m_minus_3", p["local_constancy"]["weights_exceed_m_minus_3"]},
                                        {"pairs", p["local_constancy"]["pairs"]}});
  for (const Json& m : p.at("main_proposition")) {
    CHECK(m.at("report").at("status") != "fail");
    round_trip<MainPropositionReport>(m.at("report"));
  }
  CHECK(p.at("sharpness").at("diagnostic_only") == true);
  CHECK(run(with({"verify", "--m", "3", "--k1", "14"})).code == cli::usage_error);
}

TEST_CASE("lemmas") {
  const Run r = run(with({"lemmas", "--k-bullet-max", "60", "--samples", "500"}));
  CHECK(r.code == cli::ok);
  const Json p = payload(r);
  CHECK(p.at("passed") == true);
  round_trip<VerificationReport>(p);
}

TEST_CASE("documents are deterministic; timing appears only on request") {
  const std::vector<std::string> args = with({"lemmas", "--k-bullet-max", "20", "--samples", "200"});
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seconds") == std::string::npos);
  const Run t = run(with({"lemmas", "--k-bullet-max", "20", "--samples", "200", "--timing"}));
  const Json meta = Json::parse(t.out).at("metadata");
  CHECK(meta.contains("timing_seconds"));
  CHECK(meta.contains("check_seconds"));
  CHECK(Json::parse(t.out).at("payload") == Json::parse(a.out).at("payload"));
}

TEST_CASE("scalar encodings") {
  CHECK(rational_json(rational(-3, 6)) == "-1/2");
  CHECK(rational_from_json(Json("7/1")) == 7);
  CHECK(bigint_from_json(bigint_json(pow(11, 30u))) == pow(11, 30u));
  ExtValuation v;
  from_json(Json("inf"), v);
  CHECK(v.is_infinite());
  CHECK_THROWS(from_json(Json("infinity"), v));
  round_trip<Weight>(Json{{"k_bullet", "146410000000000000000000001"}});
  round_trip<NSRange>(Json{{"k", Json{{"k_bullet", "1"}}}, {"L", 1}, {"center", 2}, {"lo", 1}, {"hi", 3}});
}
