#include "ghostslopes/serialize.hpp"

#include <stdexcept>

namespace ghostslopes {

Json rational_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json bigint_json(const BigInt& value) { return to_string(value); }

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return big(j.get<std::int64_t>());
  return parse_bigint(j.get<std::string>());
}

namespace {

template <class T>
Json list(const std::vector<T>& items) {
  Json out = Json::array();
  for (const T& item : items) out.push_back(item);
  return out;
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(rational_json(v));
  return out;
}

std::vector<Rational> rationals_from(const Json& j) {
  std::vector<Rational> out;
  for (const Json& v : j) out.push_back(rational_from_json(v));
  return out;
}

}  // namespace

void to_json(Json& j, const Setting& s) {
  j = Json{{"p", s.params.p},
           {"a", s.params.a},
           {"s", s.params.s},
           {"strict", s.params.strict},
           {"outside_theorem_range", s.params.outside_theorem_range()},
           {"warnings", s.params.warnings},
           {"k_eps", s.derived.k_eps},
           {"delta", s.derived.delta},
           {"t1", s.derived.t1},
           {"t2", s.derived.t2}};
}

void from_json(const Json& j, Setting& s) {
  s = make_setting(j.at("p").get<std::int64_t>(), j.at("a").get<std::int64_t>(), j.at("s").get<std::int64_t>(),
                   j.value("strict", true));
  const DerivedConstants& d = s.derived;
  if (j.contains("delta") && (j.at("k_eps").get<std::int64_t>() != d.k_eps || j.at("delta").get<std::int64_t>() != d.delta ||
                              j.at("t1").get<std::int64_t>() != d.t1 || j.at("t2").get<std::int64_t>() != d.t2)) {
    throw std::invalid_argument("derived constants do not match (p, a, s)");
  }
}

void to_json(Json& j, const Weight& w) { j = Json{{"k_bullet", bigint_json(w.k_bullet)}}; }

void from_json(const Json& j, Weight& w) { w.k_bullet = bigint_from_json(j.at("k_bullet")); }

void to_json(Json& j, const DimTriple& d) { j = Json{{"d_ur", d.d_ur}, {"d_iw", d.d_iw}, {"d_new", d.d_new}}; }

void from_json(const Json& j, DimTriple& d) {
  d.d_ur = j.at("d_ur").get<std::int64_t>();
  d.d_iw = j.at("d_iw").get<std::int64_t>();
  d.d_new = j.at("d_new").get<std::int64_t>();
}

void to_json(Json& j, const ExtValuation& v) {
  if (v.is_infinite()) {
    j = "inf";
  } else {
    j = v.value();
  }
}

void from_json(const Json& j, ExtValuation& v) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw std::invalid_argument("valuation must be an integer or \"inf\"");
    v = ExtValuation::infinity();
  } else {
    v = ExtValuation(j.get<std::int64_t>());
  }
}

void to_json(Json& j, const Vertex& v) { j = Json{{"index", v.index}, {"value", v.value}}; }

void from_json(const Json& j, Vertex& v) {
  v.index = j.at("index").get<std::int64_t>();
  v.value = j.at("value").get<std::int64_t>();
}

void to_json(Json& j, const Segment& seg) {
  j = Json{{"start", seg.start}, {"end", seg.end}, {"length", seg.length()}, {"slope", rational_json(seg.slope)}};
}

void from_json(const Json& j, Segment& seg) {
  seg.start = j.at("start").get<std::int64_t>();
  seg.end = j.at("end").get<std::int64_t>();
  seg.slope = rational_from_json(j.at("slope"));
}

void to_json(Json& j, const NewtonPolygon& np) { j = Json{{"vertices", list(np.vertices())}, {"segments", list(np.segments())}}; }

void from_json(const Json& j, NewtonPolygon& np) { np = NewtonPolygon(j.at("vertices").get<std::vector<Vertex>>()); }

void to_json(Json& j, const SlopeEntry& e) { j = Json{{"slope", rational_json(e.slope)}, {"mult", e.multiplicity}}; }

void from_json(const Json& j, SlopeEntry& e) {
  e.slope = rational_from_json(j.at("slope"));
  e.multiplicity = j.at("mult").get<std::int64_t>();
}

void to_json(Json& j, const TruncationCertificate& c) {
  j = Json{{"computed_up_to", c.computed_up_to},
           {"last_vertex", c.last_vertex},
           {"next_slope", rational_json(c.next_slope)},
           {"crossover", c.crossover},
           {"argument", c.argument}};
}

void from_json(const Json& j, TruncationCertificate& c) {
  c.computed_up_to = j.at("computed_up_to").get<std::int64_t>();
  c.last_vertex = j.at("last_vertex").get<Vertex>();
  c.next_slope = rational_from_json(j.at("next_slope"));
  c.crossover = j.at("crossover").get<std::int64_t>();
  c.argument = j.at("argument").get<std::string>();
}

void to_json(Json& j, const SlopeMultiset& m) {
  j = Json{{"bound", rational_json(m.bound)},
           {"certified", m.certified},
           {"truncation", m.truncation},
           {"total_multiplicity", m.total_multiplicity()},
           {"entries", list(m.entries)},
           {"segments", list(m.segments)}};
  j["certificate"] = m.certificate ? Json(*m.certificate) : Json(nullptr);
  if (!m.certified) j["failure"] = m.failure;
}

void from_json(const Json& j, SlopeMultiset& m) {
  m.bound = rational_from_json(j.at("bound"));
  m.certified = j.at("certified").get<bool>();
  m.truncation = j.at("truncation").get<std::int64_t>();
  m.entries = j.at("entries").get<std::vector<SlopeEntry>>();
  m.segments = j.at("segments").get<std::vector<Segment>>();
  m.certificate.reset();
  if (!j.at("certificate").is_null()) m.certificate = j.at("certificate").get<TruncationCertificate>();
  m.failure = j.value("failure", std::string());
}

void to_json(Json& j, const DeltaProfile& d) {
  j = Json{{"k", d.k},
           {"half_iw", d.half_iw},
           {"D", d.D},
           {"raw", rationals(d.raw)},
           {"hull", rationals(d.hull)},
           {"hull_vertices", d.hull_vertices},
           {"gaps", rationals(d.gaps)}};
}

void from_json(const Json& j, DeltaProfile& d) {
  d.k = j.at("k").get<Weight>();
  d.half_iw = j.at("half_iw").get<std::int64_t>();
  d.D = j.at("D").get<std::int64_t>();
  d.raw = rationals_from(j.at("raw"));
  d.hull = rationals_from(j.at("hull"));
  d.hull_vertices = j.at("hull_vertices").get<std::vector<std::int64_t>>();
  d.gaps = rationals_from(j.at("gaps"));
}

void to_json(Json& j, const NSRange& r) {
  j = Json{{"k", r.k}, {"L", r.L}, {"center", r.center}, {"lo", r.lo()}, {"hi", r.hi()}};
}

void from_json(const Json& j, NSRange& r) {
  r.k = j.at("k").get<Weight>();
  r.L = j.at("L").get<std::int64_t>();
  r.center = j.at("center").get<std::int64_t>();
}

void to_json(Json& j, const CorrespondenceReport& r) {
  Json matched = Json::array();
  for (const auto& [range, seg] : r.matched) matched.push_back(Json{{"range", range}, {"segment", seg}});
  j = Json{{"prefix_end", r.prefix_end},
           {"window", r.window},
           {"bound", rational_json(r.bound)},
           {"ok", r.ok()},
           {"segments", list(r.segments)},
           {"maximal", list(r.maximal)},
           {"matched", matched},
           {"violations", r.violations}};
}

void from_json(const Json& j, CorrespondenceReport& r) {
  r.prefix_end = j.at("prefix_end").get<std::int64_t>();
  r.window = j.at("window").get<std::int64_t>();
  r.bound = rational_from_json(j.at("bound"));
  r.segments = j.at("segments").get<std::vector<Segment>>();
  r.maximal = j.at("maximal").get<std::vector<NSRange>>();
  r.matched.clear();
  for (const Json& m : j.at("matched")) r.matched.emplace_back(m.at("range").get<NSRange>(), m.at("segment").get<Segment>());
  r.violations = j.at("violations").get<std::vector<std::string>>();
}

void to_json(Json& j, const Status& s) { j = to_string(s); }

void from_json(const Json& j, Status& s) {
  const std::string text = j.get<std::string>();
  if (text == "pass") {
    s = Status::pass;
  } else if (text == "fail") {
    s = Status::fail;
  } else if (text == "vacuous") {
    s = Status::vacuous;
  } else {
    throw std::invalid_argument("unknown status: " + text);
  }
}

// Wall-clock seconds are left out so that documents stay byte-identical across runs.
void to_json(Json& j, const CheckResult& c) {
  j = Json{{"name", c.name},
           {"status", c.status},
           {"cases", c.cases},
           {"vacuous_cases", c.vacuous_cases},
           {"counterexample", c.counterexample},
           {"note", c.note}};
}

void from_json(const Json& j, CheckResult& c) {
  c.name = j.at("name").get<std::string>();
  c.status = j.at("status").get<Status>();
  c.cases = j.at("cases").get<std::int64_t>();
  c.vacuous_cases = j.at("vacuous_cases").get<std::int64_t>();
  c.counterexample = j.at("counterexample").get<std::string>();
  c.note = j.at("note").get<std::string>();
}

void to_json(Json& j, const VerificationReport& r) {
  j = Json{{"grid", r.grid}, {"passed", r.passed()}, {"checks", list(r.checks)}};
}

void from_json(const Json& j, VerificationReport& r) {
  r.grid = j.at("grid").get<std::string>();
  r.checks = j.at("checks").get<std::vector<CheckResult>>();
}

void to_json(Json& j, const MultisetComparison& c) {
  j = Json{{"k1", c.k1}, {"k2", c.k2}, {"equal", c.equal}, {"first", c.first}, {"second", c.second}};
}

void from_json(const Json& j, MultisetComparison& c) {
  c.k1 = j.at("k1").get<Weight>();
  c.k2 = j.at("k2").get<Weight>();
  c.equal = j.at("equal").get<bool>();
  c.first = j.at("first").get<SlopeMultiset>();
  c.second = j.at("second").get<SlopeMultiset>();
}

void to_json(Json& j, const LocalConstancyReport& r) {
  j = Json{{"m", r.m},
           {"bound", rational_json(r.bound)},
           {"all_equal", r.all_equal()},
           {"weights_exceed_m_minus_3", r.weights_exceed_m_minus_3},
           {"pairs", list(r.pairs)}};
}

void from_json(const Json& j, LocalConstancyReport& r) {
  r.m = j.at("m").get<int>();
  r.bound = rational_from_json(j.at("bound"));
  r.weights_exceed_m_minus_3 = j.at("weights_exceed_m_minus_3").get<bool>();
  r.pairs = j.at("pairs").get<std::vector<MultisetComparison>>();
}

void to_json(Json& j, const MainPropositionReport& r) {
  j = Json{{"status", r.status}, {"n0", r.n0}, {"threshold", rational_json(r.threshold)}};
  j["segment"] = r.segment ? Json(*r.segment) : Json(nullptr);
  j["diagnostic"] = r.diagnostic;
}

void from_json(const Json& j, MainPropositionReport& r) {
  r.status = j.at("status").get<Status>();
  r.n0 = j.at("n0").get<std::int64_t>();
  r.threshold = rational_from_json(j.at("threshold"));
  r.segment.reset();
  if (!j.at("segment").is_null()) r.segment = j.at("segment").get<Segment>();
  r.diagnostic = j.at("diagnostic").get<std::string>();
}

void to_json(Json& j, const FigureConstants& f) {
  j = Json{{"approximate", true},
           {"low", f.low},
           {"high", f.high},
           {"high_argmin", f.high_argmin},
           {"tail_bounded", f.tail_bounded}};
}

void from_json(const Json& j, FigureConstants& f) {
  f.low = j.at("low").get<double>();
  f.high = j.at("high").get<double>();
  f.high_argmin = j.at("high_argmin").get<std::int64_t>();
  f.tail_bounded = j.at("tail_bounded").get<bool>();
}

}  // namespace ghostslopes
