#include "ghostslopes/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "ghostslopes/parallel.hpp"
#include "ghostslopes/serialize.hpp"

namespace ghostslopes::cli {

namespace {

struct Globals {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t s = 0;
  std::string format = "json";
  bool strict = true;
  unsigned threads = 0;
  std::int64_t n_max = CertifyOptions{}.n_max;
  bool timing = false;
};

// A flat table for the csv/tsv formats.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  Json payload;
  Table table;
  Json extra_metadata = Json::object();
  int code = ok;
};

std::string cell(const std::string& text, char sep) {
  if (text.find(sep) == std::string::npos && text.find('"') == std::string::npos && text.find('\n') == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void write_table(std::ostream& out, const Table& table, char sep) {
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? std::string(1, sep) : "") << cell(fields[i], sep);
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

std::string str(std::int64_t v) { return std::to_string(v); }

// Weight selection shared by commands that take one.
struct WeightArgs {
  std::string k_bullet;
  std::string k;

  void add(CLI::App* sub, const std::string& prefix, const std::string& what) {
    auto* kb = sub->add_option("--" + prefix + "k-bullet", k_bullet, what + " as k_bullet");
    auto* kk = sub->add_option("--" + prefix + "k", k, what + " as the weight k");
    kb->excludes(kk);
  }
  bool given() const { return !k_bullet.empty() || !k.empty(); }
  Weight resolve(const Setting& s, const std::string& what) const {
    if (!k.empty()) return Weight::from_k(s, parse_bigint(k));
    if (k_bullet.empty()) throw std::invalid_argument(what + " is required (--k-bullet or --k)");
    const BigInt v = parse_bigint(k_bullet);
    if (v < 0) throw std::invalid_argument("k_bullet must be non-negative");
    return Weight::from_k_bullet(v);
  }
};

Json weight_json(const Setting& s, const Weight& w) {
  Json j = w;
  j["k"] = bigint_json(w.k(s));
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ghost series slopes, dimensions and near-Steinberg ranges", "ghostslopes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version);
  Globals g;
  app.add_option("--p", g.p, "prime p")->required();
  app.add_option("--a", g.a, "a, with 2 <= a <= p-5")->required();
  app.add_option("--s", g.s, "s, with 0 <= s <= p-2")->required();
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "tsv"}));
  app.add_flag("--strict,!--no-strict", g.strict, "require p >= 11 (default on)");
  app.add_option("--threads", g.threads, "worker threads (default: GHOSTSLOPES_THREADS or hardware)");
  app.add_option("--n-max", g.n_max, "largest index examined when certifying a truncation")->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "include wall-clock timing in the metadata");

  std::function<Output(const Setting&)> command;
  std::string command_name;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->fallthrough();
    return c;
  };
  auto certify = [&] {
    CertifyOptions o;
    o.n_max = g.n_max;
    return o;
  };
  auto threads = [&] { return g.threads == 0 ? default_threads() : g.threads; };

  // params
  sub("params", "derived constants")->final_callback([&] {
    command = [](const Setting& s) {
      Output o;
      o.payload = s;
      o.table.header = {"key", "value"};
      for (auto& [key, value] : o.payload.items()) {
        if (!value.is_array()) o.table.rows.push_back({key, value.dump()});
      }
      return o;
    };
  });

  // dims
  std::int64_t dims_from = 0, dims_to = 20;
  {
    CLI::App* c = sub("dims", "d_ur, d_iw and d_new over a k_bullet range");
    c->add_option("--from", dims_from, "first k_bullet")->check(CLI::NonNegativeNumber);
    c->add_option("--to", dims_to, "last k_bullet")->check(CLI::NonNegativeNumber);
    c->final_callback([&] {
      command = [&](const Setting& s) {
        if (dims_from > dims_to) throw std::invalid_argument("--from exceeds --to");
        Output o;
        o.payload = Json::array();
        o.table.header = {"k_bullet", "k", "d_ur", "d_iw", "d_new"};
        for (std::int64_t k = dims_from; k <= dims_to; ++k) {
          const DimTriple d = dims(s, k);
          const std::string weight = to_string(Weight::from_k_bullet(k).k(s));
          Json row{{"k_bullet", k}, {"k", weight}};
          row.update(Json(d));
          o.payload.push_back(row);
          o.table.rows.push_back({str(k), weight, str(d.d_ur), str(d.d_iw), str(d.d_new)});
        }
        return o;
      };
    });
  }

  // ghost
  WeightArgs ghost_eval, ghost_hat;
  std::int64_t ghost_to = 10;
  {
    CLI::App* c = sub("ghost", "coefficient valuations v_p(g_n(w_k))");
    ghost_eval.add(c, "", "evaluation weight");
    ghost_hat.add(c, "hat-", "weight whose factors are removed");
    c->add_option("--n-to", ghost_to, "last coefficient index")->check(CLI::NonNegativeNumber);
    c->final_callback([&] {
      command = [&](const Setting& s) {
        const Weight eval = ghost_eval.resolve(s, "evaluation weight");
        std::optional<Weight> hat;
        if (ghost_hat.given()) hat = ghost_hat.resolve(s, "hat weight");
        const std::vector<ExtValuation> vals = coefficient_valuations(s, eval, ghost_to, hat ? &*hat : nullptr);
        Output o;
        Json coeffs = Json::array();
        o.table.header = {"n", "valuation"};
        for (std::size_t n = 0; n < vals.size(); ++n) {
          coeffs.push_back(Json{{"n", n}, {"valuation", vals[n]}});
          o.table.rows.push_back({std::to_string(n), vals[n].to_string()});
        }
        o.payload = Json{{"eval", weight_json(s, eval)}, {"hat", hat ? weight_json(s, *hat) : Json(nullptr)}, {"coefficients", coeffs}};
        return o;
      };
    });
  }

  // np
  WeightArgs np_eval;
  std::int64_t np_n = 20;
  {
    CLI::App* c = sub("np", "Newton polygon of the truncated ghost series");
    np_eval.add(c, "", "evaluation weight");
    c->add_option("--N", np_n, "truncation index")->check(CLI::PositiveNumber);
    c->final_callback([&] {
      command = [&](const Setting& s) {
        const Weight eval = np_eval.resolve(s, "evaluation weight");
        const NewtonPolygon np = ghost_np(s, eval, np_n);
        Output o;
        o.payload = Json{{"eval", weight_json(s, eval)}, {"N", np_n}, {"polygon", np}};
        o.table.header = {"start", "end", "length", "slope"};
        for (const Segment& seg : np.segments()) {
          o.table.rows.push_back({str(seg.start), str(seg.end), str(seg.length()), to_string(seg.slope)});
        }
        return o;
      };
    });
  }

  // slopes
  WeightArgs slopes_eval;
  std::string slopes_bound = "0";
  {
    CLI::App* c = sub("slopes", "certified slope multiset up to a bound");
    slopes_eval.add(c, "", "evaluation weight");
    c->add_option("--bound", slopes_bound, "slope bound (integer, fraction or decimal)");
    c->final_callback([&] {
      command = [&](const Setting& s) {
        const Weight eval = slopes_eval.resolve(s, "evaluation weight");
        const SlopeMultiset m = certified_slopes(s, eval, parse_rational(slopes_bound), certify());
        Output o;
        o.payload = Json{{"eval", weight_json(s, eval)}};
        o.payload.update(Json(m));
        o.table.header = {"slope", "mult"};
        for (const SlopeEntry& e : m.entries) o.table.rows.push_back({to_string(e.slope), str(e.multiplicity)});
        if (!m.certified) o.code = certification_failed;
        return o;
      };
    });
  }

  // delta
  WeightArgs delta_k;
  {
    CLI::App* c = sub("delta", "the profile Delta' and its lower convex hull");
    delta_k.add(c, "", "weight");
    c->final_callback([&] {
      command = [&](const Setting& s) {
        const Weight k = delta_k.resolve(s, "weight");
        const DeltaProfile prof = delta_profile(s, k);
        Output o;
        o.payload = prof;
        o.payload["k"] = weight_json(s, k);
        o.table.header = {"l", "raw", "hull", "vertex"};
        for (std::int64_t ell = -prof.D; ell <= prof.D && !prof.empty(); ++ell) {
          const bool vertex = std::find(prof.hull_vertices.begin(), prof.hull_vertices.end(), ell) != prof.hull_vertices.end();
          o.table.rows.push_back({str(ell), to_string(prof.raw_at(ell)), to_string(prof.hull_at(ell)), vertex ? "1" : "0"});
        }
        return o;
      };
    });
  }

  // ns
  WeightArgs ns_eval;
  std::int64_t ns_window = 100;
  bool ns_prune = false;
  {
    CLI::App* c = sub("ns", "near-Steinberg ranges at an evaluation weight");
    ns_eval.add(c, "", "evaluation weight");
    c->add_option("--window", ns_window, "largest k_bullet generating a range")->check(CLI::NonNegativeNumber);
    c->add_flag("--prune", ns_prune, "only examine k_bullet congruent to the evaluation weight mod p");
    c->final_callback([&] {
      command = [&](const Setting& s) {
        const Weight eval = ns_eval.resolve(s, "evaluation weight");
        ProfileCache cache(s);
        const std::vector<NSRange> ranges = all_ns_ranges(cache, eval, ns_window, ns_prune);
        const std::vector<NSRange> maximal = maximal_ns_ranges(ranges);
        Output o;
        Json list = Json::array();
        o.table.header = {"k_bullet", "L", "lo", "hi", "maximal"};
        for (const NSRange& r : ranges) {
          const bool is_max = std::any_of(maximal.begin(), maximal.end(), [&](const NSRange& m) { return m.k == r.k; });
          Json j = r;
          j["maximal"] = is_max;
          list.push_back(j);
          o.table.rows.push_back({to_string(r.k.k_bullet), str(r.L), str(r.lo()), str(r.hi()), is_max ? "1" : "0"});
        }
        o.payload = Json{{"eval", weight_json(s, eval)},
                         {"window", ns_window},
                         {"nested", !nesting_violation(ranges).has_value()},
                         {"ranges", list}};
        return o;
      };
    });
  }

  // verify
  WeightArgs verify_k1;
  int verify_m = 4, verify_pairs = 3;
  bool verify_sharpness = false;
  {
    CLI::App* c = sub("verify", "local constancy of slope multisets on congruent weight pairs");
    c->add_option("--k1", verify_k1.k, "base weight k1")
        ->excludes(c->add_option("--k1-bullet", verify_k1.k_bullet, "base weight as k_bullet"));
    c->add_option("--m", verify_m, "congruence exponent, at least 4")->check(CLI::Range(4, 30));
    c->add_option("--pairs", verify_pairs, "number of weights k1 + t(p-1)p^m")->check(CLI::Range(1, 1000));
    c->add_flag("--sharpness", verify_sharpness, "also search for pairs whose multisets up to m-3 differ");
    c->final_callback([&] {
      command = [&](const Setting& s) {
        const Weight k1 = verify_k1.resolve(s, "base weight");
        const LocalConstancyReport lc = check_local_constancy(s, verify_m, k1, verify_pairs, certify());
        const WeightFamily family = weight_family(s, k1, verify_m);
        Output o;
        Json mains = Json::array();
        o.table.header = {"k1", "k2", "bound", "equal"};
        for (const MultisetComparison& pair : lc.pairs) {
          o.table.rows.push_back({to_string(pair.k1.k(s)), to_string(pair.k2.k(s)), to_string(lc.bound), pair.equal ? "1" : "0"});
        }
        bool main_ok = true;
        std::vector<Weight> tildes{k1};
        for (const MultisetComparison& pair : lc.pairs) tildes.push_back(pair.k2);
        for (const Weight& tilde : tildes) {
          for (const Weight& k0 : {family.k0_min, family.k0_max}) {
            const MainPropositionReport r = check_main_proposition(s, tilde, k0, verify_m, certify());
            if (r.status == Status::fail) main_ok = false;
            mains.push_back(Json{{"tilde_k", weight_json(s, tilde)}, {"k0", weight_json(s, k0)}, {"report", r}});
          }
        }
        o.payload = Json{{"family", Json{{"k1", weight_json(s, k1)},
                                         {"m", verify_m},
                                         {"k0_min", weight_json(s, family.k0_min)},
                                         {"k0_max", weight_json(s, family.k0_max)}}},
                         {"local_constancy", lc},
                         {"main_proposition", mains}};
        if (verify_sharpness) {
          o.payload["sharpness"] = Json{{"diagnostic_only", true},
                                        {"differing_pairs", explore_sharpness(s, verify_m, k1, verify_pairs, certify())}};
        }
        if (!lc.all_equal() || !main_ok) o.code = check_failed;
        return o;
      };
    });
  }

  // lemmas
  std::int64_t lemmas_max = 60;
  SuiteOptions suite;
  {
    CLI::App* c = sub("lemmas", "run every invariant scan up to a k_bullet bound");
    c->add_option("--k-bullet-max", lemmas_max, "largest k_bullet scanned")->check(CLI::NonNegativeNumber);
    c->add_option("--samples", suite.tool_samples, "random samples for the valuation-sum bounds")->check(CLI::NonNegativeNumber);
    c->add_option("--seed", suite.seed, "random seed");
    c->final_callback([&] {
      command = [&](const Setting& s) {
        suite.threads = threads();
        suite.certify = certify();
        const VerificationReport report = lemma_suite(s, lemmas_max, suite);
        Output o;
        o.payload = report;
        o.table.header = {"check", "status", "cases", "vacuous_cases", "counterexample"};
        Json seconds = Json::object();
        for (const CheckResult& c : report.checks) {
          o.table.rows.push_back({c.name, to_string(c.status), str(c.cases), str(c.vacuous_cases), c.counterexample});
          seconds[c.name] = c.seconds;
        }
        o.extra_metadata["check_seconds"] = seconds;
        if (!report.passed()) o.code = check_failed;
        return o;
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }
  command_name = app.get_subcommands().front()->get_name();

  try {
    const auto start = std::chrono::steady_clock::now();
    const Setting setting = make_setting(g.p, g.a, g.s, g.strict);
    for (const std::string& w : setting.params.warnings) err << "warning: " << w << '\n';
    Output o = command(setting);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (g.format == "json") {
      Json meta{{"version", version}, {"params", setting}};
      if (g.timing) {
        meta["timing_seconds"] = seconds;
        for (auto& [key, value] : o.extra_metadata.items()) meta[key] = value;
      }
      Json doc{{"command", command_name}, {"metadata", meta}, {"payload", o.payload}};
      out << doc.dump(2) << '\n';
    } else {
      write_table(out, o.table, g.format == "csv" ? ',' : '\t');
    }
    return o.code;
  } catch (const ValidationError& e) {
    for (const std::string& v : e.violations()) err << "error: " << v << '\n';
    return usage_error;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << '\n';
    return certification_failed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace ghostslopes::cli
