#include "solvlie/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "solvlie/catalog.hpp"
#include "solvlie/error.hpp"
#include "solvlie/json_io.hpp"
#include "solvlie/sweep.hpp"
#include "solvlie/theorems.hpp"

namespace solvlie {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

Json make_report(const std::string& command, Json arguments) {
  Json r;
  r["command"] = command;
  r["arguments"] = std::move(arguments);
  r["algebra"] = nullptr;  // digest filled in once the document parses
  r["checks"] = Json::array();
  r["result"] = nullptr;
  return r;
}

void add_check(Json& report, const std::string& check,
               const std::string& status, const std::string& detail) {
  Json c;
  c["check"] = check;
  c["status"] = status;
  if (!detail.empty()) c["detail"] = detail;
  report["checks"].push_back(std::move(c));
}

int finish(Json& report, std::ostream& out, bool timing, const Timer& t) {
  int rc = 0;
  for (const Json& c : report.at("checks"))
    if (c.at("status") == "fail") rc = 1;
  if (timing) report["timing_ms"] = t.ms();
  out << report.dump(2) << "\n";
  return rc;
}

Json algebra_digest(const LieAlgebra& L) {
  Json d;
  d["dim"] = L.dim();
  d["field"] = L.field().to_string();
  bool solvable = is_solvable(L);
  d["solvable"] = solvable;
  if (solvable)
    d["derived_length"] = derived_series(L).size() - 1;
  else
    d["derived_length"] = nullptr;
  return d;
}

Json hypothesis_json(const HypothesisReport& h) {
  Json j;
  j["solvable"] = h.solvable;
  j["characteristic"] = h.char_p ? *h.char_p : 0;
  if (h.class_of_derived)
    j["class_of_derived"] = *h.class_of_derived;
  else
    j["class_of_derived"] = nullptr;  // derived subalgebra not nilpotent
  j["hypothesis_met"] = h.hypothesis_met;
  return j;
}

Json witness_json(const InnerAutomorphism& phi) {
  Json w;
  Json word = Json::array();
  for (const Vec& x : phi.word) word.push_back(vec_to_string(x));
  w["word"] = std::move(word);
  w["matrix"] = phi.matrix.to_string();
  return w;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::conjugate:
      return "conjugate";
    case Verdict::not_conjugate:
      return "not_conjugate";
    default:
      return "hypothesis_not_met";
  }
}

std::string error_text(const Error& e) {
  return e.code() + ": " + e.what();
}


std::string file_label(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.rfind('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base.empty() ? path : base;
}

// "gf2,dim<=4" — field tokens pick the catalog primes, dim<=N caps it.
void apply_catalog_spec(const std::string& spec, SweepOptions& opts) {
  std::vector<int64_t> primes;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::string s;
    for (char c : token)
      if (!std::isspace(static_cast<unsigned char>(c)))
        s.push_back(
            static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s.empty()) continue;
    if (s.rfind("dim<=", 0) == 0) {
      std::string n = s.substr(5);
      if (n.empty() || !std::all_of(n.begin(), n.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        fail("invalid_argument", "bad dimension bound in '" + token + "'");
      opts.max_dim = static_cast<std::size_t>(std::stoull(n));
      continue;
    }
    FieldDescriptor f = field_from_text(s);
    if (!f.is_prime_field())
      fail("invalid_argument", "catalog sweeps need prime fields, got Q");
    primes.push_back(f.p());
  }
  if (!primes.empty()) opts.primes = std::move(primes);
}

int cmd_validate(const std::string& path, bool timing, std::ostream& out) {
  Timer t;
  Json args;
  args["file"] = path;
  Json report = make_report("validate", std::move(args));
  try {
    LieAlgebra L = load_algebra_file(path);
    report["algebra"] = algebra_digest(L);
    add_check(report, "parse", "pass", "");
    add_check(report, "jacobi", "pass", "");
    bool solvable = is_solvable(L);
    add_check(report, "solvable", solvable ? "pass" : "fail",
              solvable ? "" : "valid Lie algebra, but not solvable");
  } catch (const Error& e) {
    if (e.code() == "jacobi_violation") {
      add_check(report, "parse", "pass", "");
      add_check(report, "jacobi", "fail", e.what());
    } else {
      add_check(report, "parse", "fail", error_text(e));
    }
  }
  return finish(report, out, timing, t);
}

int cmd_query(const std::string& path, const std::string& what,
              const std::string& space, bool timing, std::ostream& out) {
  Timer t;
  Json args;
  args["file"] = path;
  args["what"] = what;
  if (!space.empty()) args["space"] = space;
  Json report = make_report("query", std::move(args));
  try {
    LieAlgebra L = load_algebra_file(path);
    report["algebra"] = algebra_digest(L);
    Json value;
    if (what == "core" || what == "centralizer") {
      if (space.empty())
        fail("invalid_argument", "--space is required for " + what);
      Subspace u = parse_subspace(L.field(), L.dim(), space);
      value = subspace_to_text(what == "core" ? core(L, u)
                                              : centralizer(L, u));
    } else if (what == "chief-series") {
      Json arr = Json::array();
      for (const Subspace& term : chief_series(L).terms)
        arr.push_back(subspace_to_text(term));
      value = std::move(arr);
    } else if (what == "maximals") {
      Json arr = Json::array();
      for (const Subspace& m : maximal_subalgebras(L))
        arr.push_back(subspace_to_text(m));
      value = std::move(arr);
    } else {  // minimal-ideals
      Json arr = Json::array();
      for (const Subspace& m : minimal_ideals(L))
        arr.push_back(subspace_to_text(m));
      value = std::move(arr);
    }
    Json result;
    result["what"] = what;
    result["value"] = std::move(value);
    report["result"] = std::move(result);
    add_check(report, "query", "pass", "");
  } catch (const Error& e) {
    add_check(report, "query", e.code() == "cap_exceeded" ? "skipped" : "fail",
              error_text(e));
  }
  return finish(report, out, timing, t);
}

int cmd_conjugacy(const std::string& path, const std::string& m_text,
                  const std::string& k_text, const std::string& method,
                  std::size_t group_cap, std::size_t conjugator_cap,
                  bool timing, std::ostream& out) {
  Timer t;
  Json args;
  args["file"] = path;
  args["m"] = m_text;
  args["k"] = k_text;
  args["method"] = method;
  Json report = make_report("conjugacy", std::move(args));
  Json result;

  LieAlgebra* Lp = nullptr;
  std::optional<LieAlgebra> storage;
  Subspace m = Subspace::zero(FieldDescriptor::rationals(), 0);
  Subspace k = m;
  try {
    storage.emplace(load_algebra_file(path));
    Lp = &*storage;
    report["algebra"] = algebra_digest(*Lp);
    m = parse_subspace(Lp->field(), Lp->dim(), m_text);
    k = parse_subspace(Lp->field(), Lp->dim(), k_text);
  } catch (const Error& e) {
    add_check(report, "input", "fail", error_text(e));
    return finish(report, out, timing, t);
  }
  const LieAlgebra& L = *Lp;

  std::optional<bool> core_answer, brute_answer;
  if (method == "core" || method == "both") {
    try {
      ConjugacyVerdict v = conjugate_by_core_test(L, m, k);
      Json jc;
      jc["verdict"] = verdict_name(v.verdict);
      jc["core_m"] = subspace_to_text(v.core_m);
      jc["core_k"] = subspace_to_text(v.core_k);
      jc["hypothesis"] = hypothesis_json(v.hypothesis);
      if (v.verdict == Verdict::hypothesis_not_met) {
        add_check(report, "core_test", "skipped",
                  "hypothesis_not_met: the derived subalgebra is not "
                  "nilpotent of class < characteristic");
      } else {
        add_check(report, "core_test", "pass", verdict_name(v.verdict));
        core_answer = v.verdict == Verdict::conjugate;
        if (*core_answer) {
          try {
            ChiefFactorConjugator cf = find_conjugator_in_chief_factor(
                L, m, k, chief_series(L), conjugator_cap);
            jc["conjugator"] = vec_to_string(cf.a);
            jc["witness"] = witness_json(cf.map);
          } catch (const Error& we) {
            add_check(report, "conjugator_search",
                      we.code() == "cap_exceeded" ? "skipped" : "fail",
                      error_text(we));
          }
        }
      }
      result["core"] = std::move(jc);
    } catch (const Error& e) {
      add_check(report, "core_test",
                e.code() == "cap_exceeded" ? "skipped" : "fail",
                error_text(e));
    }
  }
  if (method == "brute" || method == "both") {
    try {
      ConjugacyResult r =
          are_conjugate_bruteforce(L, m, k, L.full_space(), group_cap);
      Json jb;
      jb["conjugate"] = r.conjugate;
      jb["orbit_size"] = r.orbit_size;
      if (r.witness) jb["witness"] = witness_json(*r.witness);
      add_check(report, "brute_force", "pass",
                r.conjugate ? "conjugate" : "not_conjugate");
      brute_answer = r.conjugate;
      result["brute"] = std::move(jb);
    } catch (const Error& e) {
      add_check(report, "brute_force",
                e.code() == "cap_exceeded" ? "skipped" : "fail",
                error_text(e));
    }
  }
  if (core_answer && brute_answer)
    add_check(report, "agreement", *core_answer == *brute_answer ? "pass" : "fail",
              *core_answer == *brute_answer
                  ? "core test and brute force agree"
                  : "core test and brute force disagree");
  report["result"] = std::move(result);
  return finish(report, out, timing, t);
}

int cmd_theorems(const std::string& catalog_spec, const std::string& path,
                 const std::string& suite, std::uint64_t seed,
                 std::size_t count, std::size_t max_dim, std::size_t samples,
                 bool timing, std::ostream& out) {
  Timer t;
  Json args;
  if (!catalog_spec.empty()) args["catalog"] = catalog_spec;
  if (!path.empty()) args["file"] = path;
  args["suite"] = suite;
  args["seed"] = seed;
  args["count"] = count;
  Json report = make_report("theorems", std::move(args));
  try {
    SweepOptions opts;
    opts.seed = seed;
    opts.random_count = count;
    opts.max_dim = max_dim;
    opts.automorphism_samples = samples;
    std::vector<CheckRecord> records;
    if (!path.empty()) {
      LieAlgebra L = load_algebra_file(path);
      report["algebra"] = algebra_digest(L);
      std::vector<SweepAlgebra> one;
      one.push_back({file_label(path), std::move(L)});
      records = run_suite_on(suite, one, opts);
    } else {
      if (!catalog_spec.empty()) apply_catalog_spec(catalog_spec, opts);
      records = run_suite(suite, opts);
    }
    std::size_t pass = 0, failed = 0, skipped = 0;
    for (const CheckRecord& r : records) {
      Json c;
      c["algebra"] = r.algebra;
      c["check"] = r.check;
      c["status"] = r.status;
      if (!r.detail.empty()) c["detail"] = r.detail;
      report["checks"].push_back(std::move(c));
      if (r.status == "pass")
        ++pass;
      else if (r.status == "fail")
        ++failed;
      else
        ++skipped;
    }
    Json result;
    result["suite"] = suite;
    result["records"] = records.size();
    result["pass"] = pass;
    result["fail"] = failed;
    result["skipped"] = skipped;
    report["result"] = std::move(result);
  } catch (const Error& e) {
    add_check(report, "execute", "fail", error_text(e));
  }
  return finish(report, out, timing, t);
}

int emit_document(const LieAlgebra& L, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  std::string text = algebra_to_text(L);
  if (out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    err << "error: io_error: cannot write '" << out_path << "'\n";
    return 1;
  }
  f << text;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"solvlie — exact conjugacy kernel for solvable Lie algebras"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing,
               "include wall-clock timing in the report (off by default so "
               "reports are byte-stable)");
  std::size_t subspace_cap = 0;
  app.add_option("--subspace-cap", subspace_cap,
                 "cap on enumerated subspaces (also SOLVLIE_MAX_SUBSPACES)");

  std::string v_file;
  CLI::App* v = app.add_subcommand(
      "validate", "parse an algebra document, check Jacobi and solvability");
  v->add_option("file", v_file, "algebra document (JSON)")->required();

  std::string q_file, q_what, q_space;
  CLI::App* q = app.add_subcommand("query", "single structure queries");
  q->add_option("file", q_file, "algebra document (JSON)")->required();
  q->add_option("--what", q_what, "one of core|centralizer|chief-series|maximals|minimal-ideals")
      ->required()
      ->check(CLI::IsMember({"core", "centralizer", "chief-series", "maximals",
                             "minimal-ideals"}));
  q->add_option("--space", q_space,
                "subspace as semicolon-separated rows, e.g. \"0,1,0;1,0,2\"");

  std::string c_file, c_m, c_k, c_method = "both";
  std::size_t c_group_cap = 0, c_conj_cap = 0;
  CLI::App* c =
      app.add_subcommand("conjugacy", "decide conjugacy of two maximal subalgebras");
  c->add_option("file", c_file, "algebra document (JSON)")->required();
  c->add_option("--m", c_m, "first subalgebra, row syntax")->required();
  c->add_option("--k", c_k, "second subalgebra, row syntax")->required();
  c->add_option("--method", c_method, "core|brute|both")
      ->check(CLI::IsMember({"core", "brute", "both"}));
  c->add_option("--group-cap", c_group_cap, "cap on inner group closure");
  c->add_option("--conjugator-cap", c_conj_cap, "cap on conjugator search");

  std::string t_catalog, t_file, t_suite = "all";
  std::uint64_t t_seed = 42;
  std::size_t t_count = 50, t_max_dim = 4, t_samples = 1000;
  CLI::App* th = app.add_subcommand("theorems", "run theorem sweeps");
  CLI::Option* th_cat = th->add_option(
      "--catalog", t_catalog, "catalog filter, e.g. \"gf2,dim<=4\"");
  th->add_option("--file", t_file, "sweep a single algebra document")
      ->excludes(th_cat);
  th->add_option("--suite", t_suite, "all|bijection|conjugator|intersection|lemma")
      ->check(CLI::IsMember(
          {"all", "bijection", "conjugator", "intersection", "lemma"}));
  th->add_option("--seed", t_seed, "base seed for the random family");
  th->add_option("--count", t_count, "number of random algebras");
  th->add_option("--max-dim", t_max_dim, "dimension cap for the catalog");
  th->add_option("--samples", t_samples, "automorphism property samples");

  std::string f_name, f_field = "q", f_out;
  CLI::App* fx = app.add_subcommand("fixture", "emit a catalog algebra as JSON");
  fx->add_option("name", f_name, "fixture name, e.g. heisenberg3 or dim3_scaled(2)")
      ->required();
  fx->add_option("--field", f_field, "q|gf2|gf(3)|...");
  fx->add_option("--out", f_out, "write to a file instead of stdout");

  std::uint64_t r_seed = 0;
  std::size_t r_target = 0, r_ambient = 3;
  std::string r_field = "q", r_out;
  CLI::App* rn =
      app.add_subcommand("random", "emit a seeded random solvable algebra as JSON");
  rn->add_option("--seed", r_seed, "generator seed")->required();
  rn->add_option("--target", r_target, "target dimension")->required();
  rn->add_option("--field", r_field, "q|gf2|gf(3)|...");
  rn->add_option("--ambient", r_ambient,
                 "size of the ambient upper-triangular algebra");
  rn->add_option("--out", r_out, "write to a file instead of stdout");

  std::vector<std::string> argv_storage = args;
  std::vector<const char*> argv;
  argv.push_back("solvlie");
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (subspace_cap > 0) {
    // Downstream enumeration reads the env var each time it needs a default.
    setenv("SOLVLIE_MAX_SUBSPACES", std::to_string(subspace_cap).c_str(), 1);
  }

  try {
    if (v->parsed()) return cmd_validate(v_file, timing, out);
    if (q->parsed()) return cmd_query(q_file, q_what, q_space, timing, out);
    if (c->parsed())
      return cmd_conjugacy(c_file, c_m, c_k, c_method, c_group_cap, c_conj_cap,
                           timing, out);
    if (th->parsed())
      return cmd_theorems(t_catalog, t_file, t_suite, t_seed, t_count,
                          t_max_dim, t_samples, timing, out);
    if (fx->parsed())
      return emit_document(fixture({f_name, field_from_text(f_field)}), f_out, out,
                           err);
    if (rn->parsed())
      return emit_document(
          random_solvable(r_seed, r_target, field_from_text(r_field), r_ambient),
          r_out, out, err);
  } catch (const Error& e) {
    err << "error: " << error_text(e) << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace solvlie
