#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "solvlie/error.hpp"
#include "solvlie/sweep.hpp"
#include "test_util.hpp"

using namespace solvlie;
using namespace solvlie::testutil;

namespace {
const FieldDescriptor GF2 = FieldDescriptor::gf(2);
const FieldDescriptor GF3 = FieldDescriptor::gf(3);
const FieldDescriptor QQ = FieldDescriptor::rationals();

SweepOptions small_opts() {
  SweepOptions o;
  o.random_count = 6;
  o.automorphism_samples = 60;
  return o;
}

bool records_equal(const std::vector<CheckRecord>& a,
                   const std::vector<CheckRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].algebra != b[i].algebra || a[i].check != b[i].check ||
        a[i].status != b[i].status || a[i].detail != b[i].detail)
      return false;
  return true;
}

std::size_t count_status(const std::vector<CheckRecord>& rs,
                         const std::string& status) {
  std::size_t n = 0;
  for (const auto& r : rs) n += r.status == status;
  return n;
}
}  // namespace

TEST_CASE("catalog assembly is deterministic and hypothesis-filtered") {
  auto opts = small_opts();
  auto a = sweep_catalog(opts);
  auto b = sweep_catalog(opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].algebra.dim() == b[i].algebra.dim());
  }
  std::size_t randoms = 0;
  bool has_example4 = false;
  for (const auto& entry : a) {
    CHECK(is_solvable(entry.algebra));
    CHECK(entry.algebra.dim() <= opts.max_dim);
    if (entry.label.rfind("random", 0) == 0) {
      ++randoms;
      CHECK(hypothesis_report(entry.algebra).hypothesis_met);
    }
    if (entry.label.rfind("example4", 0) == 0) has_example4 = true;
  }
  CHECK(randoms == opts.random_count);
  CHECK(has_example4);  // the deliberate hypothesis violator stays in
}

TEST_CASE("full small sweep has no failures and skips the violator") {
  auto opts = small_opts();
  auto records = run_suite("all", opts);
  CHECK(count_status(records, "fail") == 0);
  bool example4_skipped = false;
  for (const auto& r : records)
    if (r.algebra.rfind("example4", 0) == 0 &&
        r.check == "core_vs_bruteforce")
      example4_skipped = r.status == "skipped" &&
                         r.detail == "hypothesis_not_met";
  CHECK(example4_skipped);

  // every sweep family contributed records
  for (const std::string check :
       {"core_vs_bruteforce", "conjugate_implies_equal_cores",
        "chief_factor_conjugator", "corefree_lemma",
        "complement_class_bijection", "complement_conjugacy_criterion",
        "intersection_maximality", "monolith_facts",
        "automorphism_properties"}) {
    bool seen = false;
    for (const auto& r : records) seen = seen || r.check == check;
    CHECK_MESSAGE(seen, check);
  }
}

TEST_CASE("suite reports are reproducible") {
  auto opts = small_opts();
  CHECK(records_equal(run_suite("lemma", opts), run_suite("lemma", opts)));
  CHECK(records_equal(run_suite("bijection", opts),
                      run_suite("bijection", opts)));
}

TEST_CASE("named suites restrict the check set") {
  auto opts = small_opts();
  auto records = run_suite("conjugator", opts);
  CHECK(!records.empty());
  for (const auto& r : records) CHECK(r.check == "chief_factor_conjugator");
  CHECK(count_status(records, "fail") == 0);

  records = run_suite("intersection", opts);
  for (const auto& r : records) CHECK(r.check == "intersection_maximality");
  CHECK(count_status(records, "fail") == 0);

  CHECK_THROWS_WITH_AS(run_suite("nope", opts), doctest::Contains("suite"),
                       Error);
}

TEST_CASE("file-style runs carry diagnostics and rational skips") {
  std::vector<SweepAlgebra> algebras;
  algebras.push_back({"mine/Q", dim2_nonabelian(QQ)});
  auto records = run_suite_on("all", algebras, small_opts());
  CHECK(count_status(records, "fail") == 0);
  bool solvable_seen = false, hypothesis_seen = false, skipped_seen = false;
  for (const auto& r : records) {
    if (r.check == "solvable") solvable_seen = r.status == "pass";
    if (r.check == "hypothesis") hypothesis_seen = true;
    if (r.check == "core_vs_bruteforce")
      skipped_seen = r.status == "skipped" && r.detail == "unsupported_field";
  }
  CHECK(solvable_seen);
  CHECK(hypothesis_seen);
  CHECK(skipped_seen);

  std::vector<SweepAlgebra> finite;
  finite.push_back({"mine/GF(3)", almost_abelian(GF3)});
  records = run_suite_on("all", finite, small_opts());
  CHECK(count_status(records, "fail") == 0);
  bool monolith_seen = false, equivalence_pass = false;
  for (const auto& r : records) {
    if (r.check == "monolith") monolith_seen = r.status == "pass";
    if (r.check == "core_vs_bruteforce") equivalence_pass = r.status == "pass";
  }
  CHECK(monolith_seen);
  CHECK(equivalence_pass);
}

TEST_CASE("file-style run on the violating fixture mirrors the contract") {
  std::vector<SweepAlgebra> algebras;
  algebras.push_back({"example4_p2/GF(2)", cyclic_weight_algebra(2)});
  auto records = run_suite_on("all", algebras, small_opts());
  CHECK(count_status(records, "fail") == 0);
  bool equivalence_skipped = false, monolith_pass = false;
  for (const auto& r : records) {
    if (r.check == "core_vs_bruteforce")
      equivalence_skipped =
          r.status == "skipped" && r.detail == "hypothesis_not_met";
    if (r.check == "monolith")
      monolith_pass =
          r.status == "pass" && r.detail.rfind("monolithic", 0) == 0;
  }
  CHECK(equivalence_skipped);
  CHECK(monolith_pass);
}
