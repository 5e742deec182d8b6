#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "solvlie/catalog.hpp"
#include "solvlie/error.hpp"
#include "solvlie/json_io.hpp"
#include "test_util.hpp"

using namespace solvlie;

namespace {

bool same_table(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field() || a.dim() != b.dim()) return false;
  if (a.basis_names() != b.basis_names()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.structure_constant(i, j) != b.structure_constant(i, j))
        return false;
  return true;
}

}  // namespace

TEST_CASE("field serialization") {
  FieldDescriptor gf3 = FieldDescriptor::gf(3);
  Json j = field_to_json(gf3);
  CHECK(j.at("kind") == "Fp");
  CHECK(j.at("p") == 3);
  CHECK(field_from_json(j) == gf3);

  Json q = field_to_json(FieldDescriptor::rationals());
  CHECK(q.at("kind") == "Q");
  CHECK_FALSE(q.contains("p"));
  CHECK(field_from_json(q).is_rationals());

  CHECK_THROWS_WITH_AS(field_from_json(Json{{"kind", "R"}}),
                       doctest::Contains("kind"), Error);
  CHECK_THROWS_AS(field_from_json(Json{{"kind", "Fp"}}), Error);
  CHECK_THROWS_WITH_AS(field_from_json(Json{{"kind", "Fp"}, {"p", 4}}),
                       doctest::Contains("prime"), Error);
}

TEST_CASE("round trip over every catalog fixture") {
  std::vector<FieldDescriptor> fields = {
      FieldDescriptor::gf(2), FieldDescriptor::gf(3), FieldDescriptor::gf(5),
      FieldDescriptor::rationals()};
  std::vector<std::string> names = {"dim2_nonabelian", "heisenberg3",
                                    "dim3_almost_abelian", "dim3_scaled(0)",
                                    "dim3_scaled(2)", "upper_triangular(2)",
                                    "upper_triangular(3)", "example4"};
  for (const std::string& name : names) {
    for (const FieldDescriptor& f : fields) {
      if (name == "example4" && !f.is_prime_field()) continue;
      CAPTURE(name);
      CAPTURE(f.to_string());
      LieAlgebra L = fixture({name, f});
      Json doc = algebra_to_json(L);
      LieAlgebra back = algebra_from_json(doc);
      CHECK(same_table(L, back));
      // serialize -> parse -> serialize is byte-stable
      CHECK(algebra_to_text(L) == algebra_to_text(back));
    }
  }
}

TEST_CASE("round trip keeps rational values exact") {
  FieldDescriptor q;
  LieAlgebra L(q, 2, {"x", "y"},
               {{0, 1, {Scalar::parse(q, "-3/7"), Scalar::parse(q, "22")}}});
  Json doc = algebra_to_json(L);
  CHECK(doc.at("brackets").at(0).at("value").at(0) == "-3/7");
  LieAlgebra back = algebra_from_json(doc);
  CHECK(same_table(L, back));
}

TEST_CASE("document shape") {
  LieAlgebra L = testutil::heisenberg(FieldDescriptor::gf(3));
  Json doc = algebra_to_json(L);
  CHECK(doc.at("dim") == 3);
  CHECK(doc.at("basis_names") == Json::array({"x", "y", "z"}));
  REQUIRE(doc.at("brackets").size() == 1);
  const Json& e = doc.at("brackets").at(0);
  CHECK(e.at("i") == 0);
  CHECK(e.at("j") == 1);
  CHECK(e.at("value") == Json::array({"0", "0", "1"}));
  // keys come out in document order, not alphabetical
  std::string text = doc.dump();
  CHECK(text.find("\"field\"") < text.find("\"dim\""));
  CHECK(text.find("\"dim\"") < text.find("\"basis_names\""));
}

TEST_CASE("missing basis_names defaults to e0..e(n-1)") {
  Json doc = {{"field", {{"kind", "Fp"}, {"p", 2}}},
              {"dim", 2},
              {"brackets", Json::array()}};
  LieAlgebra L = algebra_from_json(doc);
  CHECK(L.basis_names() == std::vector<std::string>{"e0", "e1"});
}

TEST_CASE("malformed documents are rejected") {
  Json good = {{"field", {{"kind", "Fp"}, {"p", 3}}},
               {"dim", 2},
               {"basis_names", {"x", "y"}},
               {"brackets",
                Json::array({{{"i", 0}, {"j", 1}, {"value", {"1", "0"}}}})}};
  CHECK(algebra_from_json(good).dim() == 2);

  auto broken = [&](auto mutate) {
    Json doc = good;
    mutate(doc);
    return doc;
  };

  CHECK_THROWS_WITH_AS(
      algebra_from_json(broken([](Json& d) { d.erase("field"); })),
      doctest::Contains("field"), Error);
  CHECK_THROWS_WITH_AS(
      algebra_from_json(broken([](Json& d) { d.erase("dim"); })),
      doctest::Contains("dim"), Error);
  CHECK_THROWS_WITH_AS(
      algebra_from_json(broken([](Json& d) { d.erase("brackets"); })),
      doctest::Contains("brackets"), Error);
  // i >= j
  CHECK_THROWS_WITH_AS(
      algebra_from_json(broken([](Json& d) { d["brackets"][0]["i"] = 1; })),
      doctest::Contains("i < j"), Error);
  // duplicate pair
  CHECK_THROWS_WITH_AS(
      algebra_from_json(broken([](Json& d) {
        d["brackets"].push_back(d["brackets"][0]);
      })),
      doctest::Contains("duplicate"), Error);
  // index out of range
  CHECK_THROWS_WITH_AS(
      algebra_from_json(broken([](Json& d) { d["brackets"][0]["j"] = 5; })),
      doctest::Contains("range"), Error);
  // wrong vector length
  CHECK_THROWS_AS(
      algebra_from_json(broken([](Json& d) {
        d["brackets"][0]["value"] = {"1", "0", "0"};
      })),
      Error);
  // malformed scalar: zero denominator
  try {
    algebra_from_json(broken(
        [](Json& d) { d["brackets"][0]["value"] = {"1/0", "0"}; }));
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.code() == "parse_error");
  }
  // wrong name count
  CHECK_THROWS_WITH_AS(
      algebra_from_json(broken([](Json& d) { d["basis_names"] = {"x"}; })),
      doctest::Contains("basis_names"), Error);
  // a table that parses but violates Jacobi still fails, just not as a
  // parse error
  try {
    Json doc = {{"field", {{"kind", "Fp"}, {"p", 5}}},
                {"dim", 3},
                {"brackets",
                 Json::array({{{"i", 0}, {"j", 1}, {"value", {"0", "0", "1"}}},
                              {{"i", 0}, {"j", 2}, {"value", {"1", "0", "0"}}},
                              {{"i", 1}, {"j", 2}, {"value", {"0", "1", "0"}}}})}};
    algebra_from_json(doc);
    FAIL("expected jacobi_violation");
  } catch (const Error& e) {
    CHECK(e.code() == "jacobi_violation");
  }
}

TEST_CASE("file loading") {
  const char* path = "json_io_roundtrip.json";
  LieAlgebra L = testutil::almost_abelian(FieldDescriptor::gf(3));
  {
    std::ofstream out(path, std::ios::binary);
    out << algebra_to_text(L);
  }
  LieAlgebra back = load_algebra_file(path);
  CHECK(same_table(L, back));

  {
    std::ofstream out(path, std::ios::binary);
    out << "{\"field\": {\"kind\": \"Q\"}, \"dim\": ";
  }
  try {
    load_algebra_file(path);
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.code() == "parse_error");
  }
  std::remove(path);

  try {
    load_algebra_file("no_such_file_anywhere.json");
    FAIL("expected io_error");
  } catch (const Error& e) {
    CHECK(e.code() == "io_error");
  }
}

TEST_CASE("subspace text") {
  FieldDescriptor f = FieldDescriptor::gf(3);
  Subspace u = parse_subspace(f, 3, "0,1,0;1,0,2");
  CHECK(u.dim() == 2);
  CHECK(u.contains(testutil::vec_of(f, {1, 1, 2})));
  // canonical form sorts pivots and reduces
  CHECK(subspace_to_text(u) == "1,0,2;0,1,0");
  CHECK(parse_subspace(f, 3, subspace_to_text(u)) == u);

  // spaces are tolerated, spanning sets get canonicalized
  CHECK(parse_subspace(f, 3, " 0,2,0 ; 0,1,0 ").dim() == 1);

  CHECK(parse_subspace(f, 3, "0").is_zero());
  CHECK(parse_subspace(f, 3, "").is_zero());
  CHECK(parse_subspace(f, 3, "0,0,0").is_zero());
  CHECK(subspace_to_text(Subspace::zero(f, 3)) == "0");

  CHECK_THROWS_WITH_AS(parse_subspace(f, 3, "1,2"),
                       doctest::Contains("coordinates"), Error);
  CHECK_THROWS_AS(parse_subspace(f, 3, "1,2,x"), Error);

  FieldDescriptor q;
  Subspace w = parse_subspace(q, 2, "1/2,3");
  CHECK(w.dim() == 1);
  CHECK(subspace_to_text(w) == "1,6");
}
