#include "solvlie/catalog.hpp"

#include <utility>

#include "solvlie/error.hpp"
#include "solvlie/theorems.hpp"

namespace solvlie {

namespace {

// splits "name(arg)" into name and the raw arg text ("" when absent)
std::pair<std::string, std::string> split_name(const std::string& text) {
  auto open = text.find('(');
  if (open == std::string::npos) return {text, ""};
  if (text.back() != ')')
    fail("invalid_fixture", "malformed fixture name: " + text);
  return {text.substr(0, open),
          text.substr(open + 1, text.size() - open - 2)};
}

LieAlgebra dim2(const FieldDescriptor& f) {
  Vec x = unit_vector(f, 2, 0);
  return LieAlgebra(f, 2, {"x", "y"}, {{0, 1, x}});
}

LieAlgebra heisenberg3(const FieldDescriptor& f) {
  Vec z = unit_vector(f, 3, 2);
  return LieAlgebra(f, 3, {"x", "y", "z"}, {{0, 1, z}});
}

LieAlgebra dim3_scaled(const FieldDescriptor& f, const Scalar& lambda) {
  Vec x = unit_vector(f, 3, 0);
  Vec ly = vec_scaled(unit_vector(f, 3, 1), lambda);
  std::vector<ScEntry> table = {{0, 2, x}};
  if (!vec_is_zero(ly)) table.push_back({1, 2, ly});
  return LieAlgebra(f, 3, {"x", "y", "z"}, table);
}

}  // namespace

LieAlgebra upper_triangular_algebra(const FieldDescriptor& f, std::size_t n) {
  if (n == 0) fail("invalid_fixture", "upper_triangular needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // (a, b), a <= b
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      cells.emplace_back(a, b);
      names.push_back("E" + std::to_string(a) + "_" + std::to_string(b));
    }
  std::size_t dim = cells.size();
  auto index_of = [&](std::size_t a, std::size_t b) {
    // row a starts after a full rows of shrinking length
    return a * n - a * (a - 1) / 2 + (b - a);
  };
  // [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb
  std::vector<ScEntry> table;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      auto [a, b] = cells[i];
      auto [c, d] = cells[j];
      Vec v = vec_zero(f, dim);
      if (b == c) {
        std::size_t t = index_of(a, d);
        v[t] += Scalar::one(f);
      }
      if (d == a) {
        std::size_t t = index_of(c, b);
        v[t] -= Scalar::one(f);
      }
      if (!vec_is_zero(v)) table.push_back({i, j, v});
    }
  return LieAlgebra(f, dim, names, table);
}

LieAlgebra fixture(const FixtureId& id) {
  auto [name, arg] = split_name(id.name);
  const FieldDescriptor& f = id.field;
  if (name == "dim2_nonabelian") return dim2(f);
  if (name == "heisenberg3") return heisenberg3(f);
  if (name == "dim3_almost_abelian")
    return dim3_scaled(f, Scalar::one(f));
  if (name == "dim3_scaled") {
    if (arg.empty()) fail("invalid_fixture", "dim3_scaled needs a scalar");
    return dim3_scaled(f, Scalar::parse(f, arg));
  }
  if (name == "upper_triangular") {
    if (arg.empty()) fail("invalid_fixture", "upper_triangular needs n");
    std::size_t n = 0;
    try {
      n = static_cast<std::size_t>(std::stoull(arg));
    } catch (const std::exception&) {
      fail("invalid_fixture", "bad size: " + arg);
    }
    return upper_triangular_algebra(f, n);
  }
  if (name == "example4") {
    if (!f.is_prime_field())
      fail("invalid_fixture", "example4 lives over GF(p)");
    return example4_base_algebra(f.p());
  }
  fail("invalid_fixture", "unknown fixture: " + id.name);
}

std::vector<std::string> fixture_names() {
  return {"dim2_nonabelian",      "heisenberg3",   "dim3_almost_abelian",
          "dim3_scaled(lambda)",  "upper_triangular(n)", "example4"};
}

LieAlgebra random_solvable(uint64_t seed, std::size_t target_dim,
                           const FieldDescriptor& f, std::size_t ambient_n) {
  LieAlgebra ambient = upper_triangular_algebra(f, ambient_n);
  if (target_dim > ambient.dim())
    fail("invalid_argument", "target_dim exceeds the ambient dimension");
  Rng rng(seed);
  auto random_scalar = [&] {
    if (f.is_prime_field()) return Scalar::of_int(f, rng.below(f.p()));
    return Scalar::of_int(f, rng.below(7) - 3);  // small integers over Q
  };
  Subspace current = ambient.zero_space();
  const std::size_t max_draws = 16 * (target_dim + 1);
  for (std::size_t draw = 0; draw < max_draws; ++draw) {
    if (current.dim() >= target_dim) break;
    Vec v = vec_zero(f, ambient.dim());
    for (std::size_t c = 0; c < ambient.dim(); ++c) v[c] = random_scalar();
    if (vec_is_zero(v)) continue;
    Subspace seeded = subspace_sum(
        current, Subspace::span(f, ambient.dim(), {v}));
    current = subalgebra_closure(ambient, seeded);
  }
  if (current.dim() < target_dim)
    fail("generation_failed", "random draws never reached the target");
  // rebuilding through the constructor re-runs the Jacobi validation
  return sub_algebra_on(ambient, current).algebra;
}

}  // namespace solvlie
