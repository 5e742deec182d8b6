#include "solvlie/lie.hpp"

#include <algorithm>

#include "solvlie/error.hpp"

namespace solvlie {

LieAlgebra::LieAlgebra(FieldDescriptor field, std::size_t dim,
                       std::vector<std::string> basis_names,
                       const std::vector<ScEntry>& table)
    : field_(field), dim_(dim), names_(std::move(basis_names)) {
  if (names_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i)
      names_.push_back("e" + std::to_string(i));
  }
  if (names_.size() != dim_)
    fail("bad_dimension", "expected " + std::to_string(dim_) +
                              " basis names, got " +
                              std::to_string(names_.size()));
  sc_.assign(dim_ * dim_, vec_zero(field_, dim_));
  std::vector<bool> seen(dim_ * dim_, false);
  for (const auto& entry : table) {
    if (entry.i >= entry.j || entry.j >= dim_)
      fail("bad_dimension", "structure constant index pair (" +
                                std::to_string(entry.i) + "," +
                                std::to_string(entry.j) +
                                ") must satisfy i < j < dim");
    if (entry.value.size() != dim_)
      fail("bad_dimension", "structure constant value has wrong length");
    for (const auto& s : entry.value)
      if (s.field() != field_)
        fail("field_mismatch", "structure constant scalar field mismatch");
    std::size_t idx = entry.i * dim_ + entry.j;
    if (seen[idx])
      fail("duplicate_entry", "structure constants given twice for (" +
                                  std::to_string(entry.i) + "," +
                                  std::to_string(entry.j) + ")");
    seen[idx] = true;
    sc_[idx] = entry.value;
    sc_[entry.j * dim_ + entry.i] = vec_neg(entry.value);
  }
  // Jacobi: [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] = 0
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vec ek = unit_vector(field_, dim_, k);
        Vec ei = unit_vector(field_, dim_, i);
        Vec ej = unit_vector(field_, dim_, j);
        Vec acc = bracket(structure_constant(i, j), ek);
        acc = vec_add(acc, bracket(structure_constant(j, k), ei));
        acc = vec_add(acc, bracket(structure_constant(k, i), ej));
        if (!vec_is_zero(acc))
          fail("jacobi_violation",
               "Jacobi identity fails at basis triple (" + std::to_string(i) +
                   "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  }
}

const Vec& LieAlgebra::structure_constant(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_)
    fail("bad_dimension", "structure constant index out of range");
  return sc_[i * dim_ + j];
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    fail("shape_mismatch", "bracket operands must have the algebra dimension");
  Vec out = vec_zero(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero() && v[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Scalar coef = u[i] * v[j] - u[j] * v[i];
      if (coef.is_zero()) continue;
      const Vec& c = sc_[i * dim_ + j];
      for (std::size_t m = 0; m < dim_; ++m) {
        if (!c[m].is_zero()) out[m] = out[m] + coef * c[m];
      }
    }
  }
  return out;
}

Matrix LieAlgebra::ad_matrix(const Vec& x) const {
  if (x.size() != dim_)
    fail("shape_mismatch", "ad operand must have the algebra dimension");
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    // column i = [b_i, x]
    Vec col = vec_zero(field_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (x[j].is_zero() || j == i) continue;
      const Vec& c = sc_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!c[k].is_zero()) col[k] = col[k] + x[j] * c[k];
    }
    m.set_col(i, col);
  }
  return m;
}

std::vector<ScEntry> LieAlgebra::nonzero_entries() const {
  std::vector<ScEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!vec_is_zero(sc_[i * dim_ + j]))
        out.push_back({i, j, sc_[i * dim_ + j]});
  return out;
}

Subspace product_space(const LieAlgebra& L, const Subspace& u,
                       const Subspace& v) {
  if (u.ambient_dim() != L.dim() || v.ambient_dim() != L.dim())
    fail("shape_mismatch", "product_space ambient mismatch");
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t s = 0; s < v.dim(); ++s)
      gens.push_back(L.bracket(u.basis_vector(r), v.basis_vector(s)));
  return Subspace::span(L.field(), L.dim(), gens);
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  std::vector<Subspace> series{L.full_space()};
  while (true) {
    Subspace next = product_space(L, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().is_zero()) break;
  }
  return series;
}

bool is_solvable(const LieAlgebra& L) {
  return derived_series(L).back().is_zero();
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L,
                                           const Subspace& ideal) {
  if (!is_ideal(L, ideal))
    fail("not_an_ideal", "lower central series needs an ideal");
  std::vector<Subspace> series{ideal};
  while (true) {
    Subspace next = product_space(L, series.back(), ideal);
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().is_zero()) break;
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& L,
                                            const Subspace& ideal) {
  auto series = lower_central_series(L, ideal);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;  // I^1 = terms[0], so I^{len} = 0 first
}

Subspace centralizer(const LieAlgebra& L, const Subspace& u) {
  if (u.dim() == 0) return L.full_space();
  std::size_t n = L.dim();
  Matrix stacked(L.field(), u.dim() * n, n);
  for (std::size_t r = 0; r < u.dim(); ++r) {
    Matrix ad = L.ad_matrix(u.basis_vector(r));  // x ↦ [x, u_r]
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        stacked.at(r * n + a, b) = ad.at(a, b);
  }
  return Subspace::span(L.field(), n, kernel_basis(stacked));
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& u) {
  return u.contains(product_space(L, u, u));
}

bool is_ideal(const LieAlgebra& L, const Subspace& u) {
  return u.contains(product_space(L, L.full_space(), u));
}

namespace {

// Matrix whose kernel is exactly the subspace (columns = reduce of units).
Matrix membership_matrix(const Subspace& w) {
  std::size_t n = w.ambient_dim();
  Matrix red(w.field(), n, n);
  for (std::size_t c = 0; c < n; ++c)
    red.set_col(c, w.reduce(unit_vector(w.field(), n, c)));
  return red;
}

}  // namespace

Subspace core(const LieAlgebra& L, const Subspace& u) {
  if (!is_subalgebra(L, u))
    fail("not_a_subalgebra", "core is defined for subalgebras");
  std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t j = 0; j < n; ++j)
    ads.push_back(L.ad_matrix(unit_vector(L.field(), n, j)));
  Subspace w = u;
  while (true) {
    // next = {x ∈ w : [b_j, x] ∈ w for all j}; [b_j, x] = −ad_j x, and
    // membership is sign-blind, so stack red and red·ad_j.
    Matrix red = membership_matrix(w);
    Matrix stacked(L.field(), (n + 1) * n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) stacked.at(a, b) = red.at(a, b);
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m = red.mul(ads[j]);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          stacked.at((j + 1) * n + a, b) = m.at(a, b);
    }
    Subspace next = Subspace::span(L.field(), n, kernel_basis(stacked));
    if (next == w) return w;
    w = next;
  }
}

Subspace ideal_closure(const LieAlgebra& L, const Vec& v) {
  Subspace u = Subspace::span(L.field(), L.dim(), {v});
  while (true) {
    Subspace next = subspace_sum(u, product_space(L, u, L.full_space()));
    if (next == u) return u;
    u = next;
  }
}

Subspace subalgebra_closure(const LieAlgebra& L, const Subspace& u) {
  Subspace w = u;
  while (true) {
    Subspace next = subspace_sum(w, product_space(L, w, w));
    if (next == w) return w;
    w = next;
  }
}

Vec SubalgebraView::to_sub(const Vec& parent) const {
  auto coords = space.coordinates(parent);
  if (!coords) fail("not_a_member", "vector lies outside the subalgebra");
  return *coords;
}

Vec SubalgebraView::from_sub(const Vec& sub) const {
  return space.from_coordinates(sub);
}

Subspace SubalgebraView::to_sub_space(const Subspace& parent) const {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < parent.dim(); ++r)
    rows.push_back(to_sub(parent.basis_vector(r)));
  return Subspace::span(space.field(), space.dim(), rows);
}

Subspace SubalgebraView::from_sub_space(const Subspace& sub) const {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < sub.dim(); ++r)
    rows.push_back(from_sub(sub.basis_vector(r)));
  return Subspace::span(space.field(), space.ambient_dim(), rows);
}

SubalgebraView sub_algebra_on(const LieAlgebra& L, const Subspace& m) {
  if (!is_subalgebra(L, m))
    fail("not_a_subalgebra", "sub_algebra_on needs a bracket-closed subspace");
  std::size_t d = m.dim();
  std::vector<ScEntry> table;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec br = L.bracket(m.basis_vector(i), m.basis_vector(j));
      auto coords = m.coordinates(br);
      if (!coords) fail("not_a_subalgebra", "bracket escaped the subspace");
      if (!vec_is_zero(*coords)) table.push_back({i, j, *coords});
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back("m" + std::to_string(i));
  return SubalgebraView{LieAlgebra(L.field(), d, names, table), m};
}

QuotientMap::QuotientMap(const LieAlgebra& L, Subspace ideal)
    : ideal_(std::move(ideal)), parent_dim_(L.dim()) {
  if (!is_ideal(L, ideal_))
    fail("not_an_ideal", "quotient needs an ideal");
  std::vector<bool> is_pivot(parent_dim_, false);
  for (auto p : ideal_.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < parent_dim_; ++c)
    if (!is_pivot[c]) comp_cols_.push_back(c);

  std::size_t q_dim = comp_cols_.size();
  std::vector<std::string> names;
  for (auto c : comp_cols_) names.push_back(L.basis_names()[c]);
  std::vector<ScEntry> table;
  for (std::size_t s = 0; s < q_dim; ++s) {
    for (std::size_t t = s + 1; t < q_dim; ++t) {
      Vec br = L.bracket(unit_vector(L.field(), parent_dim_, comp_cols_[s]),
                         unit_vector(L.field(), parent_dim_, comp_cols_[t]));
      Vec q = project(br);
      if (!vec_is_zero(q)) table.push_back({s, t, q});
    }
  }
  quotient_.emplace(L.field(), q_dim, std::move(names), table);
}

Vec QuotientMap::project(const Vec& v) const {
  Vec reduced = ideal_.reduce(v);
  Vec out = vec_zero(ideal_.field(), comp_cols_.size());
  for (std::size_t t = 0; t < comp_cols_.size(); ++t)
    out[t] = reduced[comp_cols_[t]];
  return out;
}

Vec QuotientMap::section(const Vec& q) const {
  if (q.size() != comp_cols_.size())
    fail("shape_mismatch", "section operand has wrong dimension");
  Vec out = vec_zero(ideal_.field(), parent_dim_);
  for (std::size_t t = 0; t < comp_cols_.size(); ++t)
    out[comp_cols_[t]] = q[t];
  return out;
}

Subspace QuotientMap::push(const Subspace& u) const {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < u.dim(); ++r)
    rows.push_back(project(u.basis_vector(r)));
  return Subspace::span(ideal_.field(), comp_cols_.size(), rows);
}

Subspace QuotientMap::pull(const Subspace& q) const {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < ideal_.dim(); ++r)
    rows.push_back(ideal_.basis_vector(r));
  for (std::size_t r = 0; r < q.dim(); ++r)
    rows.push_back(section(q.basis_vector(r)));
  return Subspace::span(ideal_.field(), parent_dim_, rows);
}

std::vector<Subspace> minimal_ideals(const LieAlgebra& L) {
  if (!L.field().is_prime_field())
    fail("unsupported_field", "minimal ideals need a finite field");
  BigInt points = 1;
  for (std::size_t i = 0; i < L.dim(); ++i) points *= L.field().p();
  if (points > BigInt(default_subspace_cap()))
    fail("cap_exceeded", "too many vectors for minimal-ideal scan");

  std::vector<Subspace> closures;
  std::vector<std::string> seen;
  for (const Vec& v : enumerate_vectors(L.field(), L.dim())) {
    // projective normalization: first nonzero coordinate 1
    std::size_t lead = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) {
        lead = i;
        break;
      }
    }
    if (lead == v.size() || !v[lead].is_one()) continue;
    Subspace cl = ideal_closure(L, v);
    std::string key = cl.to_string();
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      closures.push_back(std::move(cl));
    }
  }
  std::vector<Subspace> minimal;
  for (const auto& c : closures) {
    bool is_min = true;
    for (const auto& other : closures) {
      if (other.dim() < c.dim() && c.contains(other)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), subspace_lex_less);
  return minimal;
}

ChiefSeries chief_series(const LieAlgebra& L) {
  if (!L.field().is_prime_field())
    fail("unsupported_field", "chief series needs a finite field");
  if (!is_solvable(L)) fail("not_solvable", "chief series needs solvable L");
  ChiefSeries series;
  series.terms.push_back(L.zero_space());
  while (!series.terms.back().is_full()) {
    QuotientMap q(L, series.terms.back());
    auto mins = minimal_ideals(q.algebra());
    // mins is sorted; the lex-least choice keeps the series reproducible
    series.terms.push_back(q.pull(mins.front()));
  }
  return series;
}

std::vector<Subspace> maximal_subalgebras(const LieAlgebra& L,
                                          std::size_t cap) {
  if (!L.field().is_prime_field())
    fail("unsupported_field", "maximal-subalgebra enumeration needs a finite field");
  auto all = enumerate_subspaces(L.dim(), L.field(), cap);
  std::vector<Subspace> subalgebras;
  for (const auto& u : all)
    if (!u.is_full() && is_subalgebra(L, u)) subalgebras.push_back(u);
  std::vector<Subspace> maximal;
  for (const auto& m : subalgebras) {
    bool is_max = true;
    for (const auto& s : subalgebras) {
      if (s.dim() > m.dim() && s.contains(m)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(m);
  }
  return maximal;
}

Maximality maximality_check(const LieAlgebra& L, const Subspace& m,
                            std::size_t cap) {
  if (m.is_full() || !is_subalgebra(L, m)) return Maximality::not_maximal;
  if (m.dim() + 1 == L.dim()) return Maximality::maximal;  // codim 1
  if (!L.field().is_prime_field()) return Maximality::unverified;
  if (cap == 0) cap = default_subspace_cap();
  BigInt points = 1;
  for (std::size_t i = 0; i < L.dim(); ++i) points *= L.field().p();
  if (points > BigInt(cap))
    fail("cap_exceeded", "too many vectors for maximality scan");
  for (const Vec& v : enumerate_vectors(L.field(), L.dim())) {
    if (m.contains(v)) continue;
    Subspace ext = subspace_sum(m, Subspace::span(L.field(), L.dim(), {v}));
    if (!subalgebra_closure(L, ext).is_full()) return Maximality::not_maximal;
  }
  return Maximality::maximal;
}

bool is_maximal(const LieAlgebra& L, const Subspace& m, std::size_t cap) {
  return maximality_check(L, m, cap) == Maximality::maximal;
}

std::size_t complemented_chief_factor(const LieAlgebra& L, const Subspace& m,
                                      const ChiefSeries& series) {
  for (std::size_t k = 0; k + 1 < series.terms.size(); ++k) {
    if (!m.contains(series.terms[k])) continue;
    if (m.contains(series.terms[k + 1])) continue;
    const Subspace& lk = series.terms[k];
    const Subspace& lk1 = series.terms[k + 1];
    if (!subspace_sum(m, lk1).is_full())
      fail("verification_failed", "M + L_{k+1} is not all of L");
    if (subspace_intersect(m, lk1) != lk)
      fail("verification_failed", "M ∩ L_{k+1} is not L_k");
    return k;
  }
  fail("verification_failed", "no complemented chief factor found");
}

}  // namespace solvlie
