#include "solvlie/inner.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "solvlie/error.hpp"

namespace solvlie {

Matrix ad_matrix(const LieAlgebra& L, const Vec& x) { return L.ad_matrix(x); }

Eligibility exp_eligible(const LieAlgebra& L, const Vec& x) {
  Eligibility out;
  if (L.field().characteristic() == 0) {
    Matrix ad = L.ad_matrix(x);
    out.eligible = ad.pow(L.dim()).is_zero();
    out.reason = out.eligible ? "ad x is nilpotent"
                              : "ad x is not nilpotent";
    return out;
  }
  int64_t p = L.field().p();
  Subspace closure = ideal_closure(L, x);
  auto cls = nilpotency_class(L, closure);
  out.closure = closure;
  out.closure_class = cls;
  if (!cls.has_value()) {
    out.reason = "smallest ideal containing x is not nilpotent";
  } else if (static_cast<int64_t>(*cls) >= p) {
    out.reason = "smallest ideal containing x has class " +
                 std::to_string(*cls) + " >= char " + std::to_string(p);
  } else {
    out.eligible = true;
    out.reason = "contained in a nilpotent ideal of class " +
                 std::to_string(*cls) + " < char " + std::to_string(p);
  }
  return out;
}

namespace {

bool preserves_bracket(const LieAlgebra& L, const Matrix& m) {
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = m.apply(L.structure_constant(i, j));  // φ([b_i, b_j])
      Vec rhs = L.bracket(m.col(i), m.col(j));        // [φ(b_i), φ(b_j)]
      if (!vec_eq(lhs, rhs)) return false;
    }
  }
  return true;
}

}  // namespace

InnerAutomorphism exp_ad(const LieAlgebra& L, const Vec& x) {
  Eligibility ok = exp_eligible(L, x);
  if (!ok.eligible) fail("not_eligible", "exp(ad x): " + ok.reason);
  FieldDescriptor f = L.field();
  Matrix ad = L.ad_matrix(x);
  Matrix acc = Matrix::identity(f, L.dim());
  Matrix power = Matrix::identity(f, L.dim());
  BigInt factorial = 1;
  for (std::size_t r = 1; r <= L.dim(); ++r) {
    power = power.mul(ad);
    if (power.is_zero()) break;
    factorial *= r;
    // divide only live terms — in char p eligibility keeps r < p here
    BigInt rem = f.is_prime_field() ? BigInt(factorial % f.p()) : BigInt(0);
    Scalar inv_fact =
        f.is_prime_field()
            ? Scalar::of_int(f, rem.convert_to<int64_t>()).inverse()
            : Scalar::of_rat(BigRat(1, factorial));
    acc = acc.add(power.scaled(inv_fact));
  }
  if (!preserves_bracket(L, acc) || rref(acc).rank != L.dim())
    fail("automorphism_violation",
         "exp(ad x) failed the automorphism validation");
  return InnerAutomorphism{std::move(acc), {x}};
}

InnerAutomorphism identity_automorphism(const LieAlgebra& L) {
  return InnerAutomorphism{Matrix::identity(L.field(), L.dim()), {}};
}

InnerAutomorphism compose(const InnerAutomorphism& a,
                          const InnerAutomorphism& b) {
  std::vector<Vec> word = b.word;
  word.insert(word.end(), a.word.begin(), a.word.end());
  return InnerAutomorphism{a.matrix.mul(b.matrix), std::move(word)};
}

Subspace conjugate_subalgebra(const InnerAutomorphism& phi,
                              const Subspace& m) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < m.dim(); ++r)
    rows.push_back(phi.apply(m.basis_vector(r)));
  return Subspace::span(m.field(), m.ambient_dim(), rows);
}

std::vector<InnerAutomorphism> eligible_generators(const LieAlgebra& L,
                                                   const Subspace& b) {
  if (!L.field().is_prime_field())
    fail("unsupported_field", "generator enumeration needs a finite field");
  std::vector<InnerAutomorphism> gens{identity_automorphism(L)};
  std::unordered_set<std::string> seen{gens[0].matrix.to_string()};
  for (const Vec& x : subspace_vectors(b)) {
    if (!exp_eligible(L, x).eligible) continue;
    InnerAutomorphism phi = exp_ad(L, x);
    if (seen.insert(phi.matrix.to_string()).second)
      gens.push_back(std::move(phi));
  }
  return gens;
}

std::size_t default_group_cap() { return 1000000; }

InnerGroup inner_group(const LieAlgebra& L, const Subspace& b,
                       std::size_t cap) {
  if (cap == 0) cap = default_group_cap();
  InnerGroup g;
  g.cap = cap;
  g.generators = eligible_generators(L, b);
  std::unordered_set<std::string> seen;
  std::deque<std::size_t> queue;
  g.complete = true;
  auto try_add = [&](InnerAutomorphism phi) {
    if (!seen.insert(phi.matrix.to_string()).second) return true;
    if (g.elements.size() >= cap) {
      g.complete = false;
      return false;
    }
    g.elements.push_back(std::move(phi));
    queue.push_back(g.elements.size() - 1);
    return true;
  };
  for (const auto& gen : g.generators) {
    if (!try_add(gen)) return g;
  }
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators) {
      if (!try_add(compose(gen, g.elements[idx]))) return g;
    }
  }
  return g;
}

ConjugacyResult are_conjugate_bruteforce(const LieAlgebra& L,
                                         const Subspace& m, const Subspace& k,
                                         const Subspace& b, std::size_t cap) {
  if (cap == 0) cap = default_group_cap();
  ConjugacyResult out;
  if (m == k) {
    out.conjugate = true;
    out.witness = identity_automorphism(L);
    out.orbit_size = 1;
    return out;
  }
  auto gens = eligible_generators(L, b);
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<std::pair<Subspace, InnerAutomorphism>> orbit;
  orbit.emplace_back(m, identity_automorphism(L));
  seen.emplace(m.to_string(), 0);
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& gen : gens) {
      Subspace image = conjugate_subalgebra(gen, orbit[head].first);
      std::string key = image.to_string();
      if (seen.count(key)) continue;
      InnerAutomorphism via = compose(gen, orbit[head].second);
      if (image == k) {
        out.conjugate = true;
        out.witness = std::move(via);
        out.orbit_size = orbit.size() + 1;
        return out;
      }
      if (orbit.size() >= cap)
        fail("cap_exceeded", "conjugacy orbit exceeded cap " +
                                 std::to_string(cap));
      seen.emplace(std::move(key), orbit.size());
      orbit.emplace_back(std::move(image), std::move(via));
    }
  }
  out.conjugate = false;
  out.orbit_size = orbit.size();
  return out;
}

std::vector<std::vector<std::size_t>> orbit_partition(
    const LieAlgebra& L, const std::vector<Subspace>& spaces,
    const Subspace& b, std::size_t cap) {
  if (cap == 0) cap = default_group_cap();
  auto gens = eligible_generators(L, b);
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> assigned(spaces.size(), false);
  std::unordered_map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < spaces.size(); ++i)
    index_of.emplace(spaces[i].to_string(), i);
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (assigned[i]) continue;
    // BFS the orbit of spaces[i]; collect members that are in the list
    std::vector<std::size_t> members;
    std::unordered_set<std::string> seen{spaces[i].to_string()};
    std::vector<Subspace> queue{spaces[i]};
    members.push_back(i);
    assigned[i] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& gen : gens) {
        Subspace image = conjugate_subalgebra(gen, queue[head]);
        std::string key = image.to_string();
        if (!seen.insert(key).second) continue;
        if (queue.size() >= cap)
          fail("cap_exceeded", "orbit partition exceeded cap");
        auto hit = index_of.find(key);
        if (hit != index_of.end() && !assigned[hit->second]) {
          assigned[hit->second] = true;
          members.push_back(hit->second);
        }
        queue.push_back(std::move(image));
      }
    }
    classes.push_back(std::move(members));
  }
  return classes;
}

}  // namespace solvlie
