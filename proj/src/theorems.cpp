#include "solvlie/theorems.hpp"

#include "solvlie/error.hpp"

namespace solvlie {

namespace {

// Matrix whose kernel is exactly the subspace.
Matrix membership_matrix(const Subspace& w) {
  std::size_t n = w.ambient_dim();
  Matrix red(w.field(), n, n);
  for (std::size_t c = 0; c < n; ++c)
    red.set_col(c, w.reduce(unit_vector(w.field(), n, c)));
  return red;
}

void require_maximal(const LieAlgebra& L, const Subspace& m,
                     const char* which) {
  if (maximality_check(L, m) == Maximality::not_maximal)
    fail("not_maximal", std::string(which) + " is not a maximal subalgebra");
}

BigInt point_count(const FieldDescriptor& f, std::size_t dim) {
  BigInt n = 1;
  for (std::size_t i = 0; i < dim; ++i) n *= f.p();
  return n;
}

}  // namespace

HypothesisReport hypothesis_report(const LieAlgebra& L) {
  HypothesisReport r;
  r.solvable = is_solvable(L);
  Subspace derived = product_space(L, L.full_space(), L.full_space());
  r.class_of_derived = nilpotency_class(L, derived);
  if (L.field().is_prime_field()) {
    r.char_p = L.field().p();
    r.hypothesis_met = r.solvable && r.class_of_derived.has_value() &&
                       static_cast<int64_t>(*r.class_of_derived) < *r.char_p;
  } else {
    r.hypothesis_met = r.solvable;
  }
  return r;
}

ConjugacyVerdict conjugate_by_core_test(const LieAlgebra& L, const Subspace& m,
                                        const Subspace& k) {
  if (!is_solvable(L)) fail("not_solvable", "core test needs solvable L");
  require_maximal(L, m, "M");
  require_maximal(L, k, "K");
  ConjugacyVerdict v{Verdict::hypothesis_not_met, "core_test",  std::nullopt,
                     core(L, m),                  core(L, k),   {}};
  v.hypothesis = hypothesis_report(L);
  if (!v.hypothesis.hypothesis_met) return v;
  v.verdict =
      (v.core_m == v.core_k) ? Verdict::conjugate : Verdict::not_conjugate;
  return v;
}

std::size_t default_conjugator_cap() { return 100000; }

CorefreeConjugator corefree_conjugator(const LieAlgebra& L, const Subspace& m,
                                       const Subspace& k, std::size_t cap) {
  if (!L.field().is_prime_field())
    fail("unsupported_field", "conjugator search needs a finite field");
  if (cap == 0) cap = default_conjugator_cap();
  require_maximal(L, m, "M");
  require_maximal(L, k, "K");
  if (!core(L, m).is_zero() || !core(L, k).is_zero())
    fail("not_core_free", "both subalgebras must have zero core");

  auto mins = minimal_ideals(L);
  if (mins.size() != 1)
    fail("verification_failed",
         "expected a unique minimal ideal, found " +
             std::to_string(mins.size()));
  const Subspace& a_space = mins.front();
  if (centralizer(L, a_space) != a_space)
    fail("verification_failed", "C_L(A) != A in the core-free setting");
  if (!is_complement(L, a_space, m) || !is_complement(L, a_space, k))
    fail("verification_failed", "L is not A + M (or A + K) with trivial meet");

  if (point_count(L.field(), a_space.dim()) > BigInt(cap))
    fail("cap_exceeded", "conjugator search space exceeds cap");
  Matrix id = Matrix::identity(L.field(), L.dim());
  for (const Vec& a : subspace_vectors(a_space)) {
    Matrix ad = L.ad_matrix(a);
    if (!ad.mul(ad).is_zero())
      fail("verification_failed", "(ad a)^2 != 0 on the minimal ideal");
    Matrix one_plus = id.add(ad);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < m.dim(); ++r)
      rows.push_back(one_plus.apply(m.basis_vector(r)));
    if (Subspace::span(L.field(), L.dim(), rows) != k) continue;
    InnerAutomorphism phi = exp_ad(L, a);
    if (phi.matrix != one_plus)
      fail("verification_failed", "exp(ad a) is not 1 + ad a");
    return CorefreeConjugator{a, a_space, std::move(phi)};
  }
  fail("no_conjugator_found",
       "no a in the minimal ideal conjugates M onto K");
}

Subspace bracket_into_condition(const LieAlgebra& L, const Subspace& m,
                                const Vec& a) {
  std::size_t n = L.dim();
  Matrix red = membership_matrix(m);
  Matrix cond = red.mul(L.ad_matrix(a));  // v ↦ reduce_M([v, a])
  Matrix stacked(L.field(), 2 * n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      stacked.at(r, c) = red.at(r, c);
      stacked.at(n + r, c) = cond.at(r, c);
    }
  }
  return Subspace::span(L.field(), n, kernel_basis(stacked));
}

ChiefFactorConjugator find_conjugator_in_chief_factor(
    const LieAlgebra& L, const Subspace& m, const Subspace& k,
    const ChiefSeries& series, std::size_t cap) {
  if (cap == 0) cap = default_conjugator_cap();
  HypothesisReport hyp = hypothesis_report(L);
  if (!hyp.hypothesis_met)
    fail("hypothesis_not_met", "conjugator theorem needs the char-p gate");
  ConjugacyVerdict verdict = conjugate_by_core_test(L, m, k);
  if (verdict.verdict != Verdict::conjugate)
    fail("not_conjugate", "subalgebras are not conjugate by the core test");

  std::size_t factor = complemented_chief_factor(L, m, series);
  Subspace a_space = series.terms[factor + 1];
  Subspace b_space = series.terms[factor];

  // staging facts from the proof.  B = A ∩ core(M) is unconditional: B ⊆
  // core(M) (B is an ideal inside M), B ⊆ A ∩ core(M) ⊊ A, and A/B is chief.
  if (subspace_intersect(a_space, verdict.core_m) != b_space)
    fail("verification_failed", "B != A ∩ core(M)");
  // the dichotomy consequence [L,A] + B = A is reported, not enforced: it
  // fails exactly when the factor is central (M an ideal, forcing M = K)
  Subspace la_plus_b =
      subspace_sum(product_space(L, L.full_space(), a_space), b_space);
  bool dichotomy = la_plus_b == a_space;
  std::string note;
  if (!dichotomy)
    note = "[L,A] + B = " + la_plus_b.to_string() +
           " falls short of A = " + a_space.to_string();

  if (!L.field().is_prime_field())
    fail("unsupported_field", "conjugator search needs a finite field");
  if (point_count(L.field(), a_space.dim()) > BigInt(cap))
    fail("cap_exceeded", "conjugator search space exceeds cap");
  for (const Vec& a : subspace_vectors(a_space)) {
    if (!exp_eligible(L, a).eligible) continue;
    InnerAutomorphism phi = exp_ad(L, a);
    if (conjugate_subalgebra(phi, m) != k) continue;
    Subspace inter = bracket_into_condition(L, m, a);
    if (inter != subspace_intersect(m, k))
      fail("verification_failed",
           "{m in M : [m,a] in M} differs from M ∩ K");
    return ChiefFactorConjugator{factor,          a_space,
                                 b_space,         a,
                                 std::move(phi),  std::move(inter),
                                 dichotomy,       std::move(note)};
  }
  fail("search_exhausted", "no eligible conjugator found in the chief factor");
}

bool is_complement(const LieAlgebra& L, const Subspace& a, const Subspace& u) {
  return is_subalgebra(L, u) && subspace_intersect(a, u).is_zero() &&
         subspace_sum(a, u).is_full();
}

bool complement_conjugacy_criterion(const LieAlgebra& L, const Subspace& a,
                                    const Subspace& m, const Subspace& k) {
  if (!is_complement(L, a, m) || !is_complement(L, a, k))
    fail("not_a_complement", "M and K must complement A");
  Subspace c = centralizer(L, a);
  return subspace_intersect(m, c) == subspace_intersect(k, c);
}

BijectionReport complement_classes_bijection(const LieAlgebra& L,
                                             const Subspace& a,
                                             std::size_t cap) {
  if (!L.field().is_prime_field())
    fail("unsupported_field", "complement enumeration needs a finite field");
  BijectionReport report;
  auto all = enumerate_subspaces(L.dim(), L.field(), cap);
  std::vector<Subspace> complements;
  for (const auto& u : all)
    if (is_complement(L, a, u)) complements.push_back(u);
  report.complement_count = complements.size();
  report.has_complements = !complements.empty();
  if (!report.has_complements) return report;

  auto classes = orbit_partition(L, complements, a);
  report.class_count = classes.size();

  Subspace c = centralizer(L, a);
  std::vector<Subspace> ideal_complements;
  for (const auto& u : all) {
    if (!c.contains(u)) continue;
    if (!is_ideal(L, u)) continue;
    if (!subspace_intersect(u, a).is_zero()) continue;
    if (subspace_sum(u, a) != c) continue;
    ideal_complements.push_back(u);
  }
  report.ideal_complement_count = ideal_complements.size();

  // the map: class of M ↦ M ∩ C_L(A)
  std::vector<Subspace> images;
  report.map_well_defined = true;
  for (const auto& cls : classes) {
    Subspace image = subspace_intersect(complements[cls.front()], c);
    for (std::size_t idx : cls) {
      if (subspace_intersect(complements[idx], c) != image)
        report.map_well_defined = false;
    }
    if (!is_ideal(L, image) || !subspace_intersect(image, a).is_zero() ||
        subspace_sum(image, a) != c)
      report.map_well_defined = false;
    images.push_back(std::move(image));
  }
  report.injective = true;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] == images[j]) report.injective = false;
  report.surjective = true;
  for (const auto& n : ideal_complements) {
    bool hit = false;
    for (const auto& img : images)
      if (img == n) hit = true;
    if (!hit) report.surjective = false;
  }
  report.counts_equal =
      report.class_count == report.ideal_complement_count;
  return report;
}

IntersectionReport intersection_maximality_check(const LieAlgebra& L,
                                                 const Subspace& m,
                                                 const Subspace& k,
                                                 std::size_t cap) {
  require_maximal(L, m, "M");
  require_maximal(L, k, "K");
  IntersectionReport report{subspace_intersect(m, k),
                            core(L, m),
                            core(L, k),
                            false,
                            false,
                            Maximality::unverified,
                            Maximality::unverified};
  report.cores_comparable_km = report.core_m.contains(report.core_k);
  report.cores_comparable_mk = report.core_k.contains(report.core_m);

  SubalgebraView on_m = sub_algebra_on(L, m);
  report.in_m =
      maximality_check(on_m.algebra, on_m.to_sub_space(report.intersection),
                       cap);
  SubalgebraView on_k = sub_algebra_on(L, k);
  report.in_k =
      maximality_check(on_k.algebra, on_k.to_sub_space(report.intersection),
                       cap);

  // theorem: core(K) ⊄ core(M) forces M ∩ K maximal in M
  if (!report.cores_comparable_km && report.in_m == Maximality::not_maximal)
    fail("verification_failed", "M ∩ K is not maximal in M");
  if (!report.cores_comparable_mk && report.in_k == Maximality::not_maximal)
    fail("verification_failed", "M ∩ K is not maximal in K");

  // corollary: non-conjugate complement pairs of a minimal ideal → both
  if (L.field().is_prime_field()) {
    for (const auto& a : minimal_ideals(L)) {
      if (!is_complement(L, a, m) || !is_complement(L, a, k)) continue;
      if (complement_conjugacy_criterion(L, a, m, k)) continue;
      if (report.in_m != Maximality::maximal ||
          report.in_k != Maximality::maximal)
        fail("verification_failed",
             "non-conjugate complements need M ∩ K maximal in both");
    }
  }

  // corollary: hypothesis + distinct cores → maximal in at least one
  if (hypothesis_report(L).hypothesis_met &&
      !(report.core_m == report.core_k) &&
      report.in_m != Maximality::maximal &&
      report.in_k != Maximality::maximal &&
      (report.in_m == Maximality::not_maximal ||
       report.in_k == Maximality::not_maximal))
    fail("verification_failed",
         "distinct cores but M ∩ K maximal in neither");
  return report;
}

LieAlgebra example4_base_algebra(int64_t p) {
  FieldDescriptor f = FieldDescriptor::gf(p);  // rejects non-primes
  std::size_t n = static_cast<std::size_t>(p) + 2;
  std::size_t xi = n - 2, yi = n - 1;
  std::vector<std::string> names;
  for (int64_t i = 0; i < p; ++i) names.push_back("e" + std::to_string(i));
  names.push_back("x");
  names.push_back("y");
  std::vector<ScEntry> table;
  for (std::size_t i = 0; i < static_cast<std::size_t>(p); ++i) {
    Vec ex = vec_zero(f, n);
    ex[(i + 1) % p] = Scalar::one(f);  // [e_{p-1}, x] wraps to e_0
    table.push_back({i, xi, ex});
    Vec ey = vec_zero(f, n);
    ey[i] = Scalar::of_int(f, static_cast<int64_t>(i));
    if (!vec_is_zero(ey)) table.push_back({i, yi, ey});
  }
  Vec xy = vec_zero(f, n);
  xy[xi] = Scalar::one(f);
  table.push_back({xi, yi, xy});
  LieAlgebra L(f, n, names, table);

  // monolith checks, whenever the vector scan fits under the cap
  if (point_count(f, n) <= BigInt(default_subspace_cap())) {
    std::vector<Vec> a_rows;
    for (std::size_t i = 0; i < static_cast<std::size_t>(p); ++i)
      a_rows.push_back(unit_vector(f, n, i));
    Subspace monolith = Subspace::span(f, n, a_rows);
    auto mins = minimal_ideals(L);
    if (mins.size() != 1 || mins.front() != monolith)
      fail("verification_failed", "algebra is not monolithic with monolith A");
    Subspace derived = product_space(L, L.full_space(), L.full_space());
    Subspace expected =
        subspace_sum(monolith, Subspace::span(f, n, {unit_vector(f, n, xi)}));
    if (derived != expected)
      fail("verification_failed", "derived algebra is not A + span(x)");
    if (nilpotency_class(L, derived).has_value())
      fail("verification_failed", "derived algebra unexpectedly nilpotent");
  }
  return L;
}

}  // namespace solvlie
