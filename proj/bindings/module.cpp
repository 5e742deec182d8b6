#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "solvlie/catalog.hpp"
#include "solvlie/error.hpp"
#include "solvlie/inner.hpp"
#include "solvlie/json_io.hpp"
#include "solvlie/sweep.hpp"
#include "solvlie/theorems.hpp"

namespace py = pybind11;
using namespace solvlie;

namespace {

Subspace parse_space(const LieAlgebra& L, const std::string& text) {
  return parse_subspace(L.field(), L.dim(), text);
}

Vec parse_vec(const LieAlgebra& L, const std::string& text) {
  return parse_vector(L.field(), L.dim(), text);
}

py::list word_list(const InnerAutomorphism& phi) {
  py::list word;
  for (const Vec& x : phi.word) word.append(vec_to_string(x));
  return word;
}

py::dict hypothesis_dict(const HypothesisReport& h) {
  py::dict d;
  d["solvable"] = h.solvable;
  d["characteristic"] = h.char_p ? *h.char_p : 0;
  if (h.class_of_derived)
    d["class_of_derived"] = *h.class_of_derived;
  else
    d["class_of_derived"] = py::none();
  d["hypothesis_met"] = h.hypothesis_met;
  return d;
}

const char* verdict_text(Verdict v) {
  switch (v) {
    case Verdict::conjugate:
      return "conjugate";
    case Verdict::not_conjugate:
      return "not_conjugate";
    default:
      return "hypothesis_not_met";
  }
}

py::list records_list(const std::vector<CheckRecord>& records) {
  py::list out;
  for (const CheckRecord& r : records) {
    py::dict d;
    d["algebra"] = r.algebra;
    d["check"] = r.check;
    d["status"] = r.status;
    d["detail"] = r.detail;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact conjugacy kernel for finite-dimensional solvable Lie algebras";

  static py::exception<Error> exc(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (e.code() + ": " + e.what()).c_str());
    }
  });

  py::class_<LieAlgebra>(m, "Algebra")
      .def_static(
          "from_json",
          [](const std::string& text) {
            Json doc;
            try {
              doc = Json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
              fail("parse_error", e.what());
            }
            return algebra_from_json(doc);
          },
          py::arg("text"), "parse an algebra document from a JSON string")
      .def_static(
          "load",
          [](const std::string& path) { return load_algebra_file(path); },
          py::arg("path"), "load an algebra document from a file")
      .def_static(
          "fixture",
          [](const std::string& name, const std::string& field) {
            return fixture({name, field_from_text(field)});
          },
          py::arg("name"), py::arg("field") = "q",
          "catalog fixture, e.g. Algebra.fixture('heisenberg3', 'gf3')")
      .def_static(
          "random",
          [](std::uint64_t seed, std::size_t target, const std::string& field,
             std::size_t ambient) {
            return random_solvable(seed, target, field_from_text(field),
                                   ambient);
          },
          py::arg("seed"), py::arg("target"), py::arg("field") = "q",
          py::arg("ambient") = 3,
          "seeded random solvable algebra (pure function of its arguments)")
      .def("to_json", [](const LieAlgebra& L) { return algebra_to_text(L); })
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly(
          "field",
          [](const LieAlgebra& L) { return L.field().to_string(); })
      .def_property_readonly(
          "basis_names",
          [](const LieAlgebra& L) { return L.basis_names(); })
      .def_property_readonly(
          "solvable", [](const LieAlgebra& L) { return is_solvable(L); })
      .def(
          "bracket",
          [](const LieAlgebra& L, const std::string& x, const std::string& y) {
            return vec_to_string(L.bracket(parse_vec(L, x), parse_vec(L, y)));
          },
          py::arg("x"), py::arg("y"),
          "bracket of two coordinate vectors, e.g. bracket('1,0,0', '0,1,0')")
      .def(
          "core",
          [](const LieAlgebra& L, const std::string& u) {
            return subspace_to_text(core(L, parse_space(L, u)));
          },
          py::arg("subalgebra"))
      .def(
          "centralizer",
          [](const LieAlgebra& L, const std::string& u) {
            return subspace_to_text(centralizer(L, parse_space(L, u)));
          },
          py::arg("subspace"))
      .def("chief_series",
           [](const LieAlgebra& L) {
             std::vector<std::string> out;
             for (const Subspace& term : chief_series(L).terms)
               out.push_back(subspace_to_text(term));
             return out;
           })
      .def(
          "maximal_subalgebras",
          [](const LieAlgebra& L, std::size_t cap) {
            std::vector<std::string> out;
            for (const Subspace& s : maximal_subalgebras(L, cap))
              out.push_back(subspace_to_text(s));
            return out;
          },
          py::arg("cap") = 0)
      .def("minimal_ideals",
           [](const LieAlgebra& L) {
             std::vector<std::string> out;
             for (const Subspace& s : minimal_ideals(L))
               out.push_back(subspace_to_text(s));
             return out;
           })
      .def("hypothesis",
           [](const LieAlgebra& L) {
             return hypothesis_dict(hypothesis_report(L));
           })
      .def(
          "exp_eligible",
          [](const LieAlgebra& L, const std::string& x) {
            Eligibility e = exp_eligible(L, parse_vec(L, x));
            py::dict d;
            d["eligible"] = e.eligible;
            d["reason"] = e.reason;
            return d;
          },
          py::arg("x"))
      .def(
          "exp_ad",
          [](const LieAlgebra& L, const std::string& x) {
            InnerAutomorphism phi = exp_ad(L, parse_vec(L, x));
            py::dict d;
            d["matrix"] = phi.matrix.to_string();
            d["word"] = word_list(phi);
            return d;
          },
          py::arg("x"), "exponential of ad x; refuses ineligible x")
      .def(
          "conjugate_by_core_test",
          [](const LieAlgebra& L, const std::string& m, const std::string& k) {
            ConjugacyVerdict v =
                conjugate_by_core_test(L, parse_space(L, m), parse_space(L, k));
            py::dict d;
            d["verdict"] = verdict_text(v.verdict);
            d["core_m"] = subspace_to_text(v.core_m);
            d["core_k"] = subspace_to_text(v.core_k);
            d["hypothesis"] = hypothesis_dict(v.hypothesis);
            return d;
          },
          py::arg("m"), py::arg("k"),
          "core-equality conjugacy verdict for two maximal subalgebras")
      .def(
          "are_conjugate_bruteforce",
          [](const LieAlgebra& L, const std::string& m, const std::string& k,
             std::size_t cap) {
            ConjugacyResult r = are_conjugate_bruteforce(
                L, parse_space(L, m), parse_space(L, k), L.full_space(), cap);
            py::dict d;
            d["conjugate"] = r.conjugate;
            d["orbit_size"] = r.orbit_size;
            if (r.witness) d["word"] = word_list(*r.witness);
            return d;
          },
          py::arg("m"), py::arg("k"), py::arg("cap") = 0)
      .def(
          "find_conjugator",
          [](const LieAlgebra& L, const std::string& m, const std::string& k,
             std::size_t cap) {
            ChiefFactorConjugator cf = find_conjugator_in_chief_factor(
                L, parse_space(L, m), parse_space(L, k), chief_series(L), cap);
            py::dict d;
            d["a"] = vec_to_string(cf.a);
            d["word"] = word_list(cf.map);
            d["matrix"] = cf.map.matrix.to_string();
            d["factor_index"] = cf.k;
            d["a_space"] = subspace_to_text(cf.a_space);
            d["b_space"] = subspace_to_text(cf.b_space);
            d["intersection"] = subspace_to_text(cf.intersection);
            d["dichotomy_holds"] = cf.dichotomy_holds;
            d["staging_note"] = cf.staging_note;
            return d;
          },
          py::arg("m"), py::arg("k"), py::arg("cap") = 0,
          "conjugator a in the complemented chief factor with exp(ad a)(M) = K")
      .def(
          "complement_bijection",
          [](const LieAlgebra& L, const std::string& a, std::size_t cap) {
            BijectionReport r =
                complement_classes_bijection(L, parse_space(L, a), cap);
            py::dict d;
            d["has_complements"] = r.has_complements;
            d["complement_count"] = r.complement_count;
            d["class_count"] = r.class_count;
            d["ideal_complement_count"] = r.ideal_complement_count;
            d["map_well_defined"] = r.map_well_defined;
            d["injective"] = r.injective;
            d["surjective"] = r.surjective;
            d["counts_equal"] = r.counts_equal;
            return d;
          },
          py::arg("minimal_ideal"), py::arg("cap") = 0,
          "complement conjugacy classes vs ideal complements in the centralizer")
      .def("__repr__", [](const LieAlgebra& L) {
        return "<Algebra dim=" + std::to_string(L.dim()) + " over " +
               L.field().to_string() + ">";
      });

  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t seed, std::size_t count,
         std::size_t max_dim, std::size_t samples, bool include_random) {
        SweepOptions opts;
        opts.seed = seed;
        opts.random_count = count;
        opts.max_dim = max_dim;
        opts.automorphism_samples = samples;
        opts.include_random = include_random;
        return records_list(run_suite(suite, opts));
      },
      py::arg("suite") = "all", py::arg("seed") = 42, py::arg("count") = 50,
      py::arg("max_dim") = 4, py::arg("samples") = 1000,
      py::arg("include_random") = true,
      "theorem sweep over the built-in catalog; one record per check instance");

  m.def(
      "check_algebra",
      [](const LieAlgebra& L, const std::string& label,
         const std::string& suite) {
        SweepOptions opts;
        std::vector<SweepAlgebra> one;
        one.push_back({label, L});
        return records_list(run_suite_on(suite, one, opts));
      },
      py::arg("algebra"), py::arg("label") = "algebra",
      py::arg("suite") = "all", "theorem sweep over a single algebra");
}
