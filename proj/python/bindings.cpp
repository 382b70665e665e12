#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "arset/adjan_rabin.hpp"
#include "arset/enumerate.hpp"
#include "arset/errors.hpp"
#include "arset/freebasis.hpp"
#include "arset/handles.hpp"
#include "arset/pipeline.hpp"
#include "arset/quotients.hpp"

namespace py = pybind11;
using namespace arset;

namespace {

// Big integers cross the boundary as Python ints via their decimal form.
py::int_ to_py(Integer const& x) {
  return py::int_(py::str(x.str()));
}

py::list to_py(std::vector<Integer> const& xs) {
  py::list out;
  for (auto const& x : xs) {
    out.append(to_py(x));
  }
  return out;
}

std::vector<Integer> from_py(std::vector<py::int_> const& xs) {
  std::vector<Integer> out;
  for (auto const& x : xs) {
    out.emplace_back(py::str(x).cast<std::string>());
  }
  return out;
}

py::dict certificate_dict(Presentation const& p, Condition21Certificate const& c) {
  py::list names;
  for (auto i : c.indices) {
    names.append(p.generators()[i]);
  }
  py::dict d;
  d["indices"]    = c.indices;
  d["generators"] = names;
  d["orders"]     = to_py(c.orders);
  d["q_max"]      = to_py(c.q_max);
  d["bezout"]     = to_py(c.bezout);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Free-group words, presentations, and the Adjan-Rabin construction";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto input = py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", input.ptr());

  py::class_<Word>(m, "Word")
      .def(py::init<>())
      .def_static("parse", &parse_word, py::arg("text"), py::arg("alphabet"))
      .def("__len__", &Word::size)
      .def("__str__", [](Word const& w) { return render(w); })
      .def("__repr__", [](Word const& w) { return "Word('" + render(w) + "')"; })
      .def("__eq__", [](Word const& x, Word const& y) { return x == y; })
      .def("__lt__", [](Word const& x, Word const& y) { return x < y; })
      .def("__hash__", [](Word const& w) { return py::hash(py::str(render(w))); })
      .def("__mul__", [](Word const& x, Word const& y) { return concat(x, y); })
      .def("__pow__", [](Word const& x, long e) { return power(x, e); })
      .def("inverse", [](Word const& w) { return invert(w); })
      .def("exponent_sum", [](Word const& w) { return exponent_sum(w); })
      .def("substitute", &substitute, py::arg("images"))
      .def("letters", [](Word const& w) {
        py::list out;
        for (auto const& l : w) {
          out.append(py::make_tuple(l.generator, l.sign));
        }
        return out;
      });

  py::class_<Presentation>(m, "Presentation")
      .def(py::init<Alphabet, std::vector<Word>>(), py::arg("generators"), py::arg("relators") = std::vector<Word>{})
      .def_static("parse", &parse_presentation, py::arg("text"))
      .def_static("load", &load_presentation, py::arg("path"))
      .def_property_readonly("generators", &Presentation::generators)
      .def_property_readonly("relators", &Presentation::relators)
      .def("total_length", &Presentation::total_length)
      .def("word", [](Presentation const& p, std::string const& text) { return parse_word(text, p.generators()); })
      .def("__eq__", [](Presentation const& x, Presentation const& y) { return x == y; })
      .def("__str__", [](Presentation const& p) { return render(p); });

  m.def("tietze_eliminate", &tietze_eliminate, py::arg("presentation"), py::arg("generator"),
        py::arg("relator_index"));
  m.def(
      "abelian_invariants", [](Presentation const& p) { return to_py(abelian_invariants(p)); },
      "Invariant factors of the abelianization; 0 marks a free factor, [] is trivial.");
  m.def("generator_orders", [](Presentation const& p) {
    py::list out;
    for (auto const& o : generator_orders(p)) {
      out.append(o ? py::object(to_py(*o)) : py::object(py::none()));
    }
    return out;
  });
  m.def("extended_gcd", [](std::vector<py::int_> const& values) {
    auto const g = extended_gcd(from_py(values));
    return py::make_tuple(to_py(g.gcd), to_py(g.coefficients));
  });
  m.def("check_condition_21", [](Presentation const& p) -> py::object {
    auto const c = check_condition_21(p);
    return c ? py::object(certificate_dict(p, *c)) : py::object(py::none());
  });
  m.def("build_qw", [](Presentation const& p, Word const& w) {
    auto const c = check_condition_21(p);
    if (!c) {
      throw Condition21NotSatisfied("seed does not satisfy the coprime-order condition");
    }
    return build_qw(p, w, *c);
  });
  m.def("build_pw", [](Presentation const& p, Word const& w) {
    auto const out = build_pw(p, w);
    py::dict   d;
    d["qw"]          = out.qw;
    d["pw"]          = out.pw;
    d["certificate"] = certificate_dict(p, out.certificate);
    d["rhs_set"]     = out.rhs_set;
    d["log"]         = render(out.elimination_log);
    return d;
  });
  m.def("rhs_basis_set", &rhs_basis_set, py::arg("n"));
  m.def("is_free_basis", &is_free_basis, py::arg("words"));
  m.def("nielsen_reduce", [](std::vector<Word> const& words) {
    auto const r = nielsen_reduce(words);
    py::dict   d;
    d["is_basis"]    = r.is_basis;
    d["rank"]        = r.rank;
    d["reduced_set"] = r.reduced_set;
    d["expressions"] = r.expressions;
    py::list log;
    for (auto const& mv : r.reduction_log) {
      log.append(render(mv));
    }
    d["log"] = log;
    return d;
  });

  m.def(
      "enumerate_cosets",
      [](Presentation const& p, std::size_t max_cosets, std::string const& strategy) {
        EnumerationOptions o;
        o.max_cosets = max_cosets;
        o.strategy   = parse_strategy(strategy);
        EnumerationResult r;
        {
          py::gil_scoped_release release;
          r = enumerate_cosets(p, o);
        }
        py::dict d;
        d["finite"]         = r.outcome == EnumerationResult::Outcome::Finite;
        d["order"]          = r.order;
        d["result"]         = render(r);
        d["cosets_defined"] = r.stats.cosets_defined;
        d["coincidences"]   = r.stats.coincidences;
        return d;
      },
      py::arg("presentation"), py::arg("max_cosets") = 1'000'000, py::arg("strategy") = "hlt");

  m.def(
      "hom_count",
      [](Presentation const& p, std::string const& name, unsigned jobs) {
        auto const& h = target(parse_target(name));
        py::gil_scoped_release release;
        return hom_count(p, h, jobs);
      },
      py::arg("presentation"), py::arg("target") = "s3", py::arg("jobs") = 1);

  m.def(
      "wp_cyclic_free_product",
      [](std::vector<std::optional<long>> const& orders, std::string const& word) {
        auto const g = CyclicFreeProduct::standard(orders);
        auto const v = wp_cyclic_free_product(g, parse_word(word, g.generators));
        return py::make_tuple(v.trivial, v.normal_form);
      },
      "Orders per factor x1, x2, ...; None is an infinite cyclic factor.");

  m.def("slide_reduce", [](std::vector<long> const& tuple) {
    auto const seq = orient_and_reduce(tuple);
    py::dict   d;
    d["initial"] = seq.initial;
    d["final"]   = replay_slides(seq);
    d["negated"] = seq.negated;
    d["moves"]   = seq.moves.size();
    d["text"]    = render(seq);
    return d;
  });

  m.def(
      "predict_boundary",
      [](Presentation const& p, bool reduced, std::string const& verdict) {
        auto v = Triviality::Unknown;
        if (verdict == "trivial") {
          v = Triviality::ProvedTrivial;
        } else if (verdict == "nontrivial") {
          v = Triviality::ProvedNonTrivial;
        } else if (verdict != "unknown") {
          throw InputError("unknown verdict '" + verdict + "'");
        }
        auto const b = predict_boundary(build_markov_complex(p, reduced), v);
        py::dict   d;
        d["connected_sum"] = b.kind == BoundaryDescriptor::Kind::ConnectedSumS2xS2
                                 ? py::object(py::int_(b.count))
                                 : py::object(py::none());
        d["h1"]            = to_py(b.h1_invariant_factors);
        d["b2"]            = b.b2 ? py::object(py::int_(*b.b2)) : py::object(py::none());
        d["signature"]     = b.signature ? py::object(py::int_(*b.signature)) : py::object(py::none());
        return d;
      },
      py::arg("presentation"), py::arg("reduced") = true, py::arg("verdict") = "unknown");

  m.def(
      "run_pipeline",
      [](std::filesystem::path const& seed, std::string const& word, std::vector<std::string> const& targets,
         bool enumerate, std::size_t max_cosets, bool markov) {
        PipelineOptions o;
        for (auto const& t : targets) {
          o.targets.push_back(parse_target(t));
        }
        o.enumerate  = enumerate;
        o.max_cosets = max_cosets;
        o.markov     = markov;
        return run_pipeline(seed, word, o).report.render();
      },
      py::arg("seed"), py::arg("word"), py::arg("targets") = std::vector<std::string>{},
      py::arg("enumerate") = false, py::arg("max_cosets") = 1'000'000, py::arg("markov") = false);
}
