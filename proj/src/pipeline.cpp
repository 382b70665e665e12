#include "arset/pipeline.hpp"

#include <sstream>

#include "arset/adjan_rabin.hpp"
#include "arset/errors.hpp"
#include "arset/freebasis.hpp"
#include "arset/handles.hpp"

namespace arset {

void Report::section() {
  sections_.emplace_back();
}

void Report::add(std::string key, std::string value) {
  if (sections_.empty()) {
    section();
  }
  sections_.back().emplace_back(std::move(key), std::move(value));
}

std::string Report::render() const {
  std::string out;
  bool        first = true;
  for (auto const& s : sections_) {
    if (s.empty()) {
      continue;
    }
    if (!first) {
      out += '\n';
    }
    first = false;
    for (auto const& [k, v] : s) {
      out += k + " = " + v + '\n';
    }
  }
  return out;
}

std::optional<std::string> Report::get(std::string const& key) const {
  for (auto const& s : sections_) {
    for (auto const& [k, v] : s) {
      if (k == key) {
        return v;
      }
    }
  }
  return std::nullopt;
}

std::string report_word(Word const& w) {
  return w.empty() ? "1" : render(w);
}

namespace {

  template <typename Range>
  std::string joined(Range const& xs) {
    std::ostringstream out;
    bool               first = true;
    for (auto const& x : xs) {
      out << (first ? "" : " ") << x;
      first = false;
    }
    return out.str();
  }

  std::string invariants(std::vector<Integer> const& xs) {
    return xs.empty() ? "trivial" : joined(xs);
  }

}  // namespace

PipelineResult run_pipeline(Presentation const& seed, std::string const& word,
                            PipelineOptions const& options) {
  PipelineResult result;
  Report&        r = result.report;
  Word const     w = parse_word(word, seed.generators());

  r.section();
  r.add("seed.gens", std::to_string(seed.num_generators()));
  r.add("seed.rels", std::to_string(seed.num_relators()));
  r.add("word", report_word(w));

  auto const out = build_pw(seed, w);

  r.section();
  std::vector<std::string> cert_names;
  for (auto i : out.certificate.indices) {
    cert_names.push_back(seed.generators()[i]);
  }
  auto const collapse = collapse_certificate(out.certificate);
  r.add("cert.generators", joined(cert_names));
  r.add("cert.orders", joined(out.certificate.orders));
  r.add("cert.q", out.certificate.q_max.str());
  r.add("cert.bezout", joined(out.certificate.bezout));
  r.add("collapse.squares", joined(collapse.squared_orders));
  r.add("collapse.bezout", joined(collapse.bezout_sq));

  r.section();
  r.add("qw.gens", std::to_string(out.qw.num_generators()));
  r.add("qw.rels", std::to_string(out.qw.num_relators()));
  r.add("qw.length", std::to_string(out.qw.total_length()));
  r.add("pw.gens", std::to_string(out.pw.num_generators()));
  r.add("pw.rels", std::to_string(out.pw.num_relators()));
  r.add("pw.length", std::to_string(out.pw.total_length()));
  auto const pw_h1 = abelian_invariants(out.pw);
  r.add("pw.abelianization", invariants(pw_h1));

  r.section();
  auto const nielsen = nielsen_reduce(out.rhs_set);
  r.add("u.size", std::to_string(out.rhs_set.size()));
  r.add("u.free_basis", nielsen.is_basis ? "yes" : "no");
  r.add("u.rank", std::to_string(nielsen.rank));

  r.section();
  auto const cyclic = options.cyclic ? options.cyclic : CyclicFreeProduct::recognize(seed);
  std::optional<bool> word_trivial;
  if (cyclic) {
    auto const v = wp_cyclic_free_product(*cyclic, w);
    word_trivial = v.trivial;
    r.add("wp.oracle", v.trivial ? "trivial" : "nontrivial");
    r.add("wp.normal_form", report_word(v.normal_form));
  } else {
    r.add("wp.oracle", "unavailable");
  }

  r.section();
  auto targets = options.targets;
  if (targets.empty()) {
    targets.push_back(TargetName::S3);
  }
  bool nontrivial_quotient = false;
  for (auto t : targets) {
    auto const& h      = target(t);
    auto const  qw_hom = hom_count(out.qw, h, options.jobs);
    auto const  pw_hom = hom_count(out.pw, h, options.jobs);
    nontrivial_quotient = nontrivial_quotient || pw_hom > 1;
    r.add("homcount." + to_string(t) + ".qw", std::to_string(qw_hom));
    r.add("homcount." + to_string(t) + ".pw", std::to_string(pw_hom));
  }

  if (options.enumerate) {
    r.section();
    EnumerationOptions eo;
    eo.max_cosets = options.max_cosets;
    eo.strategy   = options.strategy;
    auto e        = enumerate_cosets(out.pw, eo);
    r.add("enum.strategy", to_string(options.strategy));
    r.add("enum.max_cosets", std::to_string(options.max_cosets));
    r.add("enum.result", render(e));
    r.add("enum.cosets_defined", std::to_string(e.stats.cosets_defined));
    r.add("enum.coincidences", std::to_string(e.stats.coincidences));
    result.enumeration = std::move(e);
  }

  if (options.markov) {
    r.section();
    // Proof of triviality: a one-coset table, or [w] = 1 in the seed, which
    // forces b = 1 and then a = 1 through the collapse certificate.
    auto verdict = Triviality::Unknown;
    bool const enum_trivial = result.enumeration
                              && result.enumeration->outcome == EnumerationResult::Outcome::Finite
                              && result.enumeration->order == 1;
    bool const enum_nontrivial = result.enumeration
                                 && result.enumeration->outcome == EnumerationResult::Outcome::Finite
                                 && result.enumeration->order > 1;
    if (enum_trivial || word_trivial == true) {
      verdict = Triviality::ProvedTrivial;
    } else if (enum_nontrivial || nontrivial_quotient || !pw_h1.empty()) {
      verdict = Triviality::ProvedNonTrivial;
    }
    auto const complex  = build_markov_complex(out.pw, true);
    auto const boundary = predict_boundary(complex, verdict);
    r.add("markov.stage", to_string(complex.stage));
    r.add("markov.handles", "0:" + std::to_string(complex.zero_handles) + " 1:"
                                + std::to_string(complex.one_handles) + " 2:"
                                + std::to_string(complex.gamma_count()) + "+"
                                + std::to_string(complex.alpha_count()));
    r.add("markov.verdict", verdict == Triviality::ProvedTrivial      ? "proved-trivial"
                            : verdict == Triviality::ProvedNonTrivial ? "proved-nontrivial"
                                                                      : "unknown");
    r.add("markov.boundary",
          boundary.kind == BoundaryDescriptor::Kind::ConnectedSumS2xS2
              ? "#" + std::to_string(boundary.count) + "(S2xS2)"
              : "unknown");
    r.add("markov.b2", boundary.b2 ? std::to_string(*boundary.b2) : "unknown");
    r.add("markov.signature", boundary.signature ? std::to_string(*boundary.signature) : "unknown");
    if (verdict == Triviality::ProvedTrivial) {
      auto const seq = orient_and_reduce(attaching_exponents(complex));
      r.add("markov.exponents", joined(seq.initial));
      r.add("markov.slides", std::to_string(seq.moves.size()));
      r.add("markov.slides_final", joined(replay_slides(seq)));
    }
  }
  return result;
}

PipelineResult run_pipeline(std::filesystem::path const& seed_file, std::string const& word,
                            PipelineOptions const& options) {
  return run_pipeline(load_presentation(seed_file), word, options);
}

}  // namespace arset
