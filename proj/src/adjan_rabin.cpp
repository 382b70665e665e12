#include "arset/adjan_rabin.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "arset/errors.hpp"

namespace arset {

namespace {

  long to_exponent(Integer const& x) {
    if (x > std::numeric_limits<int>::max()) {
      throw PreconditionError("generator order " + x.str() + " is too large to expand");
    }
    return x.convert_to<long>();
  }

  // be^-i b be^i
  Word beta_conjugate(long i) {
    Word const be = Word::generator(kGenBeta);
    return concat({power(be, -i), Word::generator(kGenB), power(be, i)});
  }

}  // namespace

SeedLayout seed_layout(Presentation const& p, Condition21Certificate const& cert) {
  verify_certificate(p, cert);
  SeedLayout                    out;
  std::set<GeneratorName> const reserved{kGenA, kGenAlpha, kGenB, kGenBeta};
  std::set<GeneratorName>       taken(p.generators().begin(), p.generators().end());

  std::vector<std::size_t> order = cert.indices;
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    if (!std::binary_search(cert.indices.begin(), cert.indices.end(), i)) {
      order.push_back(i);
    }
  }
  long const q = to_exponent(cert.q_max);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    auto const& name = p.generators()[order[pos]];
    out.seed_order.push_back(name);
    GeneratorName qname = name;
    if (reserved.contains(name)) {
      do {
        qname += '_';
      } while (reserved.contains(qname) || taken.contains(qname));
      taken.insert(qname);
      out.renamed.emplace(name, qname);
    }
    out.qw_names.push_back(qname);
    long const i = static_cast<long>(pos) + 1;
    out.exponents.push_back(pos < cert.indices.size() ? to_exponent(cert.orders[pos])
                                                      : q + i);
  }
  return out;
}

namespace {

  Presentation build_qw(Presentation const& p,
                        Word const&         w,
                        SeedLayout const&   layout) {
    if (!uses_only(w, p.generators())) {
      auto bad = std::find_if(w.begin(), w.end(), [&](Letter const& l) {
        return !p.has_generator(l.generator);
      });
      throw UnknownGenerator(bad->generator);
    }
    std::map<GeneratorName, Word> rename;
    for (std::size_t i = 0; i < layout.seed_order.size(); ++i) {
      rename.emplace(layout.seed_order[i], Word::generator(layout.qw_names[i]));
    }

    Word const a = Word::generator(kGenA), al = Word::generator(kGenAlpha),
               b = Word::generator(kGenB), be = Word::generator(kGenBeta);
    auto const n = static_cast<long>(p.num_generators());

    Alphabet gens = layout.qw_names;
    gens.insert(gens.end(), {kGenA, kGenAlpha, kGenB, kGenBeta});

    std::vector<Word> rels;
    for (auto const& r : p.relators()) {
      rels.push_back(substitute(r, rename));
    }
    rels.push_back(concat({a, al, invert(a), power(b, -2)}));
    rels.push_back(concat({al, a, invert(al), invert(concat({b, be, invert(b)}))}));
    for (long i = 1; i <= n; ++i) {
      auto const  k = layout.exponents[static_cast<std::size_t>(i - 1)];
      Word const  x = Word::generator(layout.qw_names[static_cast<std::size_t>(i - 1)]);
      rels.push_back(concat({power(a, -k), x, power(al, k), invert(beta_conjugate(i))}));
    }
    rels.push_back(
        concat(commutator(substitute(w, rename), power(al, 2)), invert(beta_conjugate(n + 1))));
    return Presentation(std::move(gens), std::move(rels));
  }

}  // namespace

Presentation build_qw(Presentation const& p, Word const& w, Condition21Certificate const& cert) {
  return build_qw(p, w, seed_layout(p, cert));
}

AdjanRabinOutput build_pw(Presentation const& p, Word const& w) {
  auto cert = check_condition_21(p);
  if (!cert) {
    throw Condition21NotSatisfied("no subset of finite-order generators has coprime orders");
  }
  AdjanRabinOutput out;
  out.certificate = std::move(*cert);
  out.layout      = seed_layout(p, out.certificate);
  out.qw          = build_qw(p, w, out.layout);
  out.rhs_set     = rhs_basis_set(p.num_generators());

  // (i) sits right after the seed relators; each elimination removes the
  // relator at that position, so the next defining relation moves into it.
  std::size_t const pos = p.num_relators();
  Presentation      cur = out.qw;
  auto              eliminate = [&](GeneratorName const& g) {
    auto step = tietze_eliminate_logged(cur, g, pos);
    out.elimination_log.push_back({g, pos, std::move(step.solution)});
    cur = std::move(step.result);
  };
  eliminate(kGenAlpha);
  eliminate(kGenBeta);
  for (auto const& x : out.layout.qw_names) {
    eliminate(x);
  }
  out.pw = std::move(cur);
  return out;
}

std::vector<Word> rhs_basis_set(std::size_t n) {
  if (n < 1) {
    throw PreconditionError("rhs_basis_set requires n >= 1");
  }
  Word const        b = Word::generator(kGenB), be = Word::generator(kGenBeta);
  std::vector<Word> out{power(b, 2), concat({b, be, invert(b)})};
  for (long i = 1; i <= static_cast<long>(n) + 1; ++i) {
    out.push_back(beta_conjugate(i));
  }
  return out;
}

std::string render(std::vector<EliminationStep> const& log) {
  std::string out;
  for (auto const& s : log) {
    out += "elim " + s.generator + " via rel " + std::to_string(s.relator_index + 1) + ": "
           + s.generator + " = " + render(s.solution) + '\n';
  }
  return out;
}

}  // namespace arset
