#include "arset/handles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arset/errors.hpp"

namespace arset {

std::string to_string(Stage s) {
  switch (s) {
    case Stage::V: return "V";
    case Stage::NP: return "N_P";
    case Stage::WP: return "W_P";
    case Stage::WPrime: return "W'_P";
  }
  return {};
}

std::string TwoHandle::label() const {
  return (kind == Kind::Gamma ? "ga" : "al") + std::to_string(index);
}

std::size_t HandleComplex::gamma_count() const {
  return static_cast<std::size_t>(std::count_if(two_handles.begin(), two_handles.end(), [](auto const& h) {
    return h.kind == TwoHandle::Kind::Gamma;
  }));
}

std::size_t HandleComplex::alpha_count() const {
  return two_handles.size() - gamma_count();
}

HandleComplex build_markov_complex(Presentation const& p, Stage stage) {
  HandleComplex c;
  c.one_handles = p.num_generators();
  c.source      = p;
  c.stage       = stage;
  if (stage == Stage::V) {
    return c;
  }
  for (std::size_t j = 0; j < p.num_relators(); ++j) {
    c.two_handles.push_back({TwoHandle::Kind::Gamma, j + 1, p.relators()[j], 0});
  }
  std::size_t alphas = 0;
  if (stage == Stage::WP) {
    alphas = p.num_generators();
  } else if (stage == Stage::WPrime) {
    if (p.num_generators() == 0) {
      throw PreconditionError("W'_P needs at least one generator");
    }
    alphas = p.num_generators() - 1;
  }
  for (std::size_t i = 0; i < alphas; ++i) {
    c.two_handles.push_back({TwoHandle::Kind::Alpha, i + 1, std::nullopt, 0});
  }
  return c;
}

HandleComplex build_markov_complex(Presentation const& p, bool reduced) {
  return build_markov_complex(p, reduced ? Stage::WPrime : Stage::WP);
}

std::string render(HandleComplex const& c) {
  std::ostringstream out;
  out << "stage: " << to_string(c.stage) << '\n';
  out << "handles: 0:" << c.zero_handles << " 1:" << c.one_handles << " 2:" << c.gamma_count()
      << '+' << c.alpha_count() << '\n';
  for (std::size_t i = 0; i < c.one_handles; ++i) {
    out << "1-handle " << c.source.generators()[i] << '\n';
  }
  for (auto const& h : c.two_handles) {
    out << "2-handle " << h.label()
        << " class=" << (h.attaching_class ? render(*h.attaching_class) : std::string("trivial"))
        << " framing=" << h.framing << '\n';
  }
  return out.str();
}

SlideSequence slide_reduce(SlideTuple const& tuple) {
  if (tuple.empty()) {
    throw EmptyTuple("slide_reduce needs a nonempty tuple");
  }
  std::uint64_t g = 0;
  for (auto x : tuple) {
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw GcdNotOne("tuple entries have gcd " + std::to_string(g) + ", not 1");
  }
  SlideSequence seq;
  seq.initial = tuple;
  seq.negated.assign(tuple.size(), false);
  SlideTuple a = tuple;

  auto nonzero = [&] {
    return std::count_if(a.begin(), a.end(), [](auto x) { return x != 0; });
  };
  while (nonzero() > 1) {
    std::size_t s = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0 && (s == a.size() || a[i] < a[s])) {
        s = i;
      }
    }
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == s) {
        continue;
      }
      while (a[r] != 0 && a[r] >= a[s]) {
        a[r] -= a[s];
        seq.moves.emplace_back(Subtract{r, s});
      }
    }
  }
  auto const          t = static_cast<std::size_t>(std::find(a.begin(), a.end(), 1) - a.begin());
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::swap(perm[0], perm[t]);
  std::swap(a[0], a[t]);
  seq.moves.emplace_back(Permute{std::move(perm)});
  seq.final = std::move(a);
  return seq;
}

SlideSequence orient_and_reduce(std::vector<long> const& signed_tuple) {
  SlideTuple        tuple;
  std::vector<bool> negated;
  for (long x : signed_tuple) {
    negated.push_back(x < 0);
    tuple.push_back(static_cast<std::uint64_t>(x < 0 ? -x : x));
  }
  auto seq    = slide_reduce(tuple);
  seq.negated = std::move(negated);
  return seq;
}

SlideTuple replay_slides(SlideSequence const& seq) {
  SlideTuple a = seq.initial;
  for (std::size_t k = 0; k < seq.moves.size(); ++k) {
    if (auto const* sub = std::get_if<Subtract>(&seq.moves[k])) {
      if (sub->r >= a.size() || sub->s >= a.size() || sub->r == sub->s) {
        throw IllegalMove("subtraction indices invalid", k);
      }
      if (a[sub->s] > a[sub->r]) {
        throw IllegalMove("slide requires a_s <= a_r", k);
      }
      a[sub->r] -= a[sub->s];
    } else {
      auto const& perm = std::get<Permute>(seq.moves[k]).perm;
      std::vector<std::size_t> sorted = perm;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i || sorted.size() != a.size()) {
          throw IllegalMove("not a permutation of the tuple positions", k);
        }
      }
      SlideTuple next(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        next[i] = a[perm[i]];
      }
      a = std::move(next);
    }
  }
  return a;
}

std::string render(SlideSequence const& seq) {
  std::ostringstream out;
  for (std::size_t k = 0; k < seq.moves.size();) {
    if (auto const* sub = std::get_if<Subtract>(&seq.moves[k])) {
      std::size_t run = 1;
      while (k + run < seq.moves.size() && seq.moves[k + run] == seq.moves[k]) {
        ++run;
      }
      out << "sub " << sub->r + 1 << ' ' << sub->s + 1 << " x" << run << '\n';
      k += run;
    } else {
      out << "perm";
      for (auto i : std::get<Permute>(seq.moves[k]).perm) {
        out << ' ' << i + 1;
      }
      out << '\n';
      ++k;
    }
  }
  return out.str();
}

std::vector<long> attaching_exponents(HandleComplex const& c) {
  if (c.stage != Stage::WPrime) {
    throw PreconditionError("attaching exponents are defined for the W'_P stage");
  }
  auto const&       last = c.source.generators().back();
  std::vector<long> out;
  for (auto const& h : c.two_handles) {
    if (h.kind == TwoHandle::Kind::Gamma) {
      auto sums = exponent_sum(*h.attaching_class);
      out.push_back(sums.contains(last) ? sums.at(last) : 0);
    }
  }
  return out;
}

BoundaryDescriptor predict_boundary(HandleComplex const& c, Triviality verdict) {
  BoundaryDescriptor b;
  b.pi1                  = c.source;
  b.h1_invariant_factors = abelian_invariants(c.source);
  if (verdict != Triviality::ProvedTrivial) {
    return b;
  }
  if (!b.h1_invariant_factors.empty()) {
    throw InconsistentVerdict("group declared trivial but its abelianization is not");
  }
  std::size_t const k = c.gamma_count();
  if (c.stage == Stage::WP) {
    b.count = k;
  } else if (c.stage == Stage::WPrime) {
    if (k == 0) {
      throw InconsistentVerdict("a trivial group on at least one generator needs a relator");
    }
    b.count = k - 1;
  } else {
    return b;
  }
  b.kind      = BoundaryDescriptor::Kind::ConnectedSumS2xS2;
  b.b2        = 2 * static_cast<long>(b.count);
  b.signature = 0;
  return b;
}

std::string render(BoundaryDescriptor const& b) {
  std::ostringstream out;
  if (b.kind == BoundaryDescriptor::Kind::ConnectedSumS2xS2) {
    out << "boundary = #" << b.count << "(S2xS2)\n";
  } else {
    out << "boundary = unknown\n";
  }
  out << "h1 = ";
  if (b.h1_invariant_factors.empty()) {
    out << "trivial";
  } else {
    for (std::size_t i = 0; i < b.h1_invariant_factors.size(); ++i) {
      out << (i ? " " : "") << b.h1_invariant_factors[i];
    }
  }
  out << "\nb2 = " << (b.b2 ? std::to_string(*b.b2) : "unknown");
  out << "\nsignature = " << (b.signature ? std::to_string(*b.signature) : "unknown") << '\n';
  return out.str();
}

}  // namespace arset
