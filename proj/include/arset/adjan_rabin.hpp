#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "arset/presentation.hpp"
#include "arset/word.hpp"

namespace arset {

// Names of the four generators adjoined to the seed.
inline constexpr char const* kGenA     = "a";
inline constexpr char const* kGenAlpha = "al";
inline constexpr char const* kGenB     = "b";
inline constexpr char const* kGenBeta  = "be";

struct EliminationStep {
  GeneratorName generator;
  std::size_t   relator_index;  // 0-based, in the presentation at that step
  Word          solution;

  friend bool operator==(EliminationStep const&, EliminationStep const&) = default;
};

// How the seed's generators appear inside Q_w. The certificate generators come
// first (x_1..x_p), the others follow in their original order. Seed names that
// collide with a, al, b, be get a trailing underscore.
struct SeedLayout {
  std::vector<GeneratorName>             seed_order;  // original names, x_1..x_n
  Alphabet                               qw_names;    // names used in Q_w, x_1..x_n
  std::vector<long>                      exponents;   // q_i for i <= p, q + i after
  std::map<GeneratorName, GeneratorName> renamed;     // only the collisions
};

SeedLayout seed_layout(Presentation const& p, Condition21Certificate const& cert);

struct AdjanRabinOutput {
  Presentation                 qw;
  Presentation                 pw;
  Condition21Certificate       certificate;  // against the seed's own indexing
  SeedLayout                   layout;
  std::vector<Word>            rhs_set;  // U, over (b, be)
  std::vector<EliminationStep> elimination_log;
};

// Q_w: generators x_1..x_n, a, al, b, be; relators r_1..r_m, then
//   a al a^-1 = b^2
//   al a al^-1 = b be b^-1
//   a^-q_i x_i al^q_i = be^-i b be^i            1 <= i <= p
//   a^-(q+i) x_i al^(q+i) = be^-i b be^i        p < i <= n
//   [w, al^2] = be^-(n+1) b be^(n+1)
// each stored as L R^-1. Throws InvalidCertificate or UnknownGenerator.
Presentation build_qw(Presentation const& p, Word const& w, Condition21Certificate const& cert);

// Builds Q_w and eliminates al, be, then x_1..x_n, leaving (a, b) with the
// substituted seed relators followed by the transformed commutator relation.
// Throws Condition21NotSatisfied when the seed has no certificate.
AdjanRabinOutput build_pw(Presentation const& p, Word const& w);

// The n + 3 right-hand sides: b^2, b be b^-1, be^-i b be^i for i = 1..n+1.
std::vector<Word> rhs_basis_set(std::size_t n);

// One line per step: `elim <gen> via rel <idx>: <gen> = <word>` (1-based idx).
std::string render(std::vector<EliminationStep> const& log);

}  // namespace arset
