#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arset/abelian.hpp"
#include "arset/presentation.hpp"

namespace arset {

// Stages of the 5-dimensional construction: V is B^5 with one 1-handle per
// generator, N_P adds a 2-handle along each relator, W_P adds a 2-handle
// along a trivial circle for every generator, W'_P for all but the last.
enum class Stage { V, NP, WP, WPrime };

std::string to_string(Stage s);

struct TwoHandle {
  enum class Kind { Gamma, Alpha };

  Kind        kind;
  std::size_t index;                  // 1-based within its kind
  std::optional<Word> attaching_class;  // the relator for Gamma, none (trivial) for Alpha
  int         framing = 0;            // always 0; recorded, never computed with

  std::string label() const;  // "ga<j>" or "al<i>"
};

struct HandleComplex {
  int                    dim          = 5;
  std::size_t            zero_handles = 1;
  std::size_t            one_handles  = 0;
  std::vector<TwoHandle> two_handles;
  Presentation           source;
  Stage                  stage = Stage::V;

  std::size_t gamma_count() const;
  std::size_t alpha_count() const;
};

HandleComplex build_markov_complex(Presentation const& p, Stage stage);
// reduced = false gives W_P, reduced = true gives W'_P (needs n >= 1).
HandleComplex build_markov_complex(Presentation const& p, bool reduced);

// `handles: 0:<c> 1:<n> 2:<k>+<alphas>` followed by one line per handle.
std::string render(HandleComplex const& c);

// Subtract(r, s): a_r <- a_r - a_s, legal when r != s and a_s <= a_r.
// Permute(perm): new[i] = old[perm[i]]. Indices are 0-based.
struct Subtract {
  std::size_t r;
  std::size_t s;
  friend bool operator==(Subtract const&, Subtract const&) = default;
};
struct Permute {
  std::vector<std::size_t> perm;
  friend bool operator==(Permute const&, Permute const&) = default;
};
using SlideMove = std::variant<Subtract, Permute>;
using SlideTuple = std::vector<std::uint64_t>;

struct SlideSequence {
  SlideTuple             initial;
  std::vector<SlideMove> moves;
  SlideTuple             final;
  // Entries whose attaching circle was reoriented to make a_j >= 0.
  std::vector<bool> negated;
};

// Reduces a gcd-1 tuple to (1, 0, ..., 0): take the least nonzero entry
// (lowest index on ties), subtract it from every other nonzero entry until
// that entry drops below it, repeat until one nonzero entry is left, then
// swap it into position 0. Throws EmptyTuple or GcdNotOne.
SlideSequence slide_reduce(SlideTuple const& tuple);

// Takes absolute values first, recording the negated positions.
SlideSequence orient_and_reduce(std::vector<long> const& signed_tuple);

// Replays the moves from `initial`, checking each side condition. Throws
// IllegalMove with the offending move's 0-based index.
SlideTuple replay_slides(SlideSequence const& seq);

// `sub r s xN` for runs of identical subtractions, `perm i1 ... ik`; 1-based.
std::string render(SlideSequence const& seq);

// For W'_P: the exponent sum, in each gamma class, of the one generator whose
// alpha handle was left out. These are the a_j in pi_1(S^1 x D^4) = Z.
std::vector<long> attaching_exponents(HandleComplex const& c);

enum class Triviality { ProvedTrivial, ProvedNonTrivial, Unknown };

struct BoundaryDescriptor {
  enum class Kind { ConnectedSumS2xS2, Unknown };

  Kind                 kind  = Kind::Unknown;
  std::size_t          count = 0;  // summands, ConnectedSumS2xS2 only
  Presentation         pi1;
  std::vector<Integer> h1_invariant_factors;  // empty means trivial
  std::optional<long>  b2;
  std::optional<long>  signature;
};

// Under ProvedTrivial the boundary of W_P is the connected sum of k copies of
// S^2 x S^2, of W'_P k - 1 copies. Otherwise only pi_1 and H_1 are reported.
// ProvedTrivial against a nontrivial abelianization throws
// InconsistentVerdict.
BoundaryDescriptor predict_boundary(HandleComplex const& c, Triviality verdict);

std::string render(BoundaryDescriptor const& b);

}  // namespace arset
