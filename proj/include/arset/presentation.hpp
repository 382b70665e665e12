#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arset/abelian.hpp"
#include "arset/word.hpp"

namespace arset {

// A finite presentation (generators : relators). Equations L = R are stored as
// the relator L R^-1.
class Presentation {
 public:
  Presentation() = default;
  // Throws InputError for a malformed name, DuplicateGenerator, or
  // UnknownGenerator when a relator leaves the alphabet.
  Presentation(Alphabet generators, std::vector<Word> relators = {});

  Alphabet const&          generators() const noexcept { return generators_; }
  std::vector<Word> const& relators() const noexcept { return relators_; }

  std::size_t num_generators() const noexcept { return generators_.size(); }
  std::size_t num_relators() const noexcept { return relators_.size(); }

  bool        has_generator(GeneratorName const& name) const;
  std::size_t generator_index(GeneratorName const& name) const;

  // Sum of relator lengths.
  std::size_t total_length() const;

  friend bool operator==(Presentation const&, Presentation const&) = default;

 private:
  Alphabet          generators_;
  std::vector<Word> relators_;
};

// Line format, `#` starts a comment:
//   gens: NAME {NAME}      exactly once, first
//   rel: <word>            zero or more
//   eq: <word> = <word>    stored as L R^-1
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(std::filesystem::path const& path);
std::string  render(Presentation const& p);

struct Elimination {
  Presentation result;
  Word         solution;  // the eliminated generator as a word in the rest
};

// Removes `gen` and relator `rel_index` (0-based), solving that relator for
// gen after rotating gen to the front: gen^e t = 1 gives gen = t^-1 for
// e = +1 and gen = t for e = -1. Throws NotSolvable unless gen occurs
// exactly once in the relator, BadIndex for an out-of-range index.
Elimination  tietze_eliminate_logged(Presentation const& p,
                                     GeneratorName const& gen,
                                     std::size_t          rel_index);
Presentation tietze_eliminate(Presentation const& p,
                              GeneratorName const& gen,
                              std::size_t          rel_index);

// A set of generators whose abelianized images have finite orders with gcd 1.
struct Condition21Certificate {
  std::vector<std::size_t> indices;  // ascending, 0-based
  std::vector<Integer>     orders;   // orders[j] belongs to indices[j]
  Integer                  q_max;
  std::vector<Integer>     bezout;   // sum bezout[j] * orders[j] == 1
};

// The first subset, by cardinality then lexicographically by index, of the
// finite-order generators whose orders have gcd 1. Such a subset is minimal
// and has pairwise distinct orders.
std::optional<Condition21Certificate> check_condition_21(Presentation const& p);

// Re-derives every claim of the certificate against p; throws
// InvalidCertificate on the first failure.
void verify_certificate(Presentation const& p, Condition21Certificate const& cert);

// Once x_i = a^{q_i} and x_i has order dividing q_i, a^{q_i^2} = 1; these
// coefficients combine those relations into a = 1.
struct CollapseCertificate {
  std::vector<Integer> squared_orders;
  std::vector<Integer> bezout_sq;  // sum bezout_sq[j] * squared_orders[j] == 1
};

CollapseCertificate collapse_certificate(Condition21Certificate const& cert);

// Appends mu_i d mu_i^-1 d^-u and mu_i^-1 e mu_i e^-v for i = 1, 2. Requires
// u, v > 3 (BadExponent) and exactly two conjugating words.
Presentation apply_exponent_substitution(Presentation const&      p,
                                         long                     u,
                                         long                     v,
                                         GeneratorName const&     d,
                                         GeneratorName const&     e,
                                         std::vector<Word> const& mu);

}  // namespace arset
