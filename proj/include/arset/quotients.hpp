#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arset/presentation.hpp"
#include "arset/word.hpp"

namespace arset {

using Permutation = std::vector<std::uint8_t>;  // images of 0..d-1

// A finite group given by its multiplication table, built as the closure of
// a set of generating permutations. Elements are sorted, so the identity is
// element 0. Products compose left to right: (x*y)(i) = y(x(i)).
class FiniteTarget {
 public:
  static FiniteTarget from_generators(std::string name, std::vector<Permutation> const& gens);

  std::string const& name() const noexcept { return name_; }
  std::size_t        order() const noexcept { return elements_.size(); }
  std::size_t        identity() const noexcept { return 0; }

  std::uint16_t multiply(std::size_t x, std::size_t y) const { return table_[x * order() + y]; }
  std::uint16_t inverse(std::size_t x) const { return inverse_[x]; }
  Permutation const& element(std::size_t x) const { return elements_[x]; }

  // Associativity on every triple; identity and inverses.
  bool is_group() const;

 private:
  std::string                name_;
  std::vector<Permutation>   elements_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
};

enum class TargetName { S3, A4, S4, S5 };

TargetName          parse_target(std::string_view name);  // s3 | a4 | s4 | s5
std::string         to_string(TargetName t);
FiniteTarget const& target(TargetName t);

// Number of homomorphisms from the presented group into H, by exhausting
// generator images in presentation order and checking each relator as soon
// as all of its generators are assigned. `jobs` threads split the images of
// the first generator.
std::uint64_t hom_count(Presentation const& p, FiniteTarget const& h, unsigned jobs = 1);

// Free product of cyclic groups, one factor per generator; nullopt is Z.
struct CyclicFreeProduct {
  Alphabet                         generators;
  std::vector<std::optional<long>> orders;

  // Generators x1..xk; throws PreconditionError for a finite order below 2.
  static CyclicFreeProduct standard(std::vector<std::optional<long>> orders);
  // Recognizes a presentation whose relators are, up to conjugacy, powers of
  // single generators; a generator's order is the gcd of its powers. nullopt
  // for anything else, including a generator forced to be trivial.
  static std::optional<CyclicFreeProduct> recognize(Presentation const& p);
};

struct WordProblemVerdict {
  bool trivial = false;
  Word normal_form;  // empty iff trivial
};

// Syllable normal form: exponents reduced to balanced residues, empty
// syllables deleted, neighbours of the same generator merged.
WordProblemVerdict wp_cyclic_free_product(CyclicFreeProduct const& g, Word const& w);

}  // namespace arset
