#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arset {

// Identifier of a generator, `[A-Za-z][A-Za-z0-9_]*`. Greek symbols are
// spelled in ASCII: alpha -> "al", beta -> "be", gamma -> "ga".
using GeneratorName = std::string;
using Alphabet      = std::vector<GeneratorName>;

bool is_valid_generator_name(std::string_view name) noexcept;

struct Letter {
  GeneratorName generator;
  int           sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }

  friend bool operator==(Letter const&, Letter const&) = default;
  friend auto operator<=>(Letter const&, Letter const&)  = default;
};

// A freely reduced word in a free group. Construction always reduces, so a
// Word never holds an adjacent inverse pair.
class Word {
 public:
  Word() = default;

  // Free reduction of an arbitrary letter sequence.
  static Word reduce(std::vector<Letter> raw);
  static Word generator(GeneratorName name, int sign = 1);

  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t             size() const noexcept { return letters_.size(); }
  bool                    empty() const noexcept { return letters_.empty(); }
  Letter const& operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(Word const&, Word const&) = default;

  // Shortlex: shorter words first, then lexicographic by letter.
  friend std::strong_ordering operator<=>(Word const& x, Word const& y);

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(std::vector<Letter> raw);
Word invert(Word const& w);
Word concat(Word const& u, Word const& v);
Word concat(std::initializer_list<Word> parts);
Word power(Word const& w, long exponent);
Word commutator(Word const& u, Word const& v);

// Applies the homomorphism g -> images[g]. Throws MissingImage for a letter
// without an image.
Word substitute(Word const& w, std::map<GeneratorName, Word> const& images);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

// w == conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(Word const& w);

// All cyclic rotations are conjugates; rotate(w, k) moves the first k letters
// to the end and freely reduces.
Word rotate(Word const& w, std::size_t k);

// Signed occurrence count of every generator that appears in w.
std::map<GeneratorName, long> exponent_sum(Word const& w);
// Same, aligned with an alphabet (zeros for absent generators).
std::vector<long> exponent_sum(Word const& w, Alphabet const& alphabet);

std::size_t occurrences(Word const& w, GeneratorName const& gen);
bool        uses_only(Word const& w, Alphabet const& alphabet);

// Grammar:
//   word   := factor { WS factor } | ""
//   factor := atom [ "^" int ]
//   atom   := NAME | "(" word ")" | "[" word "," word "]"
// `[u,v]` is u v u^-1 v^-1. Throws ParseError or UnknownGenerator.
Word parse_word(std::string_view text, Alphabet const& alphabet);

// Canonical run-length form, e.g. "a^3 b^-1 a". The empty word renders as "".
std::string render(Word const& w);

}  // namespace arset
