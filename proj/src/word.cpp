#include "arset/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "arset/errors.hpp"

namespace arset {

bool is_valid_generator_name(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Word Word::reduce(std::vector<Letter> raw) {
  // Stack-based reduction reaches the fixed point in one pass.
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (auto& l : raw) {
    if (!out.empty() && out.back().generator == l.generator
        && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(std::move(l));
    }
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::generator(GeneratorName name, int sign) {
  Word w;
  w.letters_.push_back({std::move(name), sign < 0 ? -1 : 1});
  return w;
}

std::strong_ordering operator<=>(Word const& x, Word const& y) {
  if (auto c = x.size() <=> y.size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(
      x.letters_.begin(), x.letters_.end(), y.letters_.begin(), y.letters_.end());
}

Word free_reduce(std::vector<Letter> raw) {
  return Word::reduce(std::move(raw));
}

Word invert(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word::reduce(std::move(out));
}

Word concat(Word const& u, Word const& v) {
  std::vector<Letter> out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word::reduce(std::move(out));
}

Word concat(std::initializer_list<Word> parts) {
  std::vector<Letter> out;
  for (auto const& p : parts) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return Word::reduce(std::move(out));
}

Word power(Word const& w, long exponent) {
  Word const base = exponent < 0 ? invert(w) : w;
  auto const  n   = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(exponent);
  std::vector<Letter> out;
  out.reserve(base.size() * n);
  for (unsigned long i = 0; i < n; ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return Word::reduce(std::move(out));
}

Word commutator(Word const& u, Word const& v) {
  return concat({u, v, invert(u), invert(v)});
}

Word substitute(Word const& w, std::map<GeneratorName, Word> const& images) {
  std::map<GeneratorName, Word> inverses;
  std::vector<Letter>           out;
  for (auto const& l : w) {
    auto it = images.find(l.generator);
    if (it == images.end()) {
      throw MissingImage(l.generator);
    }
    if (l.sign > 0) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    } else {
      auto inv = inverses.find(l.generator);
      if (inv == inverses.end()) {
        inv = inverses.emplace(l.generator, invert(it->second)).first;
      }
      out.insert(out.end(), inv->second.begin(), inv->second.end());
    }
  }
  return Word::reduce(std::move(out));
}

CyclicReduction cyclic_reduce(Word const& w) {
  auto const  letters = w.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {Word::reduce({letters.begin() + lo, letters.begin() + hi}),
          Word::reduce({letters.begin(), letters.begin() + lo})};
}

Word rotate(Word const& w, std::size_t k) {
  if (w.empty()) {
    return w;
  }
  k %= w.size();
  std::vector<Letter> out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return Word::reduce(std::move(out));
}

std::map<GeneratorName, long> exponent_sum(Word const& w) {
  std::map<GeneratorName, long> sums;
  for (auto const& l : w) {
    sums[l.generator] += l.sign;
  }
  return sums;
}

std::vector<long> exponent_sum(Word const& w, Alphabet const& alphabet) {
  std::vector<long> sums(alphabet.size(), 0);
  for (auto const& l : w) {
    auto it = std::find(alphabet.begin(), alphabet.end(), l.generator);
    if (it == alphabet.end()) {
      throw UnknownGenerator(l.generator);
    }
    sums[static_cast<std::size_t>(it - alphabet.begin())] += l.sign;
  }
  return sums;
}

std::size_t occurrences(Word const& w, GeneratorName const& gen) {
  return static_cast<std::size_t>(std::count_if(
      w.begin(), w.end(), [&](Letter const& l) { return l.generator == gen; }));
}

bool uses_only(Word const& w, Alphabet const& alphabet) {
  return std::all_of(w.begin(), w.end(), [&](Letter const& l) {
    return std::find(alphabet.begin(), alphabet.end(), l.generator)
           != alphabet.end();
  });
}

namespace {

  class WordParser {
   public:
    WordParser(std::string_view text, Alphabet const& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Word parse() {
      auto letters = word();
      skip_ws();
      if (pos_ != text_.size()) {
        fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
      }
      return Word::reduce(std::move(letters));
    }

   private:
    [[noreturn]] void fail(std::string const& what) const {
      throw ParseError(what, pos_);
    }

    void skip_ws() {
      while (pos_ < text_.size()
             && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    }

    bool at_factor_start() const {
      if (pos_ >= text_.size()) {
        return false;
      }
      char c = text_[pos_];
      return c == '(' || c == '['
             || std::isalpha(static_cast<unsigned char>(c));
    }

    std::vector<Letter> word() {
      std::vector<Letter> out;
      skip_ws();
      while (at_factor_start()) {
        auto f = factor();
        out.insert(out.end(), f.begin(), f.end());
        skip_ws();
      }
      return out;
    }

    std::vector<Letter> factor() {
      auto base = atom();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        long e = integer();
        auto p = power(Word::reduce(std::move(base)), e);
        return {p.begin(), p.end()};
      }
      return base;
    }

    long integer() {
      skip_ws();
      std::size_t start = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        ++pos_;
      }
      std::size_t digits = pos_;
      while (pos_ < text_.size()
             && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ == digits) {
        pos_ = start;
        fail("expected integer exponent");
      }
      long value = 0;
      auto [ptr, ec]
          = std::from_chars(text_.data() + start, text_.data() + pos_, value);
      if (ec != std::errc{}) {
        pos_ = start;
        fail("exponent out of range");
      }
      return value;
    }

    std::vector<Letter> atom() {
      char c = text_[pos_];
      if (c == '(') {
        ++pos_;
        auto inner = word();
        expect(')');
        return inner;
      }
      if (c == '[') {
        ++pos_;
        auto u = Word::reduce(word());
        expect(',');
        auto v = Word::reduce(word());
        expect(']');
        auto cm = commutator(u, v);
        return {cm.begin(), cm.end()};
      }
      std::size_t start = pos_;
      while (pos_ < text_.size()
             && (std::isalnum(static_cast<unsigned char>(text_[pos_]))
                 || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(alphabet_.begin(), alphabet_.end(), name)
          == alphabet_.end()) {
        throw UnknownGenerator(name);
      }
      return {Letter{std::move(name), 1}};
    }

    void expect(char c) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != c) {
        fail(std::string("expected '") + c + "'");
      }
      ++pos_;
    }

    std::string_view text_;
    Alphabet const&  alphabet_;
    std::size_t      pos_ = 0;
  };

}  // namespace

Word parse_word(std::string_view text, Alphabet const& alphabet) {
  return WordParser(text, alphabet).parse();
}

std::string render(Word const& w) {
  std::string out;
  auto const  letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) {
      ++j;
    }
    long e = static_cast<long>(j - i) * letters[i].sign;
    if (!out.empty()) {
      out += ' ';
    }
    out += letters[i].generator;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
    i = j;
  }
  return out;
}

}  // namespace arset
