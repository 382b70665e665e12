#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arset/word.hpp"

namespace arset {

// Elementary Nielsen transformation on a tuple (u_1, ..., u_k).
struct NielsenMove {
  enum class Kind { Swap, Invert, LeftMultiply, RightMultiply };

  Kind        kind;
  std::size_t target;     // 0-based
  std::size_t other = 0;  // Swap partner or multiplier index
  int         sign  = 1;  // exponent of the multiplier

  friend bool operator==(NielsenMove const&, NielsenMove const&) = default;
};

// LeftMultiply:  u_target <- u_other^sign u_target
// RightMultiply: u_target <- u_target u_other^sign
std::vector<Word> apply_move(std::vector<Word> tuple, NielsenMove const& move);
std::vector<Word> replay(std::vector<Word> tuple, std::vector<NielsenMove> const& log);

std::string render(NielsenMove const& move);

struct NielsenResult {
  bool                     is_basis = false;
  std::vector<Word>        reduced_set;
  std::size_t              rank = 0;  // nonempty words in reduced_set
  std::vector<NielsenMove> reduction_log;
  // Input i as a word in the symbols u1..uk naming reduced_set[0..k-1].
  std::vector<Word> expressions;
};

// Symbol used in NielsenResult::expressions for reduced_set[i].
GeneratorName reduced_symbol(std::size_t i);

// Nielsen-reduces the tuple. A move is taken when it shortens a word, or,
// failing any such move, when it keeps the length and lowers the word's
// half-word key. The nonempty words at the end are Nielsen reduced and so
// freely generate the subgroup.
NielsenResult nielsen_reduce(std::vector<Word> const& words);

bool is_free_basis(std::vector<Word> const& words);

}  // namespace arset
