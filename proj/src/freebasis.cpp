#include "arset/freebasis.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "arset/errors.hpp"

namespace arset {

std::vector<Word> apply_move(std::vector<Word> tuple, NielsenMove const& move) {
  if (move.target >= tuple.size() || move.other >= tuple.size()) {
    throw BadIndex("Nielsen move index out of range");
  }
  auto& t = tuple[move.target];
  switch (move.kind) {
    case NielsenMove::Kind::Swap:
      std::swap(t, tuple[move.other]);
      break;
    case NielsenMove::Kind::Invert:
      t = invert(t);
      break;
    case NielsenMove::Kind::LeftMultiply:
      if (move.target == move.other) {
        throw BadIndex("Nielsen multiply needs two distinct indices");
      }
      t = concat(power(tuple[move.other], move.sign), t);
      break;
    case NielsenMove::Kind::RightMultiply:
      if (move.target == move.other) {
        throw BadIndex("Nielsen multiply needs two distinct indices");
      }
      t = concat(t, power(tuple[move.other], move.sign));
      break;
  }
  return tuple;
}

std::vector<Word> replay(std::vector<Word> tuple, std::vector<NielsenMove> const& log) {
  for (auto const& m : log) {
    tuple = apply_move(std::move(tuple), m);
  }
  return tuple;
}

std::string render(NielsenMove const& move) {
  auto idx = [](std::size_t i) { return std::to_string(i + 1); };
  switch (move.kind) {
    case NielsenMove::Kind::Swap:
      return "swap " + idx(move.target) + " " + idx(move.other);
    case NielsenMove::Kind::Invert:
      return "invert " + idx(move.target);
    case NielsenMove::Kind::LeftMultiply:
      return "left " + idx(move.target) + " " + idx(move.other) + "^" + std::to_string(move.sign);
    case NielsenMove::Kind::RightMultiply:
      return "right " + idx(move.target) + " " + idx(move.other) + "^" + std::to_string(move.sign);
  }
  return {};
}

GeneratorName reduced_symbol(std::size_t i) {
  return "u" + std::to_string(i + 1);
}

namespace {

  using HalfKey = std::pair<std::vector<Letter>, std::vector<Letter>>;

  // Initial segments of length ceil(|u|/2) of u and u^-1, smaller first.
  HalfKey half_key(Word const& u) {
    auto const          h  = (u.size() + 1) / 2;
    auto const          fw = u.letters();
    Word const          iu = invert(u);
    std::vector<Letter> x(fw.begin(), fw.begin() + static_cast<std::ptrdiff_t>(h));
    std::vector<Letter> y(iu.begin(), iu.begin() + static_cast<std::ptrdiff_t>(h));
    if (y < x) {
      std::swap(x, y);
    }
    return {std::move(x), std::move(y)};
  }

  struct Candidate {
    NielsenMove move;
    Word        result;
  };

  // Scans pairs in shortlex order of the current tuple, lowest index on ties,
  // left before right multiplication, positive exponent first.
  std::optional<Candidate> find_move(std::vector<Word> const& tuple, bool equal_length) {
    std::vector<std::size_t> order(tuple.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return tuple[x] < tuple[y]; });

    using Kind = NielsenMove::Kind;
    for (auto i : order) {
      Word const& u = tuple[i];
      if (u.empty()) {
        continue;
      }
      std::optional<HalfKey> key;
      for (auto j : order) {
        if (j == i || tuple[j].empty()) {
          continue;
        }
        for (auto kind : {Kind::LeftMultiply, Kind::RightMultiply}) {
          for (int sign : {1, -1}) {
            Word const m = sign > 0 ? tuple[j] : invert(tuple[j]);
            Word       r = kind == Kind::LeftMultiply ? concat(m, u) : concat(u, m);
            bool       take;
            if (!equal_length) {
              take = r.size() < u.size();
            } else {
              if (r.size() != u.size()) {
                continue;
              }
              if (!key) {
                key = half_key(u);
              }
              take = half_key(r) < *key;
            }
            if (take) {
              return Candidate{{kind, i, j, sign}, std::move(r)};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace

NielsenResult nielsen_reduce(std::vector<Word> const& words) {
  NielsenResult res;
  res.reduced_set = words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    res.expressions.push_back(Word::generator(reduced_symbol(i)));
  }

  while (true) {
    auto c = find_move(res.reduced_set, false);
    if (!c) {
      c = find_move(res.reduced_set, true);
    }
    if (!c) {
      break;
    }
    auto const& mv = c->move;
    res.reduced_set[mv.target] = std::move(c->result);
    res.reduction_log.push_back(mv);

    // The old u_target in terms of the new tuple.
    Word const target = Word::generator(reduced_symbol(mv.target));
    Word const undo   = power(Word::generator(reduced_symbol(mv.other)), -mv.sign);
    std::map<GeneratorName, Word> images;
    for (std::size_t k = 0; k < words.size(); ++k) {
      images.emplace(reduced_symbol(k), Word::generator(reduced_symbol(k)));
    }
    images[reduced_symbol(mv.target)]
        = mv.kind == NielsenMove::Kind::LeftMultiply ? concat(undo, target) : concat(target, undo);
    for (auto& e : res.expressions) {
      e = substitute(e, images);
    }
  }

  res.rank = static_cast<std::size_t>(std::count_if(
      res.reduced_set.begin(), res.reduced_set.end(), [](Word const& w) { return !w.empty(); }));
  res.is_basis = res.rank == words.size();
  return res;
}

bool is_free_basis(std::vector<Word> const& words) {
  return nielsen_reduce(words).is_basis;
}

}  // namespace arset
