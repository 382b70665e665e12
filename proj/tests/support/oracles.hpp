#pragma once

// Brute-force reference computations used to cross-check the library. They
// share no code with it beyond the Word and Presentation value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arset/abelian.hpp"
#include "arset/presentation.hpp"
#include "arset/word.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm perm_identity(std::size_t d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Apply x, then y.
inline Perm perm_then(Perm const& x, Perm const& y) {
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = y[x[i]];
  }
  return out;
}

inline Perm perm_inverse(Perm const& x) {
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[x[i]] = static_cast<int>(i);
  }
  return out;
}

// Cycle notation on points 0..d-1, e.g. cycles(4, {{0, 1}, {2, 3}}).
inline Perm cycles(std::size_t d, std::vector<std::vector<int>> const& cs) {
  Perm p = perm_identity(d);
  for (auto const& c : cs) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      p[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

inline std::set<Perm> closure(std::vector<Perm> const& gens, std::size_t degree) {
  std::set<Perm>    seen{perm_identity(degree)};
  std::vector<Perm> frontier{perm_identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const& x : frontier) {
      for (auto const& g : gens) {
        auto y = perm_then(x, g);
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline Perm evaluate(arset::Word const& w, arset::Alphabet const& gens, std::vector<Perm> const& images,
                     std::size_t degree) {
  Perm acc = perm_identity(degree);
  for (auto const& l : w) {
    auto const i = static_cast<std::size_t>(std::find(gens.begin(), gens.end(), l.generator) - gens.begin());
    acc = perm_then(acc, l.sign > 0 ? images[i] : perm_inverse(images[i]));
  }
  return acc;
}

inline bool satisfies(arset::Presentation const& p, std::vector<Perm> const& images, std::size_t degree) {
  auto const id = perm_identity(degree);
  for (auto const& r : p.relators()) {
    if (evaluate(r, p.generators(), images, degree) != id) {
      return false;
    }
  }
  return true;
}

// Counts every assignment of generator images, no pruning.
inline std::uint64_t hom_count(arset::Presentation const& p, std::vector<Perm> const& group_gens,
                               std::size_t degree) {
  auto const              elems = closure(group_gens, degree);
  std::vector<Perm> const h(elems.begin(), elems.end());
  std::size_t const       n = p.num_generators();
  std::vector<std::size_t> idx(n, 0);
  std::uint64_t            count = 0;
  for (;;) {
    std::vector<Perm> images;
    for (auto i : idx) {
      images.push_back(h[i]);
    }
    if (satisfies(p, images, degree)) {
      ++count;
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == h.size()) {
      idx[k++] = 0;
    }
    if (k == n) {
      return count;
    }
  }
}

inline std::vector<Perm> s3_gens() { return {cycles(3, {{0, 1}}), cycles(3, {{0, 1, 2}})}; }
inline std::vector<Perm> a4_gens() { return {cycles(4, {{0, 1}, {2, 3}}), cycles(4, {{0, 1, 2}})}; }
inline std::vector<Perm> s4_gens() { return {cycles(4, {{0, 1}}), cycles(4, {{0, 1, 2, 3}})}; }

// Subtractive Euclid: number of subtractions taking (a, b) to a pair with a zero.
inline std::uint64_t subtractive_steps(std::uint64_t a, std::uint64_t b) {
  std::uint64_t steps = 0;
  while (a != 0 && b != 0) {
    if (a >= b) {
      a -= b;
    } else {
      b -= a;
    }
    ++steps;
  }
  return steps;
}

// Triviality in a free product of cyclic groups by string rewriting: delete
// x x^-1 and any run of |order| equal letters until nothing changes.
inline bool cyclic_free_product_trivial(std::vector<arset::Letter> w,
                                        std::map<std::string, long> const& orders) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].generator == w[i + 1].generator && w[i].sign == -w[i + 1].sign) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
    if (changed) {
      continue;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto const it = orders.find(w[i].generator);
      if (it == orders.end()) {
        continue;
      }
      auto const q = static_cast<std::size_t>(it->second);
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      if (j - i >= q) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + q));
        changed = true;
        break;
      }
    }
  }
  return w.empty();
}

// Rank over the rationals by fraction-free elimination.
inline std::size_t rank(std::vector<std::vector<arset::Integer>> m) {
  std::size_t r = 0;
  std::size_t const cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) {
      ++piv;
    }
    if (piv == m.size()) {
      continue;
    }
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      arset::Integer const f = m[i][c];
      if (f == 0) {
        continue;
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = m[i][j] * m[r][c] - m[r][j] * f;
      }
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<arset::Integer>> to_integer(std::vector<std::vector<long>> const& a) {
  std::vector<std::vector<arset::Integer>> out;
  for (auto const& row : a) {
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

// e_i has infinite order in Z^n / rowspan(A) iff appending it raises the
// rational rank.
inline bool has_infinite_order(std::vector<std::vector<long>> const& a, std::size_t n, std::size_t i) {
  auto ext = to_integer(a);
  std::vector<arset::Integer> e(n, 0);
  e[i] = 1;
  if (ext.empty()) {
    return true;
  }
  auto const base = rank(ext);
  ext.push_back(std::move(e));
  return rank(ext) > base;
}

inline long cofactor_det(std::vector<std::vector<long>> const& a) {
  if (a.size() == 1) {
    return a[0][0];
  }
  long det = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < a.size(); ++r) {
      std::vector<long> row;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (j != c) {
          row.push_back(a[r][j]);
        }
      }
      minor.push_back(std::move(row));
    }
    det += (c % 2 ? -1 : 1) * a[0][c] * cofactor_det(minor);
  }
  return det;
}

// Orders of the e_i for a square nonsingular A. The lattice contains N Z^n
// with N = |det A|, so membership of q e_i is decided in (Z/N)^n by
// enumerating the image of the row lattice there.
inline std::vector<long> square_orders(std::vector<std::vector<long>> const& a) {
  std::size_t const n   = a.size();
  long const        det = cofactor_det(a);
  long const        N   = det < 0 ? -det : det;
  auto       mod = [N](long x) { return ((x % N) + N) % N; };
  std::set<std::vector<long>>    seen{std::vector<long>(n, 0)};
  std::vector<std::vector<long>> frontier{std::vector<long>(n, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (auto const& v : frontier) {
      for (auto const& row : a) {
        std::vector<long> w(n);
        for (std::size_t j = 0; j < n; ++j) {
          w[j] = mod(v[j] + row[j]);
        }
        if (seen.insert(w).second) {
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<long> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (long q = 1; q <= N; ++q) {
      std::vector<long> v(n, 0);
      v[i] = mod(q);
      if (seen.contains(v)) {
        out[i] = q;
        break;
      }
    }
  }
  return out;
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline std::vector<arset::Letter> raw_letters(Rng& rng, arset::Alphabet const& alphabet, std::size_t max_len) {
  std::vector<arset::Letter> out(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len))));
  for (auto& l : out) {
    l.generator = alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(alphabet.size()) - 1))];
    l.sign      = uniform(rng, 0, 1) ? 1 : -1;
  }
  return out;
}

inline arset::Word word(Rng& rng, arset::Alphabet const& alphabet, std::size_t max_len) {
  return arset::free_reduce(raw_letters(rng, alphabet, max_len));
}

}  // namespace gen
