#include "arset/quotients.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "arset/errors.hpp"

namespace arset {

namespace {

  Permutation compose(Permutation const& x, Permutation const& y) {
    Permutation out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = y[x[i]];
    }
    return out;
  }

}  // namespace

FiniteTarget FiniteTarget::from_generators(std::string name, std::vector<Permutation> const& gens) {
  if (gens.empty()) {
    throw InputError("a permutation group needs at least one generator");
  }
  std::size_t const degree = gens.front().size();
  Permutation       id(degree);
  std::iota(id.begin(), id.end(), std::uint8_t{0});

  std::set<Permutation>    seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const& x : frontier) {
      for (auto const& g : gens) {
        auto y = compose(x, g);
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }

  FiniteTarget h;
  h.name_     = std::move(name);
  h.elements_ = {seen.begin(), seen.end()};
  std::map<Permutation, std::uint16_t> index;
  for (std::size_t i = 0; i < h.elements_.size(); ++i) {
    index.emplace(h.elements_[i], static_cast<std::uint16_t>(i));
  }
  std::size_t const n = h.elements_.size();
  h.table_.resize(n * n);
  h.inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto const p        = index.at(compose(h.elements_[x], h.elements_[y]));
      h.table_[x * n + y] = p;
      if (p == 0) {
        h.inverse_[x] = static_cast<std::uint16_t>(y);
      }
    }
  }
  return h;
}

bool FiniteTarget::is_group() const {
  std::size_t const n = order();
  for (std::size_t x = 0; x < n; ++x) {
    if (multiply(x, 0) != x || multiply(0, x) != x || multiply(x, inverse(x)) != 0) {
      return false;
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

TargetName parse_target(std::string_view name) {
  if (name == "s3") return TargetName::S3;
  if (name == "a4") return TargetName::A4;
  if (name == "s4") return TargetName::S4;
  if (name == "s5") return TargetName::S5;
  throw InputError("unknown target '" + std::string(name) + "' (expected s3, a4, s4 or s5)");
}

std::string to_string(TargetName t) {
  switch (t) {
    case TargetName::S3: return "s3";
    case TargetName::A4: return "a4";
    case TargetName::S4: return "s4";
    case TargetName::S5: return "s5";
  }
  return {};
}

FiniteTarget const& target(TargetName t) {
  static FiniteTarget const s3 = FiniteTarget::from_generators("S3", {{1, 0, 2}, {1, 2, 0}});
  static FiniteTarget const a4
      = FiniteTarget::from_generators("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}});
  static FiniteTarget const s4
      = FiniteTarget::from_generators("S4", {{1, 0, 2, 3}, {1, 2, 3, 0}});
  static FiniteTarget const s5
      = FiniteTarget::from_generators("S5", {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}});
  switch (t) {
    case TargetName::S3: return s3;
    case TargetName::A4: return a4;
    case TargetName::S4: return s4;
    case TargetName::S5: return s5;
  }
  return s3;
}

namespace {

  // A relator as (generator index, inverted) pairs.
  struct CompiledRelator {
    std::vector<std::pair<std::size_t, bool>> letters;
  };

  class HomCounter {
   public:
    HomCounter(Presentation const& p, FiniteTarget const& h)
        : h_(h), ngens_(p.num_generators()), ready_(ngens_) {
      for (auto const& r : p.relators()) {
        if (r.empty()) {
          continue;
        }
        CompiledRelator c;
        std::size_t     last = 0;
        for (auto const& l : r) {
          auto const g = p.generator_index(l.generator);
          c.letters.emplace_back(g, l.sign < 0);
          last = std::max(last, g);
        }
        ready_[last].push_back(std::move(c));
      }
    }

    std::uint64_t count_from(std::size_t first_image) const {
      std::vector<std::uint16_t> images(ngens_);
      images[0] = static_cast<std::uint16_t>(first_image);
      if (!satisfied(0, images)) {
        return 0;
      }
      return extend(1, images);
    }

    std::size_t ngens() const { return ngens_; }

   private:
    bool satisfied(std::size_t depth, std::vector<std::uint16_t> const& images) const {
      for (auto const& r : ready_[depth]) {
        std::size_t acc = h_.identity();
        for (auto [g, inverted] : r.letters) {
          auto const x = inverted ? h_.inverse(images[g]) : images[g];
          acc          = h_.multiply(acc, x);
        }
        if (acc != h_.identity()) {
          return false;
        }
      }
      return true;
    }

    std::uint64_t extend(std::size_t depth, std::vector<std::uint16_t>& images) const {
      if (depth == ngens_) {
        return 1;
      }
      std::uint64_t total = 0;
      for (std::size_t x = 0; x < h_.order(); ++x) {
        images[depth] = static_cast<std::uint16_t>(x);
        if (satisfied(depth, images)) {
          total += extend(depth + 1, images);
        }
      }
      return total;
    }

    FiniteTarget const&                       h_;
    std::size_t                               ngens_;
    std::vector<std::vector<CompiledRelator>> ready_;
  };

}  // namespace

std::uint64_t hom_count(Presentation const& p, FiniteTarget const& h, unsigned jobs) {
  if (p.num_generators() == 0) {
    return 1;
  }
  HomCounter const counter(p, h);
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(h.order())));
  if (jobs == 1) {
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < h.order(); ++x) {
      total += counter.count_from(x);
    }
    return total;
  }
  std::vector<std::uint64_t> partial(jobs, 0);
  {
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        for (std::size_t x = j; x < h.order(); x += jobs) {
          partial[j] += counter.count_from(x);
        }
      });
    }
  }
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

CyclicFreeProduct CyclicFreeProduct::standard(std::vector<std::optional<long>> orders) {
  CyclicFreeProduct g;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] && *orders[i] < 2) {
      throw PreconditionError("cyclic factor orders must be at least 2");
    }
    g.generators.push_back("x" + std::to_string(i + 1));
  }
  g.orders = std::move(orders);
  return g;
}

std::optional<CyclicFreeProduct> CyclicFreeProduct::recognize(Presentation const& p) {
  std::vector<long> gcds(p.num_generators(), 0);
  for (auto const& r : p.relators()) {
    auto const core = cyclic_reduce(r).core;
    if (core.empty()) {
      continue;
    }
    if (occurrences(core, core[0].generator) != core.size()) {
      return std::nullopt;
    }
    auto const g = p.generator_index(core[0].generator);
    gcds[g]      = std::gcd(gcds[g], static_cast<long>(core.size()));
  }
  CyclicFreeProduct out;
  out.generators = p.generators();
  for (long q : gcds) {
    if (q == 1) {
      return std::nullopt;
    }
    out.orders.push_back(q == 0 ? std::nullopt : std::optional<long>(q));
  }
  return out;
}

WordProblemVerdict wp_cyclic_free_product(CyclicFreeProduct const& g, Word const& w) {
  auto balanced = [](long e, std::optional<long> q) {
    if (!q) {
      return e;
    }
    long r = ((e % *q) + *q) % *q;
    return 2 * r > *q ? r - *q : r;
  };
  std::vector<std::pair<std::size_t, long>> syllables;
  for (auto const& l : w) {
    auto it = std::find(g.generators.begin(), g.generators.end(), l.generator);
    if (it == g.generators.end()) {
      throw UnknownGenerator(l.generator);
    }
    auto const i = static_cast<std::size_t>(it - g.generators.begin());
    if (!syllables.empty() && syllables.back().first == i) {
      long const e = balanced(syllables.back().second + l.sign, g.orders[i]);
      if (e == 0) {
        syllables.pop_back();
      } else {
        syllables.back().second = e;
      }
    } else {
      long const e = balanced(l.sign, g.orders[i]);
      if (e != 0) {
        syllables.emplace_back(i, e);
      }
    }
  }
  std::vector<Letter> letters;
  for (auto [i, e] : syllables) {
    for (long k = 0; k < (e < 0 ? -e : e); ++k) {
      letters.push_back({g.generators[i], e < 0 ? -1 : 1});
    }
  }
  WordProblemVerdict v;
  v.normal_form = Word::reduce(std::move(letters));
  v.trivial     = v.normal_form.empty();
  return v;
}

}  // namespace arset
