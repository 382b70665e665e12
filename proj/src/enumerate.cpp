#include "arset/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "arset/errors.hpp"

namespace arset {

Strategy parse_strategy(std::string_view name) {
  if (name == "hlt") {
    return Strategy::HLT;
  }
  if (name == "felsch") {
    return Strategy::Felsch;
  }
  throw InputError("unknown strategy '" + std::string(name) + "' (expected hlt or felsch)");
}

std::string to_string(Strategy s) {
  return s == Strategy::HLT ? "hlt" : "felsch";
}

namespace {

  using Coset  = std::uint32_t;  // 0 means undefined; cosets are 1-based
  using Column = std::uint32_t;

  constexpr Coset kUndefined = 0;

  std::vector<std::vector<Column>> relator_columns(Presentation const& p) {
    std::vector<std::vector<Column>> out;
    for (auto const& r : p.relators()) {
      if (r.empty()) {
        continue;
      }
      std::vector<Column> cols;
      cols.reserve(r.size());
      for (auto const& l : r) {
        auto const g = static_cast<Column>(p.generator_index(l.generator));
        cols.push_back(2 * g + (l.sign > 0 ? 0 : 1));
      }
      out.push_back(std::move(cols));
    }
    return out;
  }

  constexpr Column inv(Column x) {
    return x ^ 1U;
  }

  struct BoundHit {};
  struct Cancelled {};

  class Enumerator {
   public:
    Enumerator(Presentation const& p, EnumerationOptions const& opts)
        : opts_(opts),
          ncols_(2 * p.num_generators()),
          relators_(relator_columns(p)) {
      if (opts_.max_cosets < 1) {
        throw PreconditionError("max_cosets must be at least 1");
      }
      if (opts_.strategy == Strategy::Felsch) {
        by_first_.resize(ncols_);
        for (auto const& r : relators_) {
          for (auto const& w : {r, inverse_of(r)}) {
            for (std::size_t k = 0; k < w.size(); ++k) {
              std::vector<Column> rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
              rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
              auto& bucket = by_first_[rot.front()];
              if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) {
                bucket.push_back(std::move(rot));
              }
            }
          }
        }
      }
      grow(std::min<std::size_t>(opts_.max_cosets, 1024) + 1);
      n_     = 1;
      live_  = 1;
      rep_[1] = 1;
    }

    EnumerationResult run() {
      EnumerationResult res;
      res.max_cosets = opts_.max_cosets;
      try {
        if (opts_.strategy == Strategy::HLT) {
          hlt();
        } else {
          felsch();
        }
        res.outcome = EnumerationResult::Outcome::Finite;
        res.order   = live_;
        res.table   = compact();
      } catch (BoundHit const&) {
        res.outcome = EnumerationResult::Outcome::BoundExceeded;
      } catch (Cancelled const&) {
        res.outcome = EnumerationResult::Outcome::Cancelled;
      }
      res.live_at_stop = live_;
      res.stats        = stats();
      return res;
    }

   private:
    static std::vector<Column> inverse_of(std::vector<Column> const& w) {
      std::vector<Column> out;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back(inv(*it));
      }
      return out;
    }

    EnumerationStats stats() const {
      return {n_, coincidences_, steps_, live_};
    }

    Coset& entry(Coset c, Column x) {
      return table_[static_cast<std::size_t>(c) * ncols_ + x];
    }

    bool alive(Coset c) const {
      return rep_[c] == c;
    }

    void grow(std::size_t rows) {
      table_.resize(rows * ncols_, kUndefined);
      rep_.resize(rows, 0);
    }

    Coset define(Coset c, Column x) {
      if (n_ >= opts_.max_cosets) {
        throw BoundHit{};
      }
      Coset const d = static_cast<Coset>(++n_);
      if (rep_.size() <= d) {
        grow(std::min<std::size_t>(opts_.max_cosets + 1, 2 * rep_.size()));
      }
      rep_[d] = d;
      ++live_;
      entry(c, x)      = d;
      entry(d, inv(x)) = c;
      deduce(c, x);
      if (opts_.progress && opts_.progress_interval > 0 && n_ % opts_.progress_interval == 0
          && !opts_.progress(stats())) {
        throw Cancelled{};
      }
      return d;
    }

    void deduce(Coset c, Column x) {
      if (opts_.strategy == Strategy::Felsch) {
        deductions_.emplace_back(c, x);
      }
    }

    Coset find(Coset c) {
      Coset root = c;
      while (rep_[root] != root) {
        root = rep_[root];
      }
      while (rep_[c] != root) {
        Coset next = rep_[c];
        rep_[c]    = root;
        c          = next;
      }
      return root;
    }

    void merge(Coset k, Coset l) {
      Coset const a = find(k), b = find(l);
      if (a == b) {
        return;
      }
      Coset const keep = std::min(a, b), drop = std::max(a, b);
      rep_[drop] = keep;
      --live_;
      ++coincidences_;
      queue_.push_back(drop);
    }

    void coincidence(Coset a, Coset b) {
      queue_.clear();
      merge(a, b);
      for (std::size_t i = 0; i < queue_.size(); ++i) {
        Coset const g = queue_[i];
        for (Column x = 0; x < ncols_; ++x) {
          Coset const d = entry(g, x);
          if (d == kUndefined) {
            continue;
          }
          entry(d, inv(x)) = kUndefined;
          Coset const mu = find(g), nu = find(d);
          if (entry(mu, x) != kUndefined) {
            merge(nu, entry(mu, x));
          } else if (entry(nu, inv(x)) != kUndefined) {
            merge(mu, entry(nu, inv(x)));
          } else {
            entry(mu, x)      = nu;
            entry(nu, inv(x)) = mu;
            deduce(mu, x);
          }
        }
      }
    }

    // Traces w from c forwards and backwards. With `fill`, undefined gaps are
    // closed by defining new cosets.
    void scan(Coset c, std::vector<Column> const& w, bool fill) {
      ++steps_;
      Coset       f = c, b = c;
      std::size_t i = 0, j = w.size();  // unscanned letters are w[i, j)
      while (true) {
        while (i < j && entry(f, w[i]) != kUndefined) {
          f = entry(f, w[i++]);
        }
        if (i == j) {
          if (f != b) {
            coincidence(f, b);
          }
          return;
        }
        while (j > i && entry(b, inv(w[j - 1])) != kUndefined) {
          b = entry(b, inv(w[--j]));
        }
        if (j == i) {
          coincidence(f, b);
          return;
        }
        if (j == i + 1) {
          entry(f, w[i])      = b;
          entry(b, inv(w[i])) = f;
          deduce(f, w[i]);
          return;
        }
        if (!fill) {
          return;
        }
        define(f, w[i]);
      }
    }

    void hlt() {
      for (Coset c = 1; c <= n_; ++c) {
        for (auto const& r : relators_) {
          if (!alive(c)) {
            break;
          }
          scan(c, r, true);
        }
        for (Column x = 0; x < ncols_ && alive(c); ++x) {
          if (entry(c, x) == kUndefined) {
            define(c, x);
          }
        }
      }
    }

    void process_deductions() {
      while (!deductions_.empty()) {
        auto const [a, x] = deductions_.back();
        deductions_.pop_back();
        if (!alive(a)) {
          continue;
        }
        for (auto const& w : by_first_[x]) {
          scan(a, w, false);
          if (!alive(a)) {
            break;
          }
        }
        Coset const b = alive(a) ? entry(a, x) : kUndefined;
        if (b != kUndefined && alive(b)) {
          for (auto const& w : by_first_[inv(x)]) {
            scan(b, w, false);
            if (!alive(b)) {
              break;
            }
          }
        }
      }
    }

    // Scans every relator from every live coset; true if nothing changed.
    bool closed() {
      auto const before = std::make_tuple(n_, coincidences_, filled());
      for (Coset c = 1; c <= n_; ++c) {
        for (auto const& r : relators_) {
          if (!alive(c)) {
            break;
          }
          scan(c, r, false);
          process_deductions();
        }
      }
      return before == std::make_tuple(n_, coincidences_, filled());
    }

    std::size_t filled() const {
      return static_cast<std::size_t>(
          std::count_if(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>((n_ + 1) * ncols_),
                        [](Coset v) { return v != kUndefined; }));
    }

    void felsch() {
      while (true) {
        for (Coset c = 1; c <= n_; ++c) {
          for (Column x = 0; x < ncols_ && alive(c); ++x) {
            if (entry(c, x) == kUndefined) {
              define(c, x);
              process_deductions();
            }
          }
        }
        // Deductions from dead cosets are dropped above; a final full scan
        // picks up anything they would have implied.
        if (closed()) {
          break;
        }
      }
    }

    CosetTable compact() {
      std::vector<std::uint32_t> index(n_ + 1, 0);
      std::uint32_t              k = 0;
      for (Coset c = 1; c <= n_; ++c) {
        if (alive(c)) {
          index[c] = k++;
        }
      }
      CosetTable out;
      out.reserve(k);
      for (Coset c = 1; c <= n_; ++c) {
        if (!alive(c)) {
          continue;
        }
        std::vector<std::uint32_t> row(ncols_);
        for (Column x = 0; x < ncols_; ++x) {
          row[x] = index[find(entry(c, x))];
        }
        out.push_back(std::move(row));
      }
      return out;
    }

    EnumerationOptions const&                      opts_;
    std::size_t                                    ncols_;
    std::vector<std::vector<Column>>               relators_;
    std::vector<std::vector<std::vector<Column>>>  by_first_;
    std::vector<Coset>                             table_;
    std::vector<Coset>                             rep_;
    std::vector<Coset>                             queue_;
    std::vector<std::pair<Coset, Column>>          deductions_;
    std::size_t                                    n_            = 0;
    std::size_t                                    live_         = 0;
    std::size_t                                    coincidences_ = 0;
    std::size_t                                    steps_        = 0;
  };

}  // namespace

EnumerationResult enumerate_cosets(Presentation const& p, EnumerationOptions const& options) {
  auto res = Enumerator(p, options).run();
  if (res.outcome == EnumerationResult::Outcome::Finite && !verify_coset_table(p, res.table)) {
    throw std::logic_error("coset enumeration produced an inconsistent table");
  }
  return res;
}

bool verify_coset_table(Presentation const& p, CosetTable const& table) {
  auto const ncols = 2 * p.num_generators();
  auto const rels  = relator_columns(p);
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (table[c].size() != ncols) {
      return false;
    }
    for (Column x = 0; x < ncols; ++x) {
      auto const d = table[c][x];
      if (d >= table.size() || table[d][inv(x)] != c) {
        return false;
      }
    }
  }
  for (std::size_t c = 0; c < table.size(); ++c) {
    for (auto const& r : rels) {
      std::size_t cur = c;
      for (auto x : r) {
        cur = table[cur][x];
      }
      if (cur != c) {
        return false;
      }
    }
  }
  return true;
}

std::string render(EnumerationResult const& r) {
  switch (r.outcome) {
    case EnumerationResult::Outcome::Finite:
      return "order = " + std::to_string(r.order);
    case EnumerationResult::Outcome::BoundExceeded:
      return "bound-exceeded at = " + std::to_string(r.max_cosets);
    case EnumerationResult::Outcome::Cancelled:
      return "cancelled at = " + std::to_string(r.stats.cosets_defined);
  }
  return {};
}

}  // namespace arset
