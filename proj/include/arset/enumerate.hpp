#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "arset/presentation.hpp"

namespace arset {

enum class Strategy { HLT, Felsch };

Strategy    parse_strategy(std::string_view name);  // "hlt" | "felsch"
std::string to_string(Strategy s);

struct EnumerationStats {
  std::size_t cosets_defined = 0;
  std::size_t coincidences   = 0;
  std::size_t steps          = 0;  // relator scans
  std::size_t live           = 0;
};

struct EnumerationOptions {
  std::size_t max_cosets = 1'000'000;
  Strategy    strategy   = Strategy::HLT;
  // Called every `progress_interval` definitions; returning false cancels.
  std::size_t                                   progress_interval = 100'000;
  std::function<bool(EnumerationStats const&)> progress;
};

// Coset table over the trivial subgroup, compacted to live cosets 0..order-1.
// Column 2g is generator g, column 2g+1 its inverse.
using CosetTable = std::vector<std::vector<std::uint32_t>>;

struct EnumerationResult {
  enum class Outcome { Finite, BoundExceeded, Cancelled };

  Outcome          outcome = Outcome::BoundExceeded;
  std::size_t      order   = 0;  // Finite only
  std::size_t      max_cosets = 0;
  std::size_t      live_at_stop = 0;
  EnumerationStats stats;
  CosetTable       table;  // Finite only
};

// Todd-Coxeter enumeration of the cosets of the trivial subgroup. A Finite
// outcome carries a complete table that has been checked against every
// relator; exceeding `max_cosets` definitions is an outcome, not an error.
EnumerationResult enumerate_cosets(Presentation const& p, EnumerationOptions const& options = {});

// Every entry defined, inverse-consistent, and every relator closes from
// every coset.
bool verify_coset_table(Presentation const& p, CosetTable const& table);

// `order = <k>` or `bound-exceeded at = <max>`.
std::string render(EnumerationResult const& r);

}  // namespace arset
