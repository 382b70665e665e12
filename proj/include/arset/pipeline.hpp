#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arset/enumerate.hpp"
#include "arset/presentation.hpp"
#include "arset/quotients.hpp"

namespace arset {

// Line-oriented `key = value` report. Sections are separated by a blank line;
// keys keep insertion order, so output is byte-stable for fixed input.
class Report {
 public:
  void section();
  void add(std::string key, std::string value);

  std::string render() const;

  // First value stored under `key`, if any.
  std::optional<std::string> get(std::string const& key) const;

 private:
  std::vector<std::vector<std::pair<std::string, std::string>>> sections_;
};

struct PipelineOptions {
  std::vector<TargetName>          targets;  // s3 when empty
  bool                             enumerate  = false;
  std::size_t                      max_cosets = 1'000'000;
  Strategy                         strategy   = Strategy::HLT;
  bool                             markov     = false;
  unsigned                         jobs       = 1;
  std::optional<CyclicFreeProduct> cyclic;  // recognized from the seed when absent
};

struct PipelineResult {
  Report                           report;
  std::optional<EnumerationResult> enumeration;
};

// Seed -> condition certificate -> Q_w and P_w -> free-basis check on the
// right-hand sides -> abelianization, hom-counts, optional enumeration ->
// optional W'_P complex with its predicted boundary.
PipelineResult run_pipeline(Presentation const& seed, std::string const& word,
                            PipelineOptions const& options = {});
PipelineResult run_pipeline(std::filesystem::path const& seed_file, std::string const& word,
                            PipelineOptions const& options = {});

// Identity renders as "1" in reports.
std::string report_word(Word const& w);

}  // namespace arset
