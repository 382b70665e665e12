// Command-line front end: one subcommand per construction or oracle.
//
// Exit codes: 0 success, 1 parse/IO error, 2 precondition violated,
// 3 enumeration bound exceeded under --require-finite.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arset/adjan_rabin.hpp"
#include "arset/enumerate.hpp"
#include "arset/errors.hpp"
#include "arset/handles.hpp"
#include "arset/pipeline.hpp"
#include "arset/presentation.hpp"
#include "arset/quotients.hpp"

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kPrecondition = 2, kBoundExceeded = 3 };

struct Common {
  std::string              file;
  std::string              word;
  std::string              out;
  std::string              log;
  std::size_t              max_cosets = 1'000'000;
  std::string              strategy   = "hlt";
  std::vector<std::string> targets;
  std::string              tuple;
  std::string              cyclic;
  std::string              verdict = "unknown";
  bool                     reduced        = false;
  bool                     require_finite = false;
  bool                     enumerate      = false;
  bool                     markov         = false;
  unsigned                 jobs           = 1;
};

void emit(Common const& c, std::string const& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) {
    throw arset::InputError("cannot write '" + c.out + "'");
  }
  f << text;
}

std::vector<std::string> split_commas(std::string const& s) {
  std::vector<std::string> out;
  std::stringstream        in(s);
  for (std::string item; std::getline(in, item, ',');) {
    out.push_back(item);
  }
  return out;
}

long parse_long(std::string const& s) {
  try {
    std::size_t used = 0;
    long        v    = std::stol(s, &used);
    if (used != s.size()) {
      throw std::invalid_argument(s);
    }
    return v;
  } catch (std::exception const&) {
    throw arset::InputError("not an integer: '" + s + "'");
  }
}

std::vector<arset::TargetName> targets_of(Common const& c) {
  std::vector<arset::TargetName> out;
  for (auto const& t : c.targets) {
    out.push_back(arset::parse_target(t));
  }
  return out;
}

std::optional<arset::CyclicFreeProduct> cyclic_of(Common const& c) {
  if (c.cyclic.empty()) {
    return std::nullopt;
  }
  std::vector<std::optional<long>> orders;
  for (auto const& item : split_commas(c.cyclic)) {
    if (item == "free" || item == "inf") {
      orders.emplace_back(std::nullopt);
    } else {
      orders.emplace_back(parse_long(item));
    }
  }
  return arset::CyclicFreeProduct::standard(std::move(orders));
}

arset::Word word_of(Common const& c, arset::Presentation const& p) {
  return arset::parse_word(c.word, p.generators());
}

int cmd_check21(Common const& c) {
  auto const p    = arset::load_presentation(c.file);
  auto const cert = arset::check_condition_21(p);
  if (!cert) {
    emit(c, "condition21 = not-satisfied\n");
    return kPrecondition;
  }
  arset::Report r;
  std::string   names, orders, bezout;
  for (std::size_t j = 0; j < cert->indices.size(); ++j) {
    names += (j ? " " : "") + p.generators()[cert->indices[j]];
    orders += (j ? " " : "") + cert->orders[j].str();
    bezout += (j ? " " : "") + cert->bezout[j].str();
  }
  r.add("condition21", "satisfied");
  r.add("cert.generators", names);
  r.add("cert.orders", orders);
  r.add("cert.q", cert->q_max.str());
  r.add("cert.bezout", bezout);
  emit(c, r.render());
  return kOk;
}

int cmd_build_qw(Common const& c) {
  auto const p    = arset::load_presentation(c.file);
  auto const cert = arset::check_condition_21(p);
  if (!cert) {
    throw arset::Condition21NotSatisfied("seed does not satisfy the coprime-order condition");
  }
  emit(c, arset::render(arset::build_qw(p, word_of(c, p), *cert)));
  return kOk;
}

int cmd_build_pw(Common const& c) {
  auto const p   = arset::load_presentation(c.file);
  auto const out = arset::build_pw(p, word_of(c, p));
  if (!c.log.empty()) {
    std::ofstream f(c.log, std::ios::binary);
    if (!f) {
      throw arset::InputError("cannot write '" + c.log + "'");
    }
    f << arset::render(out.elimination_log);
  }
  emit(c, arset::render(out.pw));
  return kOk;
}

int cmd_enumerate(Common const& c) {
  auto const                p = arset::load_presentation(c.file);
  arset::EnumerationOptions opts;
  opts.max_cosets = c.max_cosets;
  opts.strategy   = arset::parse_strategy(c.strategy);
  auto const res  = arset::enumerate_cosets(p, opts);
  emit(c, arset::render(res) + '\n');
  if (c.require_finite && res.outcome != arset::EnumerationResult::Outcome::Finite) {
    return kBoundExceeded;
  }
  return kOk;
}

int cmd_homcount(Common const& c) {
  auto const p       = arset::load_presentation(c.file);
  auto       targets = targets_of(c);
  if (targets.empty()) {
    targets.push_back(arset::TargetName::S3);
  }
  arset::Report r;
  for (auto t : targets) {
    r.add("homcount." + arset::to_string(t), std::to_string(arset::hom_count(p, arset::target(t), c.jobs)));
  }
  emit(c, r.render());
  return kOk;
}

int cmd_slides(Common const& c) {
  if (c.tuple.empty()) {
    throw arset::InputError("--tuple is required");
  }
  std::vector<long> values;
  for (auto const& item : split_commas(c.tuple)) {
    values.push_back(parse_long(item));
  }
  auto const seq   = arset::orient_and_reduce(values);
  auto const final = arset::replay_slides(seq);
  std::string text = arset::render(seq) + "final =";
  for (auto x : final) {
    text += ' ' + std::to_string(x);
  }
  emit(c, text + '\n');
  return kOk;
}

int cmd_wp_oracle(Common const& c) {
  auto const g = cyclic_of(c);
  if (!g) {
    throw arset::InputError("--cyclic is required");
  }
  auto const    v = arset::wp_cyclic_free_product(*g, arset::parse_word(c.word, g->generators));
  arset::Report r;
  r.add("wp", v.trivial ? "trivial" : "nontrivial");
  r.add("normal_form", arset::report_word(v.normal_form));
  emit(c, r.render());
  return kOk;
}

arset::Triviality verdict_of(std::string const& v) {
  if (v == "trivial") return arset::Triviality::ProvedTrivial;
  if (v == "nontrivial") return arset::Triviality::ProvedNonTrivial;
  if (v == "unknown") return arset::Triviality::Unknown;
  throw arset::InputError("unknown verdict '" + v + "'");
}

int cmd_markov(Common const& c) {
  auto const  p        = arset::load_presentation(c.file);
  auto const  complex  = arset::build_markov_complex(p, c.reduced);
  auto const  verdict  = verdict_of(c.verdict);
  auto const  boundary = arset::predict_boundary(complex, verdict);
  std::string text     = arset::render(complex) + arset::render(boundary);
  if (verdict == arset::Triviality::ProvedTrivial && complex.stage == arset::Stage::WPrime) {
    text += arset::render(arset::orient_and_reduce(arset::attaching_exponents(complex)));
  }
  emit(c, text);
  return kOk;
}

int cmd_pipeline(Common const& c) {
  arset::PipelineOptions opts;
  opts.targets    = targets_of(c);
  opts.enumerate  = c.enumerate || c.require_finite;
  opts.max_cosets = c.max_cosets;
  opts.strategy   = arset::parse_strategy(c.strategy);
  opts.markov     = c.markov;
  opts.jobs       = c.jobs;
  opts.cyclic     = cyclic_of(c);
  auto const res  = arset::run_pipeline(std::filesystem::path(c.file), c.word, opts);
  emit(c, res.report.render());
  if (c.require_finite && res.enumeration
      && res.enumeration->outcome != arset::EnumerationResult::Outcome::Finite) {
    return kBoundExceeded;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjan-Rabin presentations, Tietze elimination, and handle bookkeeping"};
  app.require_subcommand(1);
  Common c;

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", c.file, "presentation file")->required(); };
  auto out_opt  = [&](CLI::App* sub) { sub->add_option("--out", c.out, "write output to a file"); };
  auto word_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--word", c.word, "word over the seed generators");
    if (required) {
      o->required();
    }
  };
  auto enum_opts = [&](CLI::App* sub) {
    sub->add_option("--max-cosets", c.max_cosets, "coset definition bound")->capture_default_str();
    sub->add_option("--strategy", c.strategy, "hlt or felsch")->capture_default_str();
    sub->add_flag("--require-finite", c.require_finite, "exit 3 if the bound is exceeded");
  };
  auto target_opts = [&](CLI::App* sub) {
    sub->add_option("--target", c.targets, "s3, a4, s4 or s5 (repeatable)");
    sub->add_option("--jobs", c.jobs, "threads for hom-counting")->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, int (*)(Common const&)>> commands;

  auto* check21 = app.add_subcommand("check21", "certificate for the coprime-order condition");
  file_arg(check21);
  out_opt(check21);
  commands.emplace_back(check21, cmd_check21);

  auto* build_qw = app.add_subcommand("build-qw", "the presentation Q_w");
  file_arg(build_qw);
  word_opt(build_qw, true);
  out_opt(build_qw);
  commands.emplace_back(build_qw, cmd_build_qw);

  auto* build_pw = app.add_subcommand("build-pw", "the two-generator presentation P_w");
  file_arg(build_pw);
  word_opt(build_pw, true);
  out_opt(build_pw);
  build_pw->add_option("--log", c.log, "write the elimination log to a file");
  commands.emplace_back(build_pw, cmd_build_pw);

  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  file_arg(enumerate);
  enum_opts(enumerate);
  out_opt(enumerate);
  commands.emplace_back(enumerate, cmd_enumerate);

  auto* homcount = app.add_subcommand("homcount", "count homomorphisms into small groups");
  file_arg(homcount);
  target_opts(homcount);
  out_opt(homcount);
  commands.emplace_back(homcount, cmd_homcount);

  auto* slides = app.add_subcommand("slides", "handle-slide reduction of a tuple");
  slides->add_option("--tuple", c.tuple, "comma-separated integers")->required();
  out_opt(slides);
  commands.emplace_back(slides, cmd_slides);

  auto* wp = app.add_subcommand("wp-oracle", "word problem in a free product of cyclic groups");
  wp->add_option("--cyclic", c.cyclic, "factor orders, e.g. 2,3 or 2,free")->required();
  word_opt(wp, true);
  out_opt(wp);
  commands.emplace_back(wp, cmd_wp_oracle);

  auto* markov = app.add_subcommand("markov", "handle complex and predicted boundary");
  file_arg(markov);
  markov->add_flag("--reduced", c.reduced, "omit the last alpha handle (W'_P)");
  markov->add_option("--verdict", c.verdict, "trivial, nontrivial or unknown")->capture_default_str();
  out_opt(markov);
  commands.emplace_back(markov, cmd_markov);

  auto* pipeline = app.add_subcommand("pipeline", "full report for a seed and a word");
  file_arg(pipeline);
  word_opt(pipeline, true);
  target_opts(pipeline);
  enum_opts(pipeline);
  out_opt(pipeline);
  pipeline->add_option("--cyclic", c.cyclic, "seed factor orders for the word-problem oracle");
  pipeline->add_flag("--enumerate", c.enumerate, "enumerate cosets of P_w");
  pipeline->add_flag("--markov", c.markov, "W'_P complex and predicted boundary");
  commands.emplace_back(pipeline, cmd_pipeline);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    for (auto const& [sub, fn] : commands) {
      if (sub->parsed()) {
        return fn(c);
      }
    }
  } catch (arset::PreconditionError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (arset::InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
