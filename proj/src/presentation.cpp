#include "arset/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "arset/errors.hpp"

namespace arset {

Presentation::Presentation(Alphabet generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<GeneratorName> seen;
  for (auto const& g : generators_) {
    if (!is_valid_generator_name(g)) {
      throw InputError("invalid generator name '" + g + "'");
    }
    if (!seen.insert(g).second) {
      throw DuplicateGenerator(g);
    }
  }
  for (auto const& r : relators_) {
    for (auto const& l : r) {
      if (!seen.contains(l.generator)) {
        throw UnknownGenerator(l.generator);
      }
    }
  }
}

bool Presentation::has_generator(GeneratorName const& name) const {
  return std::find(generators_.begin(), generators_.end(), name)
         != generators_.end();
}

std::size_t Presentation::generator_index(GeneratorName const& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) {
    throw UnknownGenerator(name);
  }
  return static_cast<std::size_t>(it - generators_.begin());
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (auto const& r : relators_) {
    n += r.size();
  }
  return n;
}

namespace {

  std::string_view trim(std::string_view s) {
    auto const ws = " \t\r\n\f\v";
    auto const b  = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
      return {};
    }
    auto const e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  }

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::optional<Alphabet> gens;
  std::vector<Word>       relators;
  std::size_t             line_start = 0;
  std::size_t             line_no    = 0;

  while (line_start <= text.size()) {
    auto const  eol  = text.find('\n', line_start);
    auto const  len  = (eol == std::string_view::npos ? text.size() : eol) - line_start;
    auto        line = text.substr(line_start, len);
    std::size_t const offset = line_start;
    ++line_no;
    line_start = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) {
      continue;
    }
    auto const colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": missing ':'", offset);
    }
    auto const        key       = trim(line.substr(0, colon));
    auto const        body      = line.substr(colon + 1);
    std::size_t const body_base = offset + colon + 1;
    auto const        where     = "line " + std::to_string(line_no) + ": ";

    auto parse_body = [&](std::string_view part, std::size_t base) {
      try {
        return parse_word(part, *gens);
      } catch (ParseError const& e) {
        throw ParseError(where + e.detail(), base + e.position());
      }
    };

    if (key == "gens") {
      if (gens) {
        throw ParseError(where + "second 'gens:' line", offset);
      }
      gens.emplace();
      std::istringstream names{std::string(body)};
      for (std::string name; names >> name;) {
        if (!is_valid_generator_name(name)) {
          throw ParseError(where + "invalid generator name '" + name + "'", offset);
        }
        if (std::find(gens->begin(), gens->end(), name) != gens->end()) {
          throw DuplicateGenerator(name);
        }
        gens->push_back(name);
      }
      continue;
    }
    if (!gens) {
      throw ParseError(where + "'gens:' must be the first line", offset);
    }
    if (key == "rel") {
      relators.push_back(parse_body(body, body_base));
    } else if (key == "eq") {
      auto const eq = body.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError(where + "'eq:' line without '='", body_base);
      }
      auto lhs = parse_body(body.substr(0, eq), body_base);
      auto rhs = parse_body(body.substr(eq + 1), body_base + eq + 1);
      relators.push_back(concat(lhs, invert(rhs)));
    } else {
      throw ParseError(where + "unknown keyword '" + std::string(key) + "'", offset);
    }
  }
  if (!gens) {
    throw ParseError("missing 'gens:' line", 0);
  }
  return Presentation(std::move(*gens), std::move(relators));
}

Presentation load_presentation(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string render(Presentation const& p) {
  std::string out = "gens:";
  for (auto const& g : p.generators()) {
    out += ' ';
    out += g;
  }
  out += '\n';
  for (auto const& r : p.relators()) {
    out += r.empty() ? "rel:" : "rel: " + render(r);
    out += '\n';
  }
  return out;
}

Elimination tietze_eliminate_logged(Presentation const& p,
                                    GeneratorName const& gen,
                                    std::size_t          rel_index) {
  if (rel_index >= p.num_relators()) {
    throw BadIndex("relator index " + std::to_string(rel_index) + " out of range");
  }
  std::size_t const gi  = p.generator_index(gen);
  Word const&       rel = p.relators()[rel_index];
  if (occurrences(rel, gen) != 1) {
    throw NotSolvable("generator '" + gen + "' does not occur exactly once in relator "
                      + std::to_string(rel_index));
  }
  auto const letters = rel.letters();
  auto const k       = static_cast<std::size_t>(
      std::find_if(letters.begin(), letters.end(),
                   [&](Letter const& l) { return l.generator == gen; })
      - letters.begin());
  int const           sign = letters[k].sign;
  std::vector<Letter> tail(letters.begin() + k + 1, letters.end());
  tail.insert(tail.end(), letters.begin(), letters.begin() + k);
  Word const rest     = Word::reduce(std::move(tail));
  Word       solution = sign > 0 ? invert(rest) : rest;

  std::map<GeneratorName, Word> images;
  for (auto const& g : p.generators()) {
    images.emplace(g, Word::generator(g));
  }
  images[gen] = solution;

  Alphabet gens = p.generators();
  gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(gi));
  std::vector<Word> rels;
  rels.reserve(p.num_relators() - 1);
  for (std::size_t j = 0; j < p.num_relators(); ++j) {
    if (j != rel_index) {
      rels.push_back(substitute(p.relators()[j], images));
    }
  }
  return {Presentation(std::move(gens), std::move(rels)), std::move(solution)};
}

Presentation tietze_eliminate(Presentation const& p,
                              GeneratorName const& gen,
                              std::size_t          rel_index) {
  return tietze_eliminate_logged(p, gen, rel_index).result;
}

namespace {

  Integer gcd_of(std::vector<Integer> const& xs) {
    Integer g = 0;
    for (auto const& x : xs) {
      g = gcd(g, x);
    }
    return g;
  }

  // Advances `combo` (ascending indices into [0, n)) to the next k-subset in
  // lexicographic order; false when exhausted.
  bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
    std::size_t const k = combo.size();
    for (std::size_t i = k; i-- > 0;) {
      if (combo[i] < n - k + i) {
        ++combo[i];
        for (std::size_t j = i + 1; j < k; ++j) {
          combo[j] = combo[j - 1] + 1;
        }
        return true;
      }
    }
    return false;
  }

}  // namespace

std::optional<Condition21Certificate> check_condition_21(Presentation const& p) {
  auto const               orders = generator_orders(p);
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i]) {
      finite.push_back(i);
    }
  }
  for (std::size_t k = 1; k <= finite.size(); ++k) {
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) {
      combo[i] = i;
    }
    do {
      std::vector<Integer> qs;
      for (auto c : combo) {
        qs.push_back(*orders[finite[c]]);
      }
      if (gcd_of(qs) == 1) {
        Condition21Certificate cert;
        for (auto c : combo) {
          cert.indices.push_back(finite[c]);
        }
        cert.q_max  = *std::max_element(qs.begin(), qs.end());
        cert.bezout = extended_gcd(qs).coefficients;
        cert.orders = std::move(qs);
        return cert;
      }
    } while (next_combination(combo, finite.size()));
  }
  return std::nullopt;
}

void verify_certificate(Presentation const& p, Condition21Certificate const& cert) {
  auto fail = [](std::string const& why) { throw InvalidCertificate(why); };
  if (cert.indices.empty()) {
    fail("empty generator subset");
  }
  if (cert.orders.size() != cert.indices.size()
      || cert.bezout.size() != cert.indices.size()) {
    fail("certificate fields have mismatched lengths");
  }
  auto const orders = generator_orders(p);
  for (std::size_t j = 0; j < cert.indices.size(); ++j) {
    auto const i = cert.indices[j];
    if (i >= p.num_generators() || (j > 0 && cert.indices[j - 1] >= i)) {
      fail("indices must be ascending and in range");
    }
    if (!orders[i] || *orders[i] != cert.orders[j]) {
      fail("order of generator '" + p.generators()[i] + "' does not match");
    }
  }
  Integer combination = 0;
  for (std::size_t j = 0; j < cert.orders.size(); ++j) {
    combination += cert.bezout[j] * cert.orders[j];
  }
  if (combination != 1) {
    fail("Bezout identity does not hold");
  }
  if (cert.q_max != *std::max_element(cert.orders.begin(), cert.orders.end())) {
    fail("q_max is not the maximum order");
  }
  for (std::size_t drop = 0; drop < cert.orders.size() && cert.orders.size() > 1; ++drop) {
    std::vector<Integer> rest;
    for (std::size_t j = 0; j < cert.orders.size(); ++j) {
      if (j != drop) {
        rest.push_back(cert.orders[j]);
      }
    }
    if (gcd_of(rest) == 1) {
      fail("subset is not minimal");
    }
  }
  std::set<Integer> distinct(cert.orders.begin(), cert.orders.end());
  if (distinct.size() != cert.orders.size()) {
    fail("orders are not pairwise distinct");
  }
}

CollapseCertificate collapse_certificate(Condition21Certificate const& cert) {
  CollapseCertificate out;
  for (auto const& q : cert.orders) {
    out.squared_orders.push_back(q * q);
  }
  auto g = extended_gcd(out.squared_orders);
  if (g.gcd != 1) {
    throw InvalidCertificate("squared orders are not coprime");
  }
  out.bezout_sq = std::move(g.coefficients);
  return out;
}

Presentation apply_exponent_substitution(Presentation const&      p,
                                         long                     u,
                                         long                     v,
                                         GeneratorName const&     d,
                                         GeneratorName const&     e,
                                         std::vector<Word> const& mu) {
  if (u <= 3 || v <= 3) {
    throw BadExponent("exponents must exceed 3 (got u=" + std::to_string(u)
                      + ", v=" + std::to_string(v) + ")");
  }
  if (mu.size() != 2) {
    throw InputError("exactly two conjugating words are required");
  }
  p.generator_index(d);
  p.generator_index(e);
  auto rels        = p.relators();
  Word const d_gen = Word::generator(d), e_gen = Word::generator(e);
  for (auto const& m : mu) {
    rels.push_back(concat({m, d_gen, invert(m), power(d_gen, -u)}));
    rels.push_back(concat({invert(m), e_gen, m, power(e_gen, -v)}));
  }
  return Presentation(p.generators(), std::move(rels));
}

}  // namespace arset
