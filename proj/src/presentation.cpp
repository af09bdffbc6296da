#include "foldcx/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace foldcx {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

bool is_proper_power(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) {
      periodic = w[i] == w[i - period];
    }
    if (periodic) return true;
  }
  return false;
}

namespace {

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

void check_letters(const std::vector<std::string>& generators, const std::vector<Word>& relators) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].empty()) throw std::invalid_argument("empty generator symbol");
    for (std::size_t h = 0; h < g; ++h) {
      if (generators[g] == generators[h]) {
        throw std::invalid_argument("duplicate generator '" + generators[g] + "'");
      }
    }
  }
  for (const Word& w : relators) {
    for (const Letter& l : w) {
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= generators.size()) {
        throw std::invalid_argument("relator letter names an undeclared generator");
      }
      if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    }
  }
}

struct RawPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

RawPresentation parse_raw(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("presentation text needs a '|'");
  RawPresentation raw;
  const auto gens = text.substr(0, bar);
  const auto rels = text.substr(bar + 1);

  std::size_t start = 0;
  while (start <= gens.size()) {
    auto comma = gens.find(',', start);
    if (comma == std::string_view::npos) comma = gens.size();
    auto sym = gens.substr(start, comma - start);
    if (sym.size() != 1 || !std::islower(static_cast<unsigned char>(sym[0]))) {
      throw std::invalid_argument("generator symbols must be single lowercase letters, got '" +
                                  std::string(sym) + "'");
    }
    raw.generators.emplace_back(sym);
    start = comma + 1;
  }
  for (std::size_t g = 0; g < raw.generators.size(); ++g) {
    for (std::size_t h = 0; h < g; ++h) {
      if (raw.generators[g] == raw.generators[h]) {
        throw std::invalid_argument("duplicate generator '" + raw.generators[g] + "'");
      }
    }
  }

  if (rels.empty()) return raw;
  start = 0;
  while (start <= rels.size()) {
    auto comma = rels.find(',', start);
    if (comma == std::string_view::npos) comma = rels.size();
    auto token = rels.substr(start, comma - start);
    Word w;
    for (char c : token) {
      const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      auto it = std::find(raw.generators.begin(), raw.generators.end(), std::string(1, lower));
      if (!std::isalpha(static_cast<unsigned char>(c)) || it == raw.generators.end()) {
        throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
      }
      const int g = static_cast<int>(it - raw.generators.begin());
      w.push_back({g, std::isupper(static_cast<unsigned char>(c)) ? -1 : 1});
    }
    raw.relators.push_back(std::move(w));
    start = comma + 1;
  }
  return raw;
}

}  // namespace

Presentation Presentation::make_target(std::vector<std::string> generators, std::vector<Word> relators) {
  check_letters(generators, relators);
  for (const Word& w : relators) {
    if (w.empty()) throw std::invalid_argument("empty relator");
    if (!is_reduced(w)) throw std::invalid_argument("relator is not freely reduced");
    if (is_proper_power(w)) throw std::invalid_argument("relator is a proper power");
  }
  return Presentation(std::move(generators), std::move(relators));
}

Presentation Presentation::make_group(std::vector<std::string> generators, std::vector<Word> relators) {
  check_letters(generators, relators);
  std::vector<Word> reduced;
  for (const Word& w : relators) {
    Word r = free_reduce(w);
    if (!r.empty()) reduced.push_back(std::move(r));
  }
  return Presentation(std::move(generators), std::move(reduced));
}

int Presentation::generator_index(std::string_view symbol) const {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g] == symbol) return static_cast<int>(g);
  }
  return -1;
}

namespace {

bool single_letter_symbols(const std::vector<std::string>& generators) {
  return std::all_of(generators.begin(), generators.end(), [](const std::string& s) {
    return s.size() == 1 && std::islower(static_cast<unsigned char>(s[0]));
  });
}

}  // namespace

std::string Presentation::word_text(const Word& w) const {
  std::string out;
  if (single_letter_symbols(generators_)) {
    for (const Letter& l : w) {
      char c = generators_[l.generator][0];
      out.push_back(l.sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += generators_[w[i].generator];
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

std::string Presentation::to_text() const {
  if (!single_letter_symbols(generators_)) {
    throw std::invalid_argument("text form needs single lowercase generator symbols");
  }
  std::string out;
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (g) out.push_back(',');
    out += generators_[g];
  }
  out.push_back('|');
  for (std::size_t r = 0; r < relators_.size(); ++r) {
    if (r) out.push_back(',');
    out += word_text(relators_[r]);
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  auto raw = parse_raw(text);
  return Presentation::make_target(std::move(raw.generators), std::move(raw.relators));
}

Presentation parse_group_presentation(std::string_view text) {
  auto raw = parse_raw(text);
  return Presentation::make_group(std::move(raw.generators), std::move(raw.relators));
}

const Presentation& kp_presentation() {
  static const Presentation kp = parse_presentation("a,b|b,baBAA");
  return kp;
}

}  // namespace foldcx
