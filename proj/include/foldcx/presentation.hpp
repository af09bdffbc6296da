#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace foldcx {

/// A signed generator occurrence inside a word.
struct Letter {
  int generator = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Freely reduces a word (cancels adjacent x x^-1 pairs).
Word free_reduce(const Word& w);

/// True when w = u^k for some word u and k >= 2.
bool is_proper_power(const Word& w);

/// Finitely presented group: ordered generator symbols plus relator words.
///
/// Two flavours exist. A *target* presentation (what `make_target` and
/// `parse_presentation` build) satisfies the alignment invariants required by
/// morphisms: every relator is nonempty, freely reduced and not a proper
/// power. A *group* presentation (`make_group`, `parse_group_presentation`)
/// only requires letters to name declared generators; it is what coset
/// enumeration and fundamental-group computations work with.
class Presentation {
 public:
  Presentation() = default;

  static Presentation make_target(std::vector<std::string> generators, std::vector<Word> relators);
  static Presentation make_group(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::size_t relator_count() const { return relators_.size(); }
  const Word& relator(std::size_t r) const { return relators_.at(r); }

  /// Index of the generator with the given symbol, or -1.
  int generator_index(std::string_view symbol) const;

  /// "gens|rel,rel" text form. Requires single-letter lowercase generators.
  std::string to_text() const;

  /// Human-readable word, e.g. "b a b^-1 a^-1 a^-1" for multi-letter symbols
  /// or "baBAA" when every symbol is a single lowercase letter.
  std::string word_text(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Presentation(std::vector<std::string> generators, std::vector<Word> relators)
      : generators_(std::move(generators)), relators_(std::move(relators)) {}

  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Parses "a,b|b,baBAA": lowercase letter = generator, uppercase = inverse.
/// Enforces the target invariants; throws std::invalid_argument on unknown
/// symbols, empty relators, unreduced relators or proper powers.
Presentation parse_presentation(std::string_view text);

/// Same grammar, but only checks that symbols are declared. Relators are
/// freely reduced and empty ones dropped.
Presentation parse_group_presentation(std::string_view text);

/// The presentation <a,b | b, bab^-1a^-2>.
const Presentation& kp_presentation();

}  // namespace foldcx
