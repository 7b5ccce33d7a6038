#pragma once

#include "normord/integer.hpp"
#include "normord/mode_system.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace normord {

/// One letter of the operator alphabet: a_mode or a_mode+ (zero-based mode).
struct Generator {
  std::uint32_t mode = 0;
  bool dagger = false;

  static constexpr Generator annihilator(std::uint32_t m) { return {m, false}; }
  static constexpr Generator creator(std::uint32_t m) { return {m, true}; }

  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

/// A finite product of generators, read left to right.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Generator> letters) : letters_(letters) {}

  std::span<const Generator> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Generator g) { letters_.push_back(g); }
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Highest mode index used plus one (zero for the empty word).
  std::size_t mode_span() const noexcept;
  bool valid_for(const ModeSystem& sys) const noexcept { return mode_span() <= sys.modes(); }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Generator> letters_;
};

/// Integer linear combination of words; equal words are merged and zero
/// coefficients are never stored.
class WordSum {
 public:
  using Term = std::pair<Integer, Word>;

  void add(const Integer& coeff, const Word& word);
  std::span<const Term> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

 private:
  std::vector<Term> terms_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses the ASCII word grammar:
///   word := (term SP*)* ; term := gen ("^" uint)? ; gen := name "+"?
///   name := "a".."d" | "a" uint
/// Single-letter aliases a..d name modes 1..4 and are only accepted when
/// the system has at most four modes. Throws ParseError.
Word parse_word(std::string_view text, const ModeSystem& sys);

/// Letter name for a zero-based mode: a..d when n <= 4, else a1..aN.
std::string mode_name(std::uint32_t mode, std::size_t n);

/// Grammar tokens with runs folded into `x^k`; parse_word inverts it.
std::string format_word(const Word& word, std::size_t n);

/// (a_mode+ a_mode)^power.
Word number_word(const ModeSystem& sys, std::uint32_t mode, unsigned power);

/// (N_a - N_b)^power expanded binomially, i.e. assuming N_a and N_b commute.
/// Only meaningful as a check against the noncoupled two-mode system.
WordSum number_difference_power(const ModeSystem& sys, unsigned power);

/// Removes every letter of the given mode.
Word mode_delete(const Word& word, std::uint32_t mode);

/// Forgets colours: every creator becomes c+, every annihilator c.
Word sunglasses_word(const Word& word);

}  // namespace normord
