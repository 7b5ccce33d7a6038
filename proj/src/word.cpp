#include "normord/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace normord {

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::size_t Word::mode_span() const noexcept {
  std::size_t span = 0;
  for (const auto& g : letters_) span = std::max<std::size_t>(span, g.mode + 1);
  return span;
}

void WordSum::add(const Integer& coeff, const Word& word) {
  if (coeff == 0) return;
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const Term& t) { return t.second == word; });
  if (it == terms_.end()) {
    terms_.emplace_back(coeff, word);
    return;
  }
  it->first += coeff;
  if (it->first == 0) terms_.erase(it);
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ModeSystem& sys) : text_(text), sys_(sys) {}

  Word run() {
    Word out;
    skip_space();
    while (pos_ < text_.size()) {
      const Generator g = generator();
      unsigned reps = 1;
      if (peek() == '^') {
        ++pos_;
        reps = number("exponent");
      }
      for (unsigned i = 0; i < reps; ++i) out.push_back(g);
      skip_space();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  unsigned number(const char* what) {
    const std::size_t start = pos_;
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::invalid_argument) throw ParseError(std::string("expected ") + what, start);
    if (ec == std::errc::result_out_of_range) throw ParseError(std::string(what) + " too large", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  Generator generator() {
    const std::size_t start = pos_;
    const char c = peek();
    std::uint32_t mode = 0;
    if (c >= 'a' && c <= 'd') {
      ++pos_;
      if (c == 'a' && std::isdigit(static_cast<unsigned char>(peek()))) {
        const unsigned idx = number("mode index");
        if (idx == 0 || idx > sys_.modes())
          throw ParseError("mode `a" + std::to_string(idx) + "` out of range", start);
        mode = idx - 1;
      } else {
        if (sys_.modes() > 4)
          throw ParseError(std::string("alias `") + c + "` needs at most 4 modes; use a1..aN", start);
        mode = static_cast<std::uint32_t>(c - 'a');
        if (mode >= sys_.modes())
          throw ParseError(std::string("mode `") + c + "` out of range", start);
      }
    } else {
      throw ParseError(c == '\0' ? std::string("unexpected end of input")
                                 : std::string("unexpected character `") + c + "`",
                       start);
    }
    bool dagger = false;
    if (peek() == '+') {
      dagger = true;
      ++pos_;
    }
    return {mode, dagger};
  }

  std::string_view text_;
  const ModeSystem& sys_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const ModeSystem& sys) { return Parser(text, sys).run(); }

std::string mode_name(std::uint32_t mode, std::size_t n) {
  if (n <= 4) return std::string(1, static_cast<char>('a' + mode));
  return "a" + std::to_string(mode + 1);
}

std::string format_word(const Word& word, std::size_t n) {
  std::string out;
  const auto letters = word.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += ' ';
    out += mode_name(letters[i].mode, n);
    if (letters[i].dagger) out += '+';
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

Word number_word(const ModeSystem& sys, std::uint32_t mode, unsigned power) {
  if (mode >= sys.modes()) throw std::out_of_range("mode out of range");
  Word w;
  for (unsigned i = 0; i < power; ++i) {
    w.push_back(Generator::creator(mode));
    w.push_back(Generator::annihilator(mode));
  }
  return w;
}

WordSum number_difference_power(const ModeSystem& sys, unsigned power) {
  if (sys.modes() != 2) throw std::invalid_argument("number-difference operator needs two modes");
  WordSum out;
  for (unsigned k = 0; k <= power; ++k) {
    Integer c = binomial(power, k);
    if (k % 2 == 1) c = -c;
    out.add(c, number_word(sys, 0, power - k) * number_word(sys, 1, k));
  }
  return out;
}

Word mode_delete(const Word& word, std::uint32_t mode) {
  Word out;
  for (const auto& g : word.letters())
    if (g.mode != mode) out.push_back(g);
  return out;
}

Word sunglasses_word(const Word& word) {
  Word out;
  for (const auto& g : word.letters()) out.push_back({0, g.dagger});
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace normord
