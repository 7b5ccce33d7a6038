#pragma once

#include "normord/normal_form.hpp"
#include "normord/word.hpp"

#include <initializer_list>
#include <string>
#include <utility>

namespace normord::testing {

// Builds a normal form from (coefficient, normally ordered word) pairs.
inline NormalForm expected(const ModeSystem& sys, std::initializer_list<std::pair<long, std::string>> terms) {
  NormalForm nf(sys.modes());
  for (const auto& [c, text] : terms) nf.add(double_dot(parse_word(text, sys), sys.modes()), c);
  return nf;
}

inline Word w(const std::string& text, const ModeSystem& sys) { return parse_word(text, sys); }

}  // namespace normord::testing
