#pragma once

#include "normord/mode_system.hpp"
#include "normord/normal_form.hpp"
#include "normord/word.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace normord {

/// A contraction: disjoint (annihilator, later creator) position pairs,
/// zero-based, sorted by the annihilator position.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t degree() const noexcept { return pairs.size(); }
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// True when m is a contraction of word under sys.
bool is_valid_matching(const Word& word, const Matching& m, const ModeSystem& sys);

struct ContractionSet {
  Word word;
  /// Every valid matching exactly once, null matching first, then by degree
  /// and lexicographically on the pair list.
  std::vector<Matching> matchings;
};

/// Calls visit for each valid matching in recursion order (not sorted).
/// Annihilators are scanned left to right; each is left unmatched or paired
/// with an unused later creator whose coupling to it is nonzero.
void for_each_matching(const Word& word, const ModeSystem& sys,
                       const std::function<void(const Matching&)>& visit);

ContractionSet enumerate_contractions(const Word& word, const ModeSystem& sys);

/// Word with the matched positions deleted.
Word residual_word(const Word& word, const Matching& m);

/// Sum over all contractions of the double-dotted residual word.
NormalForm normal_order_contraction(const Word& word, const ModeSystem& sys);

std::map<std::size_t, std::size_t> degree_histogram(const ContractionSet& cs);

}  // namespace normord
