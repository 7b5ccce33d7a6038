#pragma once

#include "normord/mode_system.hpp"
#include "normord/normal_form.hpp"
#include "normord/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

namespace normord {

/// The idx-th word of length len over the 2n letters, enumerated with the
/// first letter most significant in base 2n (a1, a1+, a2, a2+, ...).
Word word_from_index(std::uint64_t idx, std::size_t n, unsigned len);

/// Uniform length in [0, max_len], uniform letters. Deterministic for a seed.
Word random_word(std::mt19937_64& rng, std::size_t n, unsigned max_len);

struct EquivalenceReport {
  std::uint64_t words_checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<Word> first_mismatch;
  bool passed() const noexcept { return mismatches == 0; }
};

/// Compares the rewrite and contraction engines on every word of length
/// <= max_len. Work is split across `threads`; the result does not depend on it.
EquivalenceReport check_engine_equivalence(const ModeSystem& sys, unsigned max_len, unsigned threads = 1);

/// Compares sunglasses_nf(N_n[w]) with N_1[sunglasses_word(w)] on random words
/// of the coupled n-mode system.
EquivalenceReport check_sunglasses(std::size_t n, unsigned max_len, unsigned samples, std::uint64_t seed);

}  // namespace normord
