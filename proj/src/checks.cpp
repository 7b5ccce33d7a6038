#include "normord/checks.hpp"

#include "normord/contractions.hpp"
#include "normord/rewrite.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace normord {

Word word_from_index(std::uint64_t idx, std::size_t n, unsigned len) {
  std::vector<Generator> letters(len);
  const std::uint64_t base = 2 * n;
  for (unsigned pos = len; pos-- > 0;) {
    const auto digit = idx % base;
    idx /= base;
    letters[pos] = {static_cast<std::uint32_t>(digit / 2), digit % 2 == 1};
  }
  return Word(std::move(letters));
}

Word random_word(std::mt19937_64& rng, std::size_t n, unsigned max_len) {
  const unsigned len = static_cast<unsigned>(rng() % (max_len + 1));
  Word w;
  for (unsigned i = 0; i < len; ++i) {
    const auto digit = rng() % (2 * n);
    w.push_back({static_cast<std::uint32_t>(digit / 2), digit % 2 == 1});
  }
  return w;
}

EquivalenceReport check_engine_equivalence(const ModeSystem& sys, unsigned max_len, unsigned threads) {
  const std::size_t n = sys.modes();
  std::vector<Word> words;
  for (unsigned len = 0; len <= max_len; ++len) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < len; ++i) count *= 2 * n;
    for (std::uint64_t idx = 0; idx < count; ++idx) words.push_back(word_from_index(idx, n, len));
  }

  threads = std::max(1u, threads);
  std::vector<std::uint64_t> mismatches(threads, 0);
  std::vector<std::optional<std::size_t>> first(threads);
  auto worker = [&](unsigned t) {
    for (std::size_t i = t; i < words.size(); i += threads) {
      if (normal_order_rewrite(words[i], sys) == normal_order_contraction(words[i], sys)) continue;
      ++mismatches[t];
      if (!first[t]) first[t] = i;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  EquivalenceReport report;
  report.words_checked = words.size();
  std::optional<std::size_t> lowest;
  for (unsigned t = 0; t < threads; ++t) {
    report.mismatches += mismatches[t];
    if (first[t] && (!lowest || *first[t] < *lowest)) lowest = first[t];
  }
  if (lowest) report.first_mismatch = words[*lowest];
  return report;
}

EquivalenceReport check_sunglasses(std::size_t n, unsigned max_len, unsigned samples, std::uint64_t seed) {
  const auto sys = ModeSystem::coupled(n);
  const auto single = ModeSystem::coupled(1);
  std::mt19937_64 rng(seed);
  EquivalenceReport report;
  for (unsigned s = 0; s < samples; ++s) {
    const Word w = random_word(rng, n, max_len);
    ++report.words_checked;
    if (sunglasses_nf(normal_order_rewrite(w, sys)) == normal_order_rewrite(sunglasses_word(w), single)) continue;
    ++report.mismatches;
    if (!report.first_mismatch) report.first_mismatch = w;
  }
  return report;
}

}  // namespace normord
