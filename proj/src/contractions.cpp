#include "normord/contractions.hpp"

#include <algorithm>
#include <stdexcept>

namespace normord {

bool is_valid_matching(const Word& word, const Matching& m, const ModeSystem& sys) {
  std::vector<bool> used(word.size(), false);
  for (const auto& [p, q] : m.pairs) {
    if (p >= q || q >= word.size()) return false;
    if (used[p] || used[q]) return false;
    used[p] = used[q] = true;
    if (word[p].dagger || !word[q].dagger) return false;
    if (sys.kappa(word[p].mode, word[q].mode) == 0) return false;
  }
  return std::is_sorted(m.pairs.begin(), m.pairs.end());
}

namespace {

struct Enumerator {
  const Word& word;
  const ModeSystem& sys;
  const std::function<void(const Matching&)>& visit;
  std::vector<std::size_t> annihilators;
  std::vector<bool> used;
  Matching current;

  void recurse(std::size_t idx) {
    if (idx == annihilators.size()) {
      visit(current);
      return;
    }
    recurse(idx + 1);
    const std::size_t p = annihilators[idx];
    for (std::size_t q = p + 1; q < word.size(); ++q) {
      if (used[q] || !word[q].dagger) continue;
      if (sys.kappa(word[p].mode, word[q].mode) == 0) continue;
      used[q] = true;
      current.pairs.emplace_back(p, q);
      recurse(idx + 1);
      current.pairs.pop_back();
      used[q] = false;
    }
  }
};

}  // namespace

void for_each_matching(const Word& word, const ModeSystem& sys,
                       const std::function<void(const Matching&)>& visit) {
  if (!word.valid_for(sys)) throw std::invalid_argument("word uses a mode outside the system");
  Enumerator e{word, sys, visit, {}, std::vector<bool>(word.size(), false), {}};
  for (std::size_t i = 0; i < word.size(); ++i)
    if (!word[i].dagger) e.annihilators.push_back(i);
  e.recurse(0);
}

ContractionSet enumerate_contractions(const Word& word, const ModeSystem& sys) {
  ContractionSet cs{word, {}};
  for_each_matching(word, sys, [&](const Matching& m) { cs.matchings.push_back(m); });
  std::sort(cs.matchings.begin(), cs.matchings.end(), [](const Matching& a, const Matching& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.pairs < b.pairs;
  });
  return cs;
}

Word residual_word(const Word& word, const Matching& m) {
  std::vector<bool> drop(word.size(), false);
  for (const auto& [p, q] : m.pairs) {
    if (p >= word.size() || q >= word.size()) throw std::out_of_range("matching position out of range");
    drop[p] = drop[q] = true;
  }
  Word out;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (!drop[i]) out.push_back(word[i]);
  return out;
}

NormalForm normal_order_contraction(const Word& word, const ModeSystem& sys) {
  const std::size_t n = sys.modes();
  const Monomial full = double_dot(word, n);
  NormalForm out(n);
  for_each_matching(word, sys, [&](const Matching& m) {
    Monomial mono = full;
    for (const auto& [p, q] : m.pairs) {
      --mono.annihilators[word[p].mode];
      --mono.creators[word[q].mode];
    }
    out.add(mono, 1);
  });
  return out;
}

std::map<std::size_t, std::size_t> degree_histogram(const ContractionSet& cs) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& m : cs.matchings) ++h[m.degree()];
  return h;
}

}  // namespace normord
