#include "normord/rewrite.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace normord {

namespace {

// Sum over annihilators of the number of creators to their right. Both
// rule outputs have a strictly smaller value than the input.
std::uint64_t disorder(const Word& w) {
  std::uint64_t creators_right = 0;
  std::uint64_t total = 0;
  const auto letters = w.letters();
  for (std::size_t i = letters.size(); i-- > 0;) {
    if (letters[i].dagger)
      ++creators_right;
    else
      total += creators_right;
  }
  return total;
}

std::ptrdiff_t find_redex(const Word& w, RewriteStrategy strategy) {
  const auto letters = w.letters();
  if (letters.size() < 2) return -1;
  if (strategy == RewriteStrategy::leftmost) {
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (!letters[i].dagger && letters[i + 1].dagger) return static_cast<std::ptrdiff_t>(i);
  } else {
    for (std::size_t i = letters.size() - 1; i-- > 0;)
      if (!letters[i].dagger && letters[i + 1].dagger) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

struct Pending {
  std::uint64_t disorder;
  Word word;
  bool operator<(const Pending& o) const {
    if (disorder != o.disorder) return disorder > o.disorder;
    return word < o.word;
  }
};

}  // namespace

RewriteTrace normal_order_traced(const Word& word, const ModeSystem& sys, RewriteStrategy strategy) {
  if (!word.valid_for(sys)) throw std::invalid_argument("word uses a mode outside the system");
  const std::size_t n = sys.modes();
  RewriteTrace trace{0, NormalForm(n)};

  // Processing in order of decreasing disorder guarantees that a word is
  // never regenerated after it has been expanded.
  std::map<Pending, Integer> work;
  work.emplace(Pending{disorder(word), word}, Integer(1));
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key().word;
    const Integer& coeff = node.mapped();
    if (coeff == 0) continue;

    const std::ptrdiff_t at = find_redex(w, strategy);
    if (at < 0) {
      trace.result.add(double_dot(w, n), coeff);
      continue;
    }
    ++trace.steps;
    const auto letters = w.letters();
    const std::size_t p = static_cast<std::size_t>(at);

    std::vector<Generator> swapped(letters.begin(), letters.end());
    std::swap(swapped[p], swapped[p + 1]);
    Word sw(std::move(swapped));
    const auto d = disorder(sw);
    work[Pending{d, std::move(sw)}] += coeff;

    const int k = sys.kappa(letters[p].mode, letters[p + 1].mode);
    if (k != 0) {
      std::vector<Generator> shorter;
      shorter.reserve(letters.size() - 2);
      shorter.insert(shorter.end(), letters.begin(), letters.begin() + at);
      shorter.insert(shorter.end(), letters.begin() + at + 2, letters.end());
      Word sh(std::move(shorter));
      const auto ds = disorder(sh);
      work[Pending{ds, std::move(sh)}] += coeff * k;
    }
  }
  return trace;
}

NormalForm normal_order_rewrite(const Word& word, const ModeSystem& sys, RewriteStrategy strategy) {
  return normal_order_traced(word, sys, strategy).result;
}

NormalForm normal_order_wordsum(const WordSum& ws, const ModeSystem& sys) {
  NormalForm out(sys.modes());
  for (const auto& [c, w] : ws.terms()) out += normal_order_rewrite(w, sys) * c;
  return out;
}

NormalForm commutator_nf(const Word& u, const Word& v, const ModeSystem& sys) {
  return normal_order_rewrite(u * v, sys) - normal_order_rewrite(v * u, sys);
}

NormalForm compose(const NormalForm& lhs, const NormalForm& rhs, const ModeSystem& sys) {
  NormalForm out(sys.modes());
  for (const auto& [ml, cl] : lhs.terms())
    for (const auto& [mr, cr] : rhs.terms())
      out += normal_order_rewrite(monomial_word(ml) * monomial_word(mr), sys) * (cl * cr);
  return out;
}

}  // namespace normord
