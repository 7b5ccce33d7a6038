#pragma once

#include "normord/mode_system.hpp"
#include "normord/normal_form.hpp"
#include "normord/word.hpp"

#include <cstdint>

namespace normord {

/// Which redex a_i a_j+ is rewritten first.
enum class RewriteStrategy { leftmost, rightmost };

struct RewriteTrace {
  std::uint64_t steps = 0;
  NormalForm result;
};

/// Normal-orders a word by exhaustive application of
///   a_i a_j+  ->  a_j+ a_i + kappa(i, j).
/// Intermediate words are merged, and each distinct word is expanded once.
RewriteTrace normal_order_traced(const Word& word, const ModeSystem& sys,
                                 RewriteStrategy strategy = RewriteStrategy::leftmost);

NormalForm normal_order_rewrite(const Word& word, const ModeSystem& sys,
                                RewriteStrategy strategy = RewriteStrategy::leftmost);

/// Linear extension of normal_order_rewrite.
NormalForm normal_order_wordsum(const WordSum& ws, const ModeSystem& sys);

/// N[uv] - N[vu].
NormalForm commutator_nf(const Word& u, const Word& v, const ModeSystem& sys);

/// Product of two normal forms, re-normal-ordered: N[N[x] N[y]].
NormalForm compose(const NormalForm& lhs, const NormalForm& rhs, const ModeSystem& sys);

}  // namespace normord
