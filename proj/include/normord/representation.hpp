#pragma once

#include "normord/integer.hpp"
#include "normord/word.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace normord {

/// Finite combination of phi_{m,k} = exp(m s) s^k with s = x_1 + ... + x_n.
/// Every such function has equal partial derivatives in all x_i.
class FunctionElement {
 public:
  using Key = std::pair<std::int64_t, std::uint32_t>;  // (m, k)

  FunctionElement() = default;
  static FunctionElement basis(std::int64_t m, std::uint32_t k, const Rational& c = 1);

  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  Rational coefficient(std::int64_t m, std::uint32_t k) const;
  void add(const Key& key, const Rational& c);
  bool is_zero() const noexcept { return terms_.empty(); }

  FunctionElement& operator+=(const FunctionElement& rhs);
  FunctionElement& operator-=(const FunctionElement& rhs);
  FunctionElement& operator*=(const Rational& s);
  friend FunctionElement operator+(FunctionElement a, const FunctionElement& b) { return a += b; }
  friend FunctionElement operator-(FunctionElement a, const FunctionElement& b) { return a -= b; }
  friend FunctionElement operator*(FunctionElement a, const Rational& s) { return a *= s; }

  friend bool operator==(const FunctionElement&, const FunctionElement&) = default;

 private:
  std::map<Key, Rational> terms_;
};

/// Sign of the creator e^{-s}. The printed operators use +1, which yields
/// [a_i, a_j+] = -1; negating the creator restores +1.
enum class CreatorSign { literal, corrected };

struct RepConfig {
  std::size_t modes = 2;
  CreatorSign sign = CreatorSign::corrected;
};

std::string sign_name(CreatorSign s);

/// a_i = e^s d/dx_i : phi_{m,k} -> m phi_{m+1,k} + k phi_{m+1,k-1}
/// a_i+ = sigma e^{-s} : phi_{m,k} -> sigma phi_{m-1,k}
FunctionElement apply_generator(const RepConfig& cfg, Generator g, const FunctionElement& f);

/// The rightmost letter acts first.
FunctionElement apply_word(const RepConfig& cfg, const Word& w, const FunctionElement& f);

struct RelationResult {
  std::string pair;   // e.g. "[a, b+]"
  Generator left;
  Generator right;
  int expected = 0;
  /// The scalar c with [left, right] f = c f on every basis element in
  /// range, or "non-scalar" when no single c exists.
  std::string observed;
  bool pass = false;
};

struct RelationReport {
  RepConfig config;
  std::int64_t m_range = 0;
  std::uint32_t k_range = 0;
  std::vector<RelationResult> relations;
  bool passed() const noexcept;
};

/// Checks every commutator of the coupled n-mode system on phi_{m,k} with
/// |m| <= m_range and k <= k_range. Mixed pairs are oriented as
/// [annihilator, creator] with expected value 1; all others expect 0.
RelationReport verify_relations(const RepConfig& cfg, std::int64_t m_range, std::uint32_t k_range);

/// True when [N_i, N_j] annihilates every basis element in range for all i, j.
bool number_commutators_vanish(const RepConfig& cfg, std::int64_t m_range, std::uint32_t k_range);

}  // namespace normord
