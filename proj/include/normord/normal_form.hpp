#pragma once

#include "normord/integer.hpp"
#include "normord/word.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace normord {

/// Normally ordered monomial (a_1+)^{i_1}...(a_n+)^{i_n} a_n^{j_n}...a_1^{j_1}.
/// Both exponent vectors are indexed by mode.
struct Monomial {
  std::vector<std::uint32_t> creators;
  std::vector<std::uint32_t> annihilators;

  static Monomial identity(std::size_t n) {
    return {std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(n, 0)};
  }

  std::size_t modes() const noexcept { return creators.size(); }
  std::uint64_t creator_total() const noexcept;
  std::uint64_t annihilator_total() const noexcept;
  std::uint64_t degree() const noexcept { return creator_total() + annihilator_total(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Print order: descending total degree, then descending lexicographic
/// order on creators, then on annihilators.
struct PrintOrder {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// The canonical reading of a monomial as a word.
Word monomial_word(const Monomial& m);

/// Double dot: counts the letters of a word and forgets their order.
Monomial double_dot(const Word& word, std::size_t n);

/// Sparse integer combination of normally ordered monomials over n modes.
class NormalForm {
 public:
  using Terms = std::map<Monomial, Integer, PrintOrder>;

  explicit NormalForm(std::size_t n = 1) : n_(n) {}
  /// The normal form of the empty word: the identity monomial with coefficient one.
  static NormalForm one(std::size_t n);

  std::size_t modes() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of m, zero when absent.
  Integer coefficient(const Monomial& m) const;
  void add(const Monomial& m, const Integer& coeff);

  NormalForm& operator+=(const NormalForm& rhs);
  NormalForm& operator-=(const NormalForm& rhs);
  NormalForm& operator*=(const Integer& scale);
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(NormalForm a, const Integer& s) { return a *= s; }

  Integer coefficient_sum() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

/// Human-readable rendering in grammar tokens, e.g. `a+ b+ b^2 a^2 + 2 b a`.
std::string format_normal_form(const NormalForm& nf);

/// Collapses every mode onto a single mode c, summing colliding images.
NormalForm sunglasses_nf(const NormalForm& nf);

}  // namespace normord
