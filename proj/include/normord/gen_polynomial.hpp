#pragma once

#include "normord/integer.hpp"
#include "normord/stirling.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace normord {

/// Polynomial in u, v, w with exact integer coefficients.
class GenPolynomial {
 public:
  using Exponents = std::array<std::uint32_t, 3>;
  enum Var : std::size_t { u = 0, v = 1, w = 2 };

  GenPolynomial() = default;
  static GenPolynomial constant(const Integer& c);
  static GenPolynomial variable(Var x);

  const std::map<Exponents, Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(std::uint32_t du, std::uint32_t dv, std::uint32_t dw) const;
  void add(const Exponents& e, const Integer& c);
  bool is_zero() const noexcept { return coeffs_.empty(); }

  GenPolynomial derivative(Var x) const;
  GenPolynomial& operator+=(const GenPolynomial& rhs);
  GenPolynomial& operator-=(const GenPolynomial& rhs);
  friend GenPolynomial operator+(GenPolynomial a, const GenPolynomial& b) { return a += b; }
  friend GenPolynomial operator-(GenPolynomial a, const GenPolynomial& b) { return a -= b; }
  friend GenPolynomial operator*(const GenPolynomial& a, const GenPolynomial& b);

  friend bool operator==(const GenPolynomial&, const GenPolynomial&) = default;

 private:
  std::map<Exponents, Integer> coeffs_;
};

/// e.g. `u^2*v*w + 3*u`; "0" for the zero polynomial.
std::string format_polynomial(const GenPolynomial& p);

/// sum S(i,j,k,i+j-k) u^i v^j w^k for a two-mode table. Throws
/// std::invalid_argument on a non-two-mode table or an entry with i+j != k+l.
GenPolynomial gen_polynomial(const StirlingTable& table);

enum class GenRecurrence { na_step, nb_step, second_type };

/// na_step:     u (1 + d/du + d/dv) p
/// nb_step:     w (v + u d/du + v d/dv + (1 - w) d/dw) p
/// second_type: u [w(v+1) + (vw+v+1)(d/du + d/dv) + v (d/du + d/dv)^2] p
GenPolynomial apply_gen_recurrence(GenRecurrence which, const GenPolynomial& p);

/// Checks the three recurrences against gen_polynomial of the successor
/// tables for n_a, n_b <= max_ab and m <= max_m. First-type checks are tagged
/// with regime "interior" (n_a, n_b >= 1) or "boundary".
RecursionReport check_gen_recurrences(unsigned max_ab, unsigned max_m);

}  // namespace normord
