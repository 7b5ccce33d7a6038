#pragma once

#include "normord/integer.hpp"
#include "normord/mode_system.hpp"
#include "normord/normal_form.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace normord {

/// Stirling number of the second kind, from S(n+1,k) = S(n,k-1) + k S(n,k).
Integer classical_stirling(unsigned n, unsigned k);
/// B(n) = sum_k S(n,k).
Integer classical_bell(unsigned n);

enum class StirlingKind { first, second };

/// Coloured Stirling numbers read off a normal form. Index tuples are
/// (i_1..i_n, j_n..j_1): creator exponents in mode order followed by
/// annihilator exponents in reverse mode order, so two modes give the
/// familiar (i, j, k, l) of (a+)^i (b+)^j b^k a^l.
struct StirlingTable {
  using Index = std::vector<std::uint32_t>;

  StirlingKind kind = StirlingKind::first;
  std::size_t modes = 2;
  /// First type: the exponents (n_1..n_n). Second type: {m}.
  std::vector<unsigned> exponents;
  std::map<Index, Integer> entries;

  /// Entry at a signed index; zero when any component is negative or absent.
  Integer at(std::initializer_list<long> index) const;
  Integer at(const std::vector<long>& index) const;

  /// Parameters as exported: exponents for the first type, (m, n) for the second.
  std::vector<unsigned> params() const;
  std::string kind_name() const { return kind == StirlingKind::first ? "first" : "second"; }
};

StirlingTable::Index stirling_index(const Monomial& m);
StirlingTable table_from_normal_form(const NormalForm& nf, StirlingKind kind,
                                     std::vector<unsigned> exponents);

/// N[N_1^{n_1} ... N_n^{n_n}] over the coupled system, one mode per exponent.
StirlingTable coloured_stirling_first(const std::vector<unsigned>& exponents);
/// N[(N_1 ... N_n)^m] over the coupled n-mode system.
StirlingTable coloured_stirling_second(std::size_t modes, unsigned m);

/// Sum of every table entry.
Integer coloured_bell(const StirlingTable& table);
Integer coloured_bell_first(const std::vector<unsigned>& exponents);
Integer coloured_bell_second(std::size_t modes, unsigned m);

struct Counterexample {
  std::vector<long> index;
  Integer table_value;
  Integer predicted;
};

struct RecursionCheck {
  std::string name;
  std::vector<unsigned> params;
  std::string regime;
  std::size_t cells_checked = 0;
  std::optional<Counterexample> counterexample;
  bool passed() const noexcept { return !counterexample.has_value(); }
};

struct RecursionReport {
  std::vector<RecursionCheck> checks;
  bool passed() const noexcept;
};

struct StirlingMaxima {
  unsigned max_a = 0;
  unsigned max_b = 0;
  unsigned max_m = 0;
};

/// Verifies, for two modes, the n_a-step and n_b-step recursions of the
/// first type between tables with n_a <= max_a and n_b <= max_b, the
/// second-type recursion for m <= max_m, and the vanishing and leading
/// coefficient constraints of every table involved.
RecursionReport check_stirling_recursions(const StirlingMaxima& maxima);

/// Coefficients c_n^{(r)}(i,j,k) of N[(b^r a+ a)^n] = sum c (a+)^i b^j a^k.
struct CnrTable {
  unsigned r = 0;
  unsigned n = 0;
  std::map<std::array<std::uint32_t, 3>, Integer> entries;

  Integer at(long i, long j, long k) const;
};

CnrTable cnr_table(unsigned r, unsigned n);

/// Coefficient of the middle term in the c_n^{(r)} recursion:
/// `printed` uses (j + r), `resolved` uses (j + 1), which is what the
/// one-step expansion implies once the target index is shifted.
enum class CnrRecursionForm { printed, resolved };

/// Compares cnr_table(r, n+1) against the recursion applied to cnr_table(r, n).
RecursionCheck check_cnr_recursion(unsigned r, unsigned n, CnrRecursionForm form);

/// Pushes every term of c_n^{(r)} through the one-step expansion
///   (a+)^i b^j a^k . b^r a+ a = (a+)^{i+1} b^{j+r} a^{k+1}
///       + (j+r) (a+)^i b^{j+r-1} a^{k+1} + k (a+)^i b^{j+r} a^k
/// and compares with cnr_table(r, n+1).
RecursionCheck check_cnr_expansion(unsigned r, unsigned n);

}  // namespace normord
