#include "normord/stirling.hpp"

#include "normord/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace normord {

Integer classical_stirling(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Integer> row(k + 1, 0);  // S(t, 0..k)
  row[0] = 1;
  for (unsigned t = 0; t < n; ++t) {
    for (unsigned j = std::min(k, t + 1); j >= 1; --j) row[j] = row[j - 1] + Integer(j) * row[j];
    row[0] = 0;
  }
  return row[k];
}

Integer classical_bell(unsigned n) {
  Integer b = 0;
  for (unsigned k = 0; k <= n; ++k) b += classical_stirling(n, k);
  return b;
}

namespace {

Integer lookup(const std::map<StirlingTable::Index, Integer>& entries, const std::vector<long>& index) {
  StirlingTable::Index key;
  key.reserve(index.size());
  for (long v : index) {
    if (v < 0) return 0;
    key.push_back(static_cast<std::uint32_t>(v));
  }
  auto it = entries.find(key);
  return it == entries.end() ? Integer(0) : it->second;
}

}  // namespace

Integer StirlingTable::at(std::initializer_list<long> index) const {
  return lookup(entries, std::vector<long>(index));
}

Integer StirlingTable::at(const std::vector<long>& index) const { return lookup(entries, index); }

std::vector<unsigned> StirlingTable::params() const {
  if (kind == StirlingKind::first) return exponents;
  return {exponents.empty() ? 0u : exponents.front(), static_cast<unsigned>(modes)};
}

StirlingTable::Index stirling_index(const Monomial& m) {
  StirlingTable::Index idx(m.creators.begin(), m.creators.end());
  idx.insert(idx.end(), m.annihilators.rbegin(), m.annihilators.rend());
  return idx;
}

StirlingTable table_from_normal_form(const NormalForm& nf, StirlingKind kind,
                                     std::vector<unsigned> exponents) {
  StirlingTable t;
  t.kind = kind;
  t.modes = nf.modes();
  t.exponents = std::move(exponents);
  for (const auto& [m, c] : nf.terms()) t.entries.emplace(stirling_index(m), c);
  return t;
}

StirlingTable coloured_stirling_first(const std::vector<unsigned>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("need at least one exponent");
  const auto sys = ModeSystem::coupled(exponents.size());
  Word w;
  for (std::uint32_t mode = 0; mode < exponents.size(); ++mode) w *= number_word(sys, mode, exponents[mode]);
  return table_from_normal_form(normal_order_rewrite(w, sys), StirlingKind::first, exponents);
}

StirlingTable coloured_stirling_second(std::size_t modes, unsigned m) {
  const auto sys = ModeSystem::coupled(modes);
  Word block;
  for (std::uint32_t mode = 0; mode < modes; ++mode) block *= number_word(sys, mode, 1);
  Word w;
  for (unsigned i = 0; i < m; ++i) w *= block;
  return table_from_normal_form(normal_order_rewrite(w, sys), StirlingKind::second, {m});
}

Integer coloured_bell(const StirlingTable& table) {
  Integer s = 0;
  for (const auto& [idx, v] : table.entries) s += v;
  return s;
}

Integer coloured_bell_first(const std::vector<unsigned>& exponents) {
  return coloured_bell(coloured_stirling_first(exponents));
}

Integer coloured_bell_second(std::size_t modes, unsigned m) {
  return coloured_bell(coloured_stirling_second(modes, m));
}

bool RecursionReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const RecursionCheck& c) { return c.passed(); });
}

namespace {

using Recurrence = std::function<Integer(const StirlingTable&, long, long, long, long)>;

// Compares `next` against a recurrence applied to `prev` on every cell of
// the box [0, bound_i] x ... allowed by the vanishing constraints.
RecursionCheck compare_box(std::string name, std::vector<unsigned> params, std::string regime,
                           const StirlingTable& prev, const StirlingTable& next,
                           std::array<unsigned, 4> bounds, const Recurrence& rec) {
  RecursionCheck check{std::move(name), std::move(params), std::move(regime), 0, std::nullopt};
  for (long i = 0; i <= bounds[0]; ++i)
    for (long j = 0; j <= bounds[1]; ++j)
      for (long k = 0; k <= bounds[2]; ++k)
        for (long l = 0; l <= bounds[3]; ++l) {
          ++check.cells_checked;
          const Integer predicted = rec(prev, i, j, k, l);
          const Integer actual = next.at({i, j, k, l});
          if (predicted != actual) {
            check.counterexample = Counterexample{{i, j, k, l}, actual, predicted};
            return check;
          }
        }
  // Entries outside the box would contradict the vanishing constraints.
  for (const auto& [idx, v] : next.entries) {
    bool inside = true;
    for (std::size_t d = 0; d < 4; ++d) inside = inside && idx[d] <= bounds[d];
    if (!inside) {
      check.counterexample =
          Counterexample{{idx[0], idx[1], idx[2], idx[3]}, v, Integer(0)};
      return check;
    }
  }
  return check;
}

// Vanishing constraints, leading coefficient and balance i + j = k + l.
RecursionCheck structure_check(const StirlingTable& t, std::array<unsigned, 4> bounds,
                               std::vector<long> leading) {
  RecursionCheck check{t.kind_name() + "-structure", t.params(), "", 0, std::nullopt};
  for (const auto& [idx, v] : t.entries) {
    ++check.cells_checked;
    bool ok = idx[0] + idx[1] == idx[2] + idx[3];
    for (std::size_t d = 0; d < 4; ++d) ok = ok && idx[d] <= bounds[d];
    if (!ok) {
      check.counterexample = Counterexample{{idx[0], idx[1], idx[2], idx[3]}, v, Integer(0)};
      return check;
    }
  }
  if (t.at(leading) != 1) check.counterexample = Counterexample{leading, t.at(leading), Integer(1)};
  return check;
}

}  // namespace

RecursionReport check_stirling_recursions(const StirlingMaxima& maxima) {
  RecursionReport report;
  std::map<std::pair<unsigned, unsigned>, StirlingTable> first;
  for (unsigned a = 0; a <= maxima.max_a; ++a)
    for (unsigned b = 0; b <= maxima.max_b; ++b) {
      auto t = coloured_stirling_first({a, b});
      report.checks.push_back(structure_check(t, {a, b, b, a}, {long(a), long(b), long(b), long(a)}));
      first.emplace(std::pair{a, b}, std::move(t));
    }

  const Recurrence na_step = [](const StirlingTable& s, long i, long j, long k, long l) {
    return s.at({i - 1, j, k, l - 1}) + Integer(j + 1) * s.at({i - 1, j + 1, k, l}) +
           Integer(i) * s.at({i, j, k, l});
  };
  const Recurrence nb_step = [](const StirlingTable& s, long i, long j, long k, long l) {
    return s.at({i, j - 1, k - 1, l}) + Integer(k) * s.at({i, j, k, l}) +
           Integer(l + 1) * s.at({i, j, k - 1, l + 1});
  };
  for (unsigned a = 0; a <= maxima.max_a; ++a)
    for (unsigned b = 0; b <= maxima.max_b; ++b) {
      if (a + 1 <= maxima.max_a)
        report.checks.push_back(compare_box("na-step", {a, b}, "", first.at({a, b}),
                                            first.at({a + 1, b}), {a + 1, b, b, a + 1}, na_step));
      if (b + 1 <= maxima.max_b)
        report.checks.push_back(compare_box("nb-step", {a, b}, "", first.at({a, b}),
                                            first.at({a, b + 1}), {a, b + 1, b + 1, a}, nb_step));
    }

  const Recurrence second_step = [](const StirlingTable& s, long i, long j, long k, long l) {
    return s.at({i - 1, j - 1, k - 1, l - 1}) + Integer(j + 1) * s.at({i - 1, j, k - 1, l}) +
           Integer(j) * s.at({i - 1, j, k, l - 1}) +
           Integer((j + 1) * (j + 1)) * s.at({i - 1, j + 1, k, l}) +
           Integer(i) * s.at({i, j - 1, k - 1, l}) + Integer(i) * s.at({i, j - 1, k, l - 1}) +
           Integer(i * (2 * j + 1)) * s.at({i, j, k, l}) +
           Integer(i * (i + 1)) * s.at({i + 1, j - 1, k, l});
  };
  std::vector<StirlingTable> second;
  for (unsigned m = 0; m <= maxima.max_m; ++m) {
    second.push_back(coloured_stirling_second(2, m));
    report.checks.push_back(structure_check(second.back(), {m, m, m, m}, {long(m), long(m), long(m), long(m)}));
  }
  for (unsigned m = 0; m + 1 <= maxima.max_m; ++m)
    report.checks.push_back(compare_box("second-step", {m}, "", second[m], second[m + 1],
                                        {m + 1, m + 1, m + 1, m + 1}, second_step));
  return report;
}

Integer CnrTable::at(long i, long j, long k) const {
  if (i < 0 || j < 0 || k < 0) return 0;
  auto it = entries.find({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                          static_cast<std::uint32_t>(k)});
  return it == entries.end() ? Integer(0) : it->second;
}

CnrTable cnr_table(unsigned r, unsigned n) {
  const auto sys = ModeSystem::coupled(2);
  Word block;
  for (unsigned i = 0; i < r; ++i) block.push_back(Generator::annihilator(1));
  block.push_back(Generator::creator(0));
  block.push_back(Generator::annihilator(0));
  Word w;
  for (unsigned i = 0; i < n; ++i) w *= block;

  CnrTable t{r, n, {}};
  const NormalForm nf = normal_order_rewrite(w, sys);
  for (const auto& [m, c] : nf.terms()) {
    if (m.creators[1] != 0) throw std::logic_error("b+ cannot occur in N[(b^r a+ a)^n]");
    t.entries.emplace(std::array<std::uint32_t, 3>{m.creators[0], m.annihilators[1], m.annihilators[0]}, c);
  }
  return t;
}

RecursionCheck check_cnr_recursion(unsigned r, unsigned n, CnrRecursionForm form) {
  const CnrTable prev = cnr_table(r, n);
  const CnrTable next = cnr_table(r, n + 1);
  RecursionCheck check{form == CnrRecursionForm::printed ? "cnr-printed" : "cnr-resolved",
                       {r, n}, "", 0, std::nullopt};
  const long R = r;
  const long I = n + 1, J = static_cast<long>(r) * (n + 1), K = n + 1;
  for (long i = 0; i <= I; ++i)
    for (long j = 0; j <= J; ++j)
      for (long k = 0; k <= K; ++k) {
        ++check.cells_checked;
        const long middle = form == CnrRecursionForm::printed ? j + R : j + 1;
        const Integer predicted = prev.at(i - 1, j - R, k - 1) +
                                  Integer(middle) * prev.at(i, j - R + 1, k - 1) +
                                  Integer(k) * prev.at(i, j - R, k);
        const Integer actual = next.at(i, j, k);
        if (predicted != actual) {
          check.counterexample = Counterexample{{i, j, k}, actual, predicted};
          return check;
        }
      }
  return check;
}

RecursionCheck check_cnr_expansion(unsigned r, unsigned n) {
  const CnrTable prev = cnr_table(r, n);
  const CnrTable next = cnr_table(r, n + 1);
  std::map<std::array<std::uint32_t, 3>, Integer> pushed;
  auto add = [&](long i, long j, long k, const Integer& c) {
    if (c == 0) return;
    if (i < 0 || j < 0 || k < 0) throw std::logic_error("expansion produced a negative exponent");
    pushed[{std::uint32_t(i), std::uint32_t(j), std::uint32_t(k)}] += c;
  };
  for (const auto& [idx, c] : prev.entries) {
    const long i = idx[0], j = idx[1], k = idx[2];
    add(i + 1, j + r, k + 1, c);
    add(i, j + r - 1, k + 1, Integer(j + r) * c);
    add(i, j + r, k, Integer(k) * c);
  }
  std::erase_if(pushed, [](const auto& kv) { return kv.second == 0; });

  RecursionCheck check{"cnr-expansion", {r, n}, "", pushed.size(), std::nullopt};
  if (pushed == next.entries) return check;
  for (const auto& [idx, c] : pushed) {
    const Integer actual = next.at(idx[0], idx[1], idx[2]);
    if (actual != c) {
      check.counterexample = Counterexample{{idx[0], idx[1], idx[2]}, actual, c};
      return check;
    }
  }
  for (const auto& [idx, c] : next.entries)
    if (!pushed.contains(idx)) {
      check.counterexample = Counterexample{{idx[0], idx[1], idx[2]}, c, Integer(0)};
      return check;
    }
  return check;
}

}  // namespace normord
