#include "normord/representation.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace normord {

FunctionElement FunctionElement::basis(std::int64_t m, std::uint32_t k, const Rational& c) {
  FunctionElement f;
  f.add({m, k}, c);
  return f;
}

Rational FunctionElement::coefficient(std::int64_t m, std::uint32_t k) const {
  auto it = terms_.find({m, k});
  return it == terms_.end() ? Rational(0) : it->second;
}

void FunctionElement::add(const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FunctionElement& FunctionElement::operator+=(const FunctionElement& rhs) {
  for (const auto& [key, c] : rhs.terms_) add(key, c);
  return *this;
}

FunctionElement& FunctionElement::operator-=(const FunctionElement& rhs) {
  for (const auto& [key, c] : rhs.terms_) add(key, -c);
  return *this;
}

FunctionElement& FunctionElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

std::string sign_name(CreatorSign s) {
  return s == CreatorSign::literal ? "paper-literal" : "corrected";
}

FunctionElement apply_generator(const RepConfig& cfg, Generator g, const FunctionElement& f) {
  if (g.mode >= cfg.modes) throw std::invalid_argument("generator mode outside representation");
  FunctionElement out;
  if (g.dagger) {
    const Rational sigma = cfg.sign == CreatorSign::literal ? 1 : -1;
    for (const auto& [key, c] : f.terms()) out.add({key.first - 1, key.second}, sigma * c);
    return out;
  }
  // d/dx_i (e^{ms} s^k) = m e^{ms} s^k + k e^{ms} s^{k-1}; the prefactor e^s shifts m.
  for (const auto& [key, c] : f.terms()) {
    const auto [m, k] = key;
    out.add({m + 1, k}, c * m);
    if (k > 0) out.add({m + 1, k - 1}, c * k);
  }
  return out;
}

FunctionElement apply_word(const RepConfig& cfg, const Word& w, const FunctionElement& f) {
  FunctionElement out = f;
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = apply_generator(cfg, *it, out);
  return out;
}

bool RelationReport::passed() const noexcept {
  return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.pass; });
}

namespace {

std::string gen_label(Generator g, std::size_t n) {
  return mode_name(g.mode, n) + (g.dagger ? "+" : "");
}

}  // namespace

RelationReport verify_relations(const RepConfig& cfg, std::int64_t m_range, std::uint32_t k_range) {
  if (cfg.modes == 0) throw std::invalid_argument("representation needs at least one mode");
  RelationReport report{cfg, m_range, k_range, {}};
  const std::size_t n = cfg.modes;

  std::vector<Generator> gens;
  for (std::uint32_t i = 0; i < n; ++i) gens.push_back(Generator::annihilator(i));
  for (std::uint32_t i = 0; i < n; ++i) gens.push_back(Generator::creator(i));

  for (std::size_t x = 0; x < gens.size(); ++x)
    for (std::size_t y = x; y < gens.size(); ++y) {
      const Generator left = gens[x], right = gens[y];
      RelationResult r;
      r.left = left;
      r.right = right;
      r.pair = "[" + gen_label(left, n) + ", " + gen_label(right, n) + "]";
      r.expected = (!left.dagger && right.dagger) ? 1 : 0;

      std::optional<Rational> scalar;
      bool is_scalar = true;
      for (std::int64_t m = -m_range; m <= m_range && is_scalar; ++m)
        for (std::uint32_t k = 0; k <= k_range && is_scalar; ++k) {
          const auto phi = FunctionElement::basis(m, k);
          const auto comm = apply_word(cfg, Word{left, right}, phi) - apply_word(cfg, Word{right, left}, phi);
          // comm must be c * phi for a single c.
          const Rational c = comm.coefficient(m, k);
          if (comm != phi * c || (scalar && *scalar != c)) {
            is_scalar = false;
            break;
          }
          scalar = c;
        }
      r.observed = is_scalar && scalar ? to_string(*scalar) : "non-scalar";
      r.pass = is_scalar && scalar && *scalar == r.expected;
      report.relations.push_back(std::move(r));
    }
  return report;
}

bool number_commutators_vanish(const RepConfig& cfg, std::int64_t m_range, std::uint32_t k_range) {
  for (std::uint32_t i = 0; i < cfg.modes; ++i)
    for (std::uint32_t j = 0; j < cfg.modes; ++j) {
      const Word ni{Generator::creator(i), Generator::annihilator(i)};
      const Word nj{Generator::creator(j), Generator::annihilator(j)};
      for (std::int64_t m = -m_range; m <= m_range; ++m)
        for (std::uint32_t k = 0; k <= k_range; ++k) {
          const auto phi = FunctionElement::basis(m, k);
          if (!(apply_word(cfg, ni * nj, phi) - apply_word(cfg, nj * ni, phi)).is_zero()) return false;
        }
    }
  return true;
}

}  // namespace normord
