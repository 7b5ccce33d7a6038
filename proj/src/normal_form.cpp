#include "normord/normal_form.hpp"

#include <numeric>
#include <stdexcept>

namespace normord {

std::uint64_t Monomial::creator_total() const noexcept {
  return std::accumulate(creators.begin(), creators.end(), std::uint64_t{0});
}

std::uint64_t Monomial::annihilator_total() const noexcept {
  return std::accumulate(annihilators.begin(), annihilators.end(), std::uint64_t{0});
}

bool PrintOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const auto dl = lhs.degree();
  const auto dr = rhs.degree();
  if (dl != dr) return dl > dr;
  if (lhs.creators != rhs.creators) return lhs.creators > rhs.creators;
  return lhs.annihilators > rhs.annihilators;
}

Word monomial_word(const Monomial& m) {
  Word w;
  for (std::uint32_t mode = 0; mode < m.creators.size(); ++mode)
    for (std::uint32_t e = 0; e < m.creators[mode]; ++e) w.push_back(Generator::creator(mode));
  for (std::uint32_t mode = static_cast<std::uint32_t>(m.annihilators.size()); mode-- > 0;)
    for (std::uint32_t e = 0; e < m.annihilators[mode]; ++e)
      w.push_back(Generator::annihilator(mode));
  return w;
}

Monomial double_dot(const Word& word, std::size_t n) {
  if (word.mode_span() > n) throw std::invalid_argument("word uses a mode outside the system");
  Monomial m = Monomial::identity(n);
  for (const auto& g : word.letters()) ++(g.dagger ? m.creators : m.annihilators)[g.mode];
  return m;
}

NormalForm NormalForm::one(std::size_t n) {
  NormalForm nf(n);
  nf.add(Monomial::identity(n), 1);
  return nf;
}

Integer NormalForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void NormalForm::add(const Monomial& m, const Integer& coeff) {
  if (m.creators.size() != n_ || m.annihilators.size() != n_)
    throw std::invalid_argument("monomial arity does not match normal form");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

NormalForm& NormalForm::operator+=(const NormalForm& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, -c);
  return *this;
}

NormalForm& NormalForm::operator*=(const Integer& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scale;
  return *this;
}

Integer NormalForm::coefficient_sum() const {
  Integer s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::string format_normal_form(const NormalForm& nf) {
  if (nf.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : nf.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string body = format_word(monomial_word(m), nf.modes());
    if (body.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + " ";
      out += body;
    }
  }
  return out;
}

NormalForm sunglasses_nf(const NormalForm& nf) {
  NormalForm out(1);
  for (const auto& [m, c] : nf.terms()) {
    Monomial collapsed{{static_cast<std::uint32_t>(m.creator_total())},
                       {static_cast<std::uint32_t>(m.annihilator_total())}};
    out.add(collapsed, c);
  }
  return out;
}

}  // namespace normord
