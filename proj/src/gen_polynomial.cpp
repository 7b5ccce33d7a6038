#include "normord/gen_polynomial.hpp"

#include <stdexcept>

namespace normord {

GenPolynomial GenPolynomial::constant(const Integer& c) {
  GenPolynomial p;
  p.add({0, 0, 0}, c);
  return p;
}

GenPolynomial GenPolynomial::variable(Var x) {
  GenPolynomial p;
  Exponents e{0, 0, 0};
  e[x] = 1;
  p.add(e, 1);
  return p;
}

Integer GenPolynomial::coefficient(std::uint32_t du, std::uint32_t dv, std::uint32_t dw) const {
  auto it = coeffs_.find({du, dv, dw});
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void GenPolynomial::add(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

GenPolynomial GenPolynomial::derivative(Var x) const {
  GenPolynomial d;
  for (const auto& [e, c] : coeffs_) {
    if (e[x] == 0) continue;
    Exponents lowered = e;
    --lowered[x];
    d.add(lowered, c * e[x]);
  }
  return d;
}

GenPolynomial& GenPolynomial::operator+=(const GenPolynomial& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add(e, c);
  return *this;
}

GenPolynomial& GenPolynomial::operator-=(const GenPolynomial& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add(e, -c);
  return *this;
}

GenPolynomial operator*(const GenPolynomial& a, const GenPolynomial& b) {
  GenPolynomial out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_)
      out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

std::string format_polynomial(const GenPolynomial& p) {
  if (p.is_zero()) return "0";
  static constexpr const char* names[] = {"u", "v", "w"};
  std::string out;
  // Highest total degree first.
  std::multimap<std::uint32_t, std::pair<GenPolynomial::Exponents, Integer>, std::greater<>> ordered;
  for (const auto& [e, c] : p.coefficients()) ordered.emplace(e[0] + e[1] + e[2], std::pair{e, c});
  bool first = true;
  for (const auto& [deg, term] : ordered) {
    const auto& [e, c] = term;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t x = 0; x < 3; ++x) {
      if (e[x] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[x];
      if (e[x] > 1) mono += '^' + std::to_string(e[x]);
    }
    if (mono.empty())
      out += mag.str();
    else
      out += (mag == 1 ? "" : mag.str() + "*") + mono;
  }
  return out;
}

GenPolynomial gen_polynomial(const StirlingTable& table) {
  if (table.modes != 2) throw std::invalid_argument("generating polynomials need a two-mode table");
  GenPolynomial p;
  for (const auto& [idx, c] : table.entries) {
    if (idx[0] + idx[1] != idx[2] + idx[3])
      throw std::invalid_argument("table entry violates i + j = k + l");
    p.add({idx[0], idx[1], idx[2]}, c);
  }
  return p;
}

GenPolynomial apply_gen_recurrence(GenRecurrence which, const GenPolynomial& p) {
  using V = GenPolynomial;
  const V u = V::variable(V::u), v = V::variable(V::v), w = V::variable(V::w);
  const V one = V::constant(1);
  const V pu = p.derivative(V::u), pv = p.derivative(V::v);
  switch (which) {
    case GenRecurrence::na_step:
      return u * (p + pu + pv);
    case GenRecurrence::nb_step:
      return w * (v * p + u * pu + v * pv + (one - w) * p.derivative(V::w));
    case GenRecurrence::second_type: {
      const V d1 = pu + pv;
      const V d2 = d1.derivative(V::u) + d1.derivative(V::v);
      return u * (w * (v + one) * p + (v * w + v + one) * d1 + v * d2);
    }
  }
  throw std::logic_error("unknown recurrence");
}

namespace {

RecursionCheck compare_polynomials(std::string name, std::vector<unsigned> params, std::string regime,
                                   const GenPolynomial& predicted, const GenPolynomial& actual) {
  RecursionCheck check{std::move(name), std::move(params), std::move(regime), 0, std::nullopt};
  check.cells_checked = predicted.coefficients().size() + actual.coefficients().size();
  if (predicted == actual) return check;
  const GenPolynomial diff = predicted - actual;
  const auto& [e, c] = *diff.coefficients().begin();
  check.counterexample = Counterexample{{long(e[0]), long(e[1]), long(e[2])},
                                        actual.coefficient(e[0], e[1], e[2]),
                                        predicted.coefficient(e[0], e[1], e[2])};
  return check;
}

}  // namespace

RecursionReport check_gen_recurrences(unsigned max_ab, unsigned max_m) {
  RecursionReport report;
  std::map<std::pair<unsigned, unsigned>, GenPolynomial> first;
  for (unsigned a = 0; a <= max_ab + 1; ++a)
    for (unsigned b = 0; b <= max_ab + 1; ++b)
      if (a <= max_ab || b <= max_ab) first.emplace(std::pair{a, b}, gen_polynomial(coloured_stirling_first({a, b})));

  for (unsigned a = 0; a <= max_ab; ++a)
    for (unsigned b = 0; b <= max_ab; ++b) {
      const std::string regime = (a >= 1 && b >= 1) ? "interior" : "boundary";
      const auto& p = first.at({a, b});
      report.checks.push_back(compare_polynomials("T-na-step", {a, b}, regime,
                                                  apply_gen_recurrence(GenRecurrence::na_step, p),
                                                  first.at({a + 1, b})));
      report.checks.push_back(compare_polynomials("T-nb-step", {a, b}, regime,
                                                  apply_gen_recurrence(GenRecurrence::nb_step, p),
                                                  first.at({a, b + 1})));
    }
  GenPolynomial prev = gen_polynomial(coloured_stirling_second(2, 0));
  for (unsigned m = 0; m <= max_m; ++m) {
    GenPolynomial next = gen_polynomial(coloured_stirling_second(2, m + 1));
    report.checks.push_back(compare_polynomials("T-second-step", {m}, "",
                                                apply_gen_recurrence(GenRecurrence::second_type, prev), next));
    prev = std::move(next);
  }
  return report;
}

}  // namespace normord
