#include "normord/json_io.hpp"

#include <stdexcept>

namespace normord {

json to_json(const NormalForm& nf) {
  json terms = json::array();
  for (const auto& [m, c] : nf.terms())
    terms.push_back({{"coeff", c.str()}, {"creators", m.creators}, {"annihilators", m.annihilators}});
  return {{"modes", nf.modes()}, {"terms", std::move(terms)}};
}

NormalForm normal_form_from_json(const json& j) {
  try {
    const std::size_t n = j.at("modes").get<std::size_t>();
    if (n == 0) throw std::invalid_argument("modes must be positive");
    NormalForm nf(n);
    for (const auto& t : j.at("terms")) {
      Monomial m{t.at("creators").get<std::vector<std::uint32_t>>(),
                 t.at("annihilators").get<std::vector<std::uint32_t>>()};
      if (m.creators.size() != n || m.annihilators.size() != n)
        throw std::invalid_argument("exponent vector length differs from modes");
      nf.add(m, Integer(t.at("coeff").get<std::string>()));
    }
    return nf;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed normal form JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("malformed coefficient: ") + e.what());
  }
}

json to_json(const Matching& m) {
  json pairs = json::array();
  for (const auto& [p, q] : m.pairs) pairs.push_back({p + 1, q + 1});
  return {{"pairs", std::move(pairs)}};
}

Matching matching_from_json(const json& j) {
  try {
    Matching m;
    for (const auto& pq : j.at("pairs")) {
      const auto p = pq.at(0).get<std::size_t>();
      const auto q = pq.at(1).get<std::size_t>();
      if (p == 0 || q == 0) throw std::invalid_argument("positions are one-based");
      m.pairs.emplace_back(p - 1, q - 1);
    }
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed matching JSON: ") + e.what());
  }
}

json to_json(const StirlingTable& t) {
  json entries = json::array();
  for (const auto& [idx, v] : t.entries) entries.push_back({{"index", idx}, {"value", v.str()}});
  return {{"kind", t.kind_name()}, {"params", t.params()}, {"entries", std::move(entries)}};
}

json to_json(const CnrTable& t) {
  json entries = json::array();
  for (const auto& [idx, v] : t.entries) entries.push_back({{"index", idx}, {"value", v.str()}});
  return {{"kind", "cnr"}, {"params", {t.r, t.n}}, {"entries", std::move(entries)}};
}

std::string to_csv(const StirlingTable& t) {
  std::string out;
  if (t.modes == 2) {
    out = "i,j,k,l,value\n";
  } else {
    for (std::size_t m = 1; m <= t.modes; ++m) out += "i" + std::to_string(m) + ",";
    for (std::size_t m = t.modes; m >= 1; --m) out += "j" + std::to_string(m) + ",";
    out += "value\n";
  }
  for (const auto& [idx, v] : t.entries) {
    for (auto e : idx) out += std::to_string(e) + ",";
    out += v.str() + "\n";
  }
  return out;
}

std::string to_csv(const CnrTable& t) {
  std::string out = "i,j,k,value\n";
  for (const auto& [idx, v] : t.entries)
    out += std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) + "," + v.str() +
           "\n";
  return out;
}

json to_json(const RecursionCheck& c) {
  json j = {{"name", c.name}, {"params", c.params}, {"cells", c.cells_checked}, {"pass", c.passed()}};
  if (!c.regime.empty()) j["regime"] = c.regime;
  if (c.counterexample)
    j["counterexample"] = {{"index", c.counterexample->index},
                           {"table", c.counterexample->table_value.str()},
                           {"predicted", c.counterexample->predicted.str()}};
  return j;
}

json to_json(const RecursionReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"pass", r.passed()}, {"checks", std::move(checks)}};
}

json to_json(const RelationReport& r) {
  json rels = json::array();
  for (const auto& rel : r.relations)
    rels.push_back({{"pair", rel.pair}, {"expected", rel.expected}, {"observed", rel.observed}, {"pass", rel.pass}});
  return {{"config",
           {{"modes", r.config.modes}, {"sign", sign_name(r.config.sign)}, {"m_range", r.m_range},
            {"k_range", r.k_range}}},
          {"relations", std::move(rels)}};
}

}  // namespace normord
