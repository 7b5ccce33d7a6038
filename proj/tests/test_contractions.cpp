#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normord/checks.hpp"
#include "normord/contractions.hpp"
#include "normord/rewrite.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <algorithm>

using namespace normord;
using normord::testing::w;

namespace {
const auto coupled = ModeSystem::coupled(2);
const auto noncoupled = ModeSystem::noncoupled(2);

Matching pairs(std::initializer_list<std::pair<std::size_t, std::size_t>> one_based) {
  Matching m;
  for (auto [p, q] : one_based) m.pairs.emplace_back(p - 1, q - 1);
  return m;
}
}  // namespace

TEST_CASE("contractions of the six-letter example") {
  const Word word = w("a^2 a+ b^2 b+", coupled);
  const auto cs = enumerate_contractions(word, coupled);
  REQUIRE(cs.matchings.size() == 13);
  CHECK(degree_histogram(cs) == std::map<std::size_t, std::size_t>{{0, 1}, {1, 6}, {2, 6}});

  const std::vector<Matching> listed{
      pairs({}),        pairs({{1, 3}}),         pairs({{1, 6}}),         pairs({{2, 3}}),
      pairs({{2, 6}}),  pairs({{4, 6}}),         pairs({{5, 6}}),         pairs({{1, 3}, {2, 6}}),
      pairs({{1, 3}, {4, 6}}), pairs({{1, 3}, {5, 6}}), pairs({{1, 6}, {2, 3}}), pairs({{2, 3}, {4, 6}}),
      pairs({{2, 3}, {5, 6}})};
  CHECK(cs.matchings == listed);

  std::vector<std::string> residuals;
  for (const auto& m : cs.matchings) residuals.push_back(format_word(residual_word(word, m), 2));
  const std::vector<std::string> want{"a^2 a+ b^2 b+", "a b^2 b+", "a a+ b^2", "a b^2 b+", "a a+ b^2",
                                      "a^2 a+ b",      "a^2 a+ b", "b^2",      "a b",      "a b",
                                      "b^2",           "a b",      "a b"};
  CHECK(residuals == want);
}

TEST_CASE("noncoupled contractions") {
  const auto cs = enumerate_contractions(w("a^2 a+ b^2 b+", noncoupled), noncoupled);
  CHECK(cs.matchings.size() == 9);
  CHECK(degree_histogram(cs) == std::map<std::size_t, std::size_t>{{0, 1}, {1, 4}, {2, 4}});
}

TEST_CASE("small contraction examples") {
  CHECK(enumerate_contractions(w("a+ b", coupled), coupled).matchings == std::vector<Matching>{Matching{}});
  CHECK(degree_histogram(enumerate_contractions(Word{}, coupled)) == std::map<std::size_t, std::size_t>{{0, 1}});
  const auto one = ModeSystem::coupled(1);
  CHECK(degree_histogram(enumerate_contractions(w("a+ a a+ a", one), one)) ==
        std::map<std::size_t, std::size_t>{{0, 1}, {1, 1}});
}

TEST_CASE("residual_word examples") {
  const Word word = w("a^2 a+ b^2 b+", coupled);
  CHECK(residual_word(word, pairs({{1, 3}})) == w("a b^2 b+", coupled));
  CHECK(residual_word(word, Matching{}) == word);
  CHECK(residual_word(word, pairs({{1, 3}, {2, 6}})) == w("b^2", coupled));
}

TEST_CASE("matching validity") {
  const Word word = w("a^2 a+ b^2 b+", coupled);
  CHECK(is_valid_matching(word, pairs({{1, 6}, {2, 3}}), coupled));
  CHECK_FALSE(is_valid_matching(word, pairs({{1, 6}, {2, 3}}), noncoupled));
  CHECK_FALSE(is_valid_matching(word, pairs({{3, 6}}), coupled));       // creator at p
  CHECK_FALSE(is_valid_matching(word, pairs({{1, 2}}), coupled));       // annihilator at q
  CHECK_FALSE(is_valid_matching(word, pairs({{1, 3}, {2, 3}}), coupled));  // shared vertex
  CHECK_FALSE(is_valid_matching(word, pairs({{1, 9}}), coupled));
}

TEST_CASE("normal_order_contraction examples") {
  CHECK(normal_order_contraction(w("a^2 a+ b^2 b+", coupled), coupled) ==
        normal_order_rewrite(w("a^2 a+ b^2 b+", coupled), coupled));
  const auto one = ModeSystem::coupled(1);
  CHECK(format_normal_form(normal_order_contraction(w("a a+", one), one)) == "a+ a + 1");
}

TEST_CASE("enumeration agrees with brute force and is downward closed") {
  for (const auto* sys : {&coupled, &noncoupled})
    for (unsigned len = 0; len <= 6; ++len) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < len; ++i) count *= 4;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Word word = word_from_index(idx, 2, len);
        const auto cs = enumerate_contractions(word, *sys);
        auto brute = testing::brute_matchings(word, *sys);
        auto got = cs.matchings;
        std::sort(brute.begin(), brute.end());
        std::sort(got.begin(), got.end());
        REQUIRE(got == brute);
        REQUIRE(std::adjacent_find(got.begin(), got.end()) == got.end());
        for (const auto& m : cs.matchings)
          for (std::size_t drop = 0; drop < m.pairs.size(); ++drop) {
            Matching sub = m;
            sub.pairs.erase(sub.pairs.begin() + static_cast<long>(drop));
            REQUIRE(std::binary_search(got.begin(), got.end(), sub));
          }
        // evaluation at 1: coefficient sum counts contractions
        REQUIRE(normal_order_contraction(word, *sys).coefficient_sum() == cs.matchings.size());
      }
    }
}

TEST_CASE("noncoupled matchings are the same-mode coupled matchings") {
  for (std::uint64_t idx = 0; idx < 4096; ++idx) {
    const Word word = word_from_index(idx, 2, 6);
    std::vector<Matching> filtered;
    for (const auto& m : enumerate_contractions(word, coupled).matchings)
      if (std::all_of(m.pairs.begin(), m.pairs.end(),
                      [&](const auto& pq) { return word[pq.first].mode == word[pq.second].mode; }))
        filtered.push_back(m);
    REQUIRE(filtered == enumerate_contractions(word, noncoupled).matchings);
  }
}

TEST_CASE("engine equivalence report") {
  const auto report = check_engine_equivalence(coupled, 4, 2);
  CHECK(report.words_checked == 1 + 4 + 16 + 64 + 256);
  CHECK(report.passed());
  CHECK_FALSE(report.first_mismatch.has_value());
}
