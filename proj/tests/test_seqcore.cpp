#include <doctest.h>

#include <algorithm>
#include <set>

#include "delcode/error.hpp"
#include "delcode/seqcore.hpp"

using namespace delcode;

namespace {

Word W(unsigned q, const char* s) { return Word::parse(q, s); }

// Definition-level psi: (x_{i-1} - x_i) mod q with zero padding on both ends.
Word psi_oracle(const Word& x) {
  const int q = static_cast<int>(x.q());
  const int n = static_cast<int>(x.size());
  std::vector<Symbol> y;
  for (int i = 1; i <= n + 1; ++i) {
    int prev = i - 1 >= 1 ? x.at(i - 1) : 0;
    int cur = i <= n ? x.at(i) : 0;
    y.push_back(static_cast<Symbol>(((prev - cur) % q + q) % q));
  }
  return Word(x.q(), y);
}

std::vector<Word> all_words(unsigned q, std::size_t n) {
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < ipow(q, static_cast<unsigned>(n)); ++i) out.push_back(Word::from_index(q, n, i));
  return out;
}

// Localized patterns straight from the definition: k runs, lengths t_s >= 1,
// starts with gaps, window and total constraints.
void brute_patterns(std::size_t n, std::size_t t, LocalizedPattern& cur, std::size_t next_min,
                    std::vector<LocalizedPattern>& out) {
  if (!cur.runs.empty()) {
    const std::size_t tot = cur.total();
    if (tot >= 2 && tot <= t) {
      const auto& first = cur.runs.front();
      const auto& last = cur.runs.back();
      if (last.first - first.first <= t - last.second && last.first + last.second - 1 <= n) out.push_back(cur);
    }
    if (tot >= t) return;
  }
  for (std::size_t i = next_min; i <= n; ++i) {
    if (!cur.runs.empty() && i - cur.runs.front().first >= t) break;
    for (std::size_t len = 1; len <= t && i + len - 1 <= n; ++len) {
      cur.runs.emplace_back(i, len);
      brute_patterns(n, t, cur, i + len + 1, out);
      cur.runs.pop_back();
    }
  }
}

}  // namespace

TEST_CASE("word construction and text format") {
  CHECK(W(3, "0200").size() == 4);
  CHECK(Word(2).empty());
  CHECK_THROWS_AS(Word(3, {0, 3}), ArgumentError);
  CHECK_THROWS_AS(Word(1), ArgumentError);
  CHECK_THROWS_AS(Word(257), ArgumentError);
  CHECK(W(3, "0200").str() == "0200");
  Word big = Word::parse(16, "15,0,7");
  CHECK(big.at(1) == 15);
  CHECK(big.str() == "15,0,7");
  CHECK_THROWS_AS(Word::parse(16, "16"), ArgumentError);
  CHECK_THROWS_AS(Word::parse(3, "013"), ArgumentError);
  CHECK(Word::parse(256, "255,0").at(1) == 255);
  CHECK(Word::from_index(3, 4, W(3, "0200").index()) == W(3, "0200"));
  CHECK(W(3, "0200").sub(2, 3) == W(3, "20"));
  CHECK(W(3, "0200").sub(3, 2).empty());
}

TEST_CASE("psi examples") {
  CHECK(psi(W(3, "0200")) == W(3, "01200"));
  CHECK(psi(W(2, "101")) == W(2, "1111"));
  CHECK(psi(Word::zeros(5, 6)) == Word::zeros(5, 7));
  CHECK(psi(Word(4)) == W(4, "0"));
  CHECK(psi(W(3, "0110")) == W(3, "02010"));
}

TEST_CASE("psi inverse examples") {
  CHECK(psi_inverse(W(3, "01200")) == W(3, "0200"));
  CHECK(psi_inverse(W(2, "00")) == W(2, "0"));
  CHECK_THROWS_AS(psi_inverse(W(3, "010")), ArgumentError);
  CHECK_THROWS_AS(psi_inverse(Word(3)), ArgumentError);
}

TEST_CASE("dvt examples and the C_DVT negative control") {
  const Word x = W(3, "0200"), z = W(3, "0110");
  CHECK(dvt(x) == W(3, "1200"));
  CHECK(dvt(z) == W(3, "2010"));
  CHECK(vt(dvt(x)) == 5);
  CHECK(vt(dvt(z)) == 5);
  std::set<Word> bx = burst_ball(x, 2), bz = burst_ball(z, 2);
  std::vector<Word> common;
  std::set_intersection(bx.begin(), bx.end(), bz.begin(), bz.end(), std::back_inserter(common));
  CHECK(!common.empty());
  CHECK(std::find(common.begin(), common.end(), W(3, "00")) != common.end());
}

TEST_CASE("vt and l1sum") {
  CHECK(vt(W(3, "01200")) == 8);
  CHECK(vt(W(3, "2010")) == 5);
  CHECK(vt(Word::zeros(3, 9)) == 0);
  CHECK(l1sum(W(3, "01200")) == 3);
  CHECK(l1sum(Word(2)) == 0);
  CHECK(l1sum(W(2, "1111")) == 4);
  CHECK(l1sum(W(3, "01200"), 2, 3) == 3);
}

TEST_CASE("psi matches the definition and is a bijection onto Sum = 0 mod q") {
  for (unsigned q : {2u, 3u, 4u}) {
    for (std::size_t n = 0; n <= 7; ++n) {
      std::set<Word> image;
      for (const Word& x : all_words(q, n)) {
        const Word y = psi(x);
        REQUIRE(y == psi_oracle(x));
        REQUIRE(l1sum(y) % q == 0);
        REQUIRE(psi_inverse(y) == x);
        image.insert(y);
      }
      std::size_t zero_sum = 0;
      for (const Word& y : all_words(q, n + 1)) zero_sum += l1sum(y) % q == 0;
      CHECK(image.size() == zero_sum);
    }
  }
}

TEST_CASE("merge property: a deletion in x merges two adjacent symbols of psi(x)") {
  for (unsigned q : {2u, 3u, 4u}) {
    for (std::size_t n = 1; n <= (q == 4 ? 6u : 8u); ++n) {
      for (const Word& x : all_words(q, n)) {
        const Word y = psi(x);
        for (std::size_t i = 1; i <= n; ++i) {
          std::vector<Symbol> merged(y.vec().begin(), y.vec().begin() + static_cast<long>(i - 1));
          merged.push_back(static_cast<Symbol>((y.at(i) + y.at(i + 1)) % q));
          merged.insert(merged.end(), y.vec().begin() + static_cast<long>(i + 1), y.vec().end());
          REQUIRE(psi(apply_burst_deletion(x, i, 1)) == Word(q, merged));
        }
      }
    }
  }
}

TEST_CASE("burst deletion and balls") {
  CHECK(apply_burst_deletion(W(3, "0200"), 2, 2) == W(3, "00"));
  CHECK(apply_burst_deletion(W(3, "0200"), 2, 0) == W(3, "0200"));
  CHECK(apply_burst_deletion(W(3, "0200"), 1, 1) == W(3, "200"));
  CHECK_THROWS_AS(apply_burst_deletion(W(3, "0200"), 4, 2), ArgumentError);
  CHECK_THROWS_AS(apply_burst_deletion(W(3, "0200"), 0, 1), ArgumentError);

  CHECK(burst_ball(W(2, "00"), 1) == std::set<Word>{W(2, "0")});
  CHECK(burst_ball(W(2, "01"), 2) == std::set<Word>{W(2, "0"), W(2, "1"), Word(2)});
  for (const Word& x : all_words(3, 6)) {
    std::size_t bound = 0;
    for (std::size_t len = 1; len <= 3; ++len) bound += 6 - len + 1;
    REQUIRE(burst_ball(x, 3).size() <= bound);
  }
}

TEST_CASE("localized deletion examples") {
  const Word x(7, {0, 1, 2, 3, 4, 5});  // a..f
  LocalizedPattern p{{{2, 1}, {5, 1}}, 4};
  CHECK(apply_localized(x, p) == Word(7, {0, 2, 3, 5}));
  CHECK(apply_localized(W(2, "110011"), LocalizedPattern{{{1, 2}, {4, 1}}, 4}) == W(2, "011"));
  for (std::size_t i = 1; i + 1 <= 6; ++i) {
    CHECK(apply_localized(x, LocalizedPattern{{{i, 2}}, 3}) == apply_burst_deletion(x, i, 2));
  }
  // window constraint: runs at 1 and 5 with t = 4 span 5 positions
  CHECK(!LocalizedPattern{{{1, 1}, {5, 1}}, 4}.valid(6));
  // adjacent runs are not a valid decomposition
  CHECK(!LocalizedPattern{{{1, 1}, {2, 1}}, 4}.valid(6));
  CHECK(!LocalizedPattern{{{1, 1}}, 4}.valid(6));
  CHECK_THROWS_AS(apply_localized(x, LocalizedPattern{{{1, 1}, {5, 1}}, 4}), ArgumentError);
}

TEST_CASE("localized pattern enumeration equals the definition") {
  for (std::size_t t = 2; t <= 5; ++t) {
    for (std::size_t n = 1; n <= 10; ++n) {
      std::vector<LocalizedPattern> brute;
      LocalizedPattern cur;
      cur.t = t;
      brute_patterns(n, t, cur, 1, brute);
      auto fast = localized_patterns(n, t);
      auto key = [](const LocalizedPattern& p) { return p.positions(); };
      std::set<std::vector<std::size_t>> a, b;
      for (const auto& p : brute) a.insert(key(p));
      for (const auto& p : fast) {
        REQUIRE(p.valid(n));
        b.insert(key(p));
      }
      CHECK(fast.size() == brute.size());
      CHECK(a == b);
    }
  }
}

TEST_CASE("localized balls") {
  for (const Word& x : all_words(2, 7)) {
    auto loc = localized_ball(x, 3);
    auto bst = burst_ball(x, 3);
    REQUIRE(std::includes(loc.begin(), loc.end(), bst.begin(), bst.end()));
    for (const Word& w : loc) REQUIRE((w.size() >= 4 && w.size() <= 6));
  }
  // x = 0101, t = 3, from the definition by brute force
  const Word x = W(2, "0101");
  std::set<Word> expect;
  for (std::size_t i = 1; i <= 4; ++i) expect.insert(apply_burst_deletion(x, i, 1));
  std::vector<LocalizedPattern> brute;
  LocalizedPattern cur;
  cur.t = 3;
  brute_patterns(4, 3, cur, 1, brute);
  for (const auto& p : brute) expect.insert(delete_positions(x, p.positions()));
  CHECK(localized_ball(x, 3) == expect);
  CHECK(expect == std::set<Word>{W(2, "101"), W(2, "001"), W(2, "011"), W(2, "010"), W(2, "01"), W(2, "11"),
                                 W(2, "00"), W(2, "0"), W(2, "1")});
}
