#include <doctest.h>

#include <random>
#include <set>

#include "delcode/balance.hpp"
#include "delcode/error.hpp"
#include "delcode/sblenc.hpp"
#include "delcode/seqcore.hpp"

using namespace delcode;

namespace {

Word random_word(std::mt19937_64& rng, unsigned q, std::size_t n) {
  std::vector<Symbol> s(n);
  for (auto& c : s) c = static_cast<Symbol>(rng() % q);
  return Word(q, s);
}

Word constant(unsigned q, std::size_t n, unsigned v) { return Word(q, std::vector<Symbol>(n, static_cast<Symbol>(v))); }

void check_codeword(const BalancedEncoder& enc, const Word& u) {
  const EncoderParams& p = enc.params();
  const Word x = enc.encode(u);
  REQUIRE(x.size() == p.n);
  const Word y = psi(x);
  REQUIRE(l1sum(y) % p.q == 0);
  REQUIRE(is_strong_locally_balanced(y, BalanceSpec{p.q, p.ell, p.eps}));
  REQUIRE(enc.decode(x) == u);
}

}  // namespace

TEST_CASE("stage 2 appends the weight-completing symbol") {
  const Word y = Word::parse(3, "2212");  // Sum = 7
  const Word z = encode_stage2(y);
  CHECK(z == Word::parse(3, "22122"));
  CHECK(l1sum(z) % 3 == 0);
  CHECK(encode_stage2(Word::parse(2, "11")) == Word::parse(2, "110"));
}

TEST_CASE("parameter selection invariants") {
  for (unsigned q = 2; q <= 4; ++q) {
    for (std::size_t n : {1000u, 10000u}) {
      const Rational eps(9 * static_cast<std::int64_t>(q - 1), 20);
      const EncoderParams p = select_params(q, n, eps);
      CHECK_NOTHROW(p.validate());
      CHECK(p.ell == p.s * p.m + 1);
      CHECK(p.m >= 2 * q * q - 1);
      CHECK(p.eta2 <= eps);
      CHECK(p.eta2 == p.eta1 - p.eta1 * p.eta1 / Rational(static_cast<std::int64_t>((q - 1) * p.s)) +
                          Rational(q - 1, 4 * p.s));
      CHECK(p.lo == (p1(q, p.eta1) * Rational(static_cast<std::int64_t>(p.m))).ceil());
      CHECK(p.hi == (p2(q, p.eta1) * Rational(static_cast<std::int64_t>(p.m))).floor());
      CHECK(p.k >= 1);
      const long double bound = (q - 1.0L) * (q - 1.0L) / (p.eta1.to_long_double() * p.eta1.to_long_double()) *
                                std::log(static_cast<long double>(n));
      CHECK(static_cast<long double>(p.m) >= bound);
      const BalancedEncoder enc(p);
      CHECK(enc.normal_capacity() >= enc.normal_demand());
      CHECK(enc.terminal_capacity() >= enc.terminal_demand());
    }
  }
  CHECK(select_params(2, 1000, Rational(9, 20)).ell == 89);
  CHECK_THROWS_AS(select_params(3, 20, Rational(9, 10)), ArgumentError);
  CHECK_THROWS_AS(select_params(2, 1000, Rational(1, 2)), ArgumentError);
  CHECK_THROWS_AS(make_encoder_params(2, 1000, Rational(9, 20), Rational(2, 5), 2, 10), ArgumentError);
}

TEST_CASE("exhaustive round trip at n = 20") {
  const BalancedEncoder enc(select_params(2, 20, Rational(9, 20)));
  std::set<Word> images;
  for (std::uint64_t i = 0; i < (1u << 18); ++i) {
    const Word u = Word::from_index(2, 18, i);
    const Word v = enc.encode_stage1(psi(u));
    REQUIRE(is_window_bounded(v, WindowSpec{2, enc.params().m, enc.params().lo, enc.params().hi}));
    REQUIRE(enc.decode_stage1(v) == psi(u));
    if (i % 8 == 0) check_codeword(enc, u);
  }
}

TEST_CASE("round trips on long inputs") {
  std::mt19937_64 rng(21);
  for (unsigned q = 2; q <= 4; ++q) {
    const std::size_t n = 1000;
    const BalancedEncoder enc(select_params(q, n, Rational(9 * static_cast<std::int64_t>(q - 1), 20)));
    for (unsigned v = 0; v < q; ++v) check_codeword(enc, constant(q, n - 2, v));
    std::vector<Symbol> alt(n - 2);
    for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = static_cast<Symbol>((i / 50) % 2 ? q - 1 : 0);
    check_codeword(enc, Word(q, alt));
    for (int rep = 0; rep < 50; ++rep) check_codeword(enc, random_word(rng, q, n - 2));
    // Skewed inputs force many normal records.
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<Symbol> s(n - 2);
      for (auto& c : s) c = static_cast<Symbol>(rng() % 16 == 0 ? rng() % q : 0);
      check_codeword(enc, Word(q, s));
    }
  }
}

TEST_CASE("decoder accepts only codewords") {
  std::mt19937_64 rng(4);
  const BalancedEncoder enc(select_params(2, 1000, Rational(9, 20)));
  // Most words are codewords of some input, so a flipped symbol is usually
  // another codeword; whatever decodes must re-encode to the same word.
  std::size_t rejected = 0, accepted = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const Word u = random_word(rng, 2, 998);
    const Word x = enc.encode(u);
    std::vector<Symbol> s = x.vec();
    const std::size_t i = rng() % s.size();
    s[i] = static_cast<Symbol>(1 - s[i]);
    try {
      const Word back = enc.decode(Word(2, s));
      REQUIRE(enc.encode(back) == Word(2, s));
      ++accepted;
    } catch (const DecodeError&) {
      ++rejected;
    }
  }
  CHECK(rejected + accepted == 200);
  CHECK_THROWS_AS(enc.decode(Word::zeros(2, 1000)), DecodeError);
  CHECK_THROWS_AS(enc.encode(Word::zeros(2, 10)), ArgumentError);
}
