#include <doctest.h>

#include <cmath>

#include "delcode/codebook.hpp"
#include "delcode/error.hpp"
#include "delcode/seqcore.hpp"
#include "delcode/vtcodes.hpp"

using namespace delcode;

namespace {

Word W(unsigned q, const char* s) { return Word::parse(q, s); }

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

TEST_CASE("derived parameters") {
  const CodeParams p = derive_params(2, 2, Rational(1, 10), 1000, Mode::burst);
  CHECK(p.ell == 795);
  CHECK(p.P == 796);
  CHECK(p.N == (1000 * 2 + 1) * 2);
  CHECK(p.sum_modulus() == 6);
  const CodeParams w = derive_params(3, 2, Rational(1, 4), 4, Mode::burst);
  CHECK(w.N == 28);
  CHECK(w.sketch_orders() == std::vector<unsigned>{2});
  CHECK(w.sketch_shape(2) == std::pair<unsigned, unsigned>{2, 0});
  const CodeParams l = derive_params(2, 3, Rational(1, 10), 12, Mode::localized, 5);
  CHECK(l.ell == 5);
  CHECK(l.P == 7);
  CHECK(l.N == (3 * 15 - 1) * 2);
  CHECK(l.sketch_shape(2) == std::pair<unsigned, unsigned>{3, 1});
  CHECK(l.sketch_shape(3) == std::pair<unsigned, unsigned>{3, 0});
  CHECK(*l.M == Rational(180));
  CHECK(single_params(3, 4).N == 15);
  CHECK_THROWS_AS(derive_params(3, 3, Rational(1, 10), 8, Mode::burst), ArgumentError);
  CHECK_THROWS_AS(derive_params(2, 2, Rational(1, 10), 8, Mode::localized), ArgumentError);
  CHECK_THROWS_AS(derive_params(3, 2, Rational(1, 4), 8, Mode::binary_le3_lite), ArgumentError);
  CHECK(parse_mode("localized") == Mode::localized);
  CHECK_THROWS_AS(parse_mode("nope"), ArgumentError);
}

TEST_CASE("worked example: 0200 through a length-2 burst") {
  CodeParams p = derive_params(3, 2, Rational(1, 4), 4, Mode::burst);
  const Word x = W(3, "0200");
  p.residues = Residues{8, 1, {}};
  REQUIRE(mod(vt(psi(x)), p.N) == 8);
  REQUIRE(mod(l1sum(psi(x)), p.sum_modulus()) == 3);
  auto sk = build_domain_sketch(p);
  p.residues->a[2] = *sk->value(2, x);
  REQUIRE(member(x, p, *sk));
  const auto [out, tr] = decode(W(3, "00"), p, *sk);
  CHECK(out == x);
  CHECK(tr.t_prime == 2);
  CHECK(tr.delta == 8);
  CHECK(tr.delta_sum == 3);
  CHECK(tr.j == 2);
  CHECK(tr.sigma_j == 2);
}

TEST_CASE("single-deletion code decodes every deletion") {
  for (unsigned q = 2; q <= 4; ++q) {
    for (std::size_t n = 2; n <= (q == 2 ? 10u : q == 3 ? 7u : 6u); ++n) {
      CodeParams p = single_params(q, n);
      const std::uint64_t total = ipow(q, static_cast<unsigned>(n));
      for (std::uint64_t i = 0; i < total; ++i) {
        const Word x = Word::from_index(q, n, i);
        p.residues = Residues{mod(vt(psi(x)), p.N), 0, {}};
        REQUIRE(member_single(x, p));
        for (std::size_t k = 1; k <= n; ++k) {
          DecodeTrace tr;
          REQUIRE(decode_single(apply_burst_deletion(x, k, 1), p, &tr) == x);
        }
      }
    }
  }
  CodeParams p = single_params(2, 4);
  p.residues = Residues{0, 0, {}};
  CHECK_THROWS_AS(decode_single(W(2, "01"), p), ArgumentError);
}

TEST_CASE("burst codes: exhaustive decoding and trace congruences") {
  struct Case {
    unsigned q, t;
    std::size_t n;
    Rational eps;
  };
  for (Case c : {Case{2, 2, 8, Rational(1, 10)}, Case{2, 3, 8, Rational(1, 10)}, Case{3, 2, 6, Rational(1, 4)}}) {
    const Codebook cb = best_residue_codebook(derive_params(c.q, c.t, c.eps, c.n, Mode::burst));
    REQUIRE(!cb.words.empty());
    const CodeParams& p = cb.params;
    for (std::size_t k = 0; k < cb.words.size(); ++k) {
      const Word x = cb.word(k);
      REQUIRE(member(x, p, *cb.sketch));
      for (unsigned len = 1; len <= c.t; ++len) {
        for (std::size_t i = 1; i + len - 1 <= c.n; ++i) {
          const Word y = apply_burst_deletion(x, i, len);
          const auto [out, tr] = decode(y, p, *cb.sketch);
          REQUIRE(out == x);
          REQUIRE(tr.t_prime == len);
          if (len == 1) continue;
          const Word py = psi(y);
          REQUIRE(tr.delta == mod(p.residues->b - vt(py), p.N));
          REQUIRE(tr.delta_sum == mod(p.residues->c * c.q - l1sum(py), p.sum_modulus()));
          REQUIRE(tr.span_lo <= i);
          REQUIRE(i + len - 1 <= tr.span_hi);
        }
      }
    }
    const DisjointnessReport rep = verify_disjoint(cb);
    CHECK(rep.disjoint());
  }
}

TEST_CASE("localized codes: every residue class at n = 9") {
  const CodeParams base = derive_params(2, 3, Rational(1, 10), 9, Mode::localized);
  const ResidueSurvey survey = survey_residues(base);
  REQUIRE(survey.outer_words == 512);
  std::uint64_t decoded = 0;
  for (const auto& tally : survey.tallies) {
    CodeParams p = base;
    p.residues = tally.residues;
    const Codebook cb = make_codebook(p);
    REQUIRE(cb.words.size() == tally.size);
    for (std::size_t k = 0; k < cb.words.size(); ++k) {
      const Word x = cb.word(k);
      for (const Word& y : localized_ball(x, 3)) {
        const auto [out, tr] = decode(y, cb.params, *cb.sketch);
        REQUIRE(out == x);
        if (tr.t_prime >= 2) REQUIRE(tr.span_hi - tr.span_lo + 1 >= 3);
        ++decoded;
      }
    }
  }
  CHECK(decoded > 0);
}

TEST_CASE("a window below M' can mislocalize") {
  // ell = 7 is far below M' = 180 for (2, 3, 4/25): the scan settles on
  // j = 10 while the deletions sit at positions 3 and 4.
  CodeParams p = derive_params(2, 3, Rational(4, 25), 11, Mode::localized, 7);
  REQUIRE(!p.ell_exceeds_M);
  const Word x = W(2, "10011001100");
  p.residues = Residues{31, 3, {}};
  auto sk = build_domain_sketch(p);
  for (unsigned tp : p.sketch_orders()) p.residues->a[tp] = *sk->value(tp, x);
  REQUIRE(member(x, p, *sk));
  CHECK_THROWS_AS(decode(W(2, "101001100"), p, *sk), DecodeError);
}

TEST_CASE("binary t <= 3 lite variant keeps balls disjoint") {
  const Codebook cb = best_residue_codebook(derive_params(2, 3, Rational(1, 10), 9, Mode::binary_le3_lite));
  REQUIRE(!cb.words.empty());
  CHECK(cb.params.sketch_orders() == std::vector<unsigned>{3});
  CHECK(verify_disjoint(cb).disjoint());
  for (std::size_t k = 0; k < cb.words.size(); ++k) {
    const Word x = cb.word(k);
    for (const Word& y : burst_ball(x, 3)) REQUIRE(decode(y, cb.params, *cb.sketch).first == x);
  }
}

TEST_CASE("residue survey partitions the outer words") {
  const CodeParams base = derive_params(2, 2, Rational(1, 10), 8, Mode::burst);
  const ResidueSurvey s = survey_residues(base);
  CHECK(s.total == 256);
  std::uint64_t sum = 0;
  for (const auto& t : s.tallies) sum += t.size;
  CHECK(sum == s.outer_words);
  CHECK(s.outer_words == 256);  // ell > n
  // tally sizes equal enumerated codebooks
  for (std::size_t k = 0; k < s.tallies.size(); k += 7) {
    CodeParams p = base;
    p.residues = s.tallies[k].residues;
    CHECK(make_codebook(p).words.size() == s.tallies[k].size);
  }
}

TEST_CASE("membership rejects words outside the residue class") {
  CodeParams p = derive_params(3, 2, Rational(1, 4), 4, Mode::burst);
  p.residues = Residues{8, 1, {{2, 0}}};
  auto sk = build_domain_sketch(p);
  CHECK(!member_outer(W(3, "0000"), p));
  CHECK(member_outer(W(3, "0200"), p));
  CHECK(!member(W(3, "1111"), p, *sk));
}
