#include <doctest.h>

#include <sstream>

#include "delcode/error.hpp"
#include "delcode/io.hpp"

using namespace delcode;

TEST_CASE("word files") {
  std::istringstream in("0120\n\n2\n");
  const auto words = read_words(in, 3);
  REQUIRE(words.size() == 3);
  CHECK(words[0] == Word::parse(3, "0120"));
  CHECK(words[1].empty());
  CHECK(words[2] == Word::parse(3, "2"));
  std::ostringstream out;
  write_words(out, words);
  CHECK(out.str() == "0120\n\n2\n");
  std::istringstream bad("013\n");
  CHECK_THROWS_AS(read_words(bad, 3), ArgumentError);
  std::istringstream wide("10,0,255\n");
  const auto big = read_words(wide, 256);
  REQUIRE(big.size() == 1);
  CHECK(big[0].size() == 3);
  CHECK(big[0][2] == 255);
}

TEST_CASE("code params round-trip") {
  CodeParams p = derive_params(3, 2, Rational(1, 4), 6, Mode::burst);
  p.residues = Residues{5, 2, {{2, 7}}};
  const json j = to_json(p);
  CHECK(j.at("mode") == "burst");
  CHECK(j.at("eps") == "1/4");
  const CodeParams back = code_params_from_json(j);
  CHECK(back.mode == p.mode);
  CHECK(back.q == p.q);
  CHECK(back.n == p.n);
  CHECK(back.t == p.t);
  CHECK(back.eps == p.eps);
  CHECK(back.ell == p.ell);
  CHECK(back.P == p.P);
  CHECK(back.N == p.N);
  REQUIRE(back.residues);
  CHECK(back.residues->b == 5);
  CHECK(back.residues->c == 2);
  CHECK(back.residues->a.at(2) == 7);

  const CodeParams d = code_params_from_json(json::parse(R"({"mode":"localized","q":2,"n":10,"t":3,"eps":"1/10"})"));
  CHECK(d.ell == default_ell(2, Rational(1, 10), 10));
  CHECK(d.N == (3 * 13 - 1) * 2);
  CHECK(!d.residues);
  CHECK_THROWS(code_params_from_json(json::parse(R"({"mode":"burst","q":2,"n":10,"t":2,"eps":"1/10","N":3})")));
}

TEST_CASE("encoder params round-trip") {
  const EncoderParams p = select_params(2, 1000, Rational(9, 20));
  const json j = to_json(p);
  const EncoderParams back = encoder_params_from_json(j);
  CHECK(back.ell == p.ell);
  CHECK(back.m == p.m);
  CHECK(back.s == p.s);
  CHECK(back.eta1 == p.eta1);
  CHECK(back.eta2 == p.eta2);
  const EncoderParams sel = encoder_params_from_json(json::parse(R"({"q":2,"n":1000,"eps":"9/20"})"));
  CHECK(sel.ell == p.ell);
}

TEST_CASE("certificate and trace reports") {
  const json c = to_json(classify(2, 3, Rational(1, 10)));
  CHECK(c.at("is_good") == true);
  CHECK(c.at("M") == "30");
  CHECK(c.at("M_loc") == "180");
  DecodeTrace tr;
  tr.t_prime = 2;
  tr.delta = 8;
  tr.j = 2;
  const json t = to_json(tr);
  CHECK(t.at("t_prime") == 2);
  CHECK(t.at("delta") == 8);
  CHECK(t.at("j") == 2);
}
