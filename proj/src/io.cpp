#include "delcode/io.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "delcode/error.hpp"

namespace delcode {

std::vector<Word> read_words(std::istream& in, unsigned q) {
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) words.push_back(Word::parse(q, line));
  return words;
}

void write_words(std::ostream& out, const std::vector<Word>& words) {
  for (const Word& w : words) out << w.str() << '\n';
}

json to_json(const GoodTripleCert& c) {
  json j;
  j["q"] = c.q;
  j["t"] = c.t;
  j["eps"] = c.eps.str();
  j["is_good"] = c.is_good;
  if (!c.is_good) j["reason"] = c.reason;
  j["t1"] = c.t1;
  j["t2"] = c.t2;
  if (c.is_good) {
    json s = json::object();
    for (const auto& [tp, v] : c.s_table) s[std::to_string(tp)] = v;
    j["s_table"] = s;
  }
  if (c.M) {
    j["M"] = c.M->str();
    j["M_value"] = c.M->to_double();
  }
  if (c.M_loc) {
    j["M_loc"] = c.M_loc->str();
    j["M_loc_value"] = c.M_loc->to_double();
  }
  return j;
}

json to_json(const CodeParams& p) {
  json j;
  j["mode"] = to_string(p.mode);
  j["q"] = p.q;
  j["n"] = p.n;
  j["t"] = p.t;
  if (p.mode != Mode::single) {
    j["eps"] = p.eps.str();
    j["ell"] = p.ell;
    j["P"] = p.P;
  }
  j["N"] = p.N;
  if (p.M) j["M"] = p.M->str();
  if (p.mode != Mode::single) j["ell_exceeds_M"] = p.ell_exceeds_M;
  if (p.residues) {
    json r;
    r["b"] = p.residues->b;
    if (p.mode != Mode::single) r["c"] = p.residues->c;
    json a = json::object();
    for (const auto& [tp, v] : p.residues->a) a[std::to_string(tp)] = v;
    if (!a.empty()) r["a"] = a;
    j["residues"] = r;
  }
  return j;
}

json to_json(const DecodeTrace& t) {
  json j;
  j["t_prime"] = t.t_prime;
  j["delta"] = t.delta;
  j["delta_sum"] = t.delta_sum;
  j["j"] = t.j;
  j["sigma_j"] = t.sigma_j;
  j["window"] = {t.window_lo, t.window_hi};
  j["span"] = {t.span_lo, t.span_hi};
  j["candidates_considered"] = t.candidates_considered;
  return j;
}

json to_json(const EncoderParams& p) {
  json j;
  j["q"] = p.q;
  j["n"] = p.n;
  j["eps"] = p.eps.str();
  j["eta1"] = p.eta1.str();
  j["eta2"] = p.eta2.str();
  j["s"] = p.s;
  j["ell"] = p.ell;
  j["m"] = p.m;
  j["k"] = p.k;
  j["C"] = p.C;
  j["band"] = {p.lo, p.hi};
  return j;
}

namespace {

Rational rational_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw ArgumentError(std::string("field ") + key + " must be a string like \"p/r\"");
}

}  // namespace

CodeParams code_params_from_json(const json& j) {
  try {
    const Mode mode = parse_mode(j.value("mode", std::string("burst")));
    const unsigned q = j.at("q").get<unsigned>();
    const std::size_t n = j.at("n").get<std::size_t>();
    CodeParams p;
    if (mode == Mode::single) {
      p = single_params(q, n, j.contains("N") ? std::optional<std::int64_t>(j["N"].get<std::int64_t>()) : std::nullopt);
    } else {
      std::optional<std::size_t> ell;
      if (j.contains("ell")) ell = j["ell"].get<std::size_t>();
      p = derive_params(q, j.at("t").get<unsigned>(), rational_field(j, "eps"), n, mode, ell);
      if (j.contains("N")) p.N = j["N"].get<std::int64_t>();
    }
    if (j.contains("residues")) {
      const json& r = j["residues"];
      Residues res;
      res.b = r.value("b", std::int64_t{0});
      res.c = r.value("c", std::int64_t{0});
      if (r.contains("a")) {
        for (const auto& [k, v] : r["a"].items()) res.a[static_cast<unsigned>(std::stoul(k))] = v.get<std::uint32_t>();
      }
      p.residues = res;
    }
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad params JSON: ") + e.what());
  }
}

EncoderParams encoder_params_from_json(const json& j) {
  try {
    const unsigned q = j.at("q").get<unsigned>();
    const std::size_t n = j.at("n").get<std::size_t>();
    const Rational eps = rational_field(j, "eps");
    if (j.contains("eta1") || j.contains("s") || j.contains("m")) {
      return make_encoder_params(q, n, eps, rational_field(j, "eta1"), j.at("s").get<unsigned>(),
                                 j.at("m").get<std::size_t>());
    }
    return select_params(q, n, eps);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad encoder params JSON: ") + e.what());
  }
}

}  // namespace delcode
