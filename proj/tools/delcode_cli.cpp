// delcode: command-line front end for the burst / localized deletion codes and
// the balanced encoder. Reports are JSON ("schema": 1) or flat text.
//
// Exit codes: 0 ok, 1 usage, 2 invariant violation or rejected input,
// 3 budget exceeded, 4 I/O error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "delcode/balance.hpp"
#include "delcode/codebook.hpp"
#include "delcode/error.hpp"
#include "delcode/io.hpp"
#include "delcode/parallel.hpp"
#include "delcode/sblenc.hpp"
#include "delcode/seqcore.hpp"
#include "delcode/triples.hpp"
#include "delcode/vtcodes.hpp"

using namespace delcode;

namespace {

enum Exit { ok = 0, usage = 1, violation = 2, budget = 3, io_error = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  std::string out_path;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::vector<Word> read_word_file(const std::string& path, unsigned q) {
  if (path.empty() || path == "-") return read_words(std::cin, q);
  std::istringstream in(read_file(path));
  return read_words(in, q);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

std::string words_text(const std::vector<Word>& words) {
  std::ostringstream ss;
  write_words(ss, words);
  return ss.str();
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Flat text: "key: value", nested objects joined with dots.
void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out);
    } else {
      out << key << ": " << scalar_text(*it) << "\n";
    }
  }
}

void emit(const Common& c, json report) {
  json full;
  full["schema"] = 1;
  for (auto it = report.begin(); it != report.end(); ++it) full[it.key()] = *it;
  if (c.format == "text") {
    std::ostringstream ss;
    flatten(full, "", ss);
    write_text(c.out_path, ss.str());
  } else {
    write_text(c.out_path, full.dump(2) + "\n");
  }
}

// Residues (b, c, a) that make x a codeword; the sketch is built over the
// (b, c) part containing x.
CodeParams residues_of(CodeParams p, const Word& x, std::uint64_t budget) {
  if (x.size() != p.n || x.q() != p.q) throw ArgumentError("word does not match q and n");
  const Word y = psi(x);
  p.residues = Residues{};
  p.residues->b = ((vt(y) % p.N) + p.N) % p.N;
  if (p.mode != Mode::single) p.residues->c = (l1sum(y) / p.q) % (p.t + 1);
  if (!p.sketch_orders().empty()) {
    auto sk = build_domain_sketch(p, budget);
    for (unsigned tp : p.sketch_orders()) p.residues->a[tp] = *sk->value(tp, x);
  }
  if (!member_outer(x, p)) throw Violation("word fails the balance constraint");
  return p;
}

struct LoadedCode {
  CodeParams params;
  std::shared_ptr<TableSketchProvider> sketch;
};

LoadedCode load_code(const std::string& path, std::uint64_t budget) {
  LoadedCode lc;
  lc.params = code_params_from_json(read_json(path));
  if (!lc.params.residues) throw ArgumentError("params carry no residues");
  if (lc.params.mode == Mode::single) {
    lc.sketch = std::make_shared<TableSketchProvider>();
  } else {
    lc.sketch = build_domain_sketch(lc.params, budget);
  }
  return lc;
}

Word decode_any(const Word& y, const LoadedCode& lc, DecodeTrace& tr) {
  if (lc.params.mode == Mode::single) return decode_single(y, lc.params, &tr);
  auto [x, t] = decode(y, lc.params, *lc.sketch);
  tr = t;
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burst and localized deletion codes with a balanced encoder"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--report", common.out_path, "Report file (default stdout)");
  app.add_option("--budget", common.budget, "Largest q^n for exhaustive jobs")->check(CLI::PositiveNumber);
  app.add_option("--threads", common.threads, "Worker threads (default DELCODE_THREADS)");

  // params
  auto* params_cmd = app.add_subcommand("params", "Good-triple certificate and derived code parameters");
  unsigned pq = 2, pt = 2;
  std::string peps = "1/10", pmode = "burst", pfrom;
  std::optional<std::size_t> pn, pell;
  bool pbest = false;
  params_cmd->add_option("--q", pq, "Alphabet size")->required();
  params_cmd->add_option("--t", pt, "Burst / window length")->required();
  params_cmd->add_option("--eps", peps, "Balance slack as p/r")->required();
  params_cmd->add_option("--n", pn, "Code length; adds derived code parameters");
  params_cmd->add_option("--mode", pmode, "single | burst | localized | binary_le3_lite");
  params_cmd->add_option("--ell", pell, "Override the balance window");
  params_cmd->add_option("--residues-from", pfrom, "Choose residues so this word is a codeword");
  params_cmd->add_flag("--best-residues", pbest, "Choose the residues of the largest code");

  // encode
  auto* enc_cmd = app.add_subcommand("encode", "Map message indices to codewords");
  std::string enc_params, enc_in, enc_out;
  enc_cmd->add_option("--params", enc_params, "Code params JSON")->required();
  enc_cmd->add_option("--in", enc_in, "One message index per line (default stdin)");
  enc_cmd->add_option("--out", enc_out, "Codeword file (default stdout)");

  // decode
  auto* dec_cmd = app.add_subcommand("decode", "Decode received words");
  std::string dec_params, dec_in, dec_out, dec_mode;
  dec_cmd->add_option("--params", dec_params, "Code params JSON")->required();
  dec_cmd->add_option("--mode", dec_mode, "Override the params mode");
  dec_cmd->add_option("--in", dec_in, "Received words (default stdin)");
  dec_cmd->add_option("--out", dec_out, "Decoded words; the JSON report carries the traces");

  // corrupt
  auto* cor_cmd = app.add_subcommand("corrupt", "Apply seeded random deletions");
  unsigned cq = 2;
  std::optional<std::size_t> cburst, cloc;
  std::uint64_t cseed = 1;
  std::string cor_in, cor_out;
  cor_cmd->add_option("--q", cq, "Alphabet size")->required();
  auto* ob = cor_cmd->add_option("--burst", cburst, "Delete one burst of length 1..t");
  auto* ol = cor_cmd->add_option("--localized", cloc, "Delete a t-localized pattern or a single symbol");
  ob->excludes(ol);
  cor_cmd->add_option("--seed", cseed, "Generator seed");
  cor_cmd->add_option("--in", cor_in, "Words (default stdin)");
  cor_cmd->add_option("--out", cor_out, "Corrupted words (default stdout)")->required();

  // verify-codebook
  auto* ver_cmd = app.add_subcommand("verify-codebook", "Exhaustive ball-disjointness check");
  std::string ver_params;
  unsigned vq = 2, vt_ = 2;
  std::string veps = "1/10", vmode = "burst";
  std::optional<std::size_t> vn;
  ver_cmd->add_option("--params", ver_params, "Code params JSON (residues optional)");
  ver_cmd->add_option("--q", vq, "Alphabet size");
  ver_cmd->add_option("--t", vt_, "Burst / window length");
  ver_cmd->add_option("--eps", veps, "Balance slack");
  ver_cmd->add_option("--n", vn, "Code length");
  ver_cmd->add_option("--mode", vmode, "Code family");

  // measure-redundancy
  auto* red_cmd = app.add_subcommand("measure-redundancy", "log2(q^n / |C|) of best-residue codes");
  unsigned rq = 2, rt = 2;
  std::string reps = "1/10", rmode = "burst";
  std::size_t rn_min = 8, rn_max = 12;
  red_cmd->add_option("--q", rq, "Alphabet size");
  red_cmd->add_option("--t", rt, "Burst / window length");
  red_cmd->add_option("--eps", reps, "Balance slack");
  red_cmd->add_option("--mode", rmode, "Code family");
  red_cmd->add_option("--n-min", rn_min, "Smallest n");
  red_cmd->add_option("--n-max", rn_max, "Largest n");

  // check-lemmas
  auto* lem_cmd = app.add_subcommand("check-lemmas", "Triple, M and counting-lemma oracles");
  unsigned lq_max = 8, lbq_max = 2;
  std::size_t ln_max = 14;
  std::int64_t lgrid = 1000;
  lem_cmd->add_option("--q-max", lq_max, "Largest q for the triple grid");
  lem_cmd->add_option("--grid", lgrid, "eps denominator for the triple grid");
  lem_cmd->add_option("--balance-q-max", lbq_max, "Largest q for the counting lemma");
  lem_cmd->add_option("--n-max", ln_max, "Largest n for the counting lemma");

  // sbl-encode / sbl-decode
  auto* sbe_cmd = app.add_subcommand("sbl-encode", "Balanced encoding in blocks of n - 2 symbols");
  auto* sbd_cmd = app.add_subcommand("sbl-decode", "Inverse of sbl-encode");
  std::string sb_params, sb_in, sb_out;
  for (auto* c : {sbe_cmd, sbd_cmd}) {
    c->add_option("--params", sb_params, "Encoder params JSON")->required();
    c->add_option("--in", sb_in, "Words (default stdin)");
    c->add_option("--out", sb_out, "Output words (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  try {
    if (common.threads) set_worker_count(common.threads);

    if (params_cmd->parsed()) {
      const Rational eps = Rational::parse(peps);
      const Mode mode = parse_mode(pmode);
      json r;
      r["command"] = "params";
      if (mode != Mode::single) r["certificate"] = to_json(classify(pq, pt, eps));
      if (pn) {
        CodeParams p = mode == Mode::single ? single_params(pq, *pn) : derive_params(pq, pt, eps, *pn, mode, pell);
        if (!pfrom.empty()) p = residues_of(p, Word::parse(pq, pfrom), common.budget);
        if (pbest) {
          const Codebook cb = best_residue_codebook(p, common.budget);
          p = cb.params;
          r["codewords"] = cb.words.size();
        }
        r["params"] = to_json(p);
      }
      emit(common, r);
      return ok;
    }

    if (enc_cmd->parsed()) {
      const CodeParams p = code_params_from_json(read_json(enc_params));
      const Codebook cb = make_codebook(p, common.budget);
      std::istringstream in(enc_in.empty() || enc_in == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                                            : read_file(enc_in));
      std::vector<Word> out;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::uint64_t k = std::stoull(line);
        if (k >= cb.words.size()) throw ArgumentError("message index " + line + " outside the code");
        out.push_back(cb.word(k));
      }
      write_text(enc_out, words_text(out));
      if (!enc_out.empty() && enc_out != "-") {
        emit(common, json{{"command", "encode"}, {"codewords", cb.words.size()}, {"encoded", out.size()}});
      }
      return ok;
    }

    if (dec_cmd->parsed()) {
      LoadedCode lc = load_code(dec_params, common.budget);
      if (!dec_mode.empty() && parse_mode(dec_mode) != lc.params.mode) {
        throw ArgumentError("--mode disagrees with the params file");
      }
      const auto received = read_word_file(dec_in, lc.params.q);
      std::vector<Word> out;
      json traces = json::array();
      std::size_t failed = 0;
      for (const Word& y : received) {
        json entry;
        entry["received"] = y.str();
        try {
          DecodeTrace tr;
          const Word x = decode_any(y, lc, tr);
          entry["decoded"] = x.str();
          entry["trace"] = to_json(tr);
          out.push_back(x);
        } catch (const DecodeError& e) {
          ++failed;
          entry["error"] = to_string(e.kind());
          entry["message"] = e.what();
        }
        traces.push_back(entry);
      }
      if (!dec_out.empty()) write_text(dec_out, words_text(out));
      emit(common, json{{"command", "decode"}, {"mode", to_string(lc.params.mode)}, {"words", received.size()},
                        {"failed", failed}, {"results", traces}});
      return failed ? violation : ok;
    }

    if (cor_cmd->parsed()) {
      if (!cburst && !cloc) throw ArgumentError("give --burst or --localized");
      const std::size_t t = cburst ? *cburst : *cloc;
      std::mt19937_64 rng(cseed);
      const auto words = read_word_file(cor_in, cq);
      std::vector<Word> out;
      json events = json::array();
      for (const Word& x : words) {
        json ev;
        if (cburst) {
          const std::size_t len = 1 + rng() % std::min(t, x.size());
          const std::size_t i = 1 + rng() % (x.size() - len + 1);
          out.push_back(apply_burst_deletion(x, i, len));
          ev = json{{"start", i}, {"length", len}};
        } else {
          const auto pats = localized_patterns(x.size(), t);
          const std::size_t pick = rng() % (pats.size() + x.size());
          if (pick < pats.size()) {
            out.push_back(apply_localized(x, pats[pick]));
            json runs = json::array();
            for (const auto& [a, len] : pats[pick].runs) runs.push_back(json::array({a, len}));
            ev = json{{"runs", runs}};
          } else {
            const std::size_t i = pick - pats.size() + 1;
            out.push_back(apply_burst_deletion(x, i, 1));
            ev = json{{"runs", json::array({json::array({i, 1})})}};
          }
        }
        events.push_back(ev);
      }
      write_text(cor_out, words_text(out));
      emit(common, json{{"command", "corrupt"}, {"generator", "std::mt19937_64"}, {"seed", cseed},
                        {"kind", cburst ? "burst" : "localized"}, {"t", t}, {"events", events}});
      return ok;
    }

    if (ver_cmd->parsed()) {
      CodeParams p;
      if (!ver_params.empty()) {
        p = code_params_from_json(read_json(ver_params));
      } else {
        if (!vn) throw ArgumentError("give --params or --n");
        p = derive_params(vq, vt_, Rational::parse(veps), *vn, parse_mode(vmode));
      }
      const Codebook cb = p.residues ? make_codebook(p, common.budget) : best_residue_codebook(p, common.budget);
      const DisjointnessReport rep = verify_disjoint(cb);
      emit(common, json{{"command", "verify-codebook"},
                        {"params", to_json(cb.params)},
                        {"codewords", rep.codewords},
                        {"pairs", rep.pairs},
                        {"ball_words", rep.ball_words},
                        {"intersections", rep.intersections},
                        {"disjoint", rep.disjoint()}});
      return rep.disjoint() ? ok : violation;
    }

    if (red_cmd->parsed()) {
      json rows = json::array();
      for (std::size_t n = rn_min; n <= rn_max; ++n) {
        const Codebook cb =
            best_residue_codebook(derive_params(rq, rt, Rational::parse(reps), n, parse_mode(rmode)), common.budget);
        const double r = cb.redundancy_bits();
        rows.push_back(json{{"n", n},
                            {"codewords", cb.words.size()},
                            {"redundancy_bits", r},
                            {"log2_n", std::log2(static_cast<double>(n))}});
      }
      emit(common, json{{"command", "measure-redundancy"}, {"q", rq}, {"t", rt}, {"rows", rows}});
      return ok;
    }

    if (lem_cmd->parsed()) {
      std::uint64_t points = 0, mismatches = 0;
      for (unsigned q = 2; q <= lq_max; ++q) {
        for (unsigned t = 2; t < 2 * q; ++t) {
          for (std::int64_t k = 1; 2 * k < lgrid; ++k) {
            const Rational eps(k, lgrid);
            ++points;
            const auto a = classify(q, t, eps);
            const auto b = classify_bruteforce(q, t, eps);
            if (a.is_good != b.is_good || a.s_table != b.s_table) {
              ++mismatches;
              continue;
            }
            if (!a.is_good) continue;
            mismatches += compute_M(a) != compute_M_direct(a);
            if (t >= 3) mismatches += compute_M_loc(a) != compute_M_loc_direct(a);
          }
        }
      }
      // Only ell <= n is non-vacuous: a longer window admits every word.
      std::uint64_t lemma_checks = 0, lemma_violations = 0;
      for (unsigned q = 2; q <= lbq_max; ++q) {
        for (std::size_t n = 1; n <= ln_max; ++n) {
          for (std::int64_t k = 1; k <= 99; ++k) {
            const Rational eps(static_cast<std::int64_t>(q - 1) * k, 200);
            for (unsigned s : {1u, 2u, 4u}) {
              const long double lb = std::min(lemma_ell_bound(q, n, eps, s), lemma_psi_ell_bound(q, n, eps));
              for (auto ell = static_cast<std::size_t>(std::max(1.0L, std::ceil(lb))); ell <= n; ++ell) {
                const auto rep = check_counting_lemma(q, n, ell, eps, s, common.budget);
                ++lemma_checks;
                lemma_violations += !rep.bound_met || !rep.psi_bound_met;
              }
            }
          }
        }
      }
      const bool pass = mismatches == 0 && lemma_violations == 0;
      emit(common, json{{"command", "check-lemmas"},
                        {"triple_grid_points", points},
                        {"triple_mismatches", mismatches},
                        {"counting_lemma_checks", lemma_checks},
                        {"counting_lemma_violations", lemma_violations},
                        {"pass", pass}});
      return pass ? ok : violation;
    }

    if (sbe_cmd->parsed() || sbd_cmd->parsed()) {
      const bool encoding = sbe_cmd->parsed();
      const BalancedEncoder enc(encoder_params_from_json(read_json(sb_params)));
      const EncoderParams& p = enc.params();
      const std::size_t in_block = encoding ? p.n - 2 : p.n;
      const auto words = read_word_file(sb_in, p.q);
      std::vector<Word> out;
      std::size_t blocks = 0;
      for (const Word& w : words) {
        if (w.size() % in_block != 0) {
          throw ArgumentError("word length " + std::to_string(w.size()) + " is not a multiple of " +
                              std::to_string(in_block));
        }
        std::vector<Symbol> acc;
        for (std::size_t a = 1; a <= w.size(); a += in_block, ++blocks) {
          const Word block = w.sub(a, a + in_block - 1);
          Word r = encoding ? enc.encode(block) : enc.decode(block);
          if (encoding && !is_strong_locally_balanced(psi(r), BalanceSpec{p.q, p.ell, p.eps})) {
            throw Violation("encoder output failed the balance verifier");
          }
          acc.insert(acc.end(), r.symbols().begin(), r.symbols().end());
        }
        out.emplace_back(p.q, std::move(acc));
      }
      write_text(sb_out, words_text(out));
      if (!sb_out.empty() && sb_out != "-") {
        emit(common, json{{"command", encoding ? "sbl-encode" : "sbl-decode"},
                          {"params", to_json(p)},
                          {"words", words.size()},
                          {"blocks", blocks}});
      }
      return ok;
    }
  } catch (const IoError& e) {
    std::cerr << "delcode: " << e.what() << "\n";
    return io_error;
  } catch (const BudgetError& e) {
    std::cerr << "delcode: budget exceeded: " << e.what() << "\n";
    return budget;
  } catch (const Violation& e) {
    std::cerr << "delcode: invariant violation: " << e.what() << "\n";
    return violation;
  } catch (const DecodeError& e) {
    std::cerr << "delcode: rejected: " << e.what() << "\n";
    return violation;
  } catch (const ArgumentError& e) {
    std::cerr << "delcode: " << e.what() << "\n";
    return violation;
  } catch (const std::exception& e) {
    std::cerr << "delcode: " << e.what() << "\n";
    return violation;
  }
  return usage;
}
