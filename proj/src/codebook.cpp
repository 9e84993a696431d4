#include "delcode/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "delcode/balance.hpp"
#include "delcode/error.hpp"
#include "delcode/kernels.hpp"
#include "delcode/parallel.hpp"
#include "delcode/seqcore.hpp"

namespace delcode {
namespace {

std::uint64_t checked_total(const CodeParams& p, std::uint64_t budget) {
  if (p.n > 63) throw BudgetError("word length beyond exhaustive budget");
  const std::uint64_t total = ipow(p.q, static_cast<unsigned>(p.n));
  if (total > budget) throw BudgetError("q^n exceeds the exhaustive budget");
  return total;
}

std::int64_t c_count(const CodeParams& p) { return p.mode == Mode::single ? 1 : p.t + 1; }

// Buckets every word of Sigma_q^n by its (b, c) part; words failing the
// balance constraint are dropped. Bucket id = b * c_count + c.
std::vector<std::vector<std::uint64_t>> partition(const CodeParams& p, std::uint64_t budget,
                                                  std::uint64_t* outer_words) {
  const std::uint64_t total = checked_total(p, budget);
  const std::int64_t cc = c_count(p);
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(p.N * cc));
  std::vector<Symbol> x(p.n, 0), y(p.n + 1);
  const bool balance = p.mode != Mode::single && p.ell > 0 && p.ell <= p.n + 1;
  std::uint64_t kept = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    kernels::psi(x.data(), p.n, p.q, y.data());
    const auto vs = kernels::vt_sum(y.data(), y.size());
    if (!balance || is_strong_locally_balanced(y, p.q, p.ell, p.eps)) {
      const std::int64_t b = vs.vt % p.N;
      const std::int64_t c = p.mode == Mode::single ? 0 : (vs.sum / p.q) % cc;
      parts[static_cast<std::size_t>(b * cc + c)].push_back(idx);
      ++kept;
    }
    for (std::size_t k = p.n; k-- > 0;) {
      if (++x[k] < p.q) break;
      x[k] = 0;
    }
  }
  if (outer_words) *outer_words = kept;
  return parts;
}

std::vector<std::uint64_t> part_members(const CodeParams& p, std::uint64_t budget) {
  if (!p.residues) throw ArgumentError("residues are unset");
  auto parts = partition(p, budget, nullptr);
  const std::size_t id = static_cast<std::size_t>(p.residues->b * c_count(p) + (p.mode == Mode::single ? 0 : p.residues->c));
  return std::move(parts.at(id));
}

}  // namespace

ResidueSurvey survey_residues(const CodeParams& base, std::uint64_t budget) {
  base.validate();
  ResidueSurvey survey;
  survey.total = checked_total(base, budget);
  auto parts = partition(base, budget, &survey.outer_words);
  const std::int64_t cc = c_count(base);
  const std::vector<unsigned> orders = base.sketch_orders();
  std::vector<std::vector<ResidueTally>> per_part(parts.size());
  parallel_for(parts.size(), [&](std::size_t id) {
    const auto& members = parts[id];
    if (members.empty()) return;
    std::vector<std::vector<std::uint32_t>> colors;
    for (unsigned tp : orders) {
      auto [t1, t2] = base.sketch_shape(tp);
      colors.push_back(greedy_coloring(conflict_graph(base.q, static_cast<unsigned>(base.n),
                                                      static_cast<unsigned>(base.P), t1, t2, members)));
    }
    std::map<std::vector<std::uint32_t>, std::uint64_t> counts;
    std::vector<std::uint32_t> key(orders.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t o = 0; o < orders.size(); ++o) key[o] = colors[o][k];
      ++counts[key];
    }
    for (const auto& [tuple, size] : counts) {
      ResidueTally tally;
      tally.residues.b = static_cast<std::int64_t>(id) / cc;
      tally.residues.c = static_cast<std::int64_t>(id) % cc;
      for (std::size_t o = 0; o < orders.size(); ++o) tally.residues.a[orders[o]] = tuple[o];
      tally.size = size;
      per_part[id].push_back(std::move(tally));
    }
  });
  for (auto& v : per_part) {
    for (auto& t : v) survey.tallies.push_back(std::move(t));
  }
  return survey;
}

std::shared_ptr<TableSketchProvider> build_domain_sketch(const CodeParams& params, std::uint64_t budget) {
  params.validate();
  auto provider = std::make_shared<TableSketchProvider>();
  const std::vector<unsigned> orders = params.sketch_orders();
  if (orders.empty()) return provider;
  const std::vector<std::uint64_t> members = part_members(params, budget);
  for (unsigned tp : orders) {
    auto [t1, t2] = params.sketch_shape(tp);
    provider->set(tp, std::make_shared<SketchTable>(build_greedy_sketch(
                          params.q, static_cast<unsigned>(params.n), static_cast<unsigned>(params.P), t1, t2,
                          members, budget)));
  }
  return provider;
}

double Codebook::redundancy_bits() const {
  if (words.empty()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(params.n) * std::log2(static_cast<double>(params.q)) -
         std::log2(static_cast<double>(words.size()));
}

std::vector<Word> enumerate_codebook(const CodeParams& params, const SketchProvider& sketch,
                                     std::uint64_t budget) {
  params.validate();
  const std::uint64_t total = checked_total(params, budget);
  std::vector<Word> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word x = Word::from_index(params.q, params.n, idx);
    if (member(x, params, sketch)) out.push_back(std::move(x));
  }
  return out;
}

Codebook make_codebook(const CodeParams& params, std::uint64_t budget) {
  params.validate();
  Codebook cb;
  cb.params = params;
  cb.sketch = build_domain_sketch(params, budget);
  for (std::uint64_t idx : part_members(params, budget)) {
    bool ok = true;
    for (const auto& [tp, table] : cb.sketch->tables()) {
      if (table->value_at(idx) != params.residues->a.at(tp)) {
        ok = false;
        break;
      }
    }
    if (ok) cb.words.push_back(idx);
  }
  return cb;
}

Codebook best_residue_codebook(const CodeParams& base, std::uint64_t budget) {
  const ResidueSurvey survey = survey_residues(base, budget);
  if (survey.tallies.empty()) throw ArgumentError("no word satisfies the outer constraints");
  const ResidueTally* best = &survey.tallies.front();
  for (const auto& t : survey.tallies) {
    if (t.size > best->size) best = &t;
  }
  CodeParams p = base;
  p.residues = best->residues;
  Codebook cb = make_codebook(p, budget);
  if (cb.words.size() != best->size) throw ArgumentError("codebook size disagrees with the residue survey");
  return cb;
}

DisjointnessReport verify_disjoint(const Codebook& cb) {
  DisjointnessReport r;
  r.codewords = cb.words.size();
  r.pairs = r.codewords * (r.codewords - (r.codewords > 0 ? 1 : 0)) / 2;
  std::unordered_map<Word, std::uint32_t, WordHash> owner;
  std::unordered_map<Word, bool, WordHash> counted;
  for (std::uint32_t k = 0; k < cb.words.size(); ++k) {
    const Word x = cb.word(k);
    const std::set<Word> ball =
        cb.params.mode == Mode::localized ? localized_ball(x, cb.params.t) : burst_ball(x, cb.params.t);
    for (const Word& w : ball) {
      auto [it, inserted] = owner.emplace(w, k);
      if (!inserted && it->second != k && !counted[w]) {
        counted[w] = true;
        ++r.intersections;
      }
    }
  }
  r.ball_words = owner.size();
  return r;
}

}  // namespace delcode
