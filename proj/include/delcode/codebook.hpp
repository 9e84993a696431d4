#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "delcode/sketch.hpp"
#include "delcode/vtcodes.hpp"

namespace delcode {

inline constexpr std::uint64_t kDefaultBudget = 1u << 23;

struct ResidueTally {
  Residues residues;
  std::uint64_t size = 0;
};

struct ResidueSurvey {
  std::uint64_t total = 0;           // q^n
  std::uint64_t outer_words = 0;     // words whose psi meets the balance constraint
  std::vector<ResidueTally> tallies; // every nonempty residue tuple, canonical order
};

// Partitions Sigma_q^n by (b, c); within each part builds the greedy sketches
// of every order and tallies the sketch tuples.
ResidueSurvey survey_residues(const CodeParams& base, std::uint64_t budget = kDefaultBudget);

// Greedy sketches over the (b, c) part selected by params.residues; words
// outside that part map to SketchTable::unassigned.
std::shared_ptr<TableSketchProvider> build_domain_sketch(const CodeParams& params,
                                                         std::uint64_t budget = kDefaultBudget);

struct Codebook {
  CodeParams params;
  std::shared_ptr<TableSketchProvider> sketch;
  std::vector<std::uint64_t> words;  // lexicographic indices

  Word word(std::size_t k) const { return Word::from_index(params.q, params.n, words.at(k)); }
  // log2(q^n / |C|)
  double redundancy_bits() const;
};

// All words passing full membership.
std::vector<Word> enumerate_codebook(const CodeParams& params, const SketchProvider& sketch,
                                     std::uint64_t budget = kDefaultBudget);

// Largest codebook over all residue tuples; ties go to the smallest tuple.
Codebook best_residue_codebook(const CodeParams& base, std::uint64_t budget = kDefaultBudget);

// Codebook for the residues already set in params.
Codebook make_codebook(const CodeParams& params, std::uint64_t budget = kDefaultBudget);

struct DisjointnessReport {
  std::uint64_t codewords = 0;
  std::uint64_t pairs = 0;          // unordered codeword pairs covered
  std::uint64_t ball_words = 0;     // distinct received words over all balls
  std::uint64_t intersections = 0;  // received words reachable from two codewords
  bool disjoint() const { return intersections == 0; }
};

// Burst modes use D_{<=t}; localized mode uses D_t^loc.
DisjointnessReport verify_disjoint(const Codebook& cb);

}  // namespace delcode
