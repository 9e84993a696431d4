#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "delcode/word.hpp"

namespace delcode {

// x with x_{[i, i+t1-1]} replaced by `replacement` (length t2).
Word apply_burst_error(const Word& x, std::size_t i, std::size_t t1, const Word& replacement);

// Separating-hash values for the P-bounded (t1, t2)-burst-error constraint,
// materialized for all q^n words in lexicographic order.
class SketchTable {
 public:
  static constexpr std::uint32_t unassigned = 0xffffffffu;

  SketchTable() = default;
  SketchTable(unsigned q, unsigned n, unsigned P, unsigned t1, unsigned t2,
              std::vector<std::uint32_t> values);

  unsigned q() const noexcept { return q_; }
  unsigned n() const noexcept { return n_; }
  unsigned P() const noexcept { return P_; }
  unsigned t1() const noexcept { return t1_; }
  unsigned t2() const noexcept { return t2_; }
  std::uint32_t colors() const noexcept { return colors_; }
  unsigned value_bits() const noexcept;

  std::uint32_t value(const Word& x) const;
  std::uint32_t value_at(std::uint64_t index) const { return values_.at(index); }
  const std::vector<std::uint32_t>& values() const noexcept { return values_; }

  // Header (magic, version, q, n, P, t1, t2, colors, count) then one
  // little-endian uint32 per word.
  void save(std::ostream& out) const;
  static SketchTable load(std::istream& in);

 private:
  unsigned q_ = 2, n_ = 0, P_ = 0, t1_ = 0, t2_ = 0;
  std::uint32_t colors_ = 0;
  std::vector<std::uint32_t> values_;
};

struct ConflictGraph {
  std::vector<std::uint64_t> members;               // word indices, sorted
  std::vector<std::vector<std::uint32_t>> adjacent;  // positions into members
};

// u ~ v iff some (t1, t2)-burst-errors of u and v, both confined to a common
// length-P interval, yield the same word. Built by hash-join on received words.
ConflictGraph conflict_graph(unsigned q, unsigned n, unsigned P, unsigned t1, unsigned t2,
                             std::vector<std::uint64_t> members);

// Greedy coloring in member order; returns one color per member.
std::vector<std::uint32_t> greedy_coloring(const ConflictGraph& g);

// Whole-space table. Throws BudgetError when q^n > budget.
SketchTable build_greedy_sketch(unsigned q, unsigned n, unsigned P, unsigned t1, unsigned t2,
                                std::uint64_t budget = 1u << 24);
// Colors only `members`; all other words get SketchTable::unassigned.
SketchTable build_greedy_sketch(unsigned q, unsigned n, unsigned P, unsigned t1, unsigned t2,
                                const std::vector<std::uint64_t>& members,
                                std::uint64_t budget = 1u << 24);

// Calls visit(candidate, p) for every start p with [p, p+t1-1] inside
// [lo, hi] (1-based, transmitted coordinates, clipped to [1, n]) and every
// w in Sigma_q^{t1}: candidate = received with received_{[p, p+t2-1]} -> w.
// Returns the number of candidates produced.
std::size_t for_each_preimage(const Word& received, std::size_t n, std::size_t t1, std::size_t t2,
                              std::size_t lo, std::size_t hi,
                              const std::function<void(const Word&, std::size_t)>& visit);

// Unique preimage with the expected sketch value passing extra_filter.
// Throws DecodeError (no_candidate / ambiguous).
Word decode_bounded(const Word& received, std::size_t lo, std::size_t hi, const SketchTable& table,
                    std::uint32_t expected, const std::function<bool(const Word&)>& extra_filter);

// Sketch values keyed by t'; the code parameters decide which (t1, t2) each
// order means.
class SketchProvider {
 public:
  virtual ~SketchProvider() = default;
  virtual std::optional<std::uint32_t> value(unsigned t_prime, const Word& x) const = 0;
};

class TableSketchProvider : public SketchProvider {
 public:
  void set(unsigned t_prime, std::shared_ptr<const SketchTable> table);
  const SketchTable* table(unsigned t_prime) const;
  const std::map<unsigned, std::shared_ptr<const SketchTable>>& tables() const noexcept { return tables_; }
  std::optional<std::uint32_t> value(unsigned t_prime, const Word& x) const override;

 private:
  std::map<unsigned, std::shared_ptr<const SketchTable>> tables_;
};

}  // namespace delcode
