#include "delcode/sketch.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <istream>
#include <ostream>
#include <set>

#include "delcode/error.hpp"

namespace delcode {

Word apply_burst_error(const Word& x, std::size_t i, std::size_t t1, const Word& replacement) {
  if (replacement.q() != x.q()) throw ArgumentError("alphabet mismatch");
  if (i < 1 || i + t1 - 1 > x.size() || (t1 == 0 && i > x.size() + 1)) {
    throw ArgumentError("burst-error window out of range");
  }
  std::vector<Symbol> s(x.vec().begin(), x.vec().begin() + static_cast<std::ptrdiff_t>(i - 1));
  s.insert(s.end(), replacement.vec().begin(), replacement.vec().end());
  s.insert(s.end(), x.vec().begin() + static_cast<std::ptrdiff_t>(i - 1 + t1), x.vec().end());
  return Word(x.q(), std::move(s));
}

SketchTable::SketchTable(unsigned q, unsigned n, unsigned P, unsigned t1, unsigned t2,
                         std::vector<std::uint32_t> values)
    : q_(q), n_(n), P_(P), t1_(t1), t2_(t2), values_(std::move(values)) {
  if (values_.size() != ipow(q, n)) throw ArgumentError("sketch table size must be q^n");
  for (std::uint32_t v : values_) {
    if (v != unassigned) colors_ = std::max(colors_, v + 1);
  }
}

unsigned SketchTable::value_bits() const noexcept {
  unsigned bits = 0;
  while ((std::uint64_t{1} << bits) < colors_) ++bits;
  return bits;
}

std::uint32_t SketchTable::value(const Word& x) const {
  if (x.q() != q_ || x.size() != n_) throw ArgumentError("word does not match sketch table shape");
  return values_[x.index()];
}

namespace {

constexpr char kMagic[4] = {'D', 'L', 'S', 'K'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b{};
  for (int k = 0; k < 4; ++k) b[k] = static_cast<char>((v >> (8 * k)) & 0xff);
  out.write(b.data(), 4);
}

std::uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 4)) throw ArgumentError("truncated sketch table");
  return b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void SketchTable::save(std::ostream& out) const {
  out.write(kMagic, 4);
  for (std::uint32_t v : {kVersion, std::uint32_t{q_}, std::uint32_t{n_}, std::uint32_t{P_},
                          std::uint32_t{t1_}, std::uint32_t{t2_}, colors_}) {
    put_u32(out, v);
  }
  const std::uint64_t count = values_.size();
  put_u32(out, static_cast<std::uint32_t>(count & 0xffffffffu));
  put_u32(out, static_cast<std::uint32_t>(count >> 32));
  for (std::uint32_t v : values_) put_u32(out, v);
}

SketchTable SketchTable::load(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) throw ArgumentError("not a sketch table");
  if (get_u32(in) != kVersion) throw ArgumentError("unsupported sketch table version");
  const unsigned q = get_u32(in), n = get_u32(in), P = get_u32(in), t1 = get_u32(in), t2 = get_u32(in);
  const std::uint32_t colors = get_u32(in);
  const std::uint64_t lo = get_u32(in), hi = get_u32(in);
  const std::uint64_t count = lo | (hi << 32);
  if (q < 2 || q > 256 || count != ipow(q, n)) throw ArgumentError("inconsistent sketch table header");
  std::vector<std::uint32_t> values(count);
  for (auto& v : values) v = get_u32(in);
  SketchTable t(q, n, P, t1, t2, std::move(values));
  if (t.colors() > colors) throw ArgumentError("sketch value exceeds declared color count");
  t.colors_ = colors;
  return t;
}

ConflictGraph conflict_graph(unsigned q, unsigned n, unsigned P, unsigned t1, unsigned t2,
                             std::vector<std::uint64_t> members) {
  if (t1 > n) throw ArgumentError("t1 exceeds word length");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<std::uint64_t> pw(n + t2 + 1, 1);
  for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * q;
  if (n - t1 + t2 > 0) ipow(q, n - t1 + t2);  // overflow guard

  struct Entry {
    std::uint64_t key;
    std::uint32_t member;
    std::uint32_t p;
  };
  const std::uint64_t reps = pw[t2];
  std::vector<Entry> entries;
  entries.reserve(members.size() * (n - t1 + 1) * reps);
  for (std::uint32_t k = 0; k < members.size(); ++k) {
    const std::uint64_t u = members[k];
    for (unsigned p = 1; p + t1 <= n + 1; ++p) {
      const unsigned tail = n - p + 1 - t1;
      const std::uint64_t prefix = u / pw[n - p + 1];
      const std::uint64_t suffix = u % pw[tail];
      for (std::uint64_t w = 0; w < reps; ++w) {
        entries.push_back({(prefix * reps + w) * pw[tail] + suffix, k, p});
      }
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.key != b.key ? a.key < b.key : a.member < b.member;
  });

  ConflictGraph g;
  g.adjacent.resize(members.size());
  for (std::size_t lo = 0; lo < entries.size();) {
    std::size_t hi = lo + 1;
    while (hi < entries.size() && entries[hi].key == entries[lo].key) ++hi;
    if (entries[lo].member != entries[hi - 1].member) {
      for (std::size_t a = lo; a < hi; ++a) {
        for (std::size_t b = a + 1; b < hi; ++b) {
          if (entries[a].member == entries[b].member) continue;
          const unsigned gap = entries[a].p > entries[b].p ? entries[a].p - entries[b].p
                                                           : entries[b].p - entries[a].p;
          if (gap + t1 > P) continue;
          g.adjacent[entries[a].member].push_back(entries[b].member);
          g.adjacent[entries[b].member].push_back(entries[a].member);
        }
      }
    }
    lo = hi;
  }
  for (auto& adj : g.adjacent) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  g.members = std::move(members);
  return g;
}

std::vector<std::uint32_t> greedy_coloring(const ConflictGraph& g) {
  const std::size_t count = g.members.size();
  std::vector<std::uint32_t> color(count, SketchTable::unassigned);
  std::vector<std::size_t> stamp;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& adj = g.adjacent[k];
    stamp.assign(adj.size() + 1, count);
    for (std::uint32_t v : adj) {
      if (v < k && color[v] <= adj.size()) stamp[color[v]] = k;
    }
    std::uint32_t c = 0;
    while (stamp[c] == k) ++c;
    color[k] = c;
  }
  return color;
}

SketchTable build_greedy_sketch(unsigned q, unsigned n, unsigned P, unsigned t1, unsigned t2,
                                const std::vector<std::uint64_t>& members, std::uint64_t budget) {
  const std::uint64_t total = ipow(q, n);
  if (total > budget) throw BudgetError("q^n exceeds the sketch budget");
  ConflictGraph g = conflict_graph(q, n, P, t1, t2, members);
  const std::vector<std::uint32_t> colors = greedy_coloring(g);
  std::vector<std::uint32_t> values(total, SketchTable::unassigned);
  for (std::size_t k = 0; k < g.members.size(); ++k) values[g.members[k]] = colors[k];
  return SketchTable(q, n, P, t1, t2, std::move(values));
}

SketchTable build_greedy_sketch(unsigned q, unsigned n, unsigned P, unsigned t1, unsigned t2,
                                std::uint64_t budget) {
  const std::uint64_t total = ipow(q, n);
  if (total > budget) throw BudgetError("q^n exceeds the sketch budget");
  std::vector<std::uint64_t> all(total);
  for (std::uint64_t i = 0; i < total; ++i) all[i] = i;
  return build_greedy_sketch(q, n, P, t1, t2, all, budget);
}

std::size_t for_each_preimage(const Word& received, std::size_t n, std::size_t t1, std::size_t t2,
                              std::size_t lo, std::size_t hi,
                              const std::function<void(const Word&, std::size_t)>& visit) {
  if (received.size() + t1 != n + t2) throw ArgumentError("received length inconsistent with the error shape");
  const unsigned q = received.q();
  lo = std::max<std::size_t>(lo, 1);
  hi = std::min(hi, n);
  if (t1 > n) return 0;
  std::size_t produced = 0;
  const std::uint64_t reps = ipow(q, static_cast<unsigned>(t1));
  std::vector<Symbol> cand(n);
  for (std::size_t p = lo; p + t1 <= hi + 1 && p + t1 <= n + 1; ++p) {
    std::copy_n(received.vec().begin(), p - 1, cand.begin());
    std::copy(received.vec().begin() + static_cast<std::ptrdiff_t>(p - 1 + t2), received.vec().end(),
              cand.begin() + static_cast<std::ptrdiff_t>(p - 1 + t1));
    for (std::uint64_t w = 0; w < reps; ++w) {
      std::uint64_t v = w;
      for (std::size_t k = t1; k-- > 0;) {
        cand[p - 1 + k] = static_cast<Symbol>(v % q);
        v /= q;
      }
      visit(Word(q, cand), p);
      ++produced;
    }
  }
  return produced;
}

Word decode_bounded(const Word& received, std::size_t lo, std::size_t hi, const SketchTable& table,
                    std::uint32_t expected, const std::function<bool(const Word&)>& extra_filter) {
  std::set<Word> survivors;
  for_each_preimage(received, table.n(), table.t1(), table.t2(), lo, hi, [&](const Word& c, std::size_t) {
    if (table.value(c) == expected && (!extra_filter || extra_filter(c))) survivors.insert(c);
  });
  if (survivors.empty()) throw DecodeError(DecodeError::Kind::no_candidate, "no preimage passes the filters");
  if (survivors.size() > 1) throw DecodeError(DecodeError::Kind::ambiguous, "several preimages pass the filters");
  return *survivors.begin();
}

void TableSketchProvider::set(unsigned t_prime, std::shared_ptr<const SketchTable> table) {
  tables_[t_prime] = std::move(table);
}

const SketchTable* TableSketchProvider::table(unsigned t_prime) const {
  auto it = tables_.find(t_prime);
  return it == tables_.end() ? nullptr : it->second.get();
}

std::optional<std::uint32_t> TableSketchProvider::value(unsigned t_prime, const Word& x) const {
  const SketchTable* t = table(t_prime);
  if (t == nullptr) return std::nullopt;
  return t->value(x);
}

}  // namespace delcode
