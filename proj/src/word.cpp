#include "delcode/word.hpp"

#include <limits>

#include "delcode/error.hpp"

namespace delcode {
namespace {

void check_q(unsigned q) {
  if (q < 2 || q > 256) throw ArgumentError("alphabet size must be in [2, 256]");
}

}  // namespace

const char* to_string(DecodeError::Kind kind) noexcept {
  switch (kind) {
    case DecodeError::Kind::no_valid_j: return "no-valid-j";
    case DecodeError::Kind::no_candidate: return "no-candidate";
    case DecodeError::Kind::ambiguous: return "ambiguous";
    case DecodeError::Kind::malformed: return "malformed-codeword";
    case DecodeError::Kind::not_member: return "not-a-member";
  }
  return "unknown";
}

Word::Word(unsigned q) : q_(q) { check_q(q); }

Word::Word(unsigned q, std::vector<Symbol> symbols) : q_(q), sym_(std::move(symbols)) {
  check_q(q);
  for (Symbol s : sym_) {
    if (s >= q) throw ArgumentError("symbol out of range for alphabet");
  }
}

Word::Word(unsigned q, std::initializer_list<int> symbols) : q_(q) {
  check_q(q);
  sym_.reserve(symbols.size());
  for (int s : symbols) {
    if (s < 0 || static_cast<unsigned>(s) >= q) throw ArgumentError("symbol out of range for alphabet");
    sym_.push_back(static_cast<Symbol>(s));
  }
}

Word Word::zeros(unsigned q, std::size_t n) { return Word(q, std::vector<Symbol>(n, 0)); }

Word Word::parse(unsigned q, std::string_view text) {
  check_q(q);
  while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  std::vector<Symbol> sym;
  if (q <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ArgumentError("bad symbol character in word");
      sym.push_back(static_cast<Symbol>(c - '0'));
    }
  } else if (!text.empty()) {
    unsigned cur = 0;
    bool have = false;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ',') {
        if (!have) throw ArgumentError("empty field in word");
        if (cur >= q) throw ArgumentError("symbol out of range for alphabet");
        sym.push_back(static_cast<Symbol>(cur));
        cur = 0;
        have = false;
      } else if (text[i] >= '0' && text[i] <= '9') {
        cur = cur * 10 + static_cast<unsigned>(text[i] - '0');
        if (cur > 1000) throw ArgumentError("symbol out of range for alphabet");
        have = true;
      } else {
        throw ArgumentError("bad symbol character in word");
      }
    }
  }
  return Word(q, std::move(sym));
}

Word Word::from_index(unsigned q, std::size_t n, std::uint64_t index) {
  check_q(q);
  std::vector<Symbol> sym(n);
  for (std::size_t k = n; k-- > 0;) {
    sym[k] = static_cast<Symbol>(index % q);
    index /= q;
  }
  if (index != 0) throw ArgumentError("word index out of range");
  return Word(q, std::move(sym));
}

Symbol Word::at(std::size_t pos) const {
  if (pos < 1 || pos > sym_.size()) throw ArgumentError("position out of range");
  return sym_[pos - 1];
}

Word Word::sub(std::size_t a, std::size_t b) const {
  if (b < a) return Word(q_);
  if (a < 1 || b > sym_.size()) throw ArgumentError("substring out of range");
  return Word(q_, std::vector<Symbol>(sym_.begin() + static_cast<std::ptrdiff_t>(a - 1),
                                      sym_.begin() + static_cast<std::ptrdiff_t>(b)));
}

Word Word::concat(const Word& other) const {
  if (other.q_ != q_) throw ArgumentError("alphabet mismatch");
  std::vector<Symbol> s = sym_;
  s.insert(s.end(), other.sym_.begin(), other.sym_.end());
  return Word(q_, std::move(s));
}

std::uint64_t Word::index() const {
  std::uint64_t r = 0;
  const std::uint64_t lim = std::numeric_limits<std::uint64_t>::max() / q_;
  for (Symbol s : sym_) {
    if (r > lim) throw ArgumentError("word too long for a 64-bit index");
    r = r * q_ + s;
  }
  return r;
}

std::string Word::str() const {
  std::string out;
  if (q_ <= 10) {
    out.reserve(sym_.size());
    for (Symbol s : sym_) out.push_back(static_cast<char>('0' + s));
  } else {
    for (std::size_t i = 0; i < sym_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(sym_[i]);
    }
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw BudgetError("q^n overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ w.q();
  for (Symbol s : w.symbols()) {
    h ^= s;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (w.size() * 0x9e3779b97f4a7c15ull));
}

}  // namespace delcode
