// word.hpp -- Morse words over {m, M}, the admissible monoid, width functionals,
// bridge numbers, the cabling operator, and exhaustive enumeration.
//
// A Morse word records the bottom-to-top sequence of critical values of a knot
// position: 'm' for a minimum, 'M' for a maximum. The admissible words are the
// ones that factor as m^a1 M^b1 ... m^an M^bn with
//   (1) every exponent positive,
//   (2) strictly dominating partial sums: a1+...+aj > b1+...+bj for j < n,
//   (3) equal totals: a1+...+an = b1+...+bn.
// Equivalently: the running count of strands stays positive strictly inside the
// word and returns to zero exactly at the end.

#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "knotwidth/errors.hpp"

namespace knotwidth {

/// A finite sequence over the letters 'm' (minimum) and 'M' (maximum), ordered
/// bottom-to-top. Arbitrary sequences are representable; membership in the
/// admissible set is a separate verdict computed by validate_zhat().
class MorseWord {
 public:
  MorseWord() = default;

  /// Letters only, no sugar. Throws ParseError on any character outside {m, M}.
  explicit MorseWord(std::string_view letters) : letters_(letters) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i] != 'm' && letters_[i] != 'M') {
        throw ParseError("invalid letter '" + std::string(1, letters_[i]) +
                             "' at position " + std::to_string(i) +
                             " (expected 'm' or 'M')",
                         i);
      }
    }
  }

  /// Lenient text form: each letter may carry an exponent, written as
  /// "m^3", "m3" or "m^{3}". Whitespace between tokens is ignored.
  /// The canonical output form is always the expanded letter string.
  static MorseWord parse(std::string_view text);

  const std::string& str() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  bool operator==(const MorseWord&) const = default;
  bool operator<(const MorseWord& other) const { return letters_ < other.letters_; }

 private:
  std::string letters_;
};

inline std::ostream& operator<<(std::ostream& os, const MorseWord& w) {
  return os << w.str();
}

/// Outcome of the membership test. On failure, `condition` names the violated
/// clause (1, 2 or 3) and `index` locates it: the offending letter position
/// for condition 1, the first failing prefix index j (1-based, as in the
/// inequality) for condition 2, and the word length for condition 3.
struct ZhatVerdict {
  bool member = false;
  int condition = 0;
  std::size_t index = 0;
  std::string reason;

  explicit operator bool() const noexcept { return member; }
};

/// Exponent lists (a1..an, b1..bn) of the block factorization
/// m^a1 M^b1 ... m^an M^bn. Derived view of a word, never stored as the
/// source of truth.
struct BlockForm {
  std::vector<std::int64_t> alphas;
  std::vector<std::int64_t> betas;

  std::size_t block_count() const noexcept { return alphas.size(); }

  /// Reconstructs the expanded word; exponents of zero contribute nothing
  /// (adjacent runs merge).
  MorseWord to_word() const {
    std::string s;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      s.append(static_cast<std::size_t>(alphas[i]), 'm');
      s.append(static_cast<std::size_t>(betas[i]), 'M');
    }
    return MorseWord(s);
  }

  bool operator==(const BlockForm&) const = default;
};

/// Strand counts (x1..xp) at the regular levels between consecutive critical
/// values. Entries are even, start and end at 2, and step by +-2.
struct LevelProfile {
  std::vector<std::int64_t> counts;
  bool operator==(const LevelProfile&) const = default;
};

/// The (a1, b1, a2, ..., b_{n-1}, an) tuple of thick and thin levels: the
/// local extrema of the level profile together with the boundary thick levels.
struct ThickThinTuple {
  std::vector<std::int64_t> entries;
  bool operator==(const ThickThinTuple&) const = default;
};

namespace detail {

// Maximal-run decomposition without any membership requirement. Returns
// nullopt when the sequence cannot carry positive exponents in the
// alternating factorization (empty, starts with 'M', or ends with 'm');
// `bad_pos` is then the offending letter position.
inline std::optional<BlockForm> runs(const MorseWord& w, std::size_t* bad_pos) {
  if (w.empty()) {
    if (bad_pos) *bad_pos = 0;
    return std::nullopt;
  }
  if (w[0] != 'm') {
    if (bad_pos) *bad_pos = 0;
    return std::nullopt;
  }
  if (w[w.size() - 1] != 'M') {
    if (bad_pos) *bad_pos = w.size() - 1;
    return std::nullopt;
  }
  BlockForm f;
  std::size_t i = 0;
  while (i < w.size()) {
    std::int64_t a = 0;
    while (i < w.size() && w[i] == 'm') {
      ++a;
      ++i;
    }
    std::int64_t b = 0;
    while (i < w.size() && w[i] == 'M') {
      ++b;
      ++i;
    }
    f.alphas.push_back(a);
    f.betas.push_back(b);
  }
  return f;
}

}  // namespace detail

/// Membership test for the admissible set. Never throws; every letter
/// sequence gets a verdict.
inline ZhatVerdict validate_zhat(const MorseWord& word) {
  std::size_t bad = 0;
  auto f = detail::runs(word, &bad);
  if (!f) {
    ZhatVerdict v;
    v.condition = 1;
    v.index = bad;
    v.reason = word.empty()
                   ? "empty word has no blocks"
                   : "condition 1 fails: zero exponent at position " + std::to_string(bad);
    return v;
  }
  const std::size_t n = f->block_count();
  std::int64_t sum_a = 0;
  std::int64_t sum_b = 0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    sum_a += f->alphas[j];
    sum_b += f->betas[j];
    if (sum_a <= sum_b) {
      ZhatVerdict v;
      v.condition = 2;
      v.index = j + 1;
      v.reason = "condition 2 fails at j=" + std::to_string(j + 1) +
                 ": partial sums " + std::to_string(sum_a) + " <= " + std::to_string(sum_b);
      return v;
    }
  }
  if (n > 0) {
    sum_a += f->alphas[n - 1];
    sum_b += f->betas[n - 1];
  }
  if (sum_a != sum_b) {
    ZhatVerdict v;
    v.condition = 3;
    v.index = word.size();
    v.reason = "condition 3 fails: " + std::to_string(sum_a) + " minima vs " +
               std::to_string(sum_b) + " maxima";
    return v;
  }
  ZhatVerdict v;
  v.member = true;
  v.reason = "member";
  return v;
}

namespace detail {

inline void require_member(const MorseWord& word) {
  const ZhatVerdict v = validate_zhat(word);
  if (!v.member) {
    throw InvalidWordError("word '" + word.str() + "' is not admissible: " + v.reason);
  }
}

}  // namespace detail

/// Run-length factorization into alternating m- and M-blocks.
/// Rejects non-members.
inline BlockForm block_form(const MorseWord& word) {
  detail::require_member(word);
  return *detail::runs(word, nullptr);
}

/// Strand counts at the p regular levels of a member word of length p+1:
/// twice the running surplus of minima over maxima after each proper prefix.
inline LevelProfile level_profile(const MorseWord& word) {
  detail::require_member(word);
  LevelProfile p;
  p.counts.reserve(word.size() - 1);
  std::int64_t count = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    count += (word[i] == 'm') ? 2 : -2;
    p.counts.push_back(count);
  }
  return p;
}

/// Width as the sum of regular-level strand counts.
inline std::int64_t width_from_profile(const LevelProfile& profile) {
  std::int64_t total = 0;
  for (std::int64_t x : profile.counts) total = detail::checked_add(total, x);
  return total;
}

/// Thick/thin tuple of a member word:
/// (2 a1, 2(a1-b1), 2(a1-b1+a2), ..., 2(a1-b1+...+an)).
inline ThickThinTuple thick_thin(const MorseWord& word) {
  const BlockForm f = block_form(word);
  ThickThinTuple t;
  t.entries.reserve(2 * f.block_count() - 1);
  std::int64_t level = 0;
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    level += 2 * f.alphas[i];
    t.entries.push_back(level);  // thick level a_i
    if (i + 1 < f.block_count()) {
      level -= 2 * f.betas[i];
      t.entries.push_back(level);  // thin level b_i
    }
  }
  return t;
}

/// Width from the thick/thin tuple: (sum a_i^2 - sum b_i^2) / 2.
/// Thick entries sit at even positions, thin entries at odd positions.
inline std::int64_t width_from_thick_thin(const ThickThinTuple& tuple) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < tuple.entries.size(); ++i) {
    const std::int64_t sq = detail::checked_mul(tuple.entries[i], tuple.entries[i]);
    total = (i % 2 == 0) ? detail::checked_add(total, sq) : detail::checked_sub(total, sq);
  }
  return total / 2;
}

/// Width from the block exponents: 2 (sum a_i)^2 - 4 sum_{i>j} a_i b_j.
/// Exact integer arithmetic throughout; overflow is a hard error.
inline std::int64_t width_from_word(const MorseWord& word) {
  const BlockForm f = block_form(word);
  std::int64_t total_a = 0;
  std::int64_t cross = 0;
  std::int64_t beta_prefix = 0;
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    cross = detail::checked_add(cross, detail::checked_mul(f.alphas[i], beta_prefix));
    beta_prefix = detail::checked_add(beta_prefix, f.betas[i]);
    total_a = detail::checked_add(total_a, f.alphas[i]);
  }
  const std::int64_t square = detail::checked_mul(total_a, total_a);
  return detail::checked_sub(detail::checked_mul(2, square), detail::checked_mul(4, cross));
}

/// Number of maxima (equivalently minima) of a member word.
inline std::int64_t bridge_number(const MorseWord& word) {
  detail::require_member(word);
  std::int64_t n = 0;
  for (char c : word) n += (c == 'm');
  return n;
}

/// The cable of a word: every block exponent multiplied by q, i.e. every
/// letter repeated q times. Members map to members with the same block count.
inline MorseWord cable_word(const MorseWord& word, std::int64_t q) {
  if (q < 1) throw InvalidWordError("cable multiplicity q must be >= 1");
  detail::require_member(word);
  std::string s;
  s.reserve(word.size() * static_cast<std::size_t>(q));
  for (char c : word) s.append(static_cast<std::size_t>(q), c);
  return MorseWord(s);
}

/// True when all maxima sit above all minima, i.e. the word is a single block.
inline bool is_bridge_word(const MorseWord& word) {
  return block_form(word).block_count() == 1;
}

/// True when width equals twice the squared bridge number. At word level this
/// holds exactly for the single-block words m^b M^b.
inline bool is_bridge_thin(const MorseWord& word) {
  const std::int64_t b = bridge_number(word);
  return width_from_word(word) == detail::checked_mul(2, detail::checked_mul(b, b));
}

namespace detail {

// Lexicographic successor of a composition into positive parts (fixed sum and
// length). Returns false from the last composition.
inline bool next_composition(std::vector<std::int64_t>& c) {
  const std::size_t n = c.size();
  if (n <= 1) return false;
  std::int64_t tail = 0;
  for (std::size_t p = n - 1; p-- > 0;) {
    tail += c[p + 1];
    const std::int64_t min_tail = static_cast<std::int64_t>(n - 1 - p);
    if (tail > min_tail) {
      c[p] += 1;
      for (std::size_t k = p + 1; k + 1 < n; ++k) c[k] = 1;
      c[n - 1] = tail - min_tail;
      return true;
    }
  }
  return false;
}

inline std::vector<std::int64_t> first_composition(std::int64_t sum, std::int64_t parts) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(parts), 1);
  c.back() = sum - (parts - 1);
  return c;
}

inline bool dominates(const std::vector<std::int64_t>& alphas,
                      const std::vector<std::int64_t>& betas) {
  std::int64_t sa = 0;
  std::int64_t sb = 0;
  for (std::size_t j = 0; j + 1 < alphas.size(); ++j) {
    sa += alphas[j];
    sb += betas[j];
    if (sa <= sb) return false;
  }
  return true;
}

}  // namespace detail

/// Streams every member word with bridge number <= max_bridge and block count
/// <= max_blocks, each exactly once, in a fixed documented order:
/// ascending bridge number, then ascending block count, then lexicographic on
/// the alpha exponents, then lexicographic on the beta exponents.
class ZhatEnumerator {
 public:
  ZhatEnumerator(std::int64_t max_bridge, std::int64_t max_blocks)
      : max_bridge_(max_bridge), max_blocks_(max_blocks) {
    if (max_bridge < 1 || max_blocks < 1) {
      throw Error("enumeration bounds must be >= 1");
    }
    bridge_ = 1;
    blocks_ = 1;
    alpha_ = detail::first_composition(bridge_, blocks_);
    beta_ = detail::first_composition(bridge_, blocks_);
    // the first cell always holds the one-bridge word, which is admissible
  }

  /// Next word in order, or nullopt when the range is exhausted.
  std::optional<MorseWord> next() {
    if (done_) return std::nullopt;
    BlockForm f;
    f.alphas = alpha_;
    f.betas = beta_;
    MorseWord out = f.to_word();
    advance();
    return out;
  }

 private:
  void advance() {
    for (;;) {
      if (!detail::next_composition(beta_)) {
        if (!detail::next_composition(alpha_)) {
          if (!next_shape()) {
            done_ = true;
            return;
          }
        } else {
          beta_ = detail::first_composition(bridge_, blocks_);
        }
      }
      if (detail::dominates(alpha_, beta_)) return;
    }
  }

  // Next (bridge, blocks) cell; block count never exceeds the bridge number.
  bool next_shape() {
    if (blocks_ < std::min(max_blocks_, bridge_)) {
      ++blocks_;
    } else if (bridge_ < max_bridge_) {
      ++bridge_;
      blocks_ = 1;
    } else {
      return false;
    }
    alpha_ = detail::first_composition(bridge_, blocks_);
    beta_ = detail::first_composition(bridge_, blocks_);
    return true;
  }

  std::int64_t max_bridge_;
  std::int64_t max_blocks_;
  std::int64_t bridge_ = 0;
  std::int64_t blocks_ = 0;
  std::vector<std::int64_t> alpha_;
  std::vector<std::int64_t> beta_;
  bool done_ = false;
};

/// Drains a ZhatEnumerator into a vector.
inline std::vector<MorseWord> enumerate_zhat(std::int64_t max_bridge, std::int64_t max_blocks) {
  ZhatEnumerator e(max_bridge, max_blocks);
  std::vector<MorseWord> out;
  while (auto w = e.next()) out.push_back(*w);
  return out;
}

inline MorseWord MorseWord::parse(std::string_view text) {
  std::string expanded;
  std::size_t i = 0;
  const auto npos = text.size();
  while (i < npos) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'm' && c != 'M') {
      throw ParseError("invalid character '" + std::string(1, c) + "' at position " +
                           std::to_string(i) + " (expected 'm' or 'M')",
                       i);
    }
    ++i;
    std::int64_t exponent = 1;
    bool caret = false;
    bool brace = false;
    if (i < npos && text[i] == '^') {
      caret = true;
      ++i;
      if (i < npos && text[i] == '{') {
        brace = true;
        ++i;
      }
    }
    if (i < npos && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exponent = 0;
      while (i < npos && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exponent = detail::checked_add(detail::checked_mul(exponent, 10),
                                       static_cast<std::int64_t>(text[i] - '0'));
        ++i;
      }
      if (exponent == 0) {
        throw ParseError("exponent must be positive at position " + std::to_string(i - 1),
                         i - 1);
      }
    } else if (caret) {
      throw ParseError("'^' must be followed by digits at position " + std::to_string(i), i);
    }
    if (brace) {
      if (i >= npos || text[i] != '}') {
        throw ParseError("unterminated '{' exponent at position " + std::to_string(i), i);
      }
      ++i;
    }
    expanded.append(static_cast<std::size_t>(exponent), c);
  }
  return MorseWord(expanded);
}

/// Block-exponent rendering for humans, e.g. "m^3 M m M^3". The canonical
/// machine form stays the expanded letter string.
inline std::string block_string(const MorseWord& word) {
  const BlockForm f = block_form(word);
  std::string out;
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    if (!out.empty()) out += ' ';
    out += 'm';
    if (f.alphas[i] > 1) out += '^' + std::to_string(f.alphas[i]);
    out += " M";
    if (f.betas[i] > 1) out += '^' + std::to_string(f.betas[i]);
  }
  return out;
}

}  // namespace knotwidth
