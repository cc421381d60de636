// diagram.hpp -- planar Morse link presentations: bottom-to-top event sequences
// of cups, caps and crossings, with validation, component tracing, word
// extraction, and the blackboard q-cabling operator.

#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "knotwidth/errors.hpp"
#include "knotwidth/word.hpp"

namespace knotwidth {

enum class EventKind { kCup, kCap, kCross };

enum class CrossSign : int { kPositive = +1, kNegative = -1 };

inline CrossSign opposite(CrossSign s) {
  return s == CrossSign::kPositive ? CrossSign::kNegative : CrossSign::kPositive;
}

/// One planar event at a strand position. Cup inserts two strands at
/// position i (0 <= i <= s), Cap joins strands i and i+1, Cross swaps them.
/// `sign` is meaningful for crossings only.
struct Event {
  EventKind kind = EventKind::kCup;
  std::size_t position = 0;
  CrossSign sign = CrossSign::kPositive;

  static Event cup(std::size_t i) { return {EventKind::kCup, i, CrossSign::kPositive}; }
  static Event cap(std::size_t i) { return {EventKind::kCap, i, CrossSign::kPositive}; }
  static Event cross(std::size_t i, CrossSign s) { return {EventKind::kCross, i, s}; }

  bool operator==(const Event& other) const {
    if (kind != other.kind || position != other.position) return false;
    return kind != EventKind::kCross || sign == other.sign;
  }
};

/// A finite event sequence read bottom-to-top. Valid diagrams start and end
/// with zero strands, never go negative, and contain at least one cup.
struct MorseDiagram {
  std::vector<Event> events;

  bool operator==(const MorseDiagram&) const = default;
};

/// Validation outcome. On failure, `event_index` is the first offending event
/// (or events.size() for end-of-diagram violations such as open strands).
struct DiagramVerdict {
  bool valid = false;
  std::size_t event_index = 0;
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

inline DiagramVerdict validate(const MorseDiagram& diagram) {
  std::size_t strands = 0;
  bool has_cup = false;
  for (std::size_t idx = 0; idx < diagram.events.size(); ++idx) {
    const Event& e = diagram.events[idx];
    switch (e.kind) {
      case EventKind::kCup:
        if (e.position > strands) {
          return {false, idx,
                  "cup position " + std::to_string(e.position) + " out of range (0.." +
                      std::to_string(strands) + ")"};
        }
        strands += 2;
        has_cup = true;
        break;
      case EventKind::kCap:
      case EventKind::kCross: {
        const char* name = (e.kind == EventKind::kCap) ? "cap" : "cross";
        if (strands < 2 || e.position > strands - 2) {
          return {false, idx,
                  std::string(name) + " at position " + std::to_string(e.position) +
                      " needs two strands there (only " + std::to_string(strands) +
                      " present)"};
        }
        if (e.kind == EventKind::kCap) strands -= 2;
        break;
      }
    }
  }
  if (!has_cup) {
    return {false, diagram.events.size(), "diagram contains no cup"};
  }
  if (strands != 0) {
    return {false, diagram.events.size(),
            std::to_string(strands) + " strands left open at the top"};
  }
  return {true, 0, "valid"};
}

namespace detail {

inline void require_valid(const MorseDiagram& diagram) {
  const DiagramVerdict v = validate(diagram);
  if (!v.valid) {
    throw InvalidDiagramError("invalid diagram at event " + std::to_string(v.event_index) +
                              ": " + v.reason);
  }
}

class UnionFind {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void merge(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  std::size_t class_count() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) n += (find(i) == i);
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Number of closed curves. Each cup contributes one arc whose two ends travel
/// upward; crossings permute positions, caps union the two arcs they join.
inline std::size_t component_count(const MorseDiagram& diagram) {
  detail::require_valid(diagram);
  detail::UnionFind uf;
  std::vector<std::size_t> at;  // arc id occupying each strand position
  for (const Event& e : diagram.events) {
    switch (e.kind) {
      case EventKind::kCup: {
        const std::size_t arc = uf.add();
        at.insert(at.begin() + static_cast<std::ptrdiff_t>(e.position), 2, arc);
        break;
      }
      case EventKind::kCap:
        uf.merge(at[e.position], at[e.position + 1]);
        at.erase(at.begin() + static_cast<std::ptrdiff_t>(e.position),
                 at.begin() + static_cast<std::ptrdiff_t>(e.position) + 2);
        break;
      case EventKind::kCross:
        std::swap(at[e.position], at[e.position + 1]);
        break;
    }
  }
  return uf.class_count();
}

namespace detail {

inline void require_knot(const MorseDiagram& diagram) {
  const std::size_t c = component_count(diagram);
  if (c != 1) {
    throw InvalidDiagramError("diagram presents a link with " + std::to_string(c) +
                              " components; a knot is required");
  }
}

}  // namespace detail

/// Raw letter sequence of the critical events: cups become 'm', caps become
/// 'M', crossings contribute nothing. No component check, so this also reads
/// off the letters of a link presentation (where the result need not be
/// admissible).
inline std::string critical_letters(const MorseDiagram& diagram) {
  detail::require_valid(diagram);
  std::string letters;
  for (const Event& e : diagram.events) {
    if (e.kind == EventKind::kCup) letters += 'm';
    if (e.kind == EventKind::kCap) letters += 'M';
  }
  return letters;
}

/// The Morse word of a knot diagram. Always a member word for valid
/// single-component input; rejects links.
inline MorseWord critical_word(const MorseDiagram& diagram) {
  detail::require_valid(diagram);
  detail::require_knot(diagram);
  return MorseWord(critical_letters(diagram));
}

/// Width of a knot diagram, evaluated through its Morse word.
inline std::int64_t width(const MorseDiagram& diagram) {
  return width_from_word(critical_word(diagram));
}

/// Number of cups.
inline std::int64_t bridge(const MorseDiagram& diagram) {
  detail::require_valid(diagram);
  std::int64_t cups = 0;
  for (const Event& e : diagram.events) cups += (e.kind == EventKind::kCup);
  return cups;
}

/// Sum of crossing signs (blackboard self-linking). Defined for any valid
/// diagram, including links, so reports on multi-component cables work.
inline std::int64_t writhe(const MorseDiagram& diagram) {
  detail::require_valid(diagram);
  std::int64_t total = 0;
  for (const Event& e : diagram.events) {
    if (e.kind == EventKind::kCross) total += static_cast<int>(e.sign);
  }
  return total;
}

/// Cable parameters: q parallel copies of every strand (the meridian
/// intersection count) plus t extra twist rows of the given sign inserted
/// above the first cup group.
struct CableParams {
  std::int64_t q = 1;
  std::int64_t twists = 0;
  CrossSign twist_sign = CrossSign::kPositive;
};

/// Blackboard q-cabling. Every strand becomes q parallel copies:
///   Cup(i)      -> Cup(iq), Cup(iq+1), ..., Cup(iq+q-1)            (nested)
///   Cap(i)      -> Cap(iq+q-1), Cap(iq+q-2), ..., Cap(iq)          (nested)
///   Cross(i, s) -> q*q crossings of sign s swapping the two bundles,
///                  Cross(iq + (q-1) - r + c, s) for r, c in 0..q-1.
/// The twist region (Cross(0, sign) ... Cross(q-2, sign), repeated t times)
/// goes immediately after the first cup group. Output strand counts are q
/// times the input's at corresponding levels.
inline MorseDiagram cable(const MorseDiagram& diagram, const CableParams& params) {
  if (params.q < 1) throw InvalidDiagramError("cable multiplicity q must be >= 1");
  if (params.twists < 0) throw InvalidDiagramError("twist count must be >= 0");
  detail::require_valid(diagram);
  detail::require_knot(diagram);

  const std::size_t q = static_cast<std::size_t>(params.q);
  MorseDiagram out;
  bool twists_placed = false;
  for (const Event& e : diagram.events) {
    const std::size_t base = e.position * q;
    switch (e.kind) {
      case EventKind::kCup:
        for (std::size_t c = 0; c < q; ++c) out.events.push_back(Event::cup(base + c));
        if (!twists_placed) {
          twists_placed = true;
          for (std::int64_t t = 0; t < params.twists; ++t) {
            for (std::size_t c = 0; c + 1 < q; ++c) {
              out.events.push_back(Event::cross(base + c, params.twist_sign));
            }
          }
        }
        break;
      case EventKind::kCap:
        for (std::size_t c = q; c-- > 0;) out.events.push_back(Event::cap(base + c));
        break;
      case EventKind::kCross:
        for (std::size_t r = 0; r < q; ++r) {
          for (std::size_t c = 0; c < q; ++c) {
            out.events.push_back(Event::cross(base + (q - 1) - r + c, e.sign));
          }
        }
        break;
    }
  }
  return out;
}

/// Crossing count, handy for the cable bookkeeping q^2 c + t (q - 1).
inline std::int64_t crossing_count(const MorseDiagram& diagram) {
  std::int64_t total = 0;
  for (const Event& e : diagram.events) total += (e.kind == EventKind::kCross);
  return total;
}

/// Parses the line-oriented diagram text: one event per line, `cup <i>`,
/// `cap <i>`, `cross <i> <+|->`; keywords are case-insensitive; '#' starts a
/// comment; blank lines are skipped. Errors carry 1-based line numbers.
inline MorseDiagram parse_diagram(std::string_view text) {
  MorseDiagram d;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line_no;
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::string lowered;
    lowered.reserve(line.size());
    for (char c : line) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    std::istringstream in(lowered);
    std::string keyword;
    if (!(in >> keyword)) continue;  // blank or comment-only line

    auto fail = [&](const std::string& why) -> MorseDiagram {
      throw ParseError("line " + std::to_string(line_no) + ": " + why, line_no);
    };

    long long index = -1;
    if (!(in >> index) || index < 0) {
      return fail("expected a nonnegative strand position after '" + keyword + "'");
    }
    const std::size_t i = static_cast<std::size_t>(index);

    if (keyword == "cup") {
      d.events.push_back(Event::cup(i));
    } else if (keyword == "cap") {
      d.events.push_back(Event::cap(i));
    } else if (keyword == "cross") {
      std::string sign;
      if (!(in >> sign) || (sign != "+" && sign != "-")) {
        return fail("expected crossing sign '+' or '-'");
      }
      d.events.push_back(Event::cross(
          i, sign == "+" ? CrossSign::kPositive : CrossSign::kNegative));
    } else {
      return fail("unknown event '" + keyword + "' (expected cup, cap or cross)");
    }
    std::string extra;
    if (in >> extra) return fail("trailing text '" + extra + "'");
  }
  return d;
}

/// Canonical diagram text: lowercase keywords, one event per line.
inline std::string emit_diagram(const MorseDiagram& diagram) {
  std::string out;
  for (const Event& e : diagram.events) {
    switch (e.kind) {
      case EventKind::kCup:
        out += "cup " + std::to_string(e.position) + "\n";
        break;
      case EventKind::kCap:
        out += "cap " + std::to_string(e.position) + "\n";
        break;
      case EventKind::kCross:
        out += "cross " + std::to_string(e.position) +
               (e.sign == CrossSign::kPositive ? " +\n" : " -\n");
        break;
    }
  }
  return out;
}

}  // namespace knotwidth
