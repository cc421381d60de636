// oracles.hpp -- independent brute-force reference implementations used by the
// tests. These deliberately avoid the library's code paths: widths are summed
// letter by letter, enumeration is a recursive composition search over
// exponent lists, and components are counted by walking the closed curves
// port by port instead of by union-find.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotwidth/diagram.hpp"

namespace oracle {

// Width as the literal sum of running strand counts over the proper prefixes.
inline std::int64_t width_by_level_sum(const std::string& letters) {
  std::int64_t count = 0;
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    count += (letters[i] == 'm') ? 2 : -2;
    total += count;
  }
  return total;
}

namespace detail {

inline void compositions(std::int64_t sum, std::int64_t parts,
                         std::vector<std::int64_t>& prefix,
                         std::vector<std::vector<std::int64_t>>& out) {
  if (parts == 1) {
    prefix.push_back(sum);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::int64_t first = 1; first <= sum - parts + 1; ++first) {
    prefix.push_back(first);
    compositions(sum - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<std::int64_t>> compositions(std::int64_t sum, std::int64_t parts) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> prefix;
  if (parts >= 1 && sum >= parts) compositions(sum, parts, prefix, out);
  return out;
}

}  // namespace detail

// Every admissible word with bridge number <= max_bridge and block count
// <= max_blocks, generated by filtering all alternating composition pairs
// through the three membership conditions, in the documented order.
inline std::vector<std::string> enumerate_words(std::int64_t max_bridge,
                                                std::int64_t max_blocks) {
  std::vector<std::string> out;
  for (std::int64_t b = 1; b <= max_bridge; ++b) {
    for (std::int64_t n = 1; n <= max_blocks && n <= b; ++n) {
      for (const auto& alpha : detail::compositions(b, n)) {
        for (const auto& beta : detail::compositions(b, n)) {
          bool ok = true;  // condition 1 holds by construction (parts >= 1)
          std::int64_t sa = 0;
          std::int64_t sb = 0;
          for (std::int64_t j = 0; j + 1 < n; ++j) {
            sa += alpha[static_cast<std::size_t>(j)];
            sb += beta[static_cast<std::size_t>(j)];
            if (sa <= sb) {
              ok = false;
              break;
            }
          }
          // condition 3 holds by construction (both sum to b)
          if (!ok) continue;
          std::string word;
          for (std::int64_t j = 0; j < n; ++j) {
            word.append(static_cast<std::size_t>(alpha[static_cast<std::size_t>(j)]), 'm');
            word.append(static_cast<std::size_t>(beta[static_cast<std::size_t>(j)]), 'M');
          }
          out.push_back(word);
        }
      }
    }
  }
  return out;
}

// Component count by explicit curve tracing. Each cup k owns ports 2k and
// 2k+1 joined by the cup itself; caps record the second pairing; closed
// curves alternate cup and cap edges.
inline std::size_t trace_components(const knotwidth::MorseDiagram& diagram) {
  using knotwidth::EventKind;
  std::vector<std::size_t> at;        // port occupying each strand position
  std::vector<std::size_t> cap_mate;  // filled as caps arrive
  std::size_t ports = 0;
  for (const auto& e : diagram.events) {
    switch (e.kind) {
      case EventKind::kCup:
        at.insert(at.begin() + static_cast<std::ptrdiff_t>(e.position), {ports, ports + 1});
        ports += 2;
        cap_mate.resize(ports, SIZE_MAX);
        break;
      case EventKind::kCap: {
        const std::size_t a = at[e.position];
        const std::size_t b = at[e.position + 1];
        cap_mate[a] = b;
        cap_mate[b] = a;
        at.erase(at.begin() + static_cast<std::ptrdiff_t>(e.position),
                 at.begin() + static_cast<std::ptrdiff_t>(e.position) + 2);
        break;
      }
      case EventKind::kCross:
        std::swap(at[e.position], at[e.position + 1]);
        break;
    }
  }
  std::vector<bool> seen(ports, false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < ports; ++start) {
    if (seen[start]) continue;
    ++cycles;
    std::size_t p = start;
    do {
      seen[p] = true;
      const std::size_t cup_other = (p % 2 == 0) ? p + 1 : p - 1;
      seen[cup_other] = true;
      p = cap_mate[cup_other];
    } while (p != start);
  }
  return cycles;
}

// Sum of strand counts in the gaps between consecutive critical (cup/cap)
// events; crossings do not open a new regular level.
inline std::int64_t diagram_width_by_levels(const knotwidth::MorseDiagram& diagram) {
  using knotwidth::EventKind;
  std::int64_t strands = 0;
  std::vector<std::int64_t> counts_after_critical;
  for (const auto& e : diagram.events) {
    if (e.kind == EventKind::kCup) {
      strands += 2;
      counts_after_critical.push_back(strands);
    } else if (e.kind == EventKind::kCap) {
      strands -= 2;
      counts_after_critical.push_back(strands);
    }
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < counts_after_critical.size(); ++i) {
    total += counts_after_critical[i];
  }
  return total;
}

// Largest strand count reached anywhere in the diagram.
inline std::int64_t max_strands(const knotwidth::MorseDiagram& diagram) {
  using knotwidth::EventKind;
  std::int64_t strands = 0;
  std::int64_t best = 0;
  for (const auto& e : diagram.events) {
    if (e.kind == EventKind::kCup) strands += 2;
    if (e.kind == EventKind::kCap) strands -= 2;
    best = std::max(best, strands);
  }
  return best;
}

}  // namespace oracle
