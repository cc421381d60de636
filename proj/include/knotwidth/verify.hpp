// verify.hpp -- exhaustive identity sweep over the enumerated words: the three
// width formulas agree, cabling scales width by q^2 and bridge number by q,
// bridge-thinness is exactly the single-block shape, and the move deltas are
// the exact 2a_i - 2 and 4.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotwidth/errors.hpp"
#include "knotwidth/reduce.hpp"
#include "knotwidth/word.hpp"

namespace knotwidth {

struct VerifyOptions {
  std::int64_t max_bridge = 6;
  std::int64_t max_blocks = 4;
  std::vector<std::int64_t> qs = {1, 2, 3, 5};
  bool check_moves = true;
  std::size_t node_budget = default_node_bound();  // cap on enumerated words
};

struct IdentityCount {
  std::string name;
  std::size_t checks = 0;
};

struct VerifyResult {
  bool ok = true;
  bool resource_limited = false;
  std::string failure;  // description of the first failed check
  std::optional<MorseWord> counterexample;
  std::size_t words = 0;
  std::vector<IdentityCount> identities;

  std::size_t total_checks() const {
    std::size_t n = 0;
    for (const auto& id : identities) n += id.checks;
    return n;
  }
};

/// Runs the whole property suite over enumerate_zhat(max_bridge, max_blocks)
/// x qs. Stops at the first counterexample. Exceeding the node budget yields
/// a resource-limited result rather than a silent truncation.
inline VerifyResult verify_identities(const VerifyOptions& options) {
  VerifyResult r;
  r.identities = {
      {"width: word = thick/thin = profile", 0},
      {"bridge-thin iff single block", 0},
      {"cable stays admissible, blocks preserved", 0},
      {"cable width scales by q^2", 0},
      {"cable bridge scales by q", 0},
      {"type I delta is -(2a-2), result admissible", 0},
      {"type II up delta is -4, result admissible", 0},
  };
  auto& counts = r.identities;

  auto fail = [&](const MorseWord& w, const std::string& why) {
    r.ok = false;
    r.failure = why;
    r.counterexample = w;
  };

  ZhatEnumerator words(options.max_bridge, options.max_blocks);
  while (auto next = words.next()) {
    const MorseWord& sigma = *next;
    ++r.words;
    if (r.words > options.node_budget) {
      r.ok = false;
      r.resource_limited = true;
      r.failure = "word sweep exceeded the node budget of " +
                  std::to_string(options.node_budget);
      return r;
    }

    const std::int64_t w_word = width_from_word(sigma);
    const std::int64_t w_tuple = width_from_thick_thin(thick_thin(sigma));
    const std::int64_t w_profile = width_from_profile(level_profile(sigma));
    counts[0].checks += 2;
    if (w_word != w_tuple || w_word != w_profile) {
      fail(sigma, "width formulas disagree: word=" + std::to_string(w_word) +
                      " thick/thin=" + std::to_string(w_tuple) +
                      " profile=" + std::to_string(w_profile));
      return r;
    }

    const std::int64_t b = bridge_number(sigma);
    const std::size_t blocks = block_form(sigma).block_count();
    counts[1].checks += 1;
    if ((w_word == 2 * b * b) != (blocks == 1)) {
      fail(sigma, "bridge-thin characterization fails: width=" + std::to_string(w_word) +
                      " bridge=" + std::to_string(b) + " blocks=" + std::to_string(blocks));
      return r;
    }

    for (const std::int64_t q : options.qs) {
      const MorseWord cabled = cable_word(sigma, q);
      counts[2].checks += 1;
      if (!validate_zhat(cabled) || block_form(cabled).block_count() != blocks) {
        fail(sigma, "cable with q=" + std::to_string(q) + " left the admissible set");
        return r;
      }
      counts[3].checks += 1;
      if (width_from_word(cabled) != detail::checked_mul(q * q, w_word)) {
        fail(sigma, "width scaling fails for q=" + std::to_string(q) + ": got " +
                        std::to_string(width_from_word(cabled)) + ", expected " +
                        std::to_string(q * q * w_word));
        return r;
      }
      counts[4].checks += 1;
      if (bridge_number(cabled) != q * b) {
        fail(sigma, "bridge scaling fails for q=" + std::to_string(q));
        return r;
      }
    }

    if (!options.check_moves) continue;

    const ThickThinTuple t = thick_thin(sigma);
    for (std::size_t i = 0; i < blocks; ++i) {
      auto moved = try_type_i(sigma, i);
      if (!moved) continue;
      counts[5].checks += 1;
      const std::int64_t thick = t.entries[2 * i];
      const std::int64_t delta = width_from_word(*moved) - w_word;
      if (!validate_zhat(*moved) || delta != -(2 * thick - 2)) {
        fail(sigma, "type I at block " + std::to_string(i) + " gave delta " +
                        std::to_string(delta) + ", expected " + std::to_string(-(2 * thick - 2)));
        return r;
      }
    }
    for (std::size_t j = 0; j + 1 < sigma.size(); ++j) {
      auto moved = try_type_ii(sigma, j, true);
      if (!moved) continue;
      counts[6].checks += 1;
      const std::int64_t delta = width_from_word(*moved) - w_word;
      if (!validate_zhat(*moved) || delta != -4) {
        fail(sigma, "type II up at position " + std::to_string(j) + " gave delta " +
                        std::to_string(delta));
        return r;
      }
    }
  }
  return r;
}

}  // namespace knotwidth
