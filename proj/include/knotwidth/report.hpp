// report.hpp -- aggregated quantities for one input, rendered for humans or as
// one machine-readable record per line.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "knotwidth/diagram.hpp"
#include "knotwidth/word.hpp"

namespace knotwidth {

/// Scaling data attached to a report when a cable step ran.
struct CableInfo {
  std::int64_t q = 1;
  std::int64_t twists = 0;
  CrossSign sign = CrossSign::kPositive;
  std::int64_t input_width = 0;
  std::int64_t input_bridge = 0;
  std::optional<std::int64_t> output_width;  // absent when the cable is a link
  std::int64_t output_bridge = 0;
  bool width_scaling_ok = false;
  bool bridge_scaling_ok = false;
  std::optional<std::size_t> components;       // diagrams only
  std::optional<std::int64_t> writhe;          // diagrams only
  std::optional<std::int64_t> pattern_slope;   // p = q * writhe(input) + sign * t
};

struct Report {
  std::string input;
  MorseWord word;
  std::int64_t width_word = 0;
  std::int64_t width_thick_thin = 0;
  std::int64_t width_profile = 0;
  std::int64_t bridge = 0;
  bool bridge_thin = false;
  std::optional<std::size_t> components;  // set for diagram inputs
  std::optional<std::int64_t> writhe;     // set for diagram inputs
  std::optional<CableInfo> cable;
};

/// Computes the three widths, bridge number and bridge-thin flag of a member
/// word. The three width fields agree on every admissible input.
inline Report make_report(std::string input_id, const MorseWord& word) {
  Report r;
  r.input = std::move(input_id);
  r.word = word;
  r.width_word = width_from_word(word);
  r.width_thick_thin = width_from_thick_thin(thick_thin(word));
  r.width_profile = width_from_profile(level_profile(word));
  r.bridge = bridge_number(word);
  r.bridge_thin = is_bridge_thin(word);
  return r;
}

inline std::string format_human(const Report& r) {
  std::string out;
  out += "input:        " + r.input + "\n";
  out += "word:         " + r.word.str() + "  (" + block_string(r.word) + ")\n";
  out += "width:        " + std::to_string(r.width_word) +
         "  [block formula " + std::to_string(r.width_word) +
         ", thick/thin " + std::to_string(r.width_thick_thin) +
         ", level sum " + std::to_string(r.width_profile) + "]\n";
  out += "bridge:       " + std::to_string(r.bridge) + "\n";
  out += std::string("bridge-thin:  ") + (r.bridge_thin ? "yes" : "no") + "\n";
  if (r.components) out += "components:   " + std::to_string(*r.components) + "\n";
  if (r.writhe) out += "writhe:       " + std::to_string(*r.writhe) + "\n";
  if (r.cable) {
    const CableInfo& c = *r.cable;
    out += "cable:        q=" + std::to_string(c.q) + " twists=" + std::to_string(c.twists) +
           " sign=" + (c.sign == CrossSign::kPositive ? "+" : "-") + "\n";
    if (c.output_width) {
      out += "cable width:  " + std::to_string(*c.output_width) + " = q^2 * " +
             std::to_string(c.input_width) + (c.width_scaling_ok ? "  (ok)" : "  (MISMATCH)") +
             "\n";
    } else {
      out += "cable width:  n/a (cable is a link)\n";
    }
    out += "cable bridge: " + std::to_string(c.output_bridge) + " = q * " +
           std::to_string(c.input_bridge) + (c.bridge_scaling_ok ? "  (ok)" : "  (MISMATCH)") +
           "\n";
    if (c.components) out += "cable components: " + std::to_string(*c.components) + "\n";
    if (c.writhe) out += "cable writhe: " + std::to_string(*c.writhe) + "\n";
    if (c.pattern_slope) out += "pattern slope p: " + std::to_string(*c.pattern_slope) + "\n";
  }
  return out;
}

inline std::string format_record(const Report& r) {
  std::string out = "input=" + r.input + " word=" + r.word.str() +
                    " width_word=" + std::to_string(r.width_word) +
                    " width_thick_thin=" + std::to_string(r.width_thick_thin) +
                    " width_profile=" + std::to_string(r.width_profile) +
                    " bridge=" + std::to_string(r.bridge) +
                    " bridge_thin=" + (r.bridge_thin ? "1" : "0");
  if (r.components) out += " components=" + std::to_string(*r.components);
  if (r.writhe) out += " writhe=" + std::to_string(*r.writhe);
  if (r.cable) {
    const CableInfo& c = *r.cable;
    out += " q=" + std::to_string(c.q) + " twists=" + std::to_string(c.twists) +
           " sign=" + (c.sign == CrossSign::kPositive ? "+" : "-");
    if (c.output_width) out += " cable_width=" + std::to_string(*c.output_width);
    out += " cable_bridge=" + std::to_string(c.output_bridge);
    out += std::string(" width_scaling_ok=") + (c.width_scaling_ok ? "1" : "0");
    out += std::string(" bridge_scaling_ok=") + (c.bridge_scaling_ok ? "1" : "0");
    if (c.components) out += " cable_components=" + std::to_string(*c.components);
    if (c.writhe) out += " cable_writhe=" + std::to_string(*c.writhe);
    if (c.pattern_slope) out += " pattern_slope=" + std::to_string(*c.pattern_slope);
  }
  out += "\n";
  return out;
}

}  // namespace knotwidth
