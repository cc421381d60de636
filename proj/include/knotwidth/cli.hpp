// cli.hpp -- command-line surface. Kept in a header so the test suite can run
// subcommands in-process; tools/knotwidth_main.cpp is a thin wrapper.
//
// Exit codes: 0 success, 1 failed validation or identity, 3 resource limit,
// anything else comes from argument parsing.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotwidth/diagram.hpp"
#include "knotwidth/reduce.hpp"
#include "knotwidth/report.hpp"
#include "knotwidth/verify.hpp"
#include "knotwidth/word.hpp"

namespace knotwidth::cli {

namespace detail {

struct Input {
  std::string id;
  bool is_diagram = false;
  MorseWord word;
  MorseDiagram diagram;
};

// An argument naming an existing file is read as diagram text; anything else
// is parsed as word text.
inline Input load_input(const std::string& arg) {
  Input in;
  in.id = arg;
  if (std::filesystem::exists(arg)) {
    std::ifstream file(arg);
    if (!file) throw Error("cannot read '" + arg + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    in.is_diagram = true;
    in.diagram = parse_diagram(buffer.str());
  } else {
    in.word = MorseWord::parse(arg);
  }
  return in;
}

inline std::string slug(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

}  // namespace detail

inline int cmd_validate(const detail::Input& in, const std::string& format, std::ostream& out) {
  if (in.is_diagram) {
    const DiagramVerdict v = validate(in.diagram);
    if (format == "records") {
      out << "input=" << in.id << " kind=diagram valid=" << (v.valid ? 1 : 0);
      if (v.valid) {
        out << " components=" << component_count(in.diagram);
      } else {
        out << " event=" << v.event_index;
      }
      out << "\n";
    } else if (v.valid) {
      out << in.id << ": valid diagram, " << component_count(in.diagram) << " component(s)\n";
    } else {
      out << in.id << ": invalid at event " << v.event_index << ": " << v.reason << "\n";
    }
    return v.valid ? 0 : 1;
  }
  const ZhatVerdict v = validate_zhat(in.word);
  if (format == "records") {
    out << "input=" << in.id << " kind=word member=" << (v.member ? 1 : 0);
    if (v.member) {
      out << " blocks=" << block_form(in.word).block_count()
          << " bridge=" << bridge_number(in.word);
    } else {
      out << " condition=" << v.condition << " index=" << v.index;
    }
    out << "\n";
  } else if (v.member) {
    out << in.word.str() << ": admissible (" << block_form(in.word).block_count()
        << " block(s), bridge " << bridge_number(in.word) << ")\n";
  } else {
    out << in.word.str() << ": not admissible: " << v.reason << "\n";
  }
  return v.member ? 0 : 1;
}

inline int cmd_width(const detail::Input& in, const std::string& format, std::ostream& out) {
  MorseWord word = in.is_diagram ? critical_word(in.diagram) : in.word;
  Report r = make_report(in.id, word);
  if (in.is_diagram) {
    r.components = component_count(in.diagram);
    r.writhe = writhe(in.diagram);
  }
  out << (format == "records" ? format_record(r) : format_human(r));
  return 0;
}

inline int cmd_word(const detail::Input& in, std::ostream& out, std::ostream& err) {
  if (!in.is_diagram) {
    err << "error: 'word' expects a diagram file, got word text\n";
    return 1;
  }
  out << critical_word(in.diagram).str() << "\n";
  return 0;
}

inline int cmd_cable(const detail::Input& in, std::int64_t q, std::int64_t twists,
                     CrossSign sign, const std::string& format, std::ostream& out,
                     std::ostream& err) {
  if (!in.is_diagram) {
    if (twists != 0) err << "note: twists apply to diagrams; ignored for word input\n";
    const MorseWord cabled = cable_word(in.word, q);
    out << cabled.str() << "\n";
    Report r = make_report(in.id, in.word);
    CableInfo c;
    c.q = q;
    c.twists = 0;
    c.sign = sign;
    c.input_width = r.width_word;
    c.input_bridge = r.bridge;
    c.output_width = width_from_word(cabled);
    c.output_bridge = bridge_number(cabled);
    c.width_scaling_ok = *c.output_width == q * q * c.input_width;
    c.bridge_scaling_ok = c.output_bridge == q * c.input_bridge;
    r.cable = c;
    out << (format == "records" ? format_record(r) : format_human(r));
    return 0;
  }

  const MorseDiagram cabled = cable(in.diagram, CableParams{q, twists, sign});
  out << emit_diagram(cabled);

  const std::size_t components = component_count(cabled);
  if (components != 1) {
    err << "warning: cable has " << components << " components (the twist count t=" << twists
        << " shares gcd(t, q) = " << detail::gcd64(twists, q) << " with q=" << q
        << "); width applies to knots only\n";
  }

  Report r = make_report(in.id, critical_word(in.diagram));
  r.components = component_count(in.diagram);
  r.writhe = writhe(in.diagram);
  CableInfo c;
  c.q = q;
  c.twists = twists;
  c.sign = sign;
  c.input_width = r.width_word;
  c.input_bridge = r.bridge;
  c.output_bridge = bridge(cabled);
  c.bridge_scaling_ok = c.output_bridge == q * c.input_bridge;
  c.components = components;
  c.writhe = writhe(cabled);
  c.pattern_slope = q * *r.writhe + (sign == CrossSign::kPositive ? twists : -twists);
  if (components == 1) {
    c.output_width = width(cabled);
    c.width_scaling_ok = *c.output_width == q * q * c.input_width;
  }
  r.cable = c;
  out << (format == "records" ? format_record(r) : format_human(r));
  return 0;
}

inline int cmd_reduce(const detail::Input& in, std::ostream& out, std::ostream& err) {
  if (in.is_diagram) {
    err << "error: 'reduce' operates on words; extract one first with 'word'\n";
    return 1;
  }
  out << format_trace(reduce(in.word));
  return 0;
}

inline int cmd_enumerate(std::int64_t max_bridge, std::int64_t max_blocks, std::ostream& out) {
  ZhatEnumerator e(max_bridge, max_blocks);
  while (auto w = e.next()) out << w->str() << "\n";
  return 0;
}

inline int cmd_verify(const VerifyOptions& options, const std::string& format, std::ostream& out,
                      std::ostream& err) {
  const VerifyResult r = verify_identities(options);
  if (format == "records") {
    for (const IdentityCount& id : r.identities) {
      out << "identity=" << detail::slug(id.name) << " checks=" << id.checks << "\n";
    }
    out << "result=" << (r.ok ? "ok" : (r.resource_limited ? "resource_limit" : "fail"))
        << " words=" << r.words << " checks=" << r.total_checks() << "\n";
  } else {
    out << "swept " << r.words << " words (max bridge " << options.max_bridge << ", max blocks "
        << options.max_blocks << "), q in {";
    for (std::size_t i = 0; i < options.qs.size(); ++i) {
      out << (i ? ", " : "") << options.qs[i];
    }
    out << "}\n";
    for (const IdentityCount& id : r.identities) {
      out << "  " << id.name << ": " << id.checks << " checks\n";
    }
    if (r.ok) out << "all identities hold (" << r.total_checks() << " checks)\n";
  }
  if (r.resource_limited) {
    err << "error: " << r.failure << "\n";
    return 3;
  }
  if (!r.ok) {
    err << "FAIL: " << r.failure << "\n";
    if (r.counterexample) err << "counterexample: " << r.counterexample->str() << "\n";
    return 1;
  }
  return 0;
}

/// Runs one invocation. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"width calculus for Morse positions of knots"};
  app.name("knotwidth");
  app.require_subcommand(1);

  std::string format = "human";
  std::string input_text;
  std::int64_t q = 1;
  std::int64_t twists = 0;
  std::string sign = "+";
  std::int64_t max_bridge = 6;
  std::int64_t max_blocks = 4;
  std::vector<std::int64_t> qs;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output style")
        ->check(CLI::IsMember({"human", "records"}));
  };
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input_text, "word text, or path to a diagram file")->required();
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a word or diagram");
  add_input(validate_cmd);
  add_format(validate_cmd);

  CLI::App* width_cmd = app.add_subcommand("width", "widths, bridge number, bridge-thinness");
  add_input(width_cmd);
  add_format(width_cmd);

  CLI::App* word_cmd = app.add_subcommand("word", "extract the Morse word of a diagram");
  add_input(word_cmd);
  add_format(word_cmd);

  CLI::App* cable_cmd = app.add_subcommand("cable", "q-cable a word or diagram");
  add_input(cable_cmd);
  add_format(cable_cmd);
  cable_cmd->add_option("--q", q, "strand multiplicity")->check(CLI::PositiveNumber);
  cable_cmd->add_option("--twists", twists, "twist rows above the first cup group")
      ->check(CLI::NonNegativeNumber);
  cable_cmd->add_option("--sign", sign, "twist crossing sign")
      ->check(CLI::IsMember({"+", "-"}));

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "greedy width reduction trace");
  add_input(reduce_cmd);
  add_format(reduce_cmd);

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list admissible words in order");
  add_format(enumerate_cmd);
  enumerate_cmd->add_option("--max-bridge", max_bridge, "bridge number bound")
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--max-blocks", max_blocks, "block count bound")
      ->check(CLI::PositiveNumber);

  CLI::App* verify_cmd = app.add_subcommand("verify", "replay the scaling identities");
  add_format(verify_cmd);
  verify_cmd->add_option("--max-bridge", max_bridge, "bridge number bound")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-blocks", max_blocks, "block count bound")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--q", qs, "cable multiplicities (comma separated)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (app.got_subcommand(enumerate_cmd)) return cmd_enumerate(max_bridge, max_blocks, out);
    if (app.got_subcommand(verify_cmd)) {
      VerifyOptions options;
      options.max_bridge = max_bridge;
      options.max_blocks = max_blocks;
      if (!qs.empty()) options.qs = qs;
      return cmd_verify(options, format, out, err);
    }

    const detail::Input in = detail::load_input(input_text);
    if (app.got_subcommand(validate_cmd)) return cmd_validate(in, format, out);
    if (app.got_subcommand(width_cmd)) return cmd_width(in, format, out);
    if (app.got_subcommand(word_cmd)) return cmd_word(in, out, err);
    if (app.got_subcommand(reduce_cmd)) return cmd_reduce(in, out, err);
    if (app.got_subcommand(cable_cmd)) {
      return cmd_cable(in, q, twists,
                       sign == "+" ? CrossSign::kPositive : CrossSign::kNegative, format, out,
                       err);
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace knotwidth::cli
