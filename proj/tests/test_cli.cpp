// Command-line surface, run in-process: subcommand behavior, output formats,
// and the exit status contract (0 iff all checks pass, diagnostics on stderr).

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "knotwidth/cli.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = knotwidth::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

const std::string kCorpus = std::string(KNOTWIDTH_REPO_DIR) + "/corpus";
const std::string kTrefoil = kCorpus + "/trefoil.morse";

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli width") {
  SECTION("word input, records format") {
    const auto r = cli({"width", "m3M1m1M3", "--format", "records"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "input=m3M1m1M3 word=mmmMmMMM width_word=28 width_thick_thin=28 "
          "width_profile=28 bridge=4 bridge_thin=0\n");
  }
  SECTION("word input, human format") {
    const auto r = cli({"width", "m3M1m1M3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "28"));
    CHECK(contains(r.out, "bridge-thin:  no"));
  }
  SECTION("diagram input") {
    const auto r = cli({"width", kTrefoil, "--format", "records"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "word=mmMM"));
    CHECK(contains(r.out, "width_word=8"));
    CHECK(contains(r.out, "bridge=2"));
    CHECK(contains(r.out, "bridge_thin=1"));
    CHECK(contains(r.out, "components=1"));
    CHECK(contains(r.out, "writhe=3"));
  }
  SECTION("inadmissible word is a diagnostic, not a report") {
    const auto r = cli({"width", "mMmM"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "condition 2"));
  }
  SECTION("garbage input") {
    const auto r = cli({"width", "zzz"});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "invalid"));
  }
  SECTION("a link diagram has no width") {
    const auto path = std::filesystem::temp_directory_path() / "knotwidth_link_test.morse";
    {
      std::ofstream file(path);
      file << "cup 0\ncap 0\ncup 0\ncap 0\n";  // two circles
    }
    const auto r = cli({"width", path.string()});
    std::filesystem::remove(path);
    CHECK(r.code == 1);
    CHECK(contains(r.err, "components"));
  }
}

TEST_CASE("cli validate") {
  CHECK(cli({"validate", "mM"}).code == 0);
  CHECK(cli({"validate", kTrefoil}).code == 0);

  const auto bad = cli({"validate", "mMmM", "--format", "records"});
  CHECK(bad.code == 1);
  CHECK(bad.out == "input=mMmM kind=word member=0 condition=2 index=1\n");

  const auto good = cli({"validate", "m3M1m1M3", "--format", "records"});
  CHECK(good.code == 0);
  CHECK(good.out == "input=m3M1m1M3 kind=word member=1 blocks=2 bridge=4\n");
}

TEST_CASE("cli word extraction") {
  const auto r = cli({"word", kTrefoil});
  CHECK(r.code == 0);
  CHECK(r.out == "mmMM\n");

  const auto not_a_file = cli({"word", "mmMM"});
  CHECK(not_a_file.code == 1);
  CHECK(contains(not_a_file.err, "diagram"));
}

TEST_CASE("cli cable") {
  SECTION("word input") {
    const auto r = cli({"cable", "mmMM", "--q", "5", "--format", "records"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("mmmmmmmmmmMMMMMMMMMM\n", 0) == 0);
    CHECK(contains(r.out, "cable_width=200"));
    CHECK(contains(r.out, "cable_bridge=10"));
    CHECK(contains(r.out, "width_scaling_ok=1"));
    CHECK(contains(r.out, "bridge_scaling_ok=1"));
  }
  SECTION("diagram input with a coprime twist") {
    const auto r = cli({"cable", kTrefoil, "--q", "2", "--twists", "1", "--format", "records"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.rfind("cup 0\ncup 1\ncross 0 +\n", 0) == 0);  // cups then twist region
    CHECK(contains(r.out, "cable_components=1"));
    CHECK(contains(r.out, "cable_width=32"));
    CHECK(contains(r.out, "cable_bridge=4"));
    CHECK(contains(r.out, "pattern_slope=7"));  // q * writhe + t = 2*3 + 1
  }
  SECTION("multi-component cables warn with the gcd explanation") {
    const auto r = cli({"cable", kTrefoil, "--q", "2", "--format", "records"});
    CHECK(r.code == 0);
    CHECK(contains(r.err, "warning"));
    CHECK(contains(r.err, "2 components"));
    CHECK(contains(r.err, "gcd"));
    CHECK(!contains(r.out, "cable_width="));  // width applies to knots only
    CHECK(contains(r.out, "cable_bridge=4"));
  }
  SECTION("q=1, t=0 emits the object unchanged") {
    const auto r = cli({"cable", kTrefoil, "--q", "1", "--format", "records"});
    CHECK(r.code == 0);
    const std::string canonical =
        "cup 0\ncup 2\ncross 1 +\ncross 1 +\ncross 1 +\ncap 1\ncap 0\n";
    CHECK(r.out.rfind(canonical, 0) == 0);

    const auto word_identity = cli({"cable", "mmmMmMMM", "--q", "1"});
    CHECK(word_identity.out.rfind("mmmMmMMM\n", 0) == 0);
  }
  SECTION("twists are noted as ignored for words") {
    const auto r = cli({"cable", "mmMM", "--q", "2", "--twists", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.err, "ignored"));
  }
  SECTION("bad multiplicity is a usage error") {
    CHECK(cli({"cable", "mmMM", "--q", "0"}).code != 0);
  }
}

TEST_CASE("cli reduce") {
  const auto r = cli({"reduce", "m3M1m1M3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "start mmmMmMMM 28\n"
        "I:0 mmmMMM -10\n"
        "I:0 mmMM -10\n"
        "I:0 mM -6\n");

  CHECK(cli({"reduce", "mM"}).out == "start mM 2\n");
  CHECK(cli({"reduce", kTrefoil}).code == 1);
}

TEST_CASE("cli enumerate") {
  const auto r = cli({"enumerate", "--max-bridge", "2", "--max-blocks", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "mM\nmmMM\n");

  const auto full = cli({"enumerate"});
  CHECK(std::count(full.out.begin(), full.out.end(), '\n') == 64);
}

TEST_CASE("cli verify") {
  SECTION("defaults pass") {
    const auto r = cli({"verify", "--format", "records"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "result=ok words=64"));
  }
  SECTION("trivial range checks exactly one word") {
    const auto r = cli({"verify", "--max-bridge", "1", "--max-blocks", "1", "--q", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "swept 1 words"));
  }
  SECTION("human summary lists the identities") {
    const auto r = cli({"verify", "--max-bridge", "3", "--max-blocks", "2", "--q", "2,3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "width: word = thick/thin = profile"));
    CHECK(contains(r.out, "all identities hold"));
  }
  SECTION("node budget override produces the resource-limit exit") {
    ::setenv("KNOTWIDTH_NODE_BUDGET", "3", 1);
    const auto r = cli({"verify"});
    ::unsetenv("KNOTWIDTH_NODE_BUDGET");
    CHECK(r.code == 3);
    CHECK(contains(r.err, "budget"));
  }
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).code != 0);
  CHECK(cli({"frobnicate"}).code != 0);
  CHECK(cli({"width"}).code != 0);  // missing input
  CHECK(cli({"verify", "--format", "yaml"}).code != 0);

  const auto help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "cable"));
  CHECK(contains(help.out, "verify"));
}
