// Command-line front end. Exit status: 0 success, 1 invalid input, 2 internal
// failure or a violated identity.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "knotoid/analysis.hpp"
#include "knotoid/codes.hpp"
#include "knotoid/skein.hpp"

namespace fs = std::filesystem;
using namespace knotoid;
using json = nlohmann::ordered_json;

namespace {

struct Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<NamedCode> load_codes(const fs::path& path) {
  auto codes = parse_code_document(read_file(path));
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (codes[i].name.empty())
      codes[i].name = path.stem().string() + (codes.size() > 1 ? "#" + std::to_string(i + 1) : "");
  return codes;
}

NamedCode load_single(const fs::path& path) {
  auto codes = load_codes(path);
  if (codes.size() != 1)
    throw ValidationError(path.string() + " holds " + std::to_string(codes.size()) + " codes, expected one");
  return codes.front();
}

json skein_json(const SkeinReport& r) {
  return {{"crossing", r.crossing}, {"s1", r.s1},           {"lhs_plus", r.lhs_plus}, {"rhs_plus", r.rhs_plus},
          {"lhs_minus", r.lhs_minus}, {"rhs_minus", r.rhs_minus}, {"ok", r.ok}};
}

void print_reports(const std::vector<InvariantReport>& reports, bool as_json) {
  if (as_json) {
    if (reports.size() == 1) {
      std::cout << to_json(reports.front()).dump(2) << '\n';
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      std::cout << arr.dump(2) << '\n';
    }
    return;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << to_text(reports[i]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casson-type invariants of knotoids from signed Gauss codes"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file, dir, out_dir, reference, crossing;
  bool as_json = false, conjecture = false;
  std::size_t steps = 30, trials = 1;
  std::uint64_t seed = 1;
  long long family_j = 0;

  auto* compute = app.add_subcommand("compute", "Report all invariants of every code in a file");
  compute->add_option("file", file, "Code file")->required();
  compute->add_flag("--json", as_json, "JSON output");
  compute->callback([&] {
    action = [&] {
      std::vector<InvariantReport> reports;
      for (const auto& c : load_codes(file)) reports.push_back(full_report(c.code, c.name));
      print_reports(reports, as_json);
      return 0;
    };
  });

  auto* batch = app.add_subcommand("batch", "Report every *.knd file below a directory");
  batch->add_option("dir", dir, "Catalog directory")->required();
  batch->add_option("--out", out_dir, "Write one JSON report per code here");
  batch->add_flag("--json", as_json, "JSON output");
  batch->callback([&] {
    action = [&] {
      const auto entries = evaluate_catalog(dir);
      if (!out_dir.empty()) write_catalog_reports(entries, out_dir);
      std::vector<InvariantReport> reports;
      for (const auto& e : entries) reports.push_back(e.report);
      if (as_json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        std::cout << arr.dump(2) << '\n';
      } else {
        print_reports(reports, false);
      }
      return 0;
    };
  });

  auto* moves = app.add_subcommand("check-moves", "Check invariance along random Reidemeister walks");
  moves->add_option("file", file, "Code file")->required();
  moves->add_option("--steps", steps, "Moves per walk")->capture_default_str();
  moves->add_option("--seed", seed, "Seed of the first walk")->capture_default_str();
  moves->add_option("--trials", trials, "Number of walks")->capture_default_str();
  moves->callback([&] {
    action = [&] {
      const NamedCode c = load_single(file);
      const MoveCheck check = check_move_invariance(c.code, steps, seed, trials);
      if (!check.ok()) {
        std::cout << "FAIL " << c.name << ": invariants changed at step " << check.failing_step << "\n"
                  << "start: " << serialize(check.failure->start) << '\n'
                  << check.failure->transcript();
        throw Violation("move invariance violated");
      }
      std::cout << "PASS " << c.name << ": " << check.trials << " walks x " << check.steps << " steps, "
                << check.moves_applied << " moves, invariants unchanged\n";
      return 0;
    };
  });

  auto* skein = app.add_subcommand("skein", "Check the skein identity at one or every crossing");
  skein->add_option("file", file, "Code file")->required();
  skein->add_option("--crossing", crossing, "Crossing label (default: all)");
  skein->callback([&] {
    action = [&] {
      const NamedCode c = load_single(file);
      std::vector<SkeinReport> reports;
      if (!crossing.empty()) {
        reports.push_back(verify_skein(c.code, crossing));
      } else {
        for (const auto& x : c.code.labels()) reports.push_back(verify_skein(c.code, x));
      }
      bool ok = true;
      if (reports.size() == 1 && !crossing.empty()) {
        std::cout << skein_json(reports.front()).dump(2) << '\n';
      } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(skein_json(r));
        std::cout << arr.dump(2) << '\n';
      }
      for (const auto& r : reports) ok = ok && r.ok;
      if (!ok) throw Violation("skein identity violated");
      return 0;
    };
  });

  auto* family = app.add_subcommand("family", "Print the extremal family member D_j");
  family->add_option("--j", family_j, "Index j >= 1")->required();
  family->callback([&] {
    action = [&] {
      std::cout << serialize(NamedCode{"D_" + std::to_string(family_j), generate_family(family_j)}) << '\n';
      return 0;
    };
  });

  auto* bound = app.add_subcommand("bound", "Lower bound on the crossing number");
  bound->add_option("file", file, "Code file")->required();
  bound->add_flag("--conjecture", conjecture, "Also report both sides of the odd-crossing conjecture");
  bound->callback([&] {
    action = [&] {
      const NamedCode c = load_single(file);
      const InvariantReport r = full_report(c.code, c.name);
      std::cout << r.crossing_lower_bound << '\n';
      if (conjecture) {
        const OddBoundProbe p = odd_crossing_probe(r);
        std::cout << "conjecture: norm sum + 1 = " << p.lhs << ", floor(n^2/4) = " << p.rhs << " for n = "
                  << r.diagram_crossings << ", " << (p.holds ? "holds" : "does not hold") << " on this diagram\n";
      }
      return 0;
    };
  });

  auto* summary = app.add_subcommand("catalog-summary", "Summary table of a catalog directory");
  summary->add_option("dir", dir, "Catalog directory")->required();
  summary->add_option("--reference", reference, "Tab-separated table of expected values");
  summary->add_option("--out", out_dir, "Write one JSON report per code here");
  summary->callback([&] {
    action = [&] {
      const auto entries = evaluate_catalog(dir);
      if (!out_dir.empty()) write_catalog_reports(entries, out_dir);
      std::cout << summary_table(entries);
      if (reference.empty()) return 0;
      std::map<std::string, TableRow> rows;
      for (auto& row : parse_reference_table(read_file(reference))) rows[row.name] = row;
      std::size_t matched = 0, compared = 0;
      bool mismatch = false;
      std::cout << '\n';
      for (const auto& e : entries) {
        auto it = rows.find(e.report.name);
        if (it == rows.end()) {
          std::cout << e.report.name << ": no reference row\n";
          continue;
        }
        ++compared;
        const bool ok = matches_row(e.report, it->second);
        matched += ok;
        mismatch = mismatch || !ok;
        std::cout << e.report.name << ": " << (ok ? "matches" : "MISMATCH") << '\n';
      }
      std::cout << matched << " of " << compared << " compared rows match\n";
      if (mismatch) throw Violation("reference mismatch");
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const Violation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const knotoid::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
