#pragma once

// Crossing-number bound, properness certificates, the extremal family, and
// whole-knotoid reports.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "knotoid/codes.hpp"
#include "knotoid/homology.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/skew.hpp"

namespace knotoid {

// Least n >= 0 with floor(n^2 / 4) >= norm_sum.
Integer crossing_lower_bound(Integer norm_sum);
Integer crossing_lower_bound(const ModuleElement& ch_plus, const ModuleElement& ch_minus);

enum class Properness { ProperByC, ProperByCH, Inconclusive };

std::string to_string(Properness p);

// ProperByC when C+ != C-; otherwise ProperByCH when a CH value differs from
// the same count of trivial subgroups of Z^rank; CH is skipped when absent
// (virtual).
Properness properness_certificate(const CassonValues& c, const std::optional<HomologicalValues>& ch,
                                  std::size_t rank = 1);

// x1+ x2- ... x_{2j-1}+ x_{2j}- x1- x2+ ... x_{2j-1}- x_{2j}+, all signs +1.
KnotoidCode generate_family(Integer j);

struct InvariantReport {
  std::string name;
  std::size_t diagram_crossings = 0;
  CassonValues c;
  SkewPairs pairs;
  // Absent for codes with no spherical diagram.
  std::optional<HomologicalValues> ch;
  std::optional<ClassMap> loop_classes;
  Integer norm_sum = 0;  // CH norms when present, else |C+| + |C-|
  Integer crossing_lower_bound = 0;
  Properness properness = Properness::Inconclusive;

  bool is_virtual() const noexcept { return !ch.has_value(); }
};

InvariantReport full_report(const KnotoidCode& code, const std::string& name = {});
// Uses caller-supplied homology classes (any rank) in place of the annulus pipeline.
InvariantReport full_report(const KnotoidCode& code, const std::string& name, const ClassMap& classes);

nlohmann::ordered_json to_json(const InvariantReport& report);
std::string to_text(const InvariantReport& report);

// Odd crossing number experiment: both sides of norm_sum + 1 <= floor(n^2/4)
// for the diagram's n. Never asserted.
struct OddBoundProbe {
  Integer lhs = 0;
  Integer rhs = 0;
  bool holds = false;
};
OddBoundProbe odd_crossing_probe(const InvariantReport& report);

struct MoveCheck {
  std::size_t trials = 0;
  std::size_t steps = 0;
  std::size_t moves_applied = 0;
  // The first walk along which C or CH changed, if any.
  std::optional<Walk> failure;
  std::size_t failing_step = 0;  // 1-based index into failure->steps

  bool ok() const noexcept { return !failure.has_value(); }
};

// Runs `trials` random walks (seeds seed, seed+1, ...) of `steps` moves and
// compares all four invariants of every intermediate code with the start.
// Throws NonRealizable for virtual codes.
MoveCheck check_move_invariance(const KnotoidCode& code, std::size_t steps, std::uint64_t seed,
                                std::size_t trials);

// One expected row of a reference table.
struct TableRow {
  std::string name;
  CassonValues c;
  HomologicalValues ch;
};

// Tab-separated: name, C+, C-, CH+, CH- (CH in the report serialization).
std::vector<TableRow> parse_reference_table(std::string_view text);

// Rows are compared up to the simultaneous swap (C+, CH+) <-> (C-, CH-).
bool matches_row(const InvariantReport& report, const TableRow& row);

struct CatalogEntry {
  std::filesystem::path source;
  InvariantReport report;
};

// Reads every *.knd file below `dir` (sorted by path) and reports each code
// block; files are processed in parallel, results keep the sorted order.
std::vector<CatalogEntry> evaluate_catalog(const std::filesystem::path& dir);

// Writes <out>/<name>.json per entry.
void write_catalog_reports(const std::vector<CatalogEntry>& entries, const std::filesystem::path& out);

// Plain-text table with columns #, C+, C-, CH+, CH-.
std::string summary_table(const std::vector<CatalogEntry>& entries);

}  // namespace knotoid
