#pragma once

// Batch front end: jobs over parsed input files, deterministic TSV/JSON reports.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "idealis/cohomology.hpp"
#include "idealis/io.hpp"
#include "idealis/linalg.hpp"

namespace idealis {

enum class Analysis { ass, depth, closure, symbolic, stab, cm, bounds, verify_theorems };
enum class Format { tsv, json };
/// Which ideal a graph or hypergraph stands for.
enum class GraphIdeal { edge, cover };

struct JobSpec {
  std::string input;
  Analysis analysis = Analysis::depth;
  int n_max = 4;
  FieldChar field;
  Format format = Format::tsv;
  std::optional<std::int64_t> box;
  GraphIdeal graph_ideal = GraphIdeal::edge;
  /// Power family for `stab`.
  PowerKind family = PowerKind::ordinary;
};

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitParse = 2, kExitRefusal = 3, kExitCheckFailed = 4 };

const char* to_string(Analysis a);
std::optional<Analysis> parse_analysis(std::string_view name);

/// The monomial ideal an input object stands for.
MonomialIdeal ideal_of(const InputObject& object, GraphIdeal choice);

struct CheckResult {
  std::string name;
  enum Status { pass, fail, skip } status = pass;
  std::string detail;
};

/// Window checks of the structural results that apply to the input kind.
std::vector<CheckResult> verify_theorems(const InputObject& object, const JobSpec& job);

struct Report {
  std::string text;
  int exit_code = kExitOk;
};

/// Throws InvalidArgument when the analysis does not apply to the input, Refusal on size caps.
Report run(const JobSpec& job, const InputObject& object);

/// Full command line handling; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace idealis
