#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pseudoseg/arrangement.hpp"
#include "pseudoseg/error.hpp"
#include "pseudoseg/geometry.hpp"
#include "pseudoseg/io.hpp"
#include "pseudoseg/lab.hpp"
#include "pseudoseg/quasigrid.hpp"
#include "pseudoseg/validate.hpp"

namespace pseudoseg::cli {

/// Exit codes; a stable contract.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int violations = 2;
inline constexpr int parse = 3;
inline constexpr int not_realizable = 4;
inline constexpr int contradicts_lemma = 5;
inline constexpr int witness_found = 6;
inline constexpr int budget_exhausted = 7;
}  // namespace exit_code

int exit_code_for(ErrorCode code);

struct LoadOptions {
  std::optional<double> epsilon;
  std::optional<std::uint64_t> jitter_seed;
  std::optional<double> jitter;
};

struct LoadedInput {
  std::string path;
  std::string sha256;
  FamilyFile file;
  CombinatorialFamily family;
  std::optional<Drawing> drawing;  // geometric and SVG inputs
};

std::string sha256_hex(std::string_view bytes);

/// Family files (either mode) or SVG path data (by the .svg extension).
LoadedInput load_input(const std::string& path, const LoadOptions& options = {});

nlohmann::json validation_json(const ValidationReport& r);
nlohmann::json arrangement_json(const Arrangement& a);
nlohmann::json certificate_json(const QuasiGridCertificate& c);
nlohmann::json decomposition_json(const DecompositionReport& r);
nlohmann::json probe_json(const BoundProbe& p);

/// Deterministic SVG 1.1: faces shaded, crossings as circles, touchings as
/// diamonds, hubs as dots. Geometric inputs keep their coordinates;
/// combinatorial ones get a barycentric layout per component.
std::string render_svg(const CombinatorialFamily& f, const Arrangement& a, const Drawing* drawing = nullptr);

int cmd_validate(const std::string& path, const LoadOptions& load, std::ostream& out, std::ostream& err);

struct AnalyzeOptions {
  LoadOptions load;
  std::optional<std::string> svg;
  bool probe = false;
};
int cmd_analyze(const std::string& path, const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

int cmd_decompose(const std::string& path, const LoadOptions& load, CurveId g, std::ostream& out, std::ostream& err);

int cmd_ingest(const std::string& path, const LoadOptions& load, std::ostream& out, std::ostream& err);

int cmd_render(const std::string& path, const LoadOptions& load, const std::string& svg, std::ostream& err);

int cmd_generate(int k, const std::string& touch_class, std::ostream& out, std::ostream& err);

struct SearchCommand {
  int lemma = 42;
  int max_curves = 7;
  int max_meetings = 25;
  bool relaxed = false;
  std::optional<int> run;
  std::optional<std::string> resume;
  std::string checkpoint = "pseudoseg-checkpoint.json";
  std::string witnesses = "pseudoseg-witnesses.json";
  std::optional<std::string> manifest;
  std::optional<double> max_seconds;
  std::optional<std::int64_t> max_nodes;
  std::optional<std::int64_t> max_tasks;
  /// Finished tasks between periodic checkpoint writes; 0 writes only on exit.
  std::int64_t checkpoint_every = 0;
};
int cmd_search(const SearchCommand& command, std::ostream& out, std::ostream& err);

/// Parses the command line and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pseudoseg::cli
