#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pseudoseg/enumerate.hpp"
#include "pseudoseg/family.hpp"

namespace pseudoseg {

enum class Lemma { TouchTwo = 41, UniqueGround = 42 };

struct SearchLimits {
  Lemma lemma = Lemma::UniqueGround;
  /// Grid size for the unique-ground search.
  int h_size = 5;
  int max_meetings = 25;
  /// Drop the grid requirement on {h1, h2, h3} (touch-two search only).
  bool relaxed = false;
  /// Only this run (hub pattern and touch class), by index.
  std::optional<int> only_run;
  /// Witness families kept; all are counted.
  int keep_witnesses = 16;
};

/// Progress through the runs of a search; enough to resume it exactly.
struct SearchState {
  int run = 0;
  std::int64_t next_task = 0;
  /// Complete families examined. Curve roles are fixed and the drawer emits
  /// each labelled family once, so this counts canonical forms.
  std::int64_t searched = 0;
  std::int64_t tasks = 0;
  std::int64_t witness_count = 0;
  std::vector<CombinatorialFamily> witnesses;
  std::vector<int> witness_runs;
  bool finished = false;
  friend bool operator==(const SearchState&, const SearchState&) = default;
};

struct SearchBudget {
  /// Finished tasks in this invocation.
  std::optional<std::int64_t> max_tasks;
  std::optional<std::int64_t> max_nodes;
  std::optional<double> max_seconds;
};

struct SearchOutcome {
  SearchLimits limits;
  SearchState state;
  int runs = 0;
  std::int64_t nodes = 0;  // this invocation only
  double seconds = 0;
  bool exhausted = false;  // stopped by the budget before finishing
};

/// One run: the curves to draw and the predicates on them.
struct SearchRun {
  std::string label;
  std::vector<CurvePlan> plans;
  int task_depth = 0;
  std::function<bool(const CombinatorialFamily&, int)> accept;
  std::function<bool(const CombinatorialFamily&)> witness;
};

std::vector<SearchRun> search_runs(const SearchLimits& limits);

/// Runs (or resumes) a search. Tasks are atomic: a budget stop discards the
/// unfinished task, so resumed runs reproduce every count exactly.
/// `progress` is called after each finished task.
SearchOutcome run_search(const SearchLimits& limits, SearchState start = {}, const SearchBudget& budget = {},
                         const std::function<void(const SearchState&)>& progress = {});

SearchOutcome search_lemma41(const SearchLimits& limits);
SearchOutcome search_lemma42(const SearchLimits& limits);

/// Whether a witness still satisfies the run's predicates after a round trip.
bool replays(const SearchLimits& limits, int run, const CombinatorialFamily& witness);

nlohmann::json limits_to_json(const SearchLimits& limits);
SearchLimits limits_from_json(const nlohmann::json& j);
nlohmann::json checkpoint_to_json(const SearchLimits& limits, const SearchState& state);
/// Throws Schema when the checkpoint does not parse.
std::pair<SearchLimits, SearchState> checkpoint_from_json(const nlohmann::json& j);
nlohmann::json manifest_json(const SearchOutcome& outcome);

}  // namespace pseudoseg
