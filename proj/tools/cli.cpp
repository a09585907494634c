#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "pseudoseg/generate.hpp"
#include "pseudoseg/search.hpp"

namespace pseudoseg::cli {

using nlohmann::json;

namespace {

json header(const char* command, const LoadedInput& in) {
  return {{"version", 1}, {"command", command}, {"input", in.path}, {"input_sha256", in.sha256}};
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int fail(std::ostream& err, const Error& e) {
  err << "pseudoseg: " << e.what() << "\n";
  return exit_code_for(e.code());
}

// Runs `body`, turning library errors into exit codes.
template <class F>
int guarded(std::ostream& err, F body) {
  try {
    return body();
  } catch (const Error& e) {
    return fail(err, e);
  } catch (const json::exception& e) {
    err << "pseudoseg: " << e.what() << "\n";
    return exit_code::parse;
  }
}

const std::vector<std::string> kClassNames{"right-same", "right-opposite", "left-same", "left-opposite"};

}  // namespace

int cmd_validate(const std::string& path, const LoadOptions& load, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto in = load_input(path, load);
    const auto report = validate_family(in.family);
    auto j = header("validate", in);
    j["validation"] = validation_json(report);
    print(out, j);
    for (const auto& v : report.violations) err << "curves " << v.a << " and " << v.b << ": " << v.reason << "\n";
    return report.is_pseudo_segment ? exit_code::ok : exit_code::violations;
  });
}

int cmd_analyze(const std::string& path, const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto in = load_input(path, options.load);
    const auto& f = in.family;
    auto j = header("analyze", in);
    const auto report = validate_family(f);
    j["validation"] = validation_json(report);
    if (!report.is_pseudo_segment) {
      print(out, j);
      return exit_code::violations;
    }
    const auto arr = build_arrangement(f);
    j["arrangement"] = arrangement_json(arr);
    const auto counts = count_meetings(f);
    j["counts"] = {{"T", counts.touchings}, {"X", counts.crossings}};
    const auto c = contract_endpoints(f, arr);
    j["contraction"] = {{"t", c.hubs}, {"s", c.classes}};
    json decs = json::array();
    for (const auto& curve : f.curves) {
      try {
        const auto r = decompose_all(f, curve.id);
        decs.push_back({{"g", curve.id}, {"parts", r.parts.size()}, {"bound_claimed", r.bound_claimed}, {"residual", r.residual}});
      } catch (const Error& e) {
        decs.push_back({{"g", curve.id}, {"error", to_string(e.code())}, {"message", e.what()}});
      }
    }
    j["decompositions"] = decs;
    if (options.probe) j["probe"] = probe_json(probe_bounds(f));
    if (options.svg) {
      write_text(*options.svg, render_svg(f, arr, in.drawing ? &*in.drawing : nullptr));
      j["svg"] = *options.svg;
    }
    print(out, j);
    return exit_code::ok;
  });
}

int cmd_decompose(const std::string& path, const LoadOptions& load, CurveId g, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto in = load_input(path, load);
    if (g < 0 || g >= in.family.curve_count()) throw Error(ErrorCode::Precondition, "no curve " + std::to_string(g));
    auto j = header("decompose", in);
    try {
      j["decomposition"] = decomposition_json(decompose_all(in.family, g));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InputContradictsLemma) throw;
      j["contradiction"] = e.what();
      print(out, j);
      return fail(err, e);
    }
    print(out, j);
    return exit_code::ok;
  });
}

int cmd_ingest(const std::string& path, const LoadOptions& load, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto in = load_input(path, load);
    out << serialize_family(in.family);
    return exit_code::ok;
  });
}

int cmd_render(const std::string& path, const LoadOptions& load, const std::string& svg, std::ostream& err) {
  return guarded(err, [&] {
    const auto in = load_input(path, load);
    const auto arr = build_arrangement(in.family);
    write_text(svg, render_svg(in.family, arr, in.drawing ? &*in.drawing : nullptr));
    return exit_code::ok;
  });
}

int cmd_generate(int k, const std::string& touch_class, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto it = std::find(kClassNames.begin(), kClassNames.end(), touch_class);
    if (it == kClassNames.end()) throw Error(ErrorCode::Parse, "unknown touch class " + touch_class);
    const auto cls = TouchClass::from_index(static_cast<int>(it - kClassNames.begin()));
    out << serialize_family(generate_canonical_quasigrid(k, cls));
    return exit_code::ok;
  });
}

int cmd_search(const SearchCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SearchLimits limits;
    SearchState state;
    if (cmd.resume) {
      std::tie(limits, state) = checkpoint_from_json(json::parse(read_text(*cmd.resume)));
    } else {
      if (cmd.lemma == 41) {
        if (cmd.max_curves != 5) throw Error(ErrorCode::Precondition, "the touch-two search has exactly 5 curves");
        limits.lemma = Lemma::TouchTwo;
      } else if (cmd.lemma == 42) {
        if (cmd.max_curves < 3) throw Error(ErrorCode::Precondition, "--max-curves must be at least 3");
        limits.lemma = Lemma::UniqueGround;
        limits.h_size = cmd.max_curves - 2;
      } else {
        throw Error(ErrorCode::Parse, "--lemma must be 41 or 42");
      }
      limits.max_meetings = cmd.max_meetings;
      limits.relaxed = cmd.relaxed;
      limits.only_run = cmd.run;
    }
    SearchBudget budget{cmd.max_tasks, cmd.max_nodes, cmd.max_seconds};
    std::int64_t since = 0;
    const auto outcome = run_search(limits, state, budget, [&](const SearchState& st) {
      if (cmd.checkpoint_every > 0 && ++since >= cmd.checkpoint_every) {
        since = 0;
        write_text(cmd.checkpoint, checkpoint_to_json(limits, st).dump(2) + "\n");
      }
    });
    auto manifest = manifest_json(outcome);
    manifest["version"] = 1;
    manifest["seed"] = nullptr;  // the search is not randomised
    if (cmd.manifest) write_text(*cmd.manifest, manifest.dump(2) + "\n");
    json result{{"version", 1}, {"command", "search"}, {"manifest", manifest}};
    const auto& st = outcome.state;
    if (outcome.exhausted) {
      write_text(cmd.checkpoint, checkpoint_to_json(limits, st).dump(2) + "\n");
      result["checkpoint"] = cmd.checkpoint;
      print(out, result);
      err << "pseudoseg: budget exhausted; resume with --resume " << cmd.checkpoint << "\n";
      return exit_code::budget_exhausted;
    }
    if (st.witness_count > 0) {
      const auto runs = search_runs(limits);
      json ws = json::array();
      for (std::size_t i = 0; i < st.witnesses.size(); ++i) {
        const int r = st.witness_runs[i];
        ws.push_back({{"run", r}, {"label", runs[static_cast<std::size_t>(r)].label}, {"family", family_to_json(st.witnesses[i])}});
      }
      write_text(cmd.witnesses, json{{"version", 1}, {"mode", "search-witnesses"}, {"witnesses", ws}}.dump(2) + "\n");
      result["witness_file"] = cmd.witnesses;
      print(out, result);
      return exit_code::witness_found;
    }
    result["witnesses"] = json::array();
    print(out, result);
    return exit_code::ok;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar pseudo-segment families: validation, arrangements, quasi-grids and searches", "pseudoseg"};
  app.set_config("--config");
  app.require_subcommand(1);

  LoadOptions load;
  auto add_load = [&](CLI::App* sub) {
    sub->add_option("--epsilon", load.epsilon, "Geometric tolerance (default: 1e-9 of the bounding-box diagonal)");
    sub->add_option("--jitter", load.jitter_seed, "Perturb geometric input with this seed");
    sub->add_option("--jitter-amount", load.jitter, "Jitter size relative to the bounding-box diagonal");
  };
  std::string path;
  int code = exit_code::ok;

  auto* validate = app.add_subcommand("validate", "Check the pseudo-segment conditions");
  validate->add_option("file", path, "Family file or .svg")->required();
  add_load(validate);
  validate->callback([&] { code = cmd_validate(path, load, out, err); });

  AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand("analyze", "Arrangement, counts, decompositions and optional SVG");
  analyze->add_option("file", path, "Family file or .svg")->required();
  analyze->add_option("--svg", analyze_opt.svg, "Write an SVG drawing here");
  analyze->add_flag("--probe", analyze_opt.probe, "Report touching-count ratios");
  add_load(analyze);
  analyze->callback([&] {
    analyze_opt.load = load;
    code = cmd_analyze(path, analyze_opt, out, err);
  });

  int g = 0;
  auto* decompose = app.add_subcommand("decompose", "Split the curves touching g into quasi-grids");
  decompose->add_option("file", path, "Family file or .svg")->required();
  decompose->add_option("--g", g, "Reference curve id")->required();
  add_load(decompose);
  decompose->callback([&] { code = cmd_decompose(path, load, g, out, err); });

  auto* ingest_cmd = app.add_subcommand("ingest", "Convert geometric or SVG input to a combinatorial family file");
  ingest_cmd->add_option("file", path, "Family file or .svg")->required();
  add_load(ingest_cmd);
  ingest_cmd->callback([&] { code = cmd_ingest(path, load, out, err); });

  std::string svg_out;
  auto* render = app.add_subcommand("render", "Draw a family as SVG");
  render->add_option("file", path, "Family file or .svg")->required();
  render->add_option("-o,--output", svg_out, "SVG file")->required();
  add_load(render);
  render->callback([&] { code = cmd_render(path, load, svg_out, err); });

  int k = 3;
  std::string cls = "right-same";
  auto* generate = app.add_subcommand("generate", "Write the canonical quasi-grid with k curves");
  generate->add_option("--k", k, "Number of grid curves")->check(CLI::Range(1, 64));
  generate->add_option("--class", cls, "Touch class")->check(CLI::IsMember(kClassNames));
  generate->callback([&] { code = cmd_generate(k, cls, out, err); });

  SearchCommand sc;
  auto* search = app.add_subcommand("search", "Exhaustive search for counterexamples to a lemma");
  search->add_option("--lemma", sc.lemma, "41 (touch two) or 42 (unique ground)");
  search->add_option("--max-curves", sc.max_curves, "Curves per family, grounds included");
  search->add_option("--max-meetings", sc.max_meetings, "Total meeting budget");
  search->add_flag("--relaxed", sc.relaxed, "Drop the quasi-grid requirement (control run)");
  search->add_option("--run", sc.run, "Only this run (hub pattern and touch class)");
  search->add_option("--resume", sc.resume, "Continue from a checkpoint");
  search->add_option("--checkpoint", sc.checkpoint, "Checkpoint file");
  search->add_option("--checkpoint-every", sc.checkpoint_every, "Write the checkpoint after this many tasks");
  search->add_option("--witnesses", sc.witnesses, "Witness file");
  search->add_option("--manifest", sc.manifest, "Run-manifest file");
  search->add_option("--max-seconds", sc.max_seconds, "Wall-clock budget");
  search->add_option("--max-nodes", sc.max_nodes, "Search-node budget");
  search->add_option("--max-tasks", sc.max_tasks, "Task budget");
  search->callback([&] { code = cmd_search(sc, out, err); });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "pseudoseg: " << e.what() << "\n";
    return exit_code::parse;
  }
  return code;
}

}  // namespace pseudoseg::cli
