#include <openssl/evp.h>

#include <cstdio>

#include "cli.hpp"

namespace pseudoseg::cli {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::Schema:
      return exit_code::parse;
    case ErrorCode::NotRealizable:
    case ErrorCode::AmbiguousPlacement:
      return exit_code::not_realizable;
    case ErrorCode::InputContradictsLemma:
      return exit_code::contradicts_lemma;
    default:
      return exit_code::violations;
  }
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::Parse, "sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

LoadedInput load_input(const std::string& path, const LoadOptions& options) {
  LoadedInput in;
  in.path = path;
  const auto text = read_text(path);
  in.sha256 = sha256_hex(text);
  const bool svg = path.size() >= 4 && path.compare(path.size() - 4, 4, ".svg") == 0;
  if (svg) {
    in.file.mode = FileMode::Geometric;
    in.file.curves = parse_svg_paths(text);
  } else {
    in.file = parse_family_file(text);
  }
  if (in.file.mode == FileMode::Combinatorial) {
    in.family = in.file.family;
    return in;
  }
  IngestOptions opt;
  opt.epsilon = options.epsilon ? options.epsilon : in.file.epsilon;
  opt.jitter_seed = options.jitter_seed;
  if (options.jitter) opt.jitter = *options.jitter;
  in.drawing = ingest_drawing(in.file.curves, opt);
  in.family = in.drawing->family;
  return in;
}

json validation_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"a", x.a}, {"b", x.b}, {"reason", x.reason}});
  return {{"is_pseudo_segment", r.is_pseudo_segment},
          {"is_intersecting", r.is_intersecting},
          {"rotations_consistent", r.rotations_consistent},
          {"violations", v}};
}

json arrangement_json(const Arrangement& a) {
  json comps = json::array();
  for (const auto& c : a.components) {
    comps.push_back({{"V", c.vertices}, {"E", c.edges}, {"F", c.faces}, {"euler", c.euler()}});
  }
  return {{"V", a.graph.vertex_count()},
          {"E", a.graph.edge_count()},
          {"F", static_cast<int>(a.faces.size())},
          {"components", comps},
          {"regions", a.region_count},
          {"reduced", {{"V", a.reduced_vertices}, {"E", a.reduced_edges}, {"regions", a.reduced_region_count}}},
          {"tC", a.t_c}};
}

json certificate_json(const QuasiGridCertificate& c) {
  json cross = json::array();
  for (const auto& p : c.cross_points) cross.push_back({{"i", p.i}, {"j", p.j}, {"meeting", p.meeting}});
  return {{"g", c.g},
          {"a", c.a},
          {"b", c.b},
          {"touch_class", to_string(c.touch_class)},
          {"curves", c.curves},
          {"touch_points", c.touch_points},
          {"cross_points", cross},
          {"reversed_along_g", c.reversed_along_g},
          {"curve_orders", c.curve_orders}};
}

json decomposition_json(const DecompositionReport& r) {
  json parts = json::array();
  for (const auto& p : r.parts) parts.push_back(certificate_json(p));
  json splits = json::array();
  for (const auto& s : r.splits) splits.push_back({{"color", s.color}, {"hub", s.hub}, {"h12", s.h12}, {"h21", s.h21}});
  json groups = json::array();
  for (const auto& gr : r.groups) groups.push_back({{"a", gr.a}, {"b", gr.b}, {"parts", gr.parts}});
  return {{"g", r.g},      {"bound_claimed", r.bound_claimed}, {"parts", parts},
          {"residual", r.residual}, {"splits", splits}, {"reversed", r.reversed}, {"groups", groups}};
}

json probe_json(const BoundProbe& p) {
  return {{"n", p.n},
          {"tC", p.t_c},
          {"T", p.touchings},
          {"X", p.crossings},
          {"T_per_n", p.t_per_n},
          {"T_per_tC_n", p.t_per_tc_n},
          {"T_per_tC2_n", p.t_per_tc2_n},
          {"intersecting", p.intersecting},
          {"grounded", p.grounded},
          {"double_grounded", p.double_grounded}};
}

}  // namespace pseudoseg::cli
