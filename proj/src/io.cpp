#include "pseudoseg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pseudoseg/error.hpp"

namespace pseudoseg {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Schema, path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema(path, std::string("missing \"") + key + "\"");
  return *it;
}

const json& array_at(const json& obj, const char* key, const std::string& path) {
  const auto& v = field(obj, key, path);
  if (!v.is_array()) schema(path + "." + key, "expected an array");
  return v;
}

int int_at(const json& obj, const char* key, const std::string& path) {
  const auto& v = field(obj, key, path);
  if (!v.is_number_integer()) schema(path + "." + key, "expected an integer");
  return v.get<int>();
}

std::string string_at(const json& obj, const char* key, const std::string& path) {
  const auto& v = field(obj, key, path);
  if (!v.is_string()) schema(path + "." + key, "expected a string");
  return v.get<std::string>();
}

template <class T, class F>
T parsed(const std::string& s, F parse, const std::string& path) {
  const auto v = parse(s);
  if (!v) schema(path, "unknown value \"" + s + "\"");
  return *v;
}

json branch_json(const Branch& b) { return {{"curve", b.curve}, {"leg", to_string(b.leg)}}; }

Branch branch_from(const json& j, const std::string& path) {
  return {int_at(j, "curve", path), parsed<Leg>(string_at(j, "leg", path), parse_leg, path + ".leg")};
}

json face_json(const FaceRef& r) { return {{"curve", r.curve}, {"section", r.section}, {"side", to_string(r.side)}}; }

FaceRef face_from(const json& j, const std::string& path) {
  return {int_at(j, "curve", path), int_at(j, "section", path),
          parsed<Side>(string_at(j, "side", path), parse_side, path + ".side")};
}

double coordinate_from(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) schema(path, "expected a decimal string");
  const auto s = v.get<std::string>();
  double out = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || end != s.data() + s.size()) schema(path, "bad coordinate \"" + s + "\"");
  return out;
}

}  // namespace

std::string format_coordinate(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

json family_to_json(const CombinatorialFamily& f) {
  json curves = json::array();
  for (const auto& c : f.curves) {
    json events = json::array();
    for (const auto& e : c.events) events.push_back({{"other", e.other}, {"kind", to_string(e.kind)}, {"meeting", e.meeting}});
    curves.push_back({{"id", c.id}, {"source", c.source}, {"target", c.target}, {"events", events}});
  }
  json meetings = json::array();
  for (const auto& rot : f.meeting_rotations) {
    json r = json::array();
    for (const auto& b : rot) r.push_back(branch_json(b));
    meetings.push_back(r);
  }
  json hubs = json::array();
  for (const auto& rot : f.hub_rotations) {
    json r = json::array();
    for (const auto& b : rot) r.push_back(branch_json(b));
    hubs.push_back(r);
  }
  json containment = json::array();
  for (const auto& c : f.containment) {
    json e{{"component", c.component}, {"inside", face_json(c.inside)}};
    if (c.outer) e["outer"] = face_json(*c.outer);
    containment.push_back(e);
  }
  json out{{"curves", curves}, {"meetings", meetings}, {"hubs", hubs}, {"containment", containment}};
  if (f.outer_face) out["outer_face"] = face_json(*f.outer_face);
  return out;
}

CombinatorialFamily family_from_json(const json& j) {
  CombinatorialFamily f;
  const auto& curves = array_at(j, "curves", "$");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto path = "$.curves[" + std::to_string(i) + "]";
    const auto& c = curves[i];
    DirectedCurve dc{int_at(c, "id", path), int_at(c, "source", path), int_at(c, "target", path), {}};
    if (dc.id != static_cast<int>(i)) schema(path + ".id", "curve ids must be 0, 1, 2, ... in order");
    const auto& events = array_at(c, "events", path);
    for (std::size_t k = 0; k < events.size(); ++k) {
      const auto ep = path + ".events[" + std::to_string(k) + "]";
      const auto& e = events[k];
      dc.events.push_back({int_at(e, "other", ep), parsed<MeetingKind>(string_at(e, "kind", ep), parse_meeting_kind, ep + ".kind"),
                           int_at(e, "meeting", ep)});
    }
    f.curves.push_back(std::move(dc));
  }
  const auto& meetings = array_at(j, "meetings", "$");
  for (std::size_t i = 0; i < meetings.size(); ++i) {
    const auto path = "$.meetings[" + std::to_string(i) + "]";
    if (!meetings[i].is_array() || meetings[i].size() != 4) schema(path, "expected four branches");
    std::array<Branch, 4> rot;
    for (std::size_t k = 0; k < 4; ++k) rot[k] = branch_from(meetings[i][k], path + "[" + std::to_string(k) + "]");
    f.meeting_rotations.push_back(rot);
  }
  const auto& hubs = array_at(j, "hubs", "$");
  for (std::size_t i = 0; i < hubs.size(); ++i) {
    const auto path = "$.hubs[" + std::to_string(i) + "]";
    if (!hubs[i].is_array()) schema(path, "expected an array of branches");
    std::vector<Branch> rot;
    for (std::size_t k = 0; k < hubs[i].size(); ++k) rot.push_back(branch_from(hubs[i][k], path + "[" + std::to_string(k) + "]"));
    f.hub_rotations.push_back(std::move(rot));
  }
  if (j.contains("containment")) {
    const auto& cs = array_at(j, "containment", "$");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto path = "$.containment[" + std::to_string(i) + "]";
      Containment c;
      c.component = int_at(cs[i], "component", path);
      c.inside = face_from(field(cs[i], "inside", path), path + ".inside");
      if (cs[i].contains("outer")) c.outer = face_from(cs[i]["outer"], path + ".outer");
      f.containment.push_back(c);
    }
  }
  if (j.contains("outer_face")) f.outer_face = face_from(j["outer_face"], "$.outer_face");
  return f;
}

json file_to_json(const FamilyFile& file) {
  json out;
  if (file.mode == FileMode::Combinatorial) {
    out = family_to_json(file.family);
    out["mode"] = "combinatorial";
  } else {
    json curves = json::array();
    for (const auto& c : file.curves) {
      json pts = json::array();
      for (const auto& p : c.points) pts.push_back({format_coordinate(p.x), format_coordinate(p.y)});
      curves.push_back({{"id", c.id}, {"points", pts}});
    }
    out = {{"mode", "geometric"}, {"curves", curves}};
    if (file.epsilon) out["epsilon"] = format_coordinate(*file.epsilon);
  }
  out["version"] = 1;
  return out;
}

FamilyFile file_from_json(const json& j) {
  if (!j.is_object()) schema("$", "expected an object");
  if (int_at(j, "version", "$") != 1) schema("$.version", "unsupported version");
  const auto mode = string_at(j, "mode", "$");
  FamilyFile file;
  if (mode == "combinatorial") {
    file.family = family_from_json(j);
    return file;
  }
  if (mode != "geometric") schema("$.mode", "expected \"geometric\" or \"combinatorial\"");
  file.mode = FileMode::Geometric;
  const auto& curves = array_at(j, "curves", "$");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto path = "$.curves[" + std::to_string(i) + "]";
    Polyline pl{int_at(curves[i], "id", path), {}};
    if (pl.id != static_cast<int>(i)) schema(path + ".id", "curve ids must be 0, 1, 2, ... in order");
    const auto& pts = array_at(curves[i], "points", path);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const auto pp = path + ".points[" + std::to_string(k) + "]";
      if (!pts[k].is_array() || pts[k].size() != 2) schema(pp, "expected [x, y]");
      pl.points.push_back({coordinate_from(pts[k][0], pp + "[0]"), coordinate_from(pts[k][1], pp + "[1]")});
    }
    file.curves.push_back(std::move(pl));
  }
  if (j.contains("epsilon")) file.epsilon = coordinate_from(j["epsilon"], "$.epsilon");
  return file;
}

FamilyFile parse_family_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return file_from_json(j);
}

std::string serialize_family_file(const FamilyFile& file) { return file_to_json(file).dump(2) + "\n"; }

std::string serialize_family(const CombinatorialFamily& f) { return serialize_family_file({FileMode::Combinatorial, f, {}, {}}); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << text;
}

}  // namespace pseudoseg
