#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pseudoseg/family.hpp"
#include "pseudoseg/geometry.hpp"

namespace pseudoseg {

enum class FileMode { Combinatorial, Geometric };

/// Version 1 family file. Geometric files carry polylines; combinatorial
/// files carry events, rotations and the containment forest.
struct FamilyFile {
  FileMode mode = FileMode::Combinatorial;
  CombinatorialFamily family;
  std::vector<Polyline> curves;
  std::optional<double> epsilon;
};

/// Shortest decimal that reads back to the same double.
std::string format_coordinate(double v);

nlohmann::json family_to_json(const CombinatorialFamily& f);
/// Throws Schema on a shape mismatch.
CombinatorialFamily family_from_json(const nlohmann::json& j);

nlohmann::json file_to_json(const FamilyFile& file);
FamilyFile file_from_json(const nlohmann::json& j);

/// Throws Parse on malformed JSON and Schema on a valid document of the
/// wrong shape.
FamilyFile parse_family_file(std::string_view text);
/// Sorted keys, two-space indent, trailing newline.
std::string serialize_family_file(const FamilyFile& file);
std::string serialize_family(const CombinatorialFamily& f);

std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace pseudoseg
