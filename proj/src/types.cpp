#include "pseudoseg/types.hpp"

#include "pseudoseg/error.hpp"

namespace pseudoseg {

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }
std::string to_string(Direction d) { return d == Direction::Same ? "same" : "opposite"; }
std::string to_string(Leg l) { return l == Leg::In ? "in" : "out"; }

std::string to_string(const MeetingKind& k) {
  if (k.crossing) return "cross";
  return "touch-" + to_string(k.side) + "-" + to_string(k.direction);
}

std::string to_string(const TouchClass& c) {
  if (c.direction == Direction::Same) return c.side == Side::Right ? "g^^c" : "c^^g";
  return c.side == Side::Left ? "g<>c" : "c<>g";
}

std::optional<Side> parse_side(std::string_view s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view s) {
  if (s == "same") return Direction::Same;
  if (s == "opposite") return Direction::Opposite;
  return std::nullopt;
}

std::optional<Leg> parse_leg(std::string_view s) {
  if (s == "in") return Leg::In;
  if (s == "out") return Leg::Out;
  return std::nullopt;
}

std::optional<MeetingKind> parse_meeting_kind(std::string_view s) {
  if (s == "cross") return MeetingKind::cross();
  constexpr std::string_view prefix = "touch-";
  if (!s.starts_with(prefix)) return std::nullopt;
  s.remove_prefix(prefix.size());
  const auto dash = s.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  const auto side = parse_side(s.substr(0, dash));
  const auto dir = parse_direction(s.substr(dash + 1));
  if (!side || !dir) return std::nullopt;
  return MeetingKind::touch(*side, *dir);
}

std::optional<TouchClass> parse_touch_class(std::string_view s) {
  for (int i = 0; i < 4; ++i) {
    const auto c = TouchClass::from_index(i);
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Structural: return "StructuralError";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::AmbiguousPlacement: return "AmbiguousPlacement";
    case ErrorCode::GeneralPositionViolation: return "GeneralPositionViolation";
    case ErrorCode::NonFiniteIntersection: return "NonFiniteIntersection";
    case ErrorCode::TangencyUnresolvable: return "TangencyUnresolvable";
    case ErrorCode::ArclengthTie: return "ArclengthTie";
    case ErrorCode::InvalidPolyline: return "InvalidPolyline";
    case ErrorCode::InputContradictsLemma: return "InputContradictsLemma";
    case ErrorCode::Precondition: return "PreconditionViolated";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Schema: return "SchemaError";
  }
  return "Error";
}

}  // namespace pseudoseg
