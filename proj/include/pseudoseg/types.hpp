#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pseudoseg {

using CurveId = int;
using HubId = int;
using MeetingId = int;

enum class Side : std::uint8_t { Left, Right };
enum class Direction : std::uint8_t { Same, Opposite };

/// Which way a branch leaves a meeting point or hub along its curve.
/// `In` heads back toward the curve's source, `Out` toward its target.
enum class Leg : std::uint8_t { In, Out };

constexpr Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
constexpr Direction flip(Direction d) {
  return d == Direction::Same ? Direction::Opposite : Direction::Same;
}
constexpr Leg flip(Leg l) { return l == Leg::In ? Leg::Out : Leg::In; }

/// How two curves meet, stated for an ordered pair (subject, other).
///
/// For a touching, `side` is the side of `other` on which `subject` lies and
/// `direction` tells whether the two curves run the same way through the
/// point. A touching where subject lies on the left of other with the same
/// direction is written subject ↑↑ other in the notation of the field.
struct MeetingKind {
  bool crossing = true;
  Side side = Side::Left;
  Direction direction = Direction::Same;

  static constexpr MeetingKind cross() { return {}; }
  static constexpr MeetingKind touch(Side s, Direction d) { return {false, s, d}; }

  constexpr bool is_touch() const { return !crossing; }

  /// The same meeting viewed from the other curve.
  ///
  /// With equal directions the sides exchange (subject left of other means
  /// other right of subject); with opposite directions both lie on the same
  /// side of each other.
  constexpr MeetingKind swapped() const {
    if (crossing) return *this;
    return touch(direction == Direction::Same ? flip(side) : side, direction);
  }

  /// The meeting after mirroring the plane.
  constexpr MeetingKind reflected() const {
    if (crossing) return *this;
    return touch(flip(side), direction);
  }

  friend constexpr bool operator==(const MeetingKind& a, const MeetingKind& b) {
    if (a.crossing || b.crossing) return a.crossing == b.crossing;
    return a.side == b.side && a.direction == b.direction;
  }
};

/// One end of a curve-section at a vertex: the curve plus the leg.
struct Branch {
  CurveId curve = -1;
  Leg leg = Leg::Out;
  friend constexpr bool operator==(const Branch&, const Branch&) = default;
  friend constexpr auto operator<=>(const Branch&, const Branch&) = default;
};

/// Touch class of a curve c with respect to a reference curve g: the side of
/// g on which c lies and whether they run the same way. Two curves are
/// g-touch-equivalent iff their classes agree.
struct TouchClass {
  Side side = Side::Right;
  Direction direction = Direction::Same;
  friend constexpr bool operator==(const TouchClass&, const TouchClass&) = default;

  constexpr int index() const {
    return (side == Side::Right ? 0 : 2) + (direction == Direction::Same ? 0 : 1);
  }
  static constexpr TouchClass from_index(int i) {
    return {i >= 2 ? Side::Left : Side::Right, (i % 2) == 0 ? Direction::Same : Direction::Opposite};
  }
};

/// Class of `subject` with respect to `reference`, given the kind stored on
/// subject's event (subject relative to reference).
constexpr TouchClass touch_class_of(const MeetingKind& subject_vs_reference) {
  return {subject_vs_reference.side, subject_vs_reference.direction};
}

std::string to_string(Side s);
std::string to_string(Direction d);
std::string to_string(Leg l);
std::string to_string(const MeetingKind& k);
/// "g^^c", "c^^g", "g<>c", "c<>g" (ASCII renderings of the four classes).
std::string to_string(const TouchClass& c);

std::optional<Side> parse_side(std::string_view s);
std::optional<Direction> parse_direction(std::string_view s);
std::optional<Leg> parse_leg(std::string_view s);
std::optional<MeetingKind> parse_meeting_kind(std::string_view s);
std::optional<TouchClass> parse_touch_class(std::string_view s);

}  // namespace pseudoseg
