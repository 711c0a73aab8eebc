#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace phaselab::sym {

/// Space-time axis. Declaration order is the canonical derivative order t < x < y < z.
enum class Axis : std::uint8_t { t, x, y, z };

inline constexpr std::array<Axis, 4> kAxes{Axis::t, Axis::x, Axis::y, Axis::z};
inline constexpr std::array<Axis, 3> kSpatialAxes{Axis::x, Axis::y, Axis::z};

constexpr std::size_t index(Axis a) { return static_cast<std::size_t>(a); }
std::string_view axis_name(Axis a);

/// Inertial frame tag. Primed and unprimed atoms never share an identity.
enum class Frame : std::uint8_t { unprimed, primed };

struct Coordinate {
  Axis axis{Axis::t};
  Frame frame{Frame::unprimed};

  auto operator<=>(const Coordinate&) const = default;
};

/// Symbolic real constants. Enumerators are in lexicographic order of their names.
enum class Param : std::uint8_t { e, g, gamma, m, vx, vy, vz };

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

/// Field families. Enumerators are in lexicographic (ASCII) order of their printed names.
/// `PsiC` is the complex conjugate of `Psi`; every other field is real.
enum class Field : std::uint8_t { Ax, Ay, Az, Phi, Psi, PsiC, R, S, V, chi };

std::string_view field_name(Field f);
std::optional<Field> field_from_name(std::string_view name);

constexpr bool is_complex(Field f) { return f == Field::Psi || f == Field::PsiC; }

/// Vector-potential component along a spatial axis.
Field potential_component(Axis a);

/// Derivative orders per axis, indexed by `index(Axis)`.
using MultiIndex = std::array<std::uint8_t, 4>;

constexpr int order(const MultiIndex& mi) { return mi[0] + mi[1] + mi[2] + mi[3]; }

/// A field evaluated with some partial derivatives applied, e.g. dtdx(S').
struct FieldAtom {
  Field field{Field::R};
  Frame frame{Frame::unprimed};
  MultiIndex deriv{};

  auto operator<=>(const FieldAtom&) const = default;

  bool underived() const { return order(deriv) == 0; }
  FieldAtom differentiated(Axis a) const;
  FieldAtom base() const { return {field, frame, {}}; }
};

}  // namespace phaselab::sym
