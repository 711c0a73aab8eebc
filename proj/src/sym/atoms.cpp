#include "phaselab/sym/atoms.hpp"

#include <stdexcept>

namespace phaselab::sym {

namespace {

constexpr std::array<std::string_view, 7> kParamNames{"e", "g", "gamma", "m", "vx", "vy", "vz"};
constexpr std::array<std::string_view, 10> kFieldNames{"Ax", "Ay", "Az", "Phi", "Psi",
                                                       "PsiC", "R", "S", "V", "chi"};

}  // namespace

std::string_view axis_name(Axis a) {
  switch (a) {
    case Axis::t: return "t";
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

std::string_view param_name(Param p) { return kParamNames[static_cast<std::size_t>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamNames.size(); ++i)
    if (kParamNames[i] == name) return static_cast<Param>(i);
  return std::nullopt;
}

std::string_view field_name(Field f) { return kFieldNames[static_cast<std::size_t>(f)]; }

std::optional<Field> field_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFieldNames.size(); ++i)
    if (kFieldNames[i] == name) return static_cast<Field>(i);
  return std::nullopt;
}

Field potential_component(Axis a) {
  switch (a) {
    case Axis::x: return Field::Ax;
    case Axis::y: return Field::Ay;
    case Axis::z: return Field::Az;
    case Axis::t: break;
  }
  throw std::invalid_argument("no vector-potential component along t");
}

FieldAtom FieldAtom::differentiated(Axis a) const {
  FieldAtom out = *this;
  ++out.deriv[index(a)];
  return out;
}

}  // namespace phaselab::sym
