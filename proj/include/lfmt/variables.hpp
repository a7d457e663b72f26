#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace lfmt {

/// Coordinate variables known to the DSL. The active frame selects three of them.
enum class Var : int { x = 0, y, z, r, theta, psi };

inline constexpr int kVarCount = 6;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::x, Var::y, Var::z, Var::r, Var::theta, Var::psi};

constexpr int index(Var v) { return static_cast<int>(v); }

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

enum class FrameKind { cartesian, cylindrical, spherical };

inline constexpr std::array<FrameKind, 3> kAllFrames = {FrameKind::cartesian, FrameKind::cylindrical,
                                                        FrameKind::spherical};

std::string_view frame_name(FrameKind f);
std::optional<FrameKind> frame_from_name(std::string_view name);

/// Coordinates of a frame in its conventional order: (x,y,z), (r,theta,z), (r,theta,psi).
std::array<Var, 3> frame_variables(FrameKind f);
bool frame_has(FrameKind f, Var v);

}  // namespace lfmt
