#include "lfmt/variables.hpp"

#include <algorithm>

namespace lfmt {

namespace {
constexpr std::array<std::string_view, kVarCount> kVarNames = {"x", "y", "z", "r", "theta", "psi"};
constexpr std::array<std::string_view, 3> kFrameNames = {"cartesian", "cylindrical", "spherical"};
}  // namespace

std::string_view var_name(Var v) { return kVarNames[index(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (Var v : kAllVars)
        if (kVarNames[index(v)] == name) return v;
    return std::nullopt;
}

std::string_view frame_name(FrameKind f) { return kFrameNames[static_cast<int>(f)]; }

std::optional<FrameKind> frame_from_name(std::string_view name) {
    for (FrameKind f : kAllFrames)
        if (frame_name(f) == name) return f;
    return std::nullopt;
}

std::array<Var, 3> frame_variables(FrameKind f) {
    switch (f) {
        case FrameKind::cartesian: return {Var::x, Var::y, Var::z};
        case FrameKind::cylindrical: return {Var::r, Var::theta, Var::z};
        case FrameKind::spherical: return {Var::r, Var::theta, Var::psi};
    }
    return {};
}

bool frame_has(FrameKind f, Var v) {
    const auto vars = frame_variables(f);
    return std::find(vars.begin(), vars.end(), v) != vars.end();
}

}  // namespace lfmt
