#pragma once

#include <string>

#include <json.hpp>

#include "deltaspringer/diagrams.hpp"

namespace ds {

// Insertion-ordered JSON keeps every emitted document byte-deterministic.
using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "delta-springer/1";

json diagram_to_json(const CupDiagram& a);
// Accepts {"n":..,"m":..,"cups":[[l,r],..],"rays":[..]}; k is the cup
// count. Invariant violations surface as DiagramError with the violated
// invariant named.
CupDiagram diagram_from_json(const json& j, ParamMode mode = ParamMode::AnyK);

json one_boundary_to_json(const OneBoundaryDiagram& d);
json circle_diagram_to_json(const CircleDiagram& cd);
json filling_to_json(const SkewFilling& f);

// Plain-text rendering. ASCII renders re-parse to the same diagram; TikZ
// mirrors the usual picture (cups below the axis, dashed cut line).
std::string render_ascii(const CupDiagram& a);
std::string render_tikz(const CupDiagram& a);
std::string render_ascii(const OneBoundaryDiagram& d);

// Auto-detects JSON ('{' first non-space byte) vs ASCII.
CupDiagram parse_diagram(const std::string& text,
                         ParamMode mode = ParamMode::AnyK);

}  // namespace ds
