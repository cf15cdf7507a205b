#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cordalg/diagram.hpp"
#include "cordalg/homsep.hpp"
#include "cordalg/monodromy.hpp"
#include "cordalg/skein.hpp"

namespace cordalg {

/// Native diagram document: {arcs, traversal?, crossings, tags?,
/// basepoint?, summands?}.  Malformed syntax raises MalformedDocument,
/// invariant violations InvalidDiagram.
KnotDiagram diagram_from_document(const nlohmann::json& doc);

/// Canonical document form; re-parsing reproduces it byte for byte.
nlohmann::json diagram_to_document(const KnotDiagram& d);

/// Action descriptor: {"type":"blue-box","summand":L} | {"type":"gramain"}
/// | {"type":"compose","of":[...]} (applied right to left) |
/// {"type":"power","base":...,"n":k}.
LoopAction action_from_document(const nlohmann::json& doc, const KnotDiagram& d);

/// Hom assignment document: map "a_{i,j}" -> element literal ("z+1", "0").
Assignment assignment_from_document(const nlohmann::json& doc);
nlohmann::json assignment_to_document(const Assignment& phi, const Target& target);

/// Element literal in GF(2)[z]: sum of "z^k" / "z" / "1" terms, or "0".
Target::Elem parse_target_elem(const std::string& text);

/// Target name: "z", "z^k" (truncated at degree k), or "bool".
Target parse_target_name(const std::string& name);

/// Pass-word literal: "i [s1 s2 ...] j", or "loop: s1 s2 ..." for a loop
/// based at `basepoint`.
PassWord password_from_text(const std::string& text, int basepoint);

/// FNV-1a content hash used as the report's input digest.
std::uint64_t fnv1a(std::string_view data);

}  // namespace cordalg
