#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "quiverreach/quiver.hpp"

namespace quiverreach {

/// QVR text: `# comment`, `v <id>`, `e <id> <src> <dst>`, one item per line.
/// Vertices may be declared after the edges that use them. Throws ParseError.
Quiver parse_quiver(std::string_view text);

/// `vm <src-vertex> <dst-vertex>` and `em <src-edge> <dst-edge>` lines.
QuiverMorphism parse_morphism(std::string_view text);

std::string write_qvr(const Quiver& q);
std::string write_morphism(const QuiverMorphism& f);

/// {"vertices":[...],"edges":[{"id":..,"src":..,"dst":..}]} in insertion order.
nlohmann::json to_json(const Quiver& q);
nlohmann::json to_json(const Quiver& q, const Path& p);

/// Inverse of to_json(Quiver). Throws ParseError (line 0).
Quiver quiver_from_json(const nlohmann::json& j);

/// Whitespace-separated tokens of every non-blank, non-comment line, with the
/// 1-based line number. Shared by the QVR-family readers.
struct TokenLine {
    std::size_t number;
    std::vector<std::string> tokens;
};
std::vector<TokenLine> tokenize_lines(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace quiverreach
