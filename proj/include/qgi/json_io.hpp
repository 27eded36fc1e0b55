#pragma once

#include <string>

#include <json.hpp>

#include "qgi/qmatrix.hpp"

namespace qgi {

// Textual formats shared by the CLI and any other front end.
//
// Quaternion: array of four rational strings ["w","x","y","z"], each "p/q"
// or a plain integer, e.g. ["0","1/2","0","-1"].
// Matrix: {"rows": m, "cols": n, "data": [[q, ...], ...]} with row-major
// nesting. Emission is canonical (lowest terms, positive denominators), so
// parse/emit round-trips are exact.

nlohmann::ordered_json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j);

nlohmann::ordered_json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j);

// Parses a matrix from UTF-8 JSON text. Malformed JSON, bad rationals and
// ragged rows raise ParseError carrying the position that failed.
QMatrix parse_matrix(const std::string& text);
std::string emit_matrix(const QMatrix& m);

} // namespace qgi
