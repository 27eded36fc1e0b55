#include "qgi/json_io.hpp"

#include "qgi/errors.hpp"

namespace qgi {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json quaternion_to_json(const Quaternion& q) {
    return ordered_json::array({to_string(q.w()), to_string(q.x()), to_string(q.y()),
                        to_string(q.z())});
}

Quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("quaternion must be an array of four rational strings");
    Rational parts[4];
    for (int t = 0; t < 4; ++t) {
        if (!j[t].is_string())
            throw ParseError("quaternion component " + std::to_string(t) +
                             " must be a rational string");
        parts[t] = parse_rational(j[t].get<std::string>());
    }
    return {parts[0], parts[1], parts[2], parts[3]};
}

ordered_json matrix_to_json(const QMatrix& m) {
    ordered_json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    ordered_json data = ordered_json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 1; j <= m.cols(); ++j) row.push_back(quaternion_to_json(m.at(i, j)));
        data.push_back(std::move(row));
    }
    out["data"] = std::move(data);
    return out;
}

QMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("matrix must be a JSON object");
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError("matrix object needs rows, cols and data");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw ParseError("rows and cols must be nonnegative integers");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    const json& data = j["data"];
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
        throw ParseError("data must hold exactly rows row arrays");
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = data[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("row " + std::to_string(i + 1) + " must hold exactly cols entries");
        for (int c = 0; c < cols; ++c) {
            try {
                m.at(i + 1, c + 1) = quaternion_from_json(row[c]);
            } catch (const ParseError& e) {
                throw ParseError("entry (" + std::to_string(i + 1) + "," +
                                 std::to_string(c + 1) + "): " + e.what());
            }
        }
    }
    return m;
}

QMatrix parse_matrix(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(parsed);
}

std::string emit_matrix(const QMatrix& m) {
    return matrix_to_json(m).dump();
}

} // namespace qgi
