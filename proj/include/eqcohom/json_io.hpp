#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "eqcohom/builtins.hpp"
#include "eqcohom/errors.hpp"
#include "eqcohom/graded_rep.hpp"
#include "eqcohom/matrix.hpp"
#include "eqcohom/rational.hpp"

namespace eqcohom {

// Document format, one JSON object per graded representation:
//
//   {
//     "schema_version": "1",
//     "n_ops": 3,
//     "connected": true,
//     "pieces": [
//       {"degree": 2, "dim": 2,
//        "operators": [[["0", "1"], ["1", "0"]], ...]}
//     ]
//   }
//
// Matrix entries are exact rational strings ("p" or "p/q"), never floats:
// every downstream rank computation is exact, and a float anywhere would
// poison it silently.  "connected" is optional on input (default false) and
// always emitted.  Structural problems (bad JSON, wrong types, ragged rows,
// zero denominators, duplicate degrees) throw ParseError; semantic problems
// (singular or non-commuting operators, shape/count mismatches) are left to
// validate() so callers can report them as violations instead.

inline constexpr const char* kSchemaVersion = "1";

namespace detail {

inline const nlohmann::ordered_json& require_field(
    const nlohmann::ordered_json& obj, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw ParseError(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

inline std::size_t require_count(const nlohmann::ordered_json& value,
                                 const char* what) {
    if (!value.is_number_unsigned()) {
        throw ParseError(std::string(what) +
                         " must be a nonnegative integer");
    }
    return value.get<std::size_t>();
}

inline Matrix parse_matrix(const nlohmann::ordered_json& value,
                           std::size_t degree, std::size_t index) {
    const std::string where = "piece degree " + std::to_string(degree) +
                              ", operator " + std::to_string(index);
    if (!value.is_array()) {
        throw ParseError(where + ": matrix must be an array of rows");
    }
    const std::size_t rows = value.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!value[0].is_array()) {
            throw ParseError(where + ": rows must be arrays");
        }
        cols = value[0].size();
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = value[i];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError(where + ": rows have inconsistent lengths");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (!row[j].is_string()) {
                throw ParseError(where +
                                 ": entries must be rational strings");
            }
            m(i, j) = parse_rational(row[j].get<std::string>());
        }
    }
    return m;
}

}  // namespace detail

inline GradedRep parse_rep_document(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");

    const auto& version = detail::require_field(doc, "schema_version");
    if (!version.is_string() ||
        version.get<std::string>() != kSchemaVersion) {
        throw ParseError(std::string("unsupported schema_version, expected "
                                     "\"") +
                         kSchemaVersion + "\"");
    }

    GradedRep rep;
    rep.n_ops = detail::require_count(detail::require_field(doc, "n_ops"),
                                      "n_ops");
    if (auto it = doc.find("connected"); it != doc.end()) {
        if (!it->is_boolean()) throw ParseError("connected must be a bool");
        rep.connected = it->get<bool>();
    }

    const auto& pieces = detail::require_field(doc, "pieces");
    if (!pieces.is_array()) throw ParseError("pieces must be an array");
    for (const auto& entry : pieces) {
        if (!entry.is_object()) {
            throw ParseError("each piece must be an object");
        }
        const std::size_t degree = detail::require_count(
            detail::require_field(entry, "degree"), "degree");
        DegreePiece piece;
        piece.dim = detail::require_count(
            detail::require_field(entry, "dim"), "dim");
        const auto& ops = detail::require_field(entry, "operators");
        if (!ops.is_array()) {
            throw ParseError("piece degree " + std::to_string(degree) +
                             ": operators must be an array of matrices");
        }
        for (std::size_t i = 0; i < ops.size(); ++i) {
            piece.operators.push_back(detail::parse_matrix(ops[i], degree, i));
        }
        if (!rep.pieces.emplace(degree, std::move(piece)).second) {
            throw ParseError("duplicate piece for degree " +
                             std::to_string(degree));
        }
    }
    return rep;
}

inline std::string render_rep_document(const GradedRep& rep) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n_ops"] = rep.n_ops;
    doc["connected"] = rep.connected;
    auto pieces = nlohmann::ordered_json::array();
    for (const auto& [degree, piece] : rep.pieces) {
        nlohmann::ordered_json entry;
        entry["degree"] = degree;
        entry["dim"] = piece.dim;
        auto ops = nlohmann::ordered_json::array();
        for (const Matrix& m : piece.operators) {
            auto grid = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                auto row = nlohmann::ordered_json::array();
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    row.push_back(to_string(m(i, j)));
                }
                grid.push_back(std::move(row));
            }
            ops.push_back(std::move(grid));
        }
        entry["operators"] = std::move(ops);
        pieces.push_back(std::move(entry));
    }
    doc["pieces"] = std::move(pieces);
    return doc.dump(2) + "\n";
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw ParseError("cannot read file: " + path);
    return buffer.str();
}

// A source is a builtin name or a path to a document.
inline GradedRep load_rep(const std::string& source) {
    if (auto rep = builtin_rep(source)) return *rep;
    return parse_rep_document(read_text_file(source));
}

}  // namespace eqcohom
