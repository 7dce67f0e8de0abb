#pragma once

// Internal helpers shared by the file-format readers/writers.

#include "gatetime/errors.hpp"
#include "gatetime/linalg.hpp"

#include "json.hpp"

namespace gatetime::detail {

inline nlohmann::json matrix_to_json(const CMat4& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 4; ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

inline CMat4 matrix_from_json(const nlohmann::json& rows) {
    if (!rows.is_array() || rows.size() != 4)
        throw FormatError("matrix must have exactly 4 rows");
    CMat4 m;
    for (int i = 0; i < 4; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != 4)
            throw FormatError("matrix row must have exactly 4 entries");
        for (int j = 0; j < 4; ++j) {
            const auto& ent = row[j];
            if (!ent.is_array() || ent.size() != 2 || !ent[0].is_number() ||
                !ent[1].is_number())
                throw FormatError("matrix entry must be [re, im]");
            m(i, j) = cplx(ent[0].get<double>(), ent[1].get<double>());
        }
    }
    if (!all_finite(m)) throw FormatError("matrix entries must be finite");
    return m;
}

} // namespace gatetime::detail
