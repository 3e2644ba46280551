#include "qpa/json_io.hpp"

#include <fstream>

#include "qpa/errors.hpp"

namespace qpa {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix JSON must be a non-empty array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InputError("ragged matrix JSON");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& cell = j[i][c];
            if (!cell.is_array() || cell.size() != 2)
                throw InputError("matrix entries must be [re, im] pairs");
            m(i, c) = cplx{cell[0].get<double>(), cell[1].get<double>()};
        }
    }
    m.require_finite("matrix JSON");
    return m;
}

nlohmann::json system_to_json(const MatricialSystem& s) {
    nlohmann::json j;
    j["n"] = s.ambient_dim();
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : s.basis()) basis.push_back(matrix_to_json(b));
    j["basis"] = std::move(basis);
    return j;
}

MatricialSystem system_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("basis")) throw InputError("system JSON needs n and basis");
    const std::size_t n = j["n"].get<std::size_t>();
    std::vector<ComplexMatrix> basis;
    for (const auto& bj : j["basis"]) basis.push_back(matrix_from_json(bj));
    return MatricialSystem::from_basis(n, basis);
}

MatricialSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open system file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("bad JSON in '" + path + "': " + e.what());
    }
    return system_from_json(j);
}

} // namespace qpa
