#include "nullcone/serialization.hpp"

namespace nullcone {

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of arrays");
    const std::size_t rows = j.size();
    if (rows == 0) return {0, 0};
    if (!j[0].is_array()) throw ParseError("matrix rows must be arrays");
    const std::size_t cols = j[0].size();
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw ParseError("matrix row " + std::to_string(r) + " has inconsistent length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_string()) {
                throw ParseError("matrix entry (" + std::to_string(r) + "," +
                                 std::to_string(c) + ") must be a scalar string");
            }
            m.at(r, c) = GaussianRational::parse(j[r][c].get<std::string>());
        }
    }
    return m;
}

Json subspace_to_json(const Subspace& u) {
    return Json{{"ambient_dim", u.ambient_dim()}, {"basis", matrix_to_json(u.basis())}};
}

Subspace subspace_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("basis")) {
        throw ParseError("subspace needs ambient_dim and basis");
    }
    const std::size_t ambient = j["ambient_dim"].get<std::size_t>();
    ExactMatrix basis = matrix_from_json(j["basis"]);
    if (basis.rows() == 0 && ambient > 0) basis = ExactMatrix(ambient, 0);
    return Subspace::span_of(ambient, basis);
}

Json form_to_json(const BilinearForm& form) {
    return Json{{"kind", form.kind() == FormKind::symmetric ? "symmetric" : "symplectic"},
                {"gram", matrix_to_json(form.gram())}};
}

BilinearForm form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("gram")) {
        throw ParseError("form needs kind and gram");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind != "symmetric" && kind != "symplectic") {
        throw ParseError("form kind must be symmetric or symplectic");
    }
    return {kind == "symmetric" ? FormKind::symmetric : FormKind::symplectic,
            matrix_from_json(j["gram"])};
}

Json null_point_to_json(const ExactMatrix& t) {
    return Json{{"case", "os"}, {"t", matrix_to_json(t)}};
}

Json null_point_to_json(const ExactMatrix& a, const ExactMatrix& b) {
    return Json{{"case", "gl"}, {"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}};
}

ParsedNullPoint null_point_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("case")) {
        throw ParseError("null point needs a case tag ('os' or 'gl')");
    }
    const std::string tag = j["case"].get<std::string>();
    ParsedNullPoint p;
    if (tag == "os") {
        if (!j.contains("t")) throw ParseError("os null point needs field t");
        p.is_os = true;
        p.t = matrix_from_json(j["t"]);
        return p;
    }
    if (tag == "gl") {
        if (!j.contains("a") || !j.contains("b")) {
            throw ParseError("gl null point needs fields a and b");
        }
        p.a = matrix_from_json(j["a"]);
        p.b = matrix_from_json(j["b"]);
        return p;
    }
    throw ParseError("unknown null point case '" + tag + "'");
}

Json resolution_point_to_json(const ResolutionPointOS& p) {
    return Json{{"case", "os"}, {"t", matrix_to_json(p.t())},
                {"u", subspace_to_json(p.u().sub())}};
}

Json resolution_point_to_json(const ResolutionPointGL& p) {
    return Json{{"case", "gl"},
                {"a", matrix_to_json(p.a())},
                {"b", matrix_to_json(p.b())},
                {"u1", subspace_to_json(p.u1())},
                {"u2", subspace_to_json(p.u2())}};
}

Json resolution_point_to_json(const ResolutionPointGL1& p) {
    return Json{{"case", "gl1"},
                {"a", matrix_to_json(p.a())},
                {"b", matrix_to_json(p.b())},
                {"u", subspace_to_json(p.u())}};
}

Json resolution_point_to_json(const ResolutionPointGL2& p) {
    return Json{{"case", "gl2"},
                {"a", matrix_to_json(p.a())},
                {"b", matrix_to_json(p.b())},
                {"u", subspace_to_json(p.u())}};
}

Json orbit_point_to_json(const OrbitPointOS& p) {
    return Json{{"case", "orbit-os"}, {"g", matrix_to_json(p.g())},
                {"u", subspace_to_json(p.u().sub())}};
}

Json orbit_point_to_json(const OrbitPointGL& p) {
    return Json{{"case", "orbit-gl"},
                {"g", matrix_to_json(p.g())},
                {"u1", subspace_to_json(p.u1())},
                {"u2", subspace_to_json(p.u2())}};
}

Json orbit_point_to_json(const OrbitPointGL1& p) {
    return Json{{"case", "orbit-gl1"}, {"g", matrix_to_json(p.g())},
                {"u", subspace_to_json(p.u())}};
}

Json orbit_point_to_json(const OrbitPointGL2& p) {
    return Json{{"case", "orbit-gl2"}, {"g", matrix_to_json(p.g())},
                {"u", subspace_to_json(p.u())}};
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("JSON syntax error at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
}

} // namespace nullcone
