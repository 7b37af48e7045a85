#include "modrat/matrix_io.hpp"

#include <json.hpp>

#include <sstream>

namespace modrat {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
    offset = 0;
    while (offset < s.size() && (s[offset] == ' ' || s[offset] == '\t')) ++offset;
    std::size_t end = s.size();
    while (end > offset && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) --end;
    return s.substr(offset, end - offset);
}

}  // namespace

std::vector<RationalMatrix> read_matrices_csv(std::istream& in) {
    std::vector<RationalMatrix> out;
    std::vector<std::vector<Rational>> rows;
    std::size_t width_line = 0;
    const auto flush = [&] {
        if (!rows.empty()) out.push_back(RationalMatrix::from_rows(rows));
        rows.clear();
    };

    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        std::size_t lead = 0;
        if (trim(line, lead).empty()) {
            flush();
            continue;
        }
        std::vector<Rational> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string_view field =
                std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            std::size_t offset = 0;
            const auto token = trim(field, offset);
            auto value = parse_rational(token);
            if (!value) {
                throw ParseError(line_no, start + offset + 1,
                                 "malformed rational '" + std::string(token) + "' (expected p/q or an integer)");
            }
            row.push_back(std::move(*value));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(line_no, 1,
                             "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(rows.front().size()) + " (as on line " + std::to_string(width_line) +
                                 ")");
        }
        if (rows.empty()) width_line = line_no;
        rows.push_back(std::move(row));
    }
    flush();
    return out;
}

namespace {

Rational rational_from_json(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
    if (v.is_string()) {
        if (auto r = parse_rational(v.get<std::string>())) return *r;
    }
    throw ParseError(1, 1, "malformed rational at " + where + ": " + v.dump());
}

RationalMatrix matrix_from_json(const nlohmann::json& v, const std::string& name) {
    if (!v.is_array()) throw ParseError(1, 1, "'" + name + "' must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < v.size(); ++r) {
        if (!v[r].is_array()) throw ParseError(1, 1, name + "[" + std::to_string(r) + "] must be an array");
        std::vector<Rational> row;
        for (std::size_t c = 0; c < v[r].size(); ++c) {
            row.push_back(rational_from_json(v[r][c], name + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
        }
        rows.push_back(std::move(row));
    }
    try {
        return RationalMatrix::from_rows(rows);
    } catch (const DomainError& e) {
        throw ParseError(1, 1, name + ": " + e.what());
    }
}

}  // namespace

MatrixInput read_matrix_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset only; report it as a column on line 1
        throw ParseError(1, e.byte, e.what());
    }
    if (!doc.is_object()) throw ParseError(1, 1, "top-level JSON value must be an object");
    MatrixInput out;
    for (const char* key : {"omega", "phi"}) {
        if (doc.contains(key)) out.matrices.push_back(matrix_from_json(doc[key], key));
    }
    if (doc.contains("points")) out.points = matrix_from_json(doc["points"], "points");
    if (doc.contains("ambient")) {
        if (!doc["ambient"].is_number_unsigned()) throw ParseError(1, 1, "'ambient' must be a non-negative integer");
        out.ambient = doc["ambient"].get<std::size_t>();
    }
    return out;
}

void write_matrix_csv(std::ostream& out, const RationalMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ',';
            out << to_string(m(r, c));
        }
        out << '\n';
    }
}

}  // namespace modrat
