#pragma once

// Matrix and point-configuration input. CSV: one matrix row per line,
// comma-separated "p/q" or integer tokens, blank lines between matrices.
// JSON: {"omega": [[...]], "phi": [[...]]} or {"ambient": n, "points": [[...]]},
// entries as integers or "p/q" strings.

#include "modrat/matrix.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace modrat {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }      // 1-based
    std::size_t column() const { return column_; }  // 1-based

private:
    std::size_t line_;
    std::size_t column_;
};

std::vector<RationalMatrix> read_matrices_csv(std::istream& in);

struct MatrixInput {
    std::vector<RationalMatrix> matrices;  // omega then phi, when present
    std::optional<std::size_t> ambient;
    std::optional<RationalMatrix> points;
};

MatrixInput read_matrix_json(std::istream& in);

void write_matrix_csv(std::ostream& out, const RationalMatrix& m);

}  // namespace modrat
