#include "sylv/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace sylv {

Matrix::Matrix(int rows, int cols, std::vector<Rat> cells) : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    if (cells_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw ShapeError("matrix cell count " + std::to_string(cells_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
}

Matrix Matrix::identity(int n) {
    std::vector<Rat> cells(static_cast<std::size_t>(n) * n, Rat(0));
    for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i) * n + i] = Rat(1);
    return Matrix(n, n, std::move(cells));
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    std::vector<Rat> cells;
    cells.reserve(static_cast<std::size_t>(r) * c);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw ShapeError("ragged row in matrix literal");
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(cells));
}

Matrix Matrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> converted;
    converted.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Rat> out;
        out.reserve(row.size());
        for (long v : row) out.emplace_back(v);
        converted.push_back(std::move(out));
    }
    return from_rows(converted);
}

bool Matrix::is_integer() const {
    for (const Rat& v : cells_)
        if (!v.is_integer()) return false;
    return true;
}

const Rat& Matrix::at(int i, int j) const {
    if (i < 1 || i > rows_) throw BoundsError("row index " + std::to_string(i) + " outside 1.." + std::to_string(rows_));
    if (j < 1 || j > cols_) throw BoundsError("column index " + std::to_string(j) + " outside 1.." + std::to_string(cols_));
    return cells_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
}

void MinorSelector::validate_for(const Matrix& m) const {
    for (int i : row_list.items())
        if (i < 1 || i > m.rows()) throw BoundsError("row index " + std::to_string(i) + " outside 1.." + std::to_string(m.rows()));
    for (int j : col_list.items())
        if (j < 1 || j > m.cols()) throw BoundsError("column index " + std::to_string(j) + " outside 1.." + std::to_string(m.cols()));
}

std::string MinorSelector::str() const { return row_list.str() + ";" + col_list.str(); }

Matrix submatrix(const Matrix& m, const IndexList& rows, const IndexList& cols) {
    MinorSelector{rows, cols}.validate_for(m);
    std::vector<Rat> cells;
    cells.reserve(rows.size() * cols.size());
    for (int i : rows.items())
        for (int j : cols.items()) cells.push_back(m.at(i, j));
    return Matrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()), std::move(cells));
}

Matrix read_matrix(std::istream& in) {
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw ParseError("matrix header must be 'R C'");
    if (rows < 1 || cols < 1) throw ParseError("matrix dimensions must be positive");
    std::vector<Rat> cells;
    cells.reserve(static_cast<std::size_t>(rows) * cols);
    std::string token;
    for (long k = 0; k < static_cast<long>(rows) * cols; ++k) {
        if (!(in >> token)) throw ParseError("matrix body ended early: expected " + std::to_string(rows) + "x" +
                                             std::to_string(cols) + " entries");
        cells.push_back(Rat::parse(token));
    }
    if (in >> token) throw ParseError("trailing token after matrix body: '" + token + "'");
    return Matrix(rows, cols, std::move(cells));
}

Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            if (j > 1) out << ' ';
            out << m.at(i, j).str();
        }
        out << '\n';
    }
}

std::string format_matrix(const Matrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

}  // namespace sylv
