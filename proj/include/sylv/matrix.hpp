#ifndef SYLV_MATRIX_HPP
#define SYLV_MATRIX_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sylv/index_list.hpp"
#include "sylv/rational.hpp"

namespace sylv {

/// Dense matrix of exact rationals, row-major, immutable after
/// construction. The public API is 1-based throughout.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, std::vector<Rat> cells);

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static Matrix from_int_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_integer() const;  // every entry has denominator 1

    /// 1-based, bounds-checked access.
    const Rat& at(int i, int j) const;

    const std::vector<Rat>& cells() const { return cells_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> cells_;
};

/// Row/column selection naming a minor; for determinant use the two
/// lists must have equal length.
struct MinorSelector {
    IndexList row_list;
    IndexList col_list;

    void validate_for(const Matrix& m) const;
    std::string str() const;
};

/// Entries taken in listed order: result(a,b) = M(I[a], J[b]). Lists
/// may be unordered and columns may repeat.
Matrix submatrix(const Matrix& m, const IndexList& rows, const IndexList& cols);

// Text format: first line "R C", then R lines of C whitespace-separated
// tokens, each an optionally-signed decimal integer or "p/q" rational.
Matrix read_matrix(std::istream& in);
Matrix parse_matrix(const std::string& text);
void write_matrix(std::ostream& out, const Matrix& m);
std::string format_matrix(const Matrix& m);

}  // namespace sylv

#endif
