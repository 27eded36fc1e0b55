#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qgi/quaternion.hpp"

namespace qgi {

/// Strictly increasing subset of {1..n}. Used to select principal
/// submatrices; the empty set selects the 0x0 matrix.
class IndexSet {
public:
    IndexSet(int ambient, std::vector<int> members);

    int ambient() const { return ambient_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int index) const;
    // 1-based position of `index` inside the set; throws if absent.
    int position_of(int index) const;

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.ambient_ == b.ambient_ && a.members_ == b.members_;
    }

private:
    int ambient_;
    std::vector<int> members_;
};

enum class Axis { Row, Column };

/// Dense quaternion matrix, row-major. All public row/column indices are
/// 1-based, matching the usual mathematical notation for minors and
/// replaced rows/columns. Operations are pure: they return new matrices.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols);
    // Row-major nested initializer, e.g. {{a,b},{c,d}}.
    QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

    static QMatrix identity(int n);
    static QMatrix zero(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    const Quaternion& at(int row, int col) const;
    Quaternion& at(int row, int col);

    std::vector<Quaternion> row(int index) const;
    std::vector<Quaternion> column(int index) const;

    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    // Exact noncommutative product: c_ij = sum_t a_it * b_tj.
    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator*(const Quaternion& scalar_on_right) const;
    QMatrix operator-() const;

    friend bool operator==(const QMatrix& a, const QMatrix& b);
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

    // Conjugate transpose.
    QMatrix adjoint() const;
    // A^k for k >= 0; A^0 = I. Square matrices only.
    QMatrix pow(int exponent) const;

    // Copy with one row or column replaced; everything else untouched.
    QMatrix replaced(Axis axis, int index, const std::vector<Quaternion>& values) const;
    // Rows selected by `rowsel`, columns by `colsel` (may be empty -> 0x0).
    QMatrix submatrix(const IndexSet& rowsel, const IndexSet& colsel) const;

    bool is_zero() const;
    bool is_hermitian() const;

    std::string str() const;

private:
    std::size_t offset(int row, int col) const {
        return static_cast<std::size_t>(row - 1) * cols_ + (col - 1);
    }
    void check_bounds(int row, int col) const;

    int rows_, cols_;
    std::vector<Quaternion> entries_;
};

inline QMatrix adjoint(const QMatrix& a) { return a.adjoint(); }

} // namespace qgi
