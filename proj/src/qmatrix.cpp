#include "qgi/qmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "qgi/errors.hpp"

namespace qgi {

IndexSet::IndexSet(int ambient, std::vector<int> members)
    : ambient_(ambient), members_(std::move(members)) {
    if (ambient_ < 0) throw ShapeError("IndexSet: negative ambient dimension");
    int prev = 0;
    for (int m : members_) {
        if (m <= prev) throw ShapeError("IndexSet: members must be strictly increasing");
        if (m > ambient_) throw ShapeError("IndexSet: member exceeds ambient dimension");
        prev = m;
    }
}

bool IndexSet::contains(int index) const {
    return std::binary_search(members_.begin(), members_.end(), index);
}

int IndexSet::position_of(int index) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), index);
    if (it == members_.end() || *it != index)
        throw ShapeError("IndexSet: index not contained in set");
    return static_cast<int>(it - members_.begin()) + 1;
}

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("QMatrix: negative dimension");
    entries_.resize(static_cast<std::size_t>(rows) * cols);
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw ShapeError("QMatrix: ragged initializer rows");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = Quaternion(1);
    return m;
}

QMatrix QMatrix::zero(int rows, int cols) {
    return QMatrix(rows, cols);
}

void QMatrix::check_bounds(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw ShapeError("QMatrix: index (" + std::to_string(row) + "," +
                         std::to_string(col) + ") outside " + std::to_string(rows_) +
                         "x" + std::to_string(cols_));
}

const Quaternion& QMatrix::at(int row, int col) const {
    check_bounds(row, col);
    return entries_[offset(row, col)];
}

Quaternion& QMatrix::at(int row, int col) {
    check_bounds(row, col);
    return entries_[offset(row, col)];
}

std::vector<Quaternion> QMatrix::row(int index) const {
    if (index < 1 || index > rows_) throw ShapeError("QMatrix::row: index out of range");
    std::vector<Quaternion> out(entries_.begin() + offset(index, 1),
                                entries_.begin() + offset(index, 1) + cols_);
    return out;
}

std::vector<Quaternion> QMatrix::column(int index) const {
    if (index < 1 || index > cols_) throw ShapeError("QMatrix::column: index out of range");
    std::vector<Quaternion> out;
    out.reserve(rows_);
    for (int i = 1; i <= rows_; ++i) out.push_back(entries_[offset(i, index)]);
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ShapeError("QMatrix: addition shape mismatch");
    QMatrix out(rows_, cols_);
    for (std::size_t t = 0; t < entries_.size(); ++t)
        out.entries_[t] = entries_[t] + rhs.entries_[t];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ShapeError("QMatrix: subtraction shape mismatch");
    QMatrix out(rows_, cols_);
    for (std::size_t t = 0; t < entries_.size(); ++t)
        out.entries_[t] = entries_[t] - rhs.entries_[t];
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ShapeError("QMatrix: product shape mismatch (" + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " times " + std::to_string(rhs.rows_) + "x" +
                         std::to_string(rhs.cols_) + ")");
    QMatrix out(rows_, rhs.cols_);
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= rhs.cols_; ++j) {
            Quaternion acc;
            for (int t = 1; t <= cols_; ++t)
                acc += entries_[offset(i, t)] * rhs.entries_[rhs.offset(t, j)];
            out.entries_[out.offset(i, j)] = std::move(acc);
        }
    }
    return out;
}

QMatrix QMatrix::operator*(const Quaternion& scalar_on_right) const {
    QMatrix out(rows_, cols_);
    for (std::size_t t = 0; t < entries_.size(); ++t)
        out.entries_[t] = entries_[t] * scalar_on_right;
    return out;
}

QMatrix QMatrix::operator-() const {
    QMatrix out(rows_, cols_);
    for (std::size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = -entries_[t];
    return out;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

QMatrix QMatrix::adjoint() const {
    QMatrix out(cols_, rows_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            out.entries_[out.offset(j, i)] = entries_[offset(i, j)].conjugate();
    return out;
}

QMatrix QMatrix::pow(int exponent) const {
    if (!is_square()) throw ShapeError("QMatrix::pow: matrix not square");
    if (exponent < 0) throw ShapeError("QMatrix::pow: negative exponent");
    QMatrix result = identity(rows_);
    for (int t = 0; t < exponent; ++t) result = result * *this;
    return result;
}

QMatrix QMatrix::replaced(Axis axis, int index, const std::vector<Quaternion>& values) const {
    QMatrix out = *this;
    if (axis == Axis::Row) {
        if (index < 1 || index > rows_) throw ShapeError("replaced: row index out of range");
        if (static_cast<int>(values.size()) != cols_)
            throw ShapeError("replaced: row length mismatch");
        for (int j = 1; j <= cols_; ++j) out.entries_[offset(index, j)] = values[j - 1];
    } else {
        if (index < 1 || index > cols_) throw ShapeError("replaced: column index out of range");
        if (static_cast<int>(values.size()) != rows_)
            throw ShapeError("replaced: column length mismatch");
        for (int i = 1; i <= rows_; ++i) out.entries_[offset(i, index)] = values[i - 1];
    }
    return out;
}

QMatrix QMatrix::submatrix(const IndexSet& rowsel, const IndexSet& colsel) const {
    if (rowsel.ambient() != rows_ || colsel.ambient() != cols_)
        throw ShapeError("submatrix: selection ambient dimension mismatch");
    QMatrix out(rowsel.size(), colsel.size());
    for (int i = 1; i <= rowsel.size(); ++i)
        for (int j = 1; j <= colsel.size(); ++j)
            out.entries_[out.offset(i, j)] =
                entries_[offset(rowsel.members()[i - 1], colsel.members()[j - 1])];
    return out;
}

bool QMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Quaternion& q) { return q.is_zero(); });
}

bool QMatrix::is_hermitian() const {
    if (!is_square()) return false;
    for (int i = 1; i <= rows_; ++i)
        for (int j = i; j <= cols_; ++j)
            if (entries_[offset(i, j)] != entries_[offset(j, i)].conjugate()) return false;
    return true;
}

std::string QMatrix::str() const {
    std::ostringstream out;
    for (int i = 1; i <= rows_; ++i) {
        out << (i == 1 ? "[" : " ") << "[";
        for (int j = 1; j <= cols_; ++j) {
            if (j > 1) out << ", ";
            out << entries_[offset(i, j)].str();
        }
        out << "]" << (i == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) out << "[]";
    return out.str();
}

} // namespace qgi
