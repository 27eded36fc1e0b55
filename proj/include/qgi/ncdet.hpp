#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qgi/qmatrix.hpp"

namespace qgi {

// ---------------------------------------------------------------------------
// Row and column determinants of quaternion matrices.
//
// For an n x n matrix A and a row anchor i, the i-th row determinant is
//
//   rdet_i A = sum over all permutations s of {1..n} of
//              sign(s) * (chain product of the cycle containing i, read from
//              i along s) * (chain products of the remaining cycles, each
//              read from its minimal element, ordered by increasing leader)
//
// where sign(s) = (-1)^(n - #cycles) and the chain product of a cycle
// (x, s(x), s^2(x), ...) is a_{x,s(x)} a_{s(x),s^2(x)} ... a_{...,x}.
// Fixed points count as cycles of length one.
//
// The j-th column determinant cdet_j mirrors this: the anchor cycle is read
// from j and multiplied LAST; the remaining cycles are ordered by
// decreasing leader, left of it. On commuting entries both reduce to the
// classical Leibniz determinant; on Hermitian matrices all 2n values agree
// and are real.
// ---------------------------------------------------------------------------

/// Permutation of {1..n} in canonical cycle form for one of the two
/// determinant conventions. `cycles` holds each cycle as a chain starting at
/// its canonical leader and following the permutation; the cycles appear in
/// evaluation (left-to-right multiplication) order.
struct CyclePermutation {
    int degree = 0;
    std::vector<std::vector<int>> cycles;
    int sign = 1; // (-1)^(degree - #cycles)

    // Canonical form for rdet_anchor: anchor's cycle first (chain starts at
    // anchor); every other cycle starts at its minimum; ascending leaders.
    static CyclePermutation left_ordered(std::span<const int> images, int anchor);
    // Canonical form for cdet_anchor: anchor's cycle last; other cycles in
    // descending-leader order to its left.
    static CyclePermutation right_ordered(std::span<const int> images, int anchor);
};

/// Family of strictly increasing r-subsets of {1..n}; with an anchor it is
/// the subfamily of sets containing the anchor (C(n-1,r-1) of them).
struct MinorFamily {
    int order = 0;
    int ambient = 0;
    std::optional<int> anchor;

    std::vector<IndexSet> enumerate() const;
    long long count() const;
};

// Size cap for a single rdet/cdet evaluation (the algorithm is factorial).
// Default 7; overridable programmatically or via the QGI_DET_CAP
// environment variable read at startup.
int det_cap();
void set_det_cap(int cap);

Quaternion rdet(const QMatrix& a, int row_anchor);
Quaternion cdet(const QMatrix& a, int col_anchor);

// Determinant of a Hermitian matrix: the common value of all row and column
// determinants, always real. With cross_check set, evaluates all 2n
// determinants and throws InternalInconsistency if any differ or any is
// not real. The 0x0 determinant is 1.
Rational hdet(const QMatrix& a, bool cross_check = false);

// Sum of all order-r principal minors of a Hermitian matrix; 1 for r = 0.
Rational minor_sum(const QMatrix& hermitian, int order);

// Sum over all order-r principal index sets containing `anchor` of the
// anchored column determinant of the submatrix with column `anchor`
// replaced by the matching entries of b.
Quaternion anchored_cdet_sum(const QMatrix& m, int anchor,
                             std::span<const Quaternion> b, int order);
// Row mirror: anchored row determinants with row `anchor` replaced.
Quaternion anchored_rdet_sum(const QMatrix& m, int anchor,
                             std::span<const Quaternion> b, int order);

// Largest order of a nonzero principal minor of A*A. Equals the elimination
// rank; that equality is enforced by the test suite, not assumed here.
int det_rank(const QMatrix& a);

// Smallest k >= 0 with rank(A^{k+1}) = rank(A^k); 0 iff A is nonsingular.
int matrix_index(const QMatrix& a);

} // namespace qgi
