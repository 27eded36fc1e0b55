#pragma once

#include "qgi/qmatrix.hpp"

namespace qgi {

// Determinantal representations of the Moore-Penrose inverse, the two
// orthogonal projectors, the Drazin inverse and the group inverse. Every
// entry is a quotient of anchored minor sums; denominators are sums of
// principal minors of a Gram-type Hermitian matrix and are provably
// positive at the correct rank, so a vanishing denominator is reported as
// an internal bug, never silently divided.

enum class Form {
    Column,          // anchored column-determinant sums over A*A (or its analog)
    Row,             // anchored row-determinant sums over AA*
    HermitianColumn, // Hermitian fast path, smaller powers; needs A = A*
    HermitianRow,
    Auto, // Hermitian fast path when A = A*, column form otherwise
};

QMatrix mp_inverse(const QMatrix& a, Form form = Form::Auto);
// Q_A = A† A.
QMatrix projector_q(const QMatrix& a);
// P_A = A A†.
QMatrix projector_p(const QMatrix& a);
QMatrix drazin(const QMatrix& a, Form form = Form::Auto);
// Drazin inverse specialized to index one. Throws IndexTooLarge when
// Ind A >= 2; nonsingular input yields the classical inverse.
QMatrix group_inverse(const QMatrix& a, Form form = Form::Auto);

// Verification-mode variants: evaluate every applicable form and throw
// InternalInconsistency unless all agree entrywise.
QMatrix mp_inverse_verified(const QMatrix& a);
QMatrix drazin_verified(const QMatrix& a);
QMatrix group_inverse_verified(const QMatrix& a);

} // namespace qgi
