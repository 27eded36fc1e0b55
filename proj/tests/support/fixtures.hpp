#pragma once

// Frozen values for the worked example used across the test suite: the
// 3x3 matrix A = [[0,k,0],[i,0,-j],[0,j,0]] and everything derived from it.

#include "qgi/qmatrix.hpp"

namespace fixtures {

using qgi::QMatrix;
using qgi::Quaternion;
using qgi::Rational;

inline Quaternion q(long w, long x, long y, long z) {
    return {Rational(w), Rational(x), Rational(y), Rational(z)};
}

// Components given in halves (so qh(0,-1,0,1) is -i/2 + k/2).
inline Quaternion qh(long w, long x, long y, long z) {
    return {Rational(w, 2), Rational(x, 2), Rational(y, 2), Rational(z, 2)};
}

inline QMatrix example_a() {
    return {{q(0, 0, 0, 0), q(0, 0, 0, 1), q(0, 0, 0, 0)},
            {q(0, 1, 0, 0), q(0, 0, 0, 0), q(0, 0, -1, 0)},
            {q(0, 0, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 0)}};
}

inline QMatrix example_a_adjoint() {
    return {{q(0, 0, 0, 0), q(0, -1, 0, 0), q(0, 0, 0, 0)},
            {q(0, 0, 0, -1), q(0, 0, 0, 0), q(0, 0, -1, 0)},
            {q(0, 0, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 0)}};
}

inline QMatrix example_a_star_a() {
    return {{q(1, 0, 0, 0), q(0, 0, 0, 0), q(0, 0, 0, 1)},
            {q(0, 0, 0, 0), q(2, 0, 0, 0), q(0, 0, 0, 0)},
            {q(0, 0, 0, -1), q(0, 0, 0, 0), q(1, 0, 0, 0)}};
}

inline QMatrix example_a_squared() {
    return {{q(0, 0, 1, 0), q(0, 0, 0, 0), q(0, 1, 0, 0)},
            {q(0, 0, 0, 0), q(1, 0, -1, 0), q(0, 0, 0, 0)},
            {q(0, 0, 0, -1), q(0, 0, 0, 0), q(1, 0, 0, 0)}};
}

inline QMatrix example_a_squared_gram() {
    return {{q(2, 0, 0, 0), q(0, 0, 0, 0), q(0, 2, 0, 0)},
            {q(0, 0, 0, 0), q(2, 0, 0, 0), q(0, 0, 0, 0)},
            {q(0, -2, 0, 0), q(0, 0, 0, 0), q(2, 0, 0, 0)}};
}

inline QMatrix example_mp() {
    return {{qh(0, 0, 0, 0), qh(0, -1, 0, 0), qh(0, 0, 0, 0)},
            {qh(0, 0, 0, -1), qh(0, 0, 0, 0), qh(0, 0, -1, 0)},
            {qh(0, 0, 0, 0), qh(0, 0, 1, 0), qh(0, 0, 0, 0)}};
}

inline QMatrix example_core_right() {
    return {{qh(0, 0, 0, 0), qh(0, -1, 0, 1), qh(0, 0, 0, 0)},
            {qh(0, 0, 0, -1), qh(0, 0, 0, 0), qh(0, 0, -1, 0)},
            {qh(0, 0, 0, 0), qh(-1, 0, 1, 0), qh(0, 0, 0, 0)}};
}

inline QMatrix example_core_left() {
    return {{qh(0, 0, 0, 0), qh(0, -1, 0, 0), qh(0, 0, 0, 0)},
            {qh(0, 1, 0, -1), qh(0, 0, 0, 0), qh(1, 0, -1, 0)},
            {qh(0, 0, 0, 0), qh(0, 0, 1, 0), qh(0, 0, 0, 0)}};
}

// Also equals Q_A * A.
inline QMatrix example_mp_of_core_left() {
    return {{qh(0, 0, 0, 0), qh(0, -1, 0, 1), qh(0, 0, 0, 0)},
            {qh(0, 2, 0, 0), qh(0, 0, 0, 0), qh(0, 0, -2, 0)},
            {qh(0, 0, 0, 0), qh(1, 0, 1, 0), qh(0, 0, 0, 0)}};
}

// The nine anchored row-determinant numerator sums of the right core
// inverse, entry (i,j) holding the sum for position (i,j); eight times the
// right core inverse.
inline QMatrix example_core_right_numerators() {
    return {{q(0, 0, 0, 0), q(0, -4, 0, 4), q(0, 0, 0, 0)},
            {q(0, 0, 0, -4), q(0, 0, 0, 0), q(0, 0, -4, 0)},
            {q(0, 0, 0, 0), q(-4, 0, 4, 0), q(0, 0, 0, 0)}};
}

inline QMatrix nilpotent_2x2() {
    return {{q(0, 0, 0, 0), q(1, 0, 0, 0)}, {q(0, 0, 0, 0), q(0, 0, 0, 0)}};
}

} // namespace fixtures
