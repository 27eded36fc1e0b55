#pragma once

#include <utility>

#include "qgi/geninv.hpp"
#include "qgi/qmatrix.hpp"

namespace qgi {

// Right/left core inverses, right/left core-EP inverses, DMP, MPD and CMP
// inverses. Each has a determinantal route and a composition route built
// from the Moore-Penrose and Drazin inverses; the two must agree exactly,
// and the *_verified entry points enforce that.

enum class Side { Right, Left };

enum class CoreMethod {
    Direct,      // single anchored minor sum over the squared-power Gram matrix
    Staged,      // two-stage route through an auxiliary matrix of minor sums
    Composition, // group inverse composed with the projector
};

// Ingredient source for composition routes.
enum class Backend { Determinantal, Oracle };

QMatrix right_core(const QMatrix& a, CoreMethod method = CoreMethod::Direct,
                   Backend backend = Backend::Determinantal);
QMatrix left_core(const QMatrix& a, CoreMethod method = CoreMethod::Direct,
                  Backend backend = Backend::Determinantal);

enum class PathMethod { Determinantal, Composition };

QMatrix core_ep(const QMatrix& a, Side side,
                PathMethod method = PathMethod::Determinantal,
                Backend backend = Backend::Determinantal);

// DMP inverse A^d A A† and its dual MPD inverse A† A A^d. Form::Auto picks
// the Hermitian specialization when A = A*, the general representation
// otherwise; Column/Row both name the (single) general representation.
QMatrix dmp(const QMatrix& a, Form form = Form::Auto);
QMatrix mpd(const QMatrix& a, Form form = Form::Auto);
QMatrix dmp_composition(const QMatrix& a, Backend backend = Backend::Determinantal);
QMatrix mpd_composition(const QMatrix& a, Backend backend = Backend::Determinantal);

/// CMP representation selector. `l` picks which auxiliary matrix chain is
/// used (1: row-built U-hat, 2: column-built G-hat); `rdet_form` picks the
/// outer anchored sum (column determinants over A*A vs row determinants
/// over AA*); `hermitian` switches to the specialization requiring A = A*.
/// All variants produce the same matrix.
struct CmpVariant {
    int l = 1;
    bool rdet_form = false;
    bool hermitian = false;
};

QMatrix cmp(const QMatrix& a, CmpVariant variant = {});
QMatrix cmp_composition(const QMatrix& a, Backend backend = Backend::Determinantal);

// Core-nilpotent decomposition A = A1 + A2 with A1 = A A^d A group
// invertible, A2 nilpotent, and A1 A2 = A2 A1 = 0.
std::pair<QMatrix, QMatrix> core_nilpotent_split(const QMatrix& a,
                                                 Backend backend = Backend::Determinantal);

// Cross-validating variants: every route (and for cmp every variant) is
// evaluated and compared; disagreement throws MethodDisagreement.
QMatrix right_core_verified(const QMatrix& a);
QMatrix left_core_verified(const QMatrix& a);
QMatrix core_ep_verified(const QMatrix& a, Side side);
QMatrix dmp_verified(const QMatrix& a);
QMatrix mpd_verified(const QMatrix& a);
QMatrix cmp_verified(const QMatrix& a);

namespace detail {

// The general DMP/MPD/CMP representations contain auxiliary matrices whose
// middle factor is a power of A tied to the matrix index k (PowerMatched:
// A^k resp. A^{k+1}). Freezing that factor at the first power resp. the
// square (Squared) is only correct for k <= 1. Both candidates are kept so
// the selection is demonstrated by computation; the public entry points use
// PowerMatched.
enum class HatExponents { PowerMatched, Squared };

QMatrix dmp_general(const QMatrix& a, HatExponents exponents);
QMatrix mpd_general(const QMatrix& a, HatExponents exponents);
QMatrix cmp_general(const QMatrix& a, int l, bool rdet_form, HatExponents exponents);

} // namespace detail

} // namespace qgi
