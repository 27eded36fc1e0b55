#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgi/qmatrix.hpp"

namespace qgi {

// Determinant-free reference implementations: Gaussian elimination over the
// quaternions, rank factorization, Moore-Penrose and Drazin inverses built
// from them, and exact verifiers for every defining equation system. None of
// this calls the determinant machinery; independence is the point.

// Rank by row elimination with left coefficients (equivalently, the number
// of right-linearly independent columns). Polynomial time, no size cap.
int elim_rank(const QMatrix& a);

// Smallest k >= 0 with elim_rank(A^{k+1}) = elim_rank(A^k).
int elim_index(const QMatrix& a);

// Inverse of a nonsingular square matrix by Gauss-Jordan elimination.
// Throws ShapeError if not square, RankZero-free: singular input throws
// ShapeError with a singularity message.
QMatrix elim_inverse(const QMatrix& a);

/// A = F * G with F of full column rank (m x r) and G of full row rank
/// (r x n), r = elim_rank(A).
struct RankFactorization {
    QMatrix f;
    QMatrix g;
};

// Throws RankZero on the zero matrix.
RankFactorization rank_factorize(const QMatrix& a);

// Moore-Penrose inverse via full-rank factorization:
// A† = G* (F* A G*)^{-1} F*, with the r x r inversion done by elimination.
QMatrix mp_oracle(const QMatrix& a);

// Drazin inverse via A^d = A^k (A^{2k+1})† A^k with k = elim_index(A).
QMatrix drazin_oracle(const QMatrix& a);

enum class System {
    Penrose,
    Drazin,
    CoreRight,
    CoreLeft,
    CoreEpRight,
    CoreEpLeft,
    Dmp,
    Mpd,
    Cmp,
};

std::string system_name(System system);

struct EquationResult {
    std::string name;
    bool ok = false;
    // Left-hand side minus right-hand side for failed matrix equations;
    // empty for rank-based range conditions (the message carries the ranks).
    QMatrix residual;
    std::string message;
};

struct VerificationReport {
    System system = System::Penrose;
    std::vector<EquationResult> equations;

    bool ok() const {
        for (const auto& eq : equations)
            if (!eq.ok) return false;
        return true;
    }
};

struct VerifyOptions {
    // Matrix index override; computed via elimination when absent.
    std::optional<int> index;
    // Core part A1 for the Cmp system; computed as A A^d A when absent.
    std::optional<QMatrix> core_part;
};

// Exact evaluation of every equation in the named system; range conditions
// are decided through elimination ranks of adjoined/stacked matrices.
VerificationReport verify(System system, const QMatrix& a, const QMatrix& x,
                          const VerifyOptions& options = {});

} // namespace qgi
