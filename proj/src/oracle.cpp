#include "qgi/oracle.hpp"

#include "qgi/errors.hpp"

namespace qgi {

namespace {

struct Rref {
    QMatrix reduced;
    std::vector<int> pivot_cols; // 1-based
};

// Reduced row echelon form by row operations with coefficients on the left.
// Over a skew field that is the operation set preserving left row spaces;
// the pivot columns of A then span its right column space.
Rref rref(const QMatrix& a) {
    Rref out{a, {}};
    QMatrix& m = out.reduced;
    const int rows = m.rows(), cols = m.cols();
    int lead = 1;
    for (int col = 1; col <= cols && lead <= rows; ++col) {
        int pivot = 0;
        for (int r = lead; r <= rows; ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == 0) continue;
        if (pivot != lead) {
            for (int c = 1; c <= cols; ++c) std::swap(m.at(pivot, c), m.at(lead, c));
        }
        const Quaternion inv = m.at(lead, col).inverse();
        for (int c = 1; c <= cols; ++c) m.at(lead, c) = inv * m.at(lead, c);
        for (int r = 1; r <= rows; ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            const Quaternion factor = m.at(r, col);
            for (int c = 1; c <= cols; ++c)
                m.at(r, c) = m.at(r, c) - factor * m.at(lead, c);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    return out;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("hstack: row count mismatch");
    QMatrix out(a.rows(), a.cols() + b.cols());
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 1; j <= b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols()) throw ShapeError("vstack: column count mismatch");
    QMatrix out(a.rows() + b.rows(), a.cols());
    for (int j = 1; j <= a.cols(); ++j) {
        for (int i = 1; i <= a.rows(); ++i) out.at(i, j) = a.at(i, j);
        for (int i = 1; i <= b.rows(); ++i) out.at(a.rows() + i, j) = b.at(i, j);
    }
    return out;
}

void push_equation(VerificationReport& report, std::string name, const QMatrix& lhs,
                   const QMatrix& rhs) {
    EquationResult eq;
    eq.name = std::move(name);
    eq.ok = (lhs == rhs);
    if (!eq.ok) eq.residual = lhs - rhs;
    report.equations.push_back(std::move(eq));
}

void push_rank_condition(VerificationReport& report, std::string name,
                         const std::vector<int>& ranks, int combined) {
    EquationResult eq;
    eq.name = std::move(name);
    eq.ok = true;
    for (int r : ranks)
        if (r != combined) eq.ok = false;
    std::string msg = "ranks";
    for (int r : ranks) msg += " " + std::to_string(r);
    msg += ", combined " + std::to_string(combined);
    eq.message = std::move(msg);
    report.equations.push_back(std::move(eq));
}

void require_square_pair(const QMatrix& a, const QMatrix& x) {
    if (!a.is_square() || !x.is_square() || a.rows() != x.rows())
        throw ShapeError("verify: system needs square matrices of equal size");
}

} // namespace

int elim_rank(const QMatrix& a) {
    if (a.is_empty()) return 0;
    return static_cast<int>(rref(a).pivot_cols.size());
}

int elim_index(const QMatrix& a) {
    if (!a.is_square()) throw ShapeError("elim_index: matrix not square");
    const int n = a.rows();
    int prev = n;
    QMatrix power = a;
    for (int k = 0; k <= n; ++k) {
        const int next = elim_rank(power);
        if (next == prev) return k;
        prev = next;
        power = power * a;
    }
    throw InternalInconsistency("elim_index: rank sequence failed to stabilize");
}

QMatrix elim_inverse(const QMatrix& a) {
    if (!a.is_square()) throw ShapeError("elim_inverse: matrix not square");
    const int n = a.rows();
    const Rref solved = rref(hstack(a, QMatrix::identity(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (solved.reduced.at(i, j) !=
                (i == j ? Quaternion(1) : Quaternion()))
                throw ShapeError("elim_inverse: matrix is singular");
    QMatrix inv(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) inv.at(i, j) = solved.reduced.at(i, n + j);
    return inv;
}

RankFactorization rank_factorize(const QMatrix& a) {
    const Rref reduced = rref(a);
    const int r = static_cast<int>(reduced.pivot_cols.size());
    if (r == 0) throw RankZero("rank_factorize: zero matrix has no rank factorization");
    QMatrix f(a.rows(), r);
    for (int t = 1; t <= r; ++t)
        for (int i = 1; i <= a.rows(); ++i) f.at(i, t) = a.at(i, reduced.pivot_cols[t - 1]);
    QMatrix g(r, a.cols());
    for (int t = 1; t <= r; ++t)
        for (int j = 1; j <= a.cols(); ++j) g.at(t, j) = reduced.reduced.at(t, j);
    return {std::move(f), std::move(g)};
}

QMatrix mp_oracle(const QMatrix& a) {
    if (a.is_empty()) throw ShapeError("mp_oracle: empty matrix");
    if (a.is_zero()) return QMatrix::zero(a.cols(), a.rows());
    const RankFactorization fg = rank_factorize(a);
    const QMatrix fs = fg.f.adjoint();
    const QMatrix gs = fg.g.adjoint();
    const QMatrix core = fs * a * gs; // r x r, invertible
    return gs * elim_inverse(core) * fs;
}

QMatrix drazin_oracle(const QMatrix& a) {
    if (!a.is_square()) throw ShapeError("drazin_oracle: matrix not square");
    const int k = elim_index(a);
    const QMatrix ak = a.pow(k);
    if (ak.is_zero()) return QMatrix::zero(a.rows(), a.cols());
    return ak * mp_oracle(a.pow(2 * k + 1)) * ak;
}

std::string system_name(System system) {
    switch (system) {
        case System::Penrose: return "penrose";
        case System::Drazin: return "drazin";
        case System::CoreRight: return "core_right";
        case System::CoreLeft: return "core_left";
        case System::CoreEpRight: return "core_ep_right";
        case System::CoreEpLeft: return "core_ep_left";
        case System::Dmp: return "dmp";
        case System::Mpd: return "mpd";
        case System::Cmp: return "cmp";
    }
    return "unknown";
}

VerificationReport verify(System system, const QMatrix& a, const QMatrix& x,
                          const VerifyOptions& options) {
    VerificationReport report;
    report.system = system;
    switch (system) {
        case System::Penrose: {
            if (x.rows() != a.cols() || x.cols() != a.rows())
                throw ShapeError("verify(penrose): X must be cols(A) x rows(A)");
            push_equation(report, "A X A = A", a * x * a, a);
            push_equation(report, "X A X = X", x * a * x, x);
            push_equation(report, "(A X)* = A X", (a * x).adjoint(), a * x);
            push_equation(report, "(X A)* = X A", (x * a).adjoint(), x * a);
            break;
        }
        case System::Drazin: {
            require_square_pair(a, x);
            const int k = options.index ? *options.index : elim_index(a);
            const QMatrix ak = a.pow(k);
            push_equation(report, "X A X = X", x * a * x, x);
            push_equation(report, "A X = X A", a * x, x * a);
            push_equation(report, "X A^{k+1} = A^k", x * a.pow(k + 1), ak);
            push_equation(report, "A^{k+1} X = A^k", a.pow(k + 1) * x, ak);
            break;
        }
        case System::CoreRight: {
            require_square_pair(a, x);
            push_equation(report, "A X = A A†", a * x, a * mp_oracle(a));
            push_rank_condition(report, "right column space of X equals that of A",
                                {elim_rank(a), elim_rank(x)}, elim_rank(hstack(a, x)));
            break;
        }
        case System::CoreLeft: {
            require_square_pair(a, x);
            push_equation(report, "X A = A† A", x * a, mp_oracle(a) * a);
            push_rank_condition(report, "left row space of X equals that of A",
                                {elim_rank(a), elim_rank(x)}, elim_rank(vstack(a, x)));
            break;
        }
        case System::CoreEpRight: {
            require_square_pair(a, x);
            const int k = options.index ? *options.index : elim_index(a);
            const QMatrix ak = a.pow(k);
            push_equation(report, "X A X = X", x * a * x, x);
            push_equation(report, "(A X)* = A X", (a * x).adjoint(), a * x);
            push_equation(report, "X A^{k+1} = A^k", x * a.pow(k + 1), ak);
            push_rank_condition(
                report, "right column spaces of X, X*, A^k coincide",
                {elim_rank(x), elim_rank(x.adjoint()), elim_rank(ak)},
                elim_rank(hstack(hstack(x, x.adjoint()), ak)));
            break;
        }
        case System::CoreEpLeft: {
            require_square_pair(a, x);
            const int k = options.index ? *options.index : elim_index(a);
            const QMatrix ak = a.pow(k);
            push_equation(report, "X A X = X", x * a * x, x);
            push_equation(report, "(X A)* = X A", (x * a).adjoint(), x * a);
            push_equation(report, "A^{k+1} X = A^k", a.pow(k + 1) * x, ak);
            push_rank_condition(
                report, "left row spaces of X, X*, A^k coincide",
                {elim_rank(x), elim_rank(x.adjoint()), elim_rank(ak)},
                elim_rank(vstack(vstack(x, x.adjoint()), ak)));
            break;
        }
        case System::Dmp: {
            require_square_pair(a, x);
            const int k = options.index ? *options.index : elim_index(a);
            const QMatrix ak = a.pow(k);
            const QMatrix ad = drazin_oracle(a);
            push_equation(report, "X A X = X", x * a * x, x);
            push_equation(report, "X A = A^d A", x * a, ad * a);
            push_equation(report, "A^k X = A^k A†", ak * x, ak * mp_oracle(a));
            break;
        }
        case System::Mpd: {
            require_square_pair(a, x);
            const int k = options.index ? *options.index : elim_index(a);
            const QMatrix ak = a.pow(k);
            const QMatrix ad = drazin_oracle(a);
            push_equation(report, "X A X = X", x * a * x, x);
            push_equation(report, "A X = A A^d", a * x, a * ad);
            push_equation(report, "X A^k = A† A^k", x * ak, mp_oracle(a) * ak);
            break;
        }
        case System::Cmp: {
            require_square_pair(a, x);
            const QMatrix core =
                options.core_part ? *options.core_part : a * drazin_oracle(a) * a;
            const QMatrix mp = mp_oracle(a);
            push_equation(report, "X A X = X", x * a * x, x);
            push_equation(report, "A X A = A1", a * x * a, core);
            push_equation(report, "A X = A1 A†", a * x, core * mp);
            push_equation(report, "X A = A† A1", x * a, mp * core);
            break;
        }
    }
    return report;
}

} // namespace qgi
