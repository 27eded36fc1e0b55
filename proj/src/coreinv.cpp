#include "qgi/coreinv.hpp"

#include <vector>

#include "qgi/errors.hpp"
#include "qgi/ncdet.hpp"
#include "qgi/oracle.hpp"

namespace qgi {

namespace {

void check_square_within_cap(const QMatrix& a, const char* where) {
    if (!a.is_square()) throw ShapeError(std::string(where) + ": matrix not square");
    if (a.rows() > det_cap())
        throw SizeCapExceeded(std::string(where) + ": size " + std::to_string(a.rows()) +
                              " exceeds cap " + std::to_string(det_cap()));
}

void require_core_matrix(const QMatrix& a, const char* where) {
    const int index = matrix_index(a);
    if (index > 1)
        throw IndexTooLarge(std::string(where) + ": matrix index " + std::to_string(index) +
                            " exceeds 1; the core-EP inverse handles higher index");
}

Rational denom(const QMatrix& gram, int order, const char* where) {
    const Rational d = minor_sum(gram, order);
    if (sgn(d) == 0)
        throw InternalInconsistency(std::string(where) +
                                    ": zero minor sum at the computed rank");
    return d;
}

QMatrix mp_by(Backend backend, const QMatrix& a) {
    return backend == Backend::Oracle ? mp_oracle(a) : mp_inverse(a);
}

QMatrix drazin_by(Backend backend, const QMatrix& a) {
    return backend == Backend::Oracle ? drazin_oracle(a) : drazin(a);
}

QMatrix group_by(Backend backend, const QMatrix& a) {
    if (backend == Backend::Oracle) {
        if (elim_index(a) > 1) throw IndexTooLarge("group inverse: matrix index exceeds 1");
        return drazin_oracle(a);
    }
    return group_inverse(a);
}

// entry(i,j) = rdet-sum_j(gram row-replaced by row i of numerators) / den
QMatrix assemble_rows(const QMatrix& gram, const QMatrix& numerators, int order,
                      const Rational& den) {
    const int n = gram.rows();
    QMatrix out(n, n);
    for (int i = 1; i <= n; ++i) {
        const std::vector<Quaternion> row = numerators.row(i);
        for (int j = 1; j <= n; ++j)
            out.at(i, j) = anchored_rdet_sum(gram, j, row, order) / den;
    }
    return out;
}

// entry(i,j) = cdet-sum_i(gram column-replaced by column j of numerators) / den
QMatrix assemble_cols(const QMatrix& gram, const QMatrix& numerators, int order,
                      const Rational& den) {
    const int n = gram.rows();
    QMatrix out(n, n);
    for (int j = 1; j <= n; ++j) {
        const std::vector<Quaternion> col = numerators.column(j);
        for (int i = 1; i <= n; ++i)
            out.at(i, j) = anchored_cdet_sum(gram, i, col, order) / den;
    }
    return out;
}

// Matrix of anchored row-determinant sums: U(i,f) = rdet-sum_f over `gram`
// with row f replaced by row i of `source`.
QMatrix rdet_sum_matrix(const QMatrix& gram, const QMatrix& source, int order) {
    const int n = gram.rows();
    QMatrix u(n, n);
    for (int i = 1; i <= n; ++i) {
        const std::vector<Quaternion> row = source.row(i);
        for (int f = 1; f <= n; ++f) u.at(i, f) = anchored_rdet_sum(gram, f, row, order);
    }
    return u;
}

// Matrix of anchored column-determinant sums: V(f,j) = cdet-sum_f over
// `gram` with column f replaced by column j of `source`.
QMatrix cdet_sum_matrix(const QMatrix& gram, const QMatrix& source, int order) {
    const int n = gram.rows();
    QMatrix v(n, n);
    for (int j = 1; j <= n; ++j) {
        const std::vector<Quaternion> col = source.column(j);
        for (int f = 1; f <= n; ++f) v.at(f, j) = anchored_cdet_sum(gram, f, col, order);
    }
    return v;
}

} // namespace

QMatrix right_core(const QMatrix& a, CoreMethod method, Backend backend) {
    check_square_within_cap(a, "right_core");
    require_core_matrix(a, "right_core");
    const int n = a.rows();
    const int s = elim_rank(a);
    if (s == 0) return QMatrix::zero(n, n);
    switch (method) {
        case CoreMethod::Direct: {
            const QMatrix a2 = a * a;
            const QMatrix gram = a2 * a2.adjoint();
            const QMatrix hat = a * a2.adjoint();
            return assemble_rows(gram, hat, s, denom(gram, s, "right_core(direct)"));
        }
        case CoreMethod::Staged: {
            const QMatrix a3 = a.pow(3);
            const QMatrix gram3 = a3 * a3.adjoint();
            const QMatrix check = a * a3.adjoint();
            const QMatrix u = rdet_sum_matrix(gram3, check, s);
            const QMatrix u_hat = u * a.pow(2) * a.adjoint();
            const QMatrix gram1 = a * a.adjoint();
            const Rational den = denom(gram3, s, "right_core(staged)") *
                                 denom(gram1, s, "right_core(staged)");
            return assemble_rows(gram1, u_hat, s, den);
        }
        case CoreMethod::Composition:
            return group_by(backend, a) * a * mp_by(backend, a);
    }
    throw ShapeError("right_core: unknown method");
}

QMatrix left_core(const QMatrix& a, CoreMethod method, Backend backend) {
    check_square_within_cap(a, "left_core");
    require_core_matrix(a, "left_core");
    const int n = a.rows();
    const int s = elim_rank(a);
    if (s == 0) return QMatrix::zero(n, n);
    switch (method) {
        case CoreMethod::Direct: {
            const QMatrix a2 = a * a;
            const QMatrix gram = a2.adjoint() * a2;
            const QMatrix check = a2.adjoint() * a;
            return assemble_cols(gram, check, s, denom(gram, s, "left_core(direct)"));
        }
        case CoreMethod::Staged: {
            const QMatrix a3 = a.pow(3);
            const QMatrix gram3 = a3.adjoint() * a3;
            const QMatrix hat = a3.adjoint() * a;
            const QMatrix v = cdet_sum_matrix(gram3, hat, s);
            const QMatrix v_hat = a.adjoint() * a.pow(2) * v;
            const QMatrix gram1 = a.adjoint() * a;
            const Rational den = denom(gram1, s, "left_core(staged)") *
                                 denom(gram3, s, "left_core(staged)");
            return assemble_cols(gram1, v_hat, s, den);
        }
        case CoreMethod::Composition:
            return mp_by(backend, a) * a * group_by(backend, a);
    }
    throw ShapeError("left_core: unknown method");
}

QMatrix core_ep(const QMatrix& a, Side side, PathMethod method, Backend backend) {
    check_square_within_cap(a, "core_ep");
    const int n = a.rows();
    const int k = matrix_index(a);
    const QMatrix ak = a.pow(k);
    const int r = elim_rank(ak);
    if (r == 0) return QMatrix::zero(n, n);
    if (method == PathMethod::Composition) {
        const QMatrix mp_power = mp_by(backend, a.pow(k + 1));
        return side == Side::Right ? ak * mp_power : mp_power * ak;
    }
    const QMatrix power = a.pow(k + 1);
    if (side == Side::Right) {
        const QMatrix gram = power * power.adjoint();
        const QMatrix hat = ak * power.adjoint();
        return assemble_rows(gram, hat, r, denom(gram, r, "core_ep(right)"));
    }
    const QMatrix gram = power.adjoint() * power;
    const QMatrix check = power.adjoint() * ak;
    return assemble_cols(gram, check, r, denom(gram, r, "core_ep(left)"));
}

namespace detail {

QMatrix dmp_general(const QMatrix& a, HatExponents exponents) {
    check_square_within_cap(a, "dmp");
    const int n = a.rows();
    const int k = matrix_index(a);
    const int s = elim_rank(a);
    if (s == 0) return QMatrix::zero(n, n);
    const int s1 = elim_rank(a.pow(k));
    if (s1 == 0) return QMatrix::zero(n, n); // nilpotent: A^d = 0
    const QMatrix b = a.pow(2 * k + 1);
    const QMatrix gram_b = b * b.adjoint();
    const int check_power = exponents == HatExponents::PowerMatched ? k : 1;
    const int mid_power = exponents == HatExponents::PowerMatched ? k + 1 : 2;
    const QMatrix check = a.pow(check_power) * b.adjoint();
    const QMatrix u = rdet_sum_matrix(gram_b, check, s1);
    const QMatrix u_hat = u * a.pow(mid_power) * a.adjoint();
    const QMatrix gram1 = a * a.adjoint();
    const Rational den = denom(gram_b, s1, "dmp") * denom(gram1, s, "dmp");
    return assemble_rows(gram1, u_hat, s, den);
}

QMatrix mpd_general(const QMatrix& a, HatExponents exponents) {
    check_square_within_cap(a, "mpd");
    const int n = a.rows();
    const int k = matrix_index(a);
    const int s = elim_rank(a);
    if (s == 0) return QMatrix::zero(n, n);
    const int s1 = elim_rank(a.pow(k));
    if (s1 == 0) return QMatrix::zero(n, n);
    const QMatrix b = a.pow(2 * k + 1);
    const QMatrix gram_b = b.adjoint() * b;
    const int hat_power = exponents == HatExponents::PowerMatched ? k : 1;
    const int mid_power = exponents == HatExponents::PowerMatched ? k + 1 : 2;
    const QMatrix hat = b.adjoint() * a.pow(hat_power);
    const QMatrix v = cdet_sum_matrix(gram_b, hat, s1);
    const QMatrix v_hat = a.adjoint() * a.pow(mid_power) * v;
    const QMatrix gram1 = a.adjoint() * a;
    const Rational den = denom(gram1, s, "mpd") * denom(gram_b, s1, "mpd");
    return assemble_cols(gram1, v_hat, s, den);
}

QMatrix cmp_general(const QMatrix& a, int l, bool rdet_form, HatExponents exponents) {
    check_square_within_cap(a, "cmp");
    if (l != 1 && l != 2) throw ShapeError("cmp: variant l must be 1 or 2");
    const int n = a.rows();
    const int m = matrix_index(a);
    const int s = elim_rank(a);
    if (s == 0) return QMatrix::zero(n, n);
    const int s1 = elim_rank(a.pow(m));
    if (s1 == 0) return QMatrix::zero(n, n);
    const QMatrix b = a.pow(2 * m + 1);
    const QMatrix gram_left = a.adjoint() * a;
    const QMatrix gram_right = a * a.adjoint();
    const int mid_power = exponents == HatExponents::PowerMatched ? m + 1 : 2;
    QMatrix carrier(n, n); // U-hat or G-hat, depending on the chain
    Rational den_power(0);
    if (l == 1) {
        const QMatrix gram_b = b * b.adjoint();
        const QMatrix a1 = a.adjoint() * a.pow(m + 1) * b.adjoint();
        const QMatrix u = rdet_sum_matrix(gram_b, a1, s1);
        carrier = u * a.pow(m + 1) * a.adjoint();
        den_power = denom(gram_b, s1, "cmp(l=1)");
    } else {
        const QMatrix gram_b = b.adjoint() * b;
        const QMatrix a2 = b.adjoint() * a.pow(mid_power) * a.adjoint();
        const QMatrix g = cdet_sum_matrix(gram_b, a2, s1);
        carrier = a.adjoint() * a.pow(mid_power) * g;
        den_power = denom(gram_b, s1, "cmp(l=2)");
    }
    const Rational den_gram = denom(gram_left, s, "cmp");
    const Rational den = den_gram * den_gram * den_power;
    if (rdet_form) {
        // w_{i.}: entry k = cdet-sum_i over A*A with column k of the carrier.
        QMatrix w_rows(n, n);
        for (int i = 1; i <= n; ++i)
            for (int kcol = 1; kcol <= n; ++kcol)
                w_rows.at(i, kcol) = anchored_cdet_sum(gram_left, i, carrier.column(kcol), s);
        return assemble_rows(gram_right, w_rows, s, den);
    }
    // v_{.j}: entry t = rdet-sum_j over AA* with row t of the carrier.
    QMatrix v_cols(n, n);
    for (int t = 1; t <= n; ++t) {
        const std::vector<Quaternion> row = carrier.row(t);
        for (int j = 1; j <= n; ++j)
            v_cols.at(t, j) = anchored_rdet_sum(gram_right, j, row, s);
    }
    return assemble_cols(gram_left, v_cols, s, den);
}

} // namespace detail

namespace {

QMatrix cmp_hermitian(const QMatrix& a, int l, bool rdet_form) {
    check_square_within_cap(a, "cmp(hermitian)");
    if (!a.is_hermitian())
        throw NotHermitian("cmp: Hermitian variant on non-Hermitian input");
    const int n = a.rows();
    const int m = matrix_index(a);
    const int s = elim_rank(a);
    if (s == 0) return QMatrix::zero(n, n);
    const int s1 = elim_rank(a.pow(m));
    if (s1 == 0) return QMatrix::zero(n, n);
    const QMatrix sq = a * a;
    const QMatrix power = a.pow(m + 1);
    const QMatrix power2 = a.pow(m + 2);
    QMatrix carrier(n, n);
    if (l == 1) {
        const QMatrix u = rdet_sum_matrix(power, power2, s1);
        carrier = u * sq;
    } else {
        const QMatrix g = cdet_sum_matrix(power, power2, s1);
        carrier = sq * g;
    }
    const Rational den_sq = denom(sq, s, "cmp(hermitian)");
    const Rational den = den_sq * den_sq * denom(power, s1, "cmp(hermitian)");
    if (rdet_form) {
        QMatrix w_rows(n, n);
        for (int i = 1; i <= n; ++i)
            for (int kcol = 1; kcol <= n; ++kcol)
                w_rows.at(i, kcol) = anchored_cdet_sum(sq, i, carrier.column(kcol), s);
        return assemble_rows(sq, w_rows, s, den);
    }
    QMatrix v_cols(n, n);
    for (int t = 1; t <= n; ++t) {
        const std::vector<Quaternion> row = carrier.row(t);
        for (int j = 1; j <= n; ++j) v_cols.at(t, j) = anchored_rdet_sum(sq, j, row, s);
    }
    return assemble_cols(sq, v_cols, s, den);
}

QMatrix dmp_hermitian(const QMatrix& a, bool rdet_form) {
    check_square_within_cap(a, "dmp(hermitian)");
    if (!a.is_hermitian())
        throw NotHermitian("dmp: Hermitian form on non-Hermitian input");
    const int n = a.rows();
    const int k = matrix_index(a);
    const int s = elim_rank(a);
    if (s == 0) return QMatrix::zero(n, n);
    const int s1 = elim_rank(a.pow(k));
    if (s1 == 0) return QMatrix::zero(n, n);
    const QMatrix sq = a * a;
    const QMatrix power = a.pow(k + 1);
    const QMatrix power2 = a.pow(k + 2);
    const Rational den = denom(power, s1, "dmp(hermitian)") * denom(sq, s, "dmp(hermitian)");
    QMatrix out(n, n);
    if (rdet_form) {
        // v_{i.}: entry f = cdet-sum_i over A^{k+1} with column f of A^{k+2}.
        for (int i = 1; i <= n; ++i) {
            std::vector<Quaternion> v(n);
            for (int f = 1; f <= n; ++f)
                v[f - 1] = anchored_cdet_sum(power, i, power2.column(f), s1);
            for (int j = 1; j <= n; ++j)
                out.at(i, j) = anchored_rdet_sum(sq, j, v, s) / den;
        }
        return out;
    }
    // u_{.j}: entry l = rdet-sum_j over A^2 with row l of A^{k+2}.
    for (int j = 1; j <= n; ++j) {
        std::vector<Quaternion> u(n);
        for (int l = 1; l <= n; ++l)
            u[l - 1] = anchored_rdet_sum(sq, j, power2.row(l), s);
        for (int i = 1; i <= n; ++i)
            out.at(i, j) = anchored_cdet_sum(power, i, u, s1) / den;
    }
    return out;
}

QMatrix mpd_hermitian(const QMatrix& a, bool rdet_form) {
    check_square_within_cap(a, "mpd(hermitian)");
    if (!a.is_hermitian())
        throw NotHermitian("mpd: Hermitian form on non-Hermitian input");
    const int n = a.rows();
    const int k = matrix_index(a);
    const int s = elim_rank(a);
    if (s == 0) return QMatrix::zero(n, n);
    const int s1 = elim_rank(a.pow(k));
    if (s1 == 0) return QMatrix::zero(n, n);
    const QMatrix sq = a * a;
    const QMatrix power = a.pow(k + 1);
    const QMatrix power2 = a.pow(k + 2);
    const Rational den = denom(sq, s, "mpd(hermitian)") * denom(power, s1, "mpd(hermitian)");
    QMatrix out(n, n);
    if (!rdet_form) {
        // v_{.j}: entry l = rdet-sum_j over A^{k+1} with row l of A^{k+2}.
        for (int j = 1; j <= n; ++j) {
            std::vector<Quaternion> v(n);
            for (int l = 1; l <= n; ++l)
                v[l - 1] = anchored_rdet_sum(power, j, power2.row(l), s1);
            for (int i = 1; i <= n; ++i)
                out.at(i, j) = anchored_cdet_sum(sq, i, v, s) / den;
        }
        return out;
    }
    // u_{i.}: entry f = cdet-sum_i over A^2 with column f of A^{k+2}.
    for (int i = 1; i <= n; ++i) {
        std::vector<Quaternion> u(n);
        for (int f = 1; f <= n; ++f)
            u[f - 1] = anchored_cdet_sum(sq, i, power2.column(f), s);
        for (int j = 1; j <= n; ++j)
            out.at(i, j) = anchored_rdet_sum(power, j, u, s1) / den;
    }
    return out;
}

} // namespace

QMatrix dmp(const QMatrix& a, Form form) {
    if (form == Form::Auto) form = a.is_hermitian() ? Form::HermitianRow : Form::Row;
    switch (form) {
        case Form::HermitianRow: return dmp_hermitian(a, /*rdet_form=*/true);
        case Form::HermitianColumn: return dmp_hermitian(a, /*rdet_form=*/false);
        default: return detail::dmp_general(a, detail::HatExponents::PowerMatched);
    }
}

QMatrix mpd(const QMatrix& a, Form form) {
    if (form == Form::Auto) form = a.is_hermitian() ? Form::HermitianColumn : Form::Column;
    switch (form) {
        case Form::HermitianRow: return mpd_hermitian(a, /*rdet_form=*/true);
        case Form::HermitianColumn: return mpd_hermitian(a, /*rdet_form=*/false);
        default: return detail::mpd_general(a, detail::HatExponents::PowerMatched);
    }
}

QMatrix dmp_composition(const QMatrix& a, Backend backend) {
    if (!a.is_square()) throw ShapeError("dmp_composition: matrix not square");
    return drazin_by(backend, a) * a * mp_by(backend, a);
}

QMatrix mpd_composition(const QMatrix& a, Backend backend) {
    if (!a.is_square()) throw ShapeError("mpd_composition: matrix not square");
    return mp_by(backend, a) * a * drazin_by(backend, a);
}

QMatrix cmp(const QMatrix& a, CmpVariant variant) {
    if (variant.hermitian) return cmp_hermitian(a, variant.l, variant.rdet_form);
    return detail::cmp_general(a, variant.l, variant.rdet_form,
                               detail::HatExponents::PowerMatched);
}

QMatrix cmp_composition(const QMatrix& a, Backend backend) {
    if (!a.is_square()) throw ShapeError("cmp_composition: matrix not square");
    if (backend == Backend::Oracle) {
        const QMatrix mp = mp_oracle(a);
        return mp * a * drazin_oracle(a) * a * mp;
    }
    return projector_q(a) * drazin(a) * projector_p(a);
}

std::pair<QMatrix, QMatrix> core_nilpotent_split(const QMatrix& a, Backend backend) {
    if (!a.is_square()) throw ShapeError("core_nilpotent_split: matrix not square");
    const QMatrix core = a * drazin_by(backend, a) * a;
    return {core, a - core};
}

namespace {

void expect_equal(const QMatrix& lhs, const QMatrix& rhs, const char* where) {
    if (lhs != rhs) throw MethodDisagreement(std::string(where) + ": routes disagree");
}

} // namespace

QMatrix right_core_verified(const QMatrix& a) {
    const QMatrix direct = right_core(a, CoreMethod::Direct);
    expect_equal(direct, right_core(a, CoreMethod::Staged), "right_core");
    expect_equal(direct, right_core(a, CoreMethod::Composition), "right_core");
    return direct;
}

QMatrix left_core_verified(const QMatrix& a) {
    const QMatrix direct = left_core(a, CoreMethod::Direct);
    expect_equal(direct, left_core(a, CoreMethod::Staged), "left_core");
    expect_equal(direct, left_core(a, CoreMethod::Composition), "left_core");
    return direct;
}

QMatrix core_ep_verified(const QMatrix& a, Side side) {
    const QMatrix det = core_ep(a, side, PathMethod::Determinantal);
    expect_equal(det, core_ep(a, side, PathMethod::Composition), "core_ep");
    return det;
}

QMatrix dmp_verified(const QMatrix& a) {
    const QMatrix general = detail::dmp_general(a, detail::HatExponents::PowerMatched);
    expect_equal(general, dmp_composition(a), "dmp");
    if (a.is_hermitian()) {
        expect_equal(general, dmp(a, Form::HermitianRow), "dmp");
        expect_equal(general, dmp(a, Form::HermitianColumn), "dmp");
    }
    return general;
}

QMatrix mpd_verified(const QMatrix& a) {
    const QMatrix general = detail::mpd_general(a, detail::HatExponents::PowerMatched);
    expect_equal(general, mpd_composition(a), "mpd");
    if (a.is_hermitian()) {
        expect_equal(general, mpd(a, Form::HermitianRow), "mpd");
        expect_equal(general, mpd(a, Form::HermitianColumn), "mpd");
    }
    return general;
}

QMatrix cmp_verified(const QMatrix& a) {
    const QMatrix first = cmp(a, {1, false, false});
    expect_equal(first, cmp(a, {1, true, false}), "cmp");
    expect_equal(first, cmp(a, {2, false, false}), "cmp");
    expect_equal(first, cmp(a, {2, true, false}), "cmp");
    expect_equal(first, cmp_composition(a), "cmp");
    if (a.is_hermitian()) {
        expect_equal(first, cmp(a, {1, false, true}), "cmp");
        expect_equal(first, cmp(a, {1, true, true}), "cmp");
        expect_equal(first, cmp(a, {2, false, true}), "cmp");
        expect_equal(first, cmp(a, {2, true, true}), "cmp");
    }
    return first;
}

} // namespace qgi
