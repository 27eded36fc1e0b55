#include "qgi/geninv.hpp"

#include <vector>

#include "qgi/errors.hpp"
#include "qgi/ncdet.hpp"
#include "qgi/oracle.hpp"

namespace qgi {

namespace {

void check_cap_for(const QMatrix& a) {
    const int bound = std::max(a.rows(), a.cols());
    if (bound > det_cap())
        throw SizeCapExceeded("determinantal path: size " + std::to_string(bound) +
                              " exceeds cap " + std::to_string(det_cap()));
}

Rational denominator_or_throw(const QMatrix& gram, int order, const char* where) {
    const Rational d = minor_sum(gram, order);
    if (sgn(d) == 0)
        throw InternalInconsistency(std::string(where) +
                                    ": zero minor sum at the computed rank");
    return d;
}

Form resolve(Form form, const QMatrix& a) {
    if (form != Form::Auto) return form;
    return a.is_hermitian() ? Form::HermitianColumn : Form::Column;
}

void require_hermitian_form(const QMatrix& a, const char* where) {
    if (!a.is_hermitian())
        throw NotHermitian(std::string(where) + ": Hermitian form on non-Hermitian input");
}

// Shared shape of the Drazin/group representations: for the column form,
//   entry(i,j) = sum_t (A^k)_{it} * S_c(t, j-th column of (A^{2k+1})* A^k)
// with S_c an anchored cdet sum over (A^{2k+1})* A^{2k+1}; the row form
// mirrors it with (A^{2k+1}) (A^{2k+1})* and rows of A^k (A^{2k+1})*.
// Hermitian forms use A^{k+1} directly with rows/columns of A^k.
QMatrix drazin_with_index(const QMatrix& a, int k, Form form) {
    if (!a.is_square()) throw ShapeError("drazin: matrix not square");
    check_cap_for(a);
    const int n = a.rows();
    const QMatrix ak = a.pow(k);
    const int r = elim_rank(ak);
    if (r == 0) return QMatrix::zero(n, n);
    form = resolve(form, a);
    QMatrix out(n, n);
    switch (form) {
        case Form::Column: {
            const QMatrix b = a.pow(2 * k + 1);
            const QMatrix gram = b.adjoint() * b;
            const QMatrix hat = b.adjoint() * ak;
            const Rational den = denominator_or_throw(gram, r, "drazin(column)");
            for (int j = 1; j <= n; ++j) {
                const std::vector<Quaternion> hat_col = hat.column(j);
                std::vector<Quaternion> sums(n + 1);
                for (int t = 1; t <= n; ++t)
                    sums[t] = anchored_cdet_sum(gram, t, hat_col, r);
                for (int i = 1; i <= n; ++i) {
                    Quaternion acc;
                    for (int t = 1; t <= n; ++t) acc += ak.at(i, t) * sums[t];
                    out.at(i, j) = acc / den;
                }
            }
            break;
        }
        case Form::Row: {
            const QMatrix b = a.pow(2 * k + 1);
            const QMatrix gram = b * b.adjoint();
            const QMatrix check = ak * b.adjoint();
            const Rational den = denominator_or_throw(gram, r, "drazin(row)");
            for (int i = 1; i <= n; ++i) {
                const std::vector<Quaternion> check_row = check.row(i);
                std::vector<Quaternion> sums(n + 1);
                for (int s = 1; s <= n; ++s)
                    sums[s] = anchored_rdet_sum(gram, s, check_row, r);
                for (int j = 1; j <= n; ++j) {
                    Quaternion acc;
                    for (int s = 1; s <= n; ++s) acc += sums[s] * ak.at(s, j);
                    out.at(i, j) = acc / den;
                }
            }
            break;
        }
        case Form::HermitianColumn: {
            require_hermitian_form(a, "drazin");
            const QMatrix p = a.pow(k + 1);
            const Rational den = denominator_or_throw(p, r, "drazin(hermitian column)");
            for (int j = 1; j <= n; ++j) {
                const std::vector<Quaternion> col = ak.column(j);
                for (int i = 1; i <= n; ++i)
                    out.at(i, j) = anchored_cdet_sum(p, i, col, r) / den;
            }
            break;
        }
        case Form::HermitianRow: {
            require_hermitian_form(a, "drazin");
            const QMatrix p = a.pow(k + 1);
            const Rational den = denominator_or_throw(p, r, "drazin(hermitian row)");
            for (int i = 1; i <= n; ++i) {
                const std::vector<Quaternion> row = ak.row(i);
                for (int j = 1; j <= n; ++j)
                    out.at(i, j) = anchored_rdet_sum(p, j, row, r) / den;
            }
            break;
        }
        case Form::Auto:
            break; // unreachable, resolved above
    }
    return out;
}

} // namespace

QMatrix mp_inverse(const QMatrix& a, Form form) {
    if (a.is_empty()) throw ShapeError("mp_inverse: empty matrix");
    check_cap_for(a);
    const int m = a.rows(), n = a.cols();
    const int r = elim_rank(a);
    if (r == 0) return QMatrix::zero(n, m);
    form = resolve(form, a);
    QMatrix out(n, m);
    switch (form) {
        case Form::Column: {
            const QMatrix gram = a.adjoint() * a;
            const QMatrix astar = a.adjoint();
            const Rational den = denominator_or_throw(gram, r, "mp_inverse(column)");
            for (int j = 1; j <= m; ++j) {
                const std::vector<Quaternion> col = astar.column(j);
                for (int i = 1; i <= n; ++i)
                    out.at(i, j) = anchored_cdet_sum(gram, i, col, r) / den;
            }
            break;
        }
        case Form::Row: {
            const QMatrix gram = a * a.adjoint();
            const QMatrix astar = a.adjoint();
            const Rational den = denominator_or_throw(gram, r, "mp_inverse(row)");
            for (int i = 1; i <= n; ++i) {
                const std::vector<Quaternion> row = astar.row(i);
                for (int j = 1; j <= m; ++j)
                    out.at(i, j) = anchored_rdet_sum(gram, j, row, r) / den;
            }
            break;
        }
        case Form::HermitianColumn: {
            require_hermitian_form(a, "mp_inverse");
            const QMatrix sq = a * a;
            const Rational den = denominator_or_throw(sq, r, "mp_inverse(hermitian column)");
            for (int j = 1; j <= m; ++j) {
                const std::vector<Quaternion> col = a.column(j);
                for (int i = 1; i <= n; ++i)
                    out.at(i, j) = anchored_cdet_sum(sq, i, col, r) / den;
            }
            break;
        }
        case Form::HermitianRow: {
            require_hermitian_form(a, "mp_inverse");
            const QMatrix sq = a * a;
            const Rational den = denominator_or_throw(sq, r, "mp_inverse(hermitian row)");
            for (int i = 1; i <= n; ++i) {
                const std::vector<Quaternion> row = a.row(i);
                for (int j = 1; j <= m; ++j)
                    out.at(i, j) = anchored_rdet_sum(sq, j, row, r) / den;
            }
            break;
        }
        case Form::Auto:
            break; // unreachable
    }
    return out;
}

QMatrix projector_q(const QMatrix& a) {
    if (a.is_empty()) throw ShapeError("projector_q: empty matrix");
    check_cap_for(a);
    const int n = a.cols();
    const int r = elim_rank(a);
    if (r == 0) return QMatrix::zero(n, n);
    const QMatrix gram = a.adjoint() * a;
    const Rational den = denominator_or_throw(gram, r, "projector_q");
    QMatrix out(n, n);
    for (int j = 1; j <= n; ++j) {
        const std::vector<Quaternion> col = gram.column(j);
        for (int i = 1; i <= n; ++i)
            out.at(i, j) = anchored_cdet_sum(gram, i, col, r) / den;
    }
    return out;
}

QMatrix projector_p(const QMatrix& a) {
    if (a.is_empty()) throw ShapeError("projector_p: empty matrix");
    check_cap_for(a);
    const int m = a.rows();
    const int r = elim_rank(a);
    if (r == 0) return QMatrix::zero(m, m);
    const QMatrix gram = a * a.adjoint();
    const Rational den = denominator_or_throw(gram, r, "projector_p");
    QMatrix out(m, m);
    for (int i = 1; i <= m; ++i) {
        const std::vector<Quaternion> row = gram.row(i);
        for (int j = 1; j <= m; ++j)
            out.at(i, j) = anchored_rdet_sum(gram, j, row, r) / den;
    }
    return out;
}

QMatrix drazin(const QMatrix& a, Form form) {
    if (!a.is_square()) throw ShapeError("drazin: matrix not square");
    return drazin_with_index(a, matrix_index(a), form);
}

QMatrix group_inverse(const QMatrix& a, Form form) {
    if (!a.is_square()) throw ShapeError("group_inverse: matrix not square");
    const int index = matrix_index(a);
    if (index > 1)
        throw IndexTooLarge("group_inverse: matrix index " + std::to_string(index) +
                            " exceeds 1");
    return drazin_with_index(a, 1, form);
}

namespace {

template <typename Fn>
QMatrix all_forms_agree(const QMatrix& a, Fn&& compute, const char* where) {
    std::vector<Form> forms{Form::Column, Form::Row};
    if (a.is_hermitian()) {
        forms.push_back(Form::HermitianColumn);
        forms.push_back(Form::HermitianRow);
    }
    QMatrix first = compute(forms.front());
    for (std::size_t t = 1; t < forms.size(); ++t) {
        if (compute(forms[t]) != first)
            throw InternalInconsistency(std::string(where) +
                                        ": determinantal forms disagree");
    }
    return first;
}

} // namespace

QMatrix mp_inverse_verified(const QMatrix& a) {
    return all_forms_agree(
        a, [&](Form f) { return mp_inverse(a, f); }, "mp_inverse_verified");
}

QMatrix drazin_verified(const QMatrix& a) {
    return all_forms_agree(
        a, [&](Form f) { return drazin(a, f); }, "drazin_verified");
}

QMatrix group_inverse_verified(const QMatrix& a) {
    return all_forms_agree(
        a, [&](Form f) { return group_inverse(a, f); }, "group_inverse_verified");
}

} // namespace qgi
