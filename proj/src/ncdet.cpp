#include "qgi/ncdet.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "qgi/errors.hpp"
#include "qgi/oracle.hpp"

namespace qgi {

namespace {

int initial_cap() {
    if (const char* env = std::getenv("QGI_DET_CAP")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 12) return static_cast<int>(v);
    }
    return 7;
}

std::atomic<int>& cap_storage() {
    static std::atomic<int> cap{initial_cap()};
    return cap;
}

std::vector<std::vector<int>> raw_cycles(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n + 1, false);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int x = start;
        do {
            seen[x] = true;
            cycle.push_back(x);
            x = images[x - 1];
        } while (x != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

// Rotate so the cycle chain starts at `leader` (must be contained).
void rotate_to(std::vector<int>& cycle, int leader) {
    auto it = std::find(cycle.begin(), cycle.end(), leader);
    std::rotate(cycle.begin(), it, cycle.end());
}

CyclePermutation ordered_form(std::span<const int> images, int anchor, bool anchor_first) {
    const int n = static_cast<int>(images.size());
    if (anchor < 1 || anchor > n)
        throw ShapeError("cycle form: anchor out of range");
    CyclePermutation out;
    out.degree = n;
    auto cycles = raw_cycles(images);
    std::vector<int> leader(cycles.size());
    std::size_t anchor_pos = 0;
    for (std::size_t t = 0; t < cycles.size(); ++t) {
        auto& c = cycles[t];
        if (std::find(c.begin(), c.end(), anchor) != c.end()) {
            anchor_pos = t;
            rotate_to(c, anchor);
            leader[t] = anchor;
        } else {
            const int m = *std::min_element(c.begin(), c.end());
            rotate_to(c, m);
            leader[t] = m;
        }
    }
    std::vector<std::size_t> order;
    for (std::size_t t = 0; t < cycles.size(); ++t)
        if (t != anchor_pos) order.push_back(t);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return leader[a] < leader[b]; });
    if (anchor_first) {
        out.cycles.push_back(std::move(cycles[anchor_pos]));
        for (std::size_t t : order) out.cycles.push_back(std::move(cycles[t]));
    } else {
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            out.cycles.push_back(std::move(cycles[*it]));
        out.cycles.push_back(std::move(cycles[anchor_pos]));
    }
    out.sign = ((n - static_cast<int>(out.cycles.size())) % 2 == 0) ? 1 : -1;
    return out;
}

// Precompiled expansion: per permutation, a sign and a flat factor chain of
// (row, col) entry positions in multiplication order. Cached per
// (n, anchor, side) since the cycle bookkeeping depends on nothing else.
struct TermPlan {
    int sign;
    std::vector<std::pair<int, int>> factors;
};

using PlanTable = std::vector<TermPlan>;

std::shared_ptr<const PlanTable> plans_for(int n, int anchor, bool row_side) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, bool>, std::shared_ptr<const PlanTable>> cache;
    const std::tuple<int, int, bool> key{n, anchor, row_side};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto table = std::make_shared<PlanTable>();
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
        const CyclePermutation form = row_side
                                          ? CyclePermutation::left_ordered(images, anchor)
                                          : CyclePermutation::right_ordered(images, anchor);
        TermPlan plan;
        plan.sign = form.sign;
        for (const auto& cycle : form.cycles) {
            const std::size_t len = cycle.size();
            for (std::size_t t = 0; t < len; ++t)
                plan.factors.emplace_back(cycle[t], cycle[(t + 1) % len]);
        }
        table->push_back(std::move(plan));
    } while (std::next_permutation(images.begin(), images.end()));
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(table));
    return it->second;
}

Quaternion det_by_plans(const QMatrix& a, int anchor, bool row_side) {
    if (!a.is_square()) throw ShapeError("row/column determinant needs a square matrix");
    const int n = a.rows();
    if (n > det_cap())
        throw SizeCapExceeded("determinant size " + std::to_string(n) +
                              " exceeds cap " + std::to_string(det_cap()));
    if (n == 0) return Quaternion(1);
    if (anchor < 1 || anchor > n) throw ShapeError("determinant anchor out of range");
    const auto plans = plans_for(n, anchor, row_side);
    Quaternion sum;
    for (const TermPlan& plan : *plans) {
        Quaternion term = a.at(plan.factors[0].first, plan.factors[0].second);
        for (std::size_t t = 1; t < plan.factors.size(); ++t) {
            if (term.is_zero()) break;
            term *= a.at(plan.factors[t].first, plan.factors[t].second);
        }
        if (plan.sign < 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

void check_vector_length(std::span<const Quaternion> b, int n, const char* what) {
    if (static_cast<int>(b.size()) != n)
        throw ShapeError(std::string(what) + ": replacement vector length mismatch");
}

} // namespace

CyclePermutation CyclePermutation::left_ordered(std::span<const int> images, int anchor) {
    return ordered_form(images, anchor, /*anchor_first=*/true);
}

CyclePermutation CyclePermutation::right_ordered(std::span<const int> images, int anchor) {
    return ordered_form(images, anchor, /*anchor_first=*/false);
}

std::vector<IndexSet> MinorFamily::enumerate() const {
    if (order < 0 || order > ambient)
        throw ShapeError("MinorFamily: order outside 0..ambient");
    if (anchor && (*anchor < 1 || *anchor > ambient))
        throw ShapeError("MinorFamily: anchor outside 1..ambient");
    std::vector<IndexSet> out;
    if (anchor && order == 0) return out;
    std::vector<int> pick(order);
    std::iota(pick.begin(), pick.end(), 1);
    const auto emit = [&]() {
        if (!anchor || std::binary_search(pick.begin(), pick.end(), *anchor))
            out.emplace_back(ambient, pick);
    };
    if (order == 0) {
        out.emplace_back(ambient, std::vector<int>{});
        return out;
    }
    while (true) {
        emit();
        int t = order - 1;
        while (t >= 0 && pick[t] == ambient - (order - 1 - t)) --t;
        if (t < 0) break;
        ++pick[t];
        for (int u = t + 1; u < order; ++u) pick[u] = pick[u - 1] + 1;
    }
    return out;
}

long long MinorFamily::count() const {
    const auto choose = [](int n, int r) -> long long {
        if (r < 0 || r > n) return 0;
        long long acc = 1;
        for (int t = 1; t <= r; ++t) acc = acc * (n - r + t) / t;
        return acc;
    };
    if (anchor) return choose(ambient - 1, order - 1);
    return choose(ambient, order);
}

int det_cap() { return cap_storage().load(); }

void set_det_cap(int cap) {
    if (cap < 1) throw ShapeError("determinant cap must be positive");
    cap_storage().store(cap);
}

Quaternion rdet(const QMatrix& a, int row_anchor) {
    return det_by_plans(a, row_anchor, /*row_side=*/true);
}

Quaternion cdet(const QMatrix& a, int col_anchor) {
    return det_by_plans(a, col_anchor, /*row_side=*/false);
}

Rational hdet(const QMatrix& a, bool cross_check) {
    if (!a.is_square()) throw ShapeError("hdet: matrix not square");
    if (!a.is_hermitian()) throw NotHermitian("hdet: matrix is not Hermitian");
    if (a.rows() == 0) return Rational(1);
    const Quaternion first = rdet(a, 1);
    if (!first.is_real())
        throw InternalInconsistency("hdet: row determinant of Hermitian matrix not real");
    if (cross_check) {
        for (int t = 1; t <= a.rows(); ++t) {
            const Quaternion r = rdet(a, t);
            const Quaternion c = cdet(a, t);
            if (r != first || c != first)
                throw InternalInconsistency(
                    "hdet: row/column determinants of Hermitian matrix disagree");
        }
    }
    return first.w();
}

Rational minor_sum(const QMatrix& hermitian, int order) {
    if (!hermitian.is_square()) throw ShapeError("minor_sum: matrix not square");
    if (!hermitian.is_hermitian()) throw NotHermitian("minor_sum: matrix is not Hermitian");
    const int n = hermitian.rows();
    if (order < 0 || order > n) throw ShapeError("minor_sum: order outside 0..n");
    if (order == 0) return Rational(1);
    Rational total(0);
    for (const IndexSet& sel : MinorFamily{order, n, std::nullopt}.enumerate()) {
        const QMatrix sub = hermitian.submatrix(sel, sel);
        const Quaternion d = rdet(sub, 1);
        if (!d.is_real())
            throw InternalInconsistency("minor_sum: principal minor of Hermitian matrix not real");
        total += d.w();
    }
    return total;
}

Quaternion anchored_cdet_sum(const QMatrix& m, int anchor, std::span<const Quaternion> b,
                             int order) {
    if (!m.is_square()) throw ShapeError("anchored_cdet_sum: matrix not square");
    const int n = m.rows();
    check_vector_length(b, n, "anchored_cdet_sum");
    if (anchor < 1 || anchor > n) throw ShapeError("anchored_cdet_sum: anchor out of range");
    if (order < 1 || order > n) throw ShapeError("anchored_cdet_sum: order outside 1..n");
    const QMatrix replaced =
        m.replaced(Axis::Column, anchor, std::vector<Quaternion>(b.begin(), b.end()));
    Quaternion total;
    for (const IndexSet& sel : MinorFamily{order, n, anchor}.enumerate()) {
        const QMatrix sub = replaced.submatrix(sel, sel);
        total += cdet(sub, sel.position_of(anchor));
    }
    return total;
}

Quaternion anchored_rdet_sum(const QMatrix& m, int anchor, std::span<const Quaternion> b,
                             int order) {
    if (!m.is_square()) throw ShapeError("anchored_rdet_sum: matrix not square");
    const int n = m.rows();
    check_vector_length(b, n, "anchored_rdet_sum");
    if (anchor < 1 || anchor > n) throw ShapeError("anchored_rdet_sum: anchor out of range");
    if (order < 1 || order > n) throw ShapeError("anchored_rdet_sum: order outside 1..n");
    const QMatrix replaced =
        m.replaced(Axis::Row, anchor, std::vector<Quaternion>(b.begin(), b.end()));
    Quaternion total;
    for (const IndexSet& sel : MinorFamily{order, n, anchor}.enumerate()) {
        const QMatrix sub = replaced.submatrix(sel, sel);
        total += rdet(sub, sel.position_of(anchor));
    }
    return total;
}

int det_rank(const QMatrix& a) {
    const int bound = std::min(a.rows(), a.cols());
    if (bound > det_cap())
        throw SizeCapExceeded("det_rank: minor order bound " + std::to_string(bound) +
                              " exceeds cap " + std::to_string(det_cap()));
    const QMatrix gram = a.adjoint() * a;
    for (int r = bound; r >= 1; --r) {
        for (const IndexSet& sel : MinorFamily{r, gram.rows(), std::nullopt}.enumerate()) {
            const QMatrix sub = gram.submatrix(sel, sel);
            if (!rdet(sub, 1).is_zero()) return r;
        }
    }
    return 0;
}

int matrix_index(const QMatrix& a) {
    if (!a.is_square()) throw ShapeError("matrix_index: matrix not square");
    const int n = a.rows();
    int prev_rank = n; // rank of A^0 = I
    QMatrix power = a;
    for (int k = 0; k <= n; ++k) {
        const int next_rank = elim_rank(power); // rank of A^{k+1}
        if (next_rank == prev_rank) return k;
        prev_rank = next_rank;
        power = power * a;
    }
    throw InternalInconsistency("matrix_index: rank sequence failed to stabilize");
}

} // namespace qgi
