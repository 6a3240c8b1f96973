#include "thintree/simplex.hpp"

#include <utility>

#include "thintree/errors.hpp"

namespace thintree {

namespace {

// Dense tableau over rationals.  Layout follows the classic competitive-
// programming solver: m constraint rows plus the phase-2 and phase-1
// objective rows, n structural columns plus the artificial column and the
// right-hand side.
struct Tableau {
    int m, n;
    std::vector<int> basis, nonbasis;  // nonbasis[n] = -1 is the artificial
    std::vector<std::vector<Rational>> d;

    Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
            const std::vector<Rational>& c)
        : m(int(b.size())),
          n(int(c.size())),
          basis(m),
          nonbasis(n + 1),
          d(m + 2, std::vector<Rational>(n + 2)) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = A[i][j];
        for (int i = 0; i < m; ++i) {
            basis[i] = n + i;
            d[i][n] = -1;
            d[i][n + 1] = b[i];
        }
        for (int j = 0; j < n; ++j) {
            nonbasis[j] = j;
            d[m][j] = -c[j];
        }
        nonbasis[n] = -1;
        d[m + 1][n] = 1;
    }

    void pivot(int r, int s) {
        Rational inv = 1 / d[r][s];
        for (int i = 0; i < m + 2; ++i) {
            if (i == r || d[i][s] == 0) continue;
            Rational factor = d[i][s] * inv;
            for (int j = 0; j < n + 2; ++j) d[i][j] -= d[r][j] * factor;
            d[i][s] = -factor;  // column of the leaving variable
        }
        for (int j = 0; j < n + 2; ++j)
            if (j != s) d[r][j] *= inv;
        d[r][s] = inv;
        std::swap(basis[r], nonbasis[s]);
    }

    // Bland's rule: enter the eligible column whose variable id is smallest,
    // leave by the ratio test with ties broken on the smallest basis id.
    bool optimize(int phase) {
        int obj = m + phase - 1;
        for (;;) {
            int s = -1;
            for (int j = 0; j <= n; ++j) {
                if (nonbasis[j] == -phase) continue;
                if (d[obj][j] < 0 && (s == -1 || nonbasis[j] < nonbasis[s])) s = j;
            }
            if (s == -1) return true;
            int r = -1;
            for (int i = 0; i < m; ++i) {
                if (d[i][s] <= 0) continue;
                if (r == -1) {
                    r = i;
                    continue;
                }
                Rational lhs = d[i][n + 1] * d[r][s], rhs = d[r][n + 1] * d[i][s];
                if (lhs < rhs || (lhs == rhs && basis[i] < basis[r])) r = i;
            }
            if (r == -1) return false;  // unbounded direction
            pivot(r, s);
        }
    }
};

}  // namespace

SimplexResult solve_lp(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b, const std::vector<Rational>& c) {
    for (const auto& row : A)
        if (row.size() != c.size()) throw ParameterError("LP row width mismatch");
    if (A.size() != b.size()) throw ParameterError("LP row count mismatch");

    Tableau t(A, b, c);
    SimplexResult res;

    int worst = 0;
    for (int i = 1; i < t.m; ++i)
        if (t.d[i][t.n + 1] < t.d[worst][t.n + 1]) worst = i;
    if (t.m > 0 && t.d[worst][t.n + 1] < 0) {
        t.pivot(worst, t.n);
        if (!t.optimize(2) || t.d[t.m + 1][t.n + 1] < 0) {
            res.status = SimplexResult::Status::Infeasible;
            res.value = t.d[t.m + 1][t.n + 1];  // phase-1 deficit, a certificate
            return res;
        }
        for (int i = 0; i < t.m; ++i) {
            if (t.basis[i] != -1) continue;
            int s = -1;
            for (int j = 0; j <= t.n; ++j)
                if (t.d[i][j] != 0 && (s == -1 || t.nonbasis[j] < t.nonbasis[s])) s = j;
            // all-zero row: the constraint was redundant, the artificial can
            // stay basic at zero (it is skipped both in phase 2 and on read-out)
            if (s != -1) t.pivot(i, s);
        }
    }

    bool bounded = t.optimize(1);
    res.x.assign(t.n, Rational(0));
    for (int i = 0; i < t.m; ++i)
        if (t.basis[i] < t.n && t.basis[i] >= 0) res.x[t.basis[i]] = t.d[i][t.n + 1];
    if (!bounded) {
        res.status = SimplexResult::Status::Unbounded;
        return res;
    }
    res.status = SimplexResult::Status::Optimal;
    res.value = t.d[t.m][t.n + 1];
    return res;
}

}  // namespace thintree
