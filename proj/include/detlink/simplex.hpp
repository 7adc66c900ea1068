// Exact rational linear programming: dense two-phase tableau simplex with
// Bland's pivoting rule. Solves  max c.x  s.t.  A x <= b, x >= 0  and returns
// primal/dual certificates (a Farkas vector in the infeasible case).
#pragma once

#include <optional>
#include <vector>

#include "detlink/rational.hpp"

namespace detlink {

struct LpProblem {
    std::vector<Rational> objective;          // length n
    std::vector<std::vector<Rational>> rows;  // m x n
    std::vector<Rational> rhs;                // length m, sense <=

    size_t nvars() const { return objective.size(); }
    size_t nrows() const { return rows.size(); }
    bool well_formed() const {
        if (rows.size() != rhs.size()) return false;
        for (const auto& r : rows)
            if (r.size() != objective.size()) return false;
        return true;
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpCertificate {
    LpStatus status = LpStatus::Infeasible;
    std::optional<std::vector<Rational>> primal;
    std::optional<std::vector<Rational>> dual;  // optimal duals; Farkas vector if infeasible
    std::optional<Rational> objective_value;
    uint64_t pivots = 0;
};

namespace lp_detail {

struct Tableau {
    size_t n, m, nart;
    size_t cols;  // n + m + nart + 1 (rhs last)
    std::vector<std::vector<Rational>> t;
    std::vector<Rational> z;
    std::vector<size_t> basis;
    uint64_t pivots = 0;

    void pivot(size_t r, size_t s) {
        Rational inv = t[r][s].inverse();
        for (auto& v : t[r]) v *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || t[i][s].is_zero()) continue;
            Rational f = t[i][s];
            for (size_t j = 0; j < cols; ++j) t[i][j] -= f * t[r][j];
        }
        if (!z[s].is_zero()) {
            Rational f = z[s];
            for (size_t j = 0; j < cols; ++j) z[j] -= f * t[r][j];
        }
        basis[r] = s;
        ++pivots;
    }

    // express the objective -c through the current basis
    void price_out(const std::vector<Rational>& cost) {
        z.assign(cols, Rational(0));
        for (size_t j = 0; j < cost.size(); ++j) z[j] = -cost[j];
        for (size_t i = 0; i < m; ++i) {
            if (z[basis[i]].is_zero()) continue;
            Rational f = z[basis[i]];
            for (size_t j = 0; j < cols; ++j) z[j] -= f * t[i][j];
        }
    }

    // Bland: entering = lowest-index eligible column, leaving = lowest basic
    // variable index among minimum ratios. Returns false on unboundedness.
    bool run(size_t usable_cols) {
        for (;;) {
            size_t s = cols;  // sentinel
            for (size_t j = 0; j < usable_cols; ++j) {
                if (z[j].sign() < 0) {
                    s = j;
                    break;
                }
            }
            if (s == cols) return true;  // optimal
            size_t r = m;
            for (size_t i = 0; i < m; ++i) {
                if (t[i][s].sign() <= 0) continue;
                if (r == m) {
                    r = i;
                    continue;
                }
                Rational cur = t[i][cols - 1] / t[i][s];
                Rational best = t[r][cols - 1] / t[r][s];
                int c = compare(cur, best);
                if (c < 0 || (c == 0 && basis[i] < basis[r])) r = i;
            }
            if (r == m) return false;  // unbounded direction
            pivot(r, s);
        }
    }
};

}  // namespace lp_detail

inline LpCertificate lp_solve(const LpProblem& p) {
    if (!p.well_formed()) throw std::invalid_argument("lp_solve: inconsistent dimensions");
    const size_t n = p.nvars(), m = p.nrows();
    lp_detail::Tableau tb;
    tb.n = n;
    tb.m = m;
    // negate rows with negative rhs, then artificials make the basis feasible
    std::vector<int> rowsign(m, 1);
    size_t nart = 0;
    for (size_t i = 0; i < m; ++i)
        if (p.rhs[i].sign() < 0) {
            rowsign[i] = -1;
            ++nart;
        }
    tb.nart = nart;
    tb.cols = n + m + nart + 1;
    tb.t.assign(m, std::vector<Rational>(tb.cols, Rational(0)));
    tb.basis.assign(m, 0);
    size_t art = n + m;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j)
            tb.t[i][j] = rowsign[i] < 0 ? -p.rows[i][j] : p.rows[i][j];
        tb.t[i][n + i] = Rational(rowsign[i]);
        tb.t[i][tb.cols - 1] = rowsign[i] < 0 ? -p.rhs[i] : p.rhs[i];
        if (rowsign[i] < 0) {
            tb.t[i][art] = Rational(1);
            tb.basis[i] = art++;
        } else {
            tb.basis[i] = n + i;
        }
    }

    LpCertificate cert;
    if (nart > 0) {
        std::vector<Rational> cost1(n + m + nart, Rational(0));
        for (size_t j = n + m; j < n + m + nart; ++j) cost1[j] = Rational(-1);
        tb.price_out(cost1);
        tb.run(tb.cols - 1);  // phase 1 is always bounded
        if (tb.z[tb.cols - 1].sign() != 0) {
            // infeasible; slack reduced costs are a Farkas certificate
            cert.status = LpStatus::Infeasible;
            std::vector<Rational> farkas(m);
            for (size_t i = 0; i < m; ++i) farkas[i] = tb.z[n + i];
            cert.dual = std::move(farkas);
            cert.pivots = tb.pivots;
            return cert;
        }
        // drive basic artificials out; an all-zero row is redundant but kept
        for (size_t i = 0; i < m; ++i) {
            if (tb.basis[i] < n + m) continue;
            size_t s = n + m;
            for (size_t j = 0; j < n + m; ++j)
                if (!tb.t[i][j].is_zero()) {
                    s = j;
                    break;
                }
            if (s < n + m) tb.pivot(i, s);
        }
    }
    tb.price_out(p.objective);
    // artificial columns are retired after phase 1
    if (!tb.run(n + m)) {
        cert.status = LpStatus::Unbounded;
        cert.pivots = tb.pivots;
        return cert;
    }
    cert.status = LpStatus::Optimal;
    std::vector<Rational> x(n, Rational(0));
    for (size_t i = 0; i < m; ++i)
        if (tb.basis[i] < n) x[tb.basis[i]] = tb.t[i][tb.cols - 1];
    std::vector<Rational> y(m);
    for (size_t i = 0; i < m; ++i) y[i] = tb.z[n + i];
    cert.primal = std::move(x);
    cert.dual = std::move(y);
    cert.objective_value = tb.z[tb.cols - 1];
    cert.pivots = tb.pivots;
    return cert;
}

// Exact verification of a certificate against its problem.
inline bool lp_validate(const LpProblem& p, const LpCertificate& cert) {
    const size_t n = p.nvars(), m = p.nrows();
    auto dot = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational s(0);
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    switch (cert.status) {
        case LpStatus::Optimal: {
            if (!cert.primal || !cert.dual || !cert.objective_value) return false;
            const auto& x = *cert.primal;
            const auto& y = *cert.dual;
            if (x.size() != n || y.size() != m) return false;
            for (const auto& v : x)
                if (v.sign() < 0) return false;
            for (size_t i = 0; i < m; ++i)
                if (dot(p.rows[i], x) > p.rhs[i]) return false;
            for (const auto& v : y)
                if (v.sign() < 0) return false;
            for (size_t j = 0; j < n; ++j) {
                Rational col(0);
                for (size_t i = 0; i < m; ++i) col += y[i] * p.rows[i][j];
                if (col < p.objective[j]) return false;
            }
            Rational primal_obj = dot(p.objective, x);
            Rational dual_obj = dot(p.rhs, y);
            return primal_obj == *cert.objective_value && dual_obj == *cert.objective_value;
        }
        case LpStatus::Infeasible: {
            if (!cert.dual) return false;
            const auto& y = *cert.dual;
            if (y.size() != m) return false;
            for (const auto& v : y)
                if (v.sign() < 0) return false;
            for (size_t j = 0; j < n; ++j) {
                Rational col(0);
                for (size_t i = 0; i < m; ++i) col += y[i] * p.rows[i][j];
                if (col.sign() < 0) return false;
            }
            return dot(p.rhs, y).sign() < 0;
        }
        case LpStatus::Unbounded: return true;
    }
    return false;
}

// the dual program as another LpProblem:  min b.y <=>  max (-b).y, -A^T y <= -c
inline LpProblem lp_dual(const LpProblem& p) {
    LpProblem d;
    const size_t n = p.nvars(), m = p.nrows();
    d.objective.resize(m);
    for (size_t i = 0; i < m; ++i) d.objective[i] = -p.rhs[i];
    d.rows.assign(n, std::vector<Rational>(m, Rational(0)));
    d.rhs.resize(n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < m; ++i) d.rows[j][i] = -p.rows[i][j];
        d.rhs[j] = -p.objective[j];
    }
    return d;
}

}  // namespace detlink
