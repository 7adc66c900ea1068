#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detlink/simplex.hpp"
#include "testutil.hpp"

using namespace detlink;

namespace {

LpProblem make_lp(const std::vector<Rational>& c, const std::vector<std::vector<Rational>>& rows,
                  const std::vector<Rational>& b) {
    LpProblem p;
    p.objective = c;
    p.rows = rows;
    p.rhs = b;
    return p;
}

Rational q(long long n, long long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("triangle lp with hand certificates") {
    // max b1+b2+b3 s.t. pairwise sums <= 1; summing all rows forces 2*sum <= 3
    LpProblem p = make_lp({q(1), q(1), q(1)},
                          {{q(1), q(0), q(1)}, {q(1), q(1), q(0)}, {q(0), q(1), q(1)}},
                          {q(1), q(1), q(1)});
    LpCertificate cert = lp_solve(p);
    REQUIRE(cert.status == LpStatus::Optimal);
    CHECK(*cert.objective_value == q(3, 2));
    CHECK(*cert.primal == std::vector<Rational>{q(1, 2), q(1, 2), q(1, 2)});
    CHECK(*cert.dual == std::vector<Rational>{q(1, 2), q(1, 2), q(1, 2)});
    CHECK(lp_validate(p, cert));
}

TEST_CASE("infeasible and unbounded verdicts") {
    LpProblem inf = make_lp({q(1)}, {{q(1)}}, {q(-1)});
    LpCertificate ci = lp_solve(inf);
    CHECK(ci.status == LpStatus::Infeasible);
    CHECK(lp_validate(inf, ci));  // Farkas vector checked exactly

    LpProblem unb = make_lp({q(1)}, {}, {});
    CHECK(lp_solve(unb).status == LpStatus::Unbounded);

    LpProblem unb2 = make_lp({q(1), q(1)}, {{q(1), q(-1)}}, {q(2)});
    CHECK(lp_solve(unb2).status == LpStatus::Unbounded);
}

TEST_CASE("negative rhs feasible goes through phase one") {
    // x >= 1 encoded as -x <= -1; maximize -x has optimum -1
    LpProblem p = make_lp({q(-1)}, {{q(-1)}}, {q(-1)});
    LpCertificate cert = lp_solve(p);
    REQUIRE(cert.status == LpStatus::Optimal);
    CHECK(*cert.objective_value == q(-1));
    CHECK(*cert.primal == std::vector<Rational>{q(1)});
    CHECK(lp_validate(p, cert));

    // two-sided band: 1 <= x <= 3, maximize x
    LpProblem band = make_lp({q(1)}, {{q(1)}, {q(-1)}}, {q(3), q(-1)});
    LpCertificate cb = lp_solve(band);
    REQUIRE(cb.status == LpStatus::Optimal);
    CHECK(*cb.objective_value == q(3));
    CHECK(lp_validate(band, cb));
}

TEST_CASE("strong duality on random feasible instances") {
    auto rng = testutil::make_rng(31);
    int optimal_seen = 0;
    for (int iter = 0; iter < 120; ++iter) {
        size_t n = 1 + rng() % 4, m = 1 + rng() % 5;
        LpProblem p;
        p.objective.resize(n);
        p.rhs.resize(m);
        p.rows.assign(m, std::vector<Rational>(n));
        for (auto& c : p.objective) c = testutil::random_rational(rng, 5);
        for (size_t i = 0; i < m; ++i) {
            // nonnegative rhs keeps the origin feasible
            p.rhs[i] = Rational(static_cast<long long>(rng() % 7));
            for (auto& a : p.rows[i]) a = testutil::random_rational(rng, 4);
        }
        LpCertificate cert = lp_solve(p);
        CHECK(lp_validate(p, cert));
        if (cert.status == LpStatus::Optimal) {
            ++optimal_seen;
            // pivot count stays under the Bland termination bound C(n+m, m)
            BigInt bound = binomial(static_cast<unsigned>(n + m), static_cast<unsigned>(m));
            CHECK(BigInt(static_cast<long long>(cert.pivots)) <= bound);
            // the dual program solved directly attains the same value
            LpCertificate dual_cert = lp_solve(lp_dual(p));
            REQUIRE(dual_cert.status == LpStatus::Optimal);
            CHECK(*dual_cert.objective_value == -*cert.objective_value);
        }
    }
    CHECK(optimal_seen > 40);
}

TEST_CASE("determinism") {
    LpProblem p = make_lp({q(2), q(3)}, {{q(1), q(2)}, {q(3), q(1)}}, {q(4), q(5)});
    LpCertificate a = lp_solve(p);
    LpCertificate b = lp_solve(p);
    REQUIRE(a.status == LpStatus::Optimal);
    CHECK(*a.primal == *b.primal);
    CHECK(*a.dual == *b.dual);
    CHECK(a.pivots == b.pivots);
    CHECK(lp_validate(p, a));
}

TEST_CASE("farkas certificates on random infeasible instances") {
    auto rng = testutil::make_rng(32);
    int infeasible_seen = 0;
    for (int iter = 0; iter < 200; ++iter) {
        size_t n = 1 + rng() % 3;
        LpProblem p;
        p.objective.assign(n, q(1));
        // random rows plus a row that is impossible over x >= 0
        size_t m = 1 + rng() % 3;
        p.rows.assign(m, std::vector<Rational>(n));
        p.rhs.resize(m);
        for (size_t i = 0; i < m; ++i) {
            for (auto& a : p.rows[i]) a = testutil::random_rational(rng, 3);
            p.rhs[i] = testutil::random_rational(rng, 3);
        }
        std::vector<Rational> blocking(n, q(0));
        blocking[rng() % n] = q(1);
        p.rows.push_back(blocking);
        p.rhs.push_back(q(-1));  // x_j <= -1 contradicts x_j >= 0
        LpCertificate cert = lp_solve(p);
        CHECK(lp_validate(p, cert));
        if (cert.status == LpStatus::Infeasible) ++infeasible_seen;
    }
    CHECK(infeasible_seen == 200);
}
