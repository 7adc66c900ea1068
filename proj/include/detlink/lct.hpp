// Log canonical thresholds: the determinantal closed form, the Newton
// polyhedron linear program for monomial ideals, monomial weight bounds, and
// the arithmetic verifiers for the closed-form statements.
#pragma once

#include <array>
#include <atomic>
#include <future>
#include <thread>

#include "detlink/determinantal.hpp"
#include "detlink/parser.hpp"
#include "detlink/simplex.hpp"

namespace detlink {

enum class LctMethod { DeterminantalFormula, HowaldLp, ResolutionMinimum };

inline const char* lct_method_name(LctMethod m) {
    switch (m) {
        case LctMethod::DeterminantalFormula: return "determinantal-formula";
        case LctMethod::HowaldLp: return "howald-lp";
        case LctMethod::ResolutionMinimum: return "resolution-minimum";
    }
    return "?";
}

struct LctResult {
    Rational value;
    LctMethod method = LctMethod::DeterminantalFormula;
    std::optional<LpCertificate> lp;       // HowaldLp: validated primal/dual pair
    std::optional<int> minimizing_index;   // DeterminantalFormula: smallest minimizing t
};

// min over t = 0..r-1 of (m-t)(n-t)/(r-t), cross-checked against the
// resolution stage ratios (k_i+1)/a_i under t = i-1.
inline LctResult lct_determinantal(const MatrixSpec& s) {
    LctResult res;
    res.method = LctMethod::DeterminantalFormula;
    for (int t = 0; t < s.r; ++t) {
        Rational v(static_cast<long long>(s.m - t) * (s.n - t), s.r - t);
        if (!res.minimizing_index || v < res.value) {
            res.value = v;
            res.minimizing_index = t;
        }
    }
    Rational stage_min;
    bool first = true;
    for (const auto& d : resolution_data(s)) {
        Rational v(d.k_i + 1, d.a_i);
        if (first || v < stage_min) stage_min = v;
        first = false;
    }
    if (stage_min != res.value)
        throw std::logic_error("lct_determinantal: stage ratios disagree with the closed form");
    return res;
}

// ---------------------------------------------------------------------------
// Newton polyhedron LP for monomial ideals

// minimal exponent vectors of a monomial ideal (componentwise divisibility)
inline std::vector<Monomial> minimal_monomial_generators(const Ideal& I) {
    std::vector<Monomial> mons;
    for (const auto& g : I.generators()) {
        if (!g.is_monomial())
            throw std::invalid_argument("expected a monomial ideal (every generator one term)");
        mons.push_back(g.terms().begin()->first);
    }
    std::vector<Monomial> minimal;
    for (size_t i = 0; i < mons.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < mons.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(mons[j], mons[i]) && !(mons[j] == mons[i] && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(mons[i]);
    }
    return minimal;
}

// maximize sum(beta) s.t. sum_j beta_j v_j <= 1 componentwise, beta >= 0;
// the optimum is the lct and the dual optimum is a tight weight vector.
inline LctResult howald_lct(const Ideal& I) {
    if (I.is_zero_ideal()) throw std::invalid_argument("howald_lct: zero ideal");
    std::vector<Monomial> gens = minimal_monomial_generators(I);
    for (const auto& m : gens)
        if (m.is_one()) throw std::invalid_argument("howald_lct: unit ideal");
    const size_t nv = I.ring()->nvars();
    LpProblem p;
    p.objective.assign(gens.size(), Rational(1));
    p.rows.assign(nv, std::vector<Rational>(gens.size(), Rational(0)));
    p.rhs.assign(nv, Rational(1));
    for (size_t j = 0; j < gens.size(); ++j)
        for (size_t i = 0; i < nv; ++i) p.rows[i][j] = Rational(gens[j].e[i]);
    LpCertificate cert = lp_solve(p);
    if (cert.status != LpStatus::Optimal || !lp_validate(p, cert))
        throw std::logic_error("howald_lct: linear program failed to certify an optimum");
    LctResult res;
    res.method = LctMethod::HowaldLp;
    res.value = *cert.objective_value;
    res.lp = std::move(cert);
    return res;
}

// (sum w) / ord_w(I): a monomial-valuation upper bound for the lct.
// Returns nullopt when ord_w(I) = 0 (the bound is +infinity).
inline std::optional<Rational> weight_bound(const Ideal& I, const std::vector<Rational>& w) {
    if (I.is_zero_ideal()) throw std::invalid_argument("weight_bound: zero ideal");
    if (w.size() != I.ring()->nvars()) throw std::invalid_argument("weight_bound: weight size");
    bool some_positive = false;
    for (const auto& wi : w) {
        if (wi.sign() < 0) throw std::invalid_argument("weight_bound: negative weight");
        if (wi.sign() > 0) some_positive = true;
    }
    if (!some_positive) throw std::invalid_argument("weight_bound: zero weight vector");
    std::optional<Rational> ordw;
    for (const auto& g : I.generators()) {
        std::optional<Rational> gmin;
        for (const auto& [m, c] : g.terms()) {
            Rational v(0);
            for (size_t i = 0; i < w.size(); ++i)
                if (m.e[i]) v += w[i] * Rational(m.e[i]);
            if (!gmin || v < *gmin) gmin = v;
        }
        if (!ordw || *gmin < *ordw) ordw = gmin;
    }
    if (ordw->is_zero()) return std::nullopt;
    Rational total(0);
    for (const auto& wi : w) total += wi;
    return total / *ordw;
}

// ---------------------------------------------------------------------------
// verifier reports

struct VerifierCase {
    std::string params;
    std::string expected;
    std::string observed;
    bool pass = true;
    std::string note;
};

struct VerifierReport {
    std::string scope;
    std::vector<VerifierCase> cases;
    bool all_pass = true;

    void add(VerifierCase c) {
        all_pass = all_pass && c.pass;
        cases.push_back(std::move(c));
    }
};

namespace detail {
// pure per-triple sweeps fan out over a small worker pool
template <typename Fn>
inline std::vector<VerifierCase> sweep_triples(int max_m, Fn&& fn) {
    std::vector<std::array<int, 3>> triples;  // (m, n, r)
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= m; ++n)
            for (int r = 1; r <= n; ++r) triples.push_back({m, n, r});
    std::vector<VerifierCase> out(triples.size());
    unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
    if (workers <= 1 || triples.size() < 64) {
        for (size_t i = 0; i < triples.size(); ++i) out[i] = fn(triples[i]);
        return out;
    }
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= triples.size()) return;
                out[i] = fn(triples[i]);
            }
        }));
    }
    for (auto& f : futs) f.get();
    return out;
}

inline long long qbound(int m, int n, int r) {
    return static_cast<long long>(n - r + 1) * (m - r) * (r - 1);
}
}  // namespace detail

// (n-r+1)(m-r)(r-1) < r exactly in the three degenerate shapes; also the
// stage-shifted form q_i < r_i is equivalent at every stage below r.
inline VerifierReport verify_qibound(int max_m) {
    VerifierReport rep;
    rep.scope = "1<=r<=n<=m<=" + std::to_string(max_m);
    auto cases = detail::sweep_triples(max_m, [](std::array<int, 3> t) {
        auto [m, n, r] = t;
        VerifierCase c;
        c.params = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
        bool lhs = detail::qbound(m, n, r) < r;
        bool rhs = r == 1 || m == r || (n == r && m == r + 1);
        bool stage_shift_ok = true;
        for (int i = 1; i <= r - 1; ++i) {
            int mi = m - i + 1, ni = n - i + 1, ri = r - i + 1;
            bool lhs_i = detail::qbound(mi, ni, ri) < ri;  // uses m_i - r_i
            if (lhs_i != lhs) stage_shift_ok = false;
        }
        c.expected = rhs ? "q<r" : "q>=r";
        c.observed = lhs ? "q<r" : "q>=r";
        c.pass = (lhs == rhs) && stage_shift_ok;
        if (!stage_shift_ok) c.note = "stage-shift equivalence failed";
        return c;
    });
    for (auto& c : cases) rep.add(std::move(c));
    return rep;
}

// Arithmetic shadow of the equality of thresholds: every spec either attains
// lct = codim, or the stage ratios (k_i+1)/min{r_i,q_i} for i < r bound the
// lct from above and attain it (a predicted order 0 imposes no constraint).
inline VerifierReport verify_theorem1(int max_m) {
    VerifierReport rep;
    rep.scope = "1<=r<=n<=m<=" + std::to_string(max_m);
    auto cases = detail::sweep_triples(max_m, [](std::array<int, 3> t) {
        auto [m, n, r] = t;
        MatrixSpec spec = MatrixSpec::make(m, n, r);
        VerifierCase c;
        c.params = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
        Rational lct = lct_determinantal(spec).value;
        Rational codim(spec.codim());
        c.expected = "lct=" + lct.to_string();
        if (lct == codim) {
            c.observed = "lct=codim=" + codim.to_string();
            c.pass = true;
            return c;
        }
        long long q1 = detail::qbound(m, n, r);
        if (q1 < r) {
            c.observed = "lct<codim but q<r";
            c.pass = false;
            return c;
        }
        auto stages = resolution_data(spec);
        bool attained = false;
        bool bounded = true;
        for (int i = 1; i <= r - 1; ++i) {
            const StageData& d = stages[static_cast<size_t>(i - 1)];
            long long ord = std::min<long long>(d.r_i, d.q_i);
            if (ord == 0) continue;  // divisor imposes no constraint
            Rational ratio(d.k_i + 1, ord);
            if (ratio < lct) bounded = false;
            if (ratio == lct) attained = true;
        }
        c.observed = attained ? "attained below stage r" : "not attained below stage r";
        c.pass = bounded && attained;
        return c;
    });
    for (auto& c : cases) rep.add(std::move(c));
    return rep;
}

// identity sweep for the generating-degree closed form
inline VerifierReport verify_gendegree_identity(int max_m) {
    VerifierReport rep;
    rep.scope = "1<=r<=n<=m<=" + std::to_string(max_m);
    auto cases = detail::sweep_triples(max_m, [](std::array<int, 3> t) {
        auto [m, n, r] = t;
        VerifierCase c;
        c.params = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
        long long c_ = static_cast<long long>(m - r + 1) * (n - r + 1);
        long long lhs = static_cast<long long>(r) * c_ - static_cast<long long>(m) * (n - r + 1);
        long long rhs = detail::qbound(m, n, r);
        c.expected = std::to_string(rhs);
        c.observed = std::to_string(lhs);
        c.pass = lhs == rhs;
        return c;
    });
    for (auto& c : cases) rep.add(std::move(c));
    return rep;
}

inline long long stage_variable_count(const MatrixSpec& spec, int stage) {
    StageData d = resolution_data(spec)[static_cast<size_t>(stage - 1)];
    MatrixSpec ss = MatrixSpec::make(d.m_i, d.n_i, d.r_i);
    long long mu = binomial(static_cast<unsigned>(d.m_i), static_cast<unsigned>(d.r_i)).to_int64() *
                   binomial(static_cast<unsigned>(d.n_i), static_cast<unsigned>(d.r_i)).to_int64();
    return static_cast<long long>(d.m_i) * d.n_i + ss.codim() * mu;
}

// When the hypothesis q >= r holds, the stage-r link order vanishes and the
// orders below stage r agree with the multiplicities a_i. When it fails the
// orders are recorded without an applicability claim.
inline VerifierReport verify_corollary_vanishing(const MatrixSpec& spec,
                                                 const LinkComputeOptions& opt = {}) {
    VerifierReport rep;
    bool hypothesis = detail::qbound(spec.m, spec.n, spec.r) >= spec.r;
    rep.scope = "spec " + spec.to_string() +
                (hypothesis ? "" : " [hypothesis (n-r+1)(m-r)(r-1) >= r not applicable]");
    auto stages = resolution_data(spec);
    for (int i = 1; i <= spec.r; ++i) {
        VerifierCase c;
        c.params = "stage " + std::to_string(i);
        // specialized mode adjoins no indeterminates, so only the matrix counts
        long long vars = opt.mode == LinkMode::Specialized
                             ? static_cast<long long>(stages[static_cast<size_t>(i - 1)].m_i) *
                                   stages[static_cast<size_t>(i - 1)].n_i
                             : stage_variable_count(spec, i);
        bool in_budget = vars <= opt.budget_vars || opt.override_budget;
        if (!in_budget) {
            c.note = "skipped: exceeds the variable budget";
            c.expected = c.observed = "-";
            rep.add(std::move(c));
            continue;
        }
        OrderReport ord = computed_link_order(spec, i, opt);
        c.observed = ord.computed ? std::to_string(*ord.computed) : "inconclusive";
        if (!ord.computed) {
            c.expected = "-";
            c.pass = false;
            c.note = "specialized seeds disagree";
        } else if (!hypothesis) {
            c.expected = "-";
            c.pass = true;
            c.note = "recorded only";
        } else if (i == spec.r) {
            c.expected = "0";
            c.pass = *ord.computed == 0;
        } else {
            c.expected = std::to_string(stages[static_cast<size_t>(i - 1)].a_i);
            c.pass = static_cast<long long>(*ord.computed) == stages[static_cast<size_t>(i - 1)].a_i;
        }
        rep.add(std::move(c));
    }
    return rep;
}

// necessary divisorial consequence of lct monotonicity under linkage:
// the link's order along the variable-block divisor never exceeds the base's
inline VerifierReport eq1_sanity(const Ideal& I, const LinkSetup& link,
                                 const std::string& tag = block_tag::xblock) {
    VerifierReport rep;
    rep.scope = "variable-block divisor bound";
    uint32_t ord_x = ord_variable_block(I, I.ring()->block_indices(tag));
    uint32_t ord_y = ord_variable_block(link.iy, link.ambient->block_indices(tag));
    VerifierCase c;
    c.params = "block " + std::string(tag);
    c.expected = "ord(link) <= " + std::to_string(ord_x);
    c.observed = "ord(link) = " + std::to_string(ord_y);
    c.pass = ord_y <= ord_x;
    rep.add(std::move(c));
    return rep;
}

// ---------------------------------------------------------------------------
// documented monomial reference cases

struct MonomialReferenceCase {
    std::string name;
    std::vector<std::string> vars;
    std::string generators;          // inline ideal text
    Rational lp_value;               // certified optimum
    std::optional<Rational> quoted;  // previously published value, when it differs
};

inline std::vector<MonomialReferenceCase> monomial_reference_cases() {
    return {
        {"complete-intersection", {"x1", "x2", "x3"}, "x1^2*x2, x3^3", Rational(5, 6), std::nullopt},
        {"fat-point-square", {"x1", "x2", "x3"}, "x1^2, x1*x2, x2^2", Rational(1), std::nullopt},
        {"three-axes", {"x1", "x2", "x3"}, "x1*x2, x2*x3, x3*x1", Rational(3, 2), Rational(2)},
    };
}

// structural match (up to variable names) against the reference registry
inline std::optional<MonomialReferenceCase> match_reference_case(const Ideal& I) {
    std::vector<Monomial> mine;
    try {
        mine = minimal_monomial_generators(I);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    std::vector<std::vector<uint16_t>> mine_exps;
    for (const auto& m : mine) mine_exps.push_back(m.e);
    std::sort(mine_exps.begin(), mine_exps.end());
    for (const auto& rc : monomial_reference_cases()) {
        if (rc.vars.size() != I.ring()->nvars()) continue;
        RingPtr ring = RingDescriptor::make(rc.vars, block_tag::xblock);
        Ideal J(ring, parse_generators(rc.generators, ring));
        std::vector<std::vector<uint16_t>> theirs;
        for (const auto& m : minimal_monomial_generators(J)) theirs.push_back(m.e);
        std::sort(theirs.begin(), theirs.end());
        if (theirs == mine_exps) return rc;
    }
    return std::nullopt;
}

// runs the registry cases with certificate validation; a case whose certified
// optimum differs from its quoted value passes with a documenting note
inline VerifierReport verify_monomial_examples() {
    VerifierReport rep;
    rep.scope = "monomial lct reference cases";
    for (const auto& rc : monomial_reference_cases()) {
        RingPtr ring = RingDescriptor::make(rc.vars, block_tag::xblock);
        Ideal I(ring, parse_generators(rc.generators, ring));
        VerifierCase c;
        c.params = rc.name + ": " + rc.generators;
        LctResult res = howald_lct(I);
        c.expected = rc.lp_value.to_string();
        c.observed = res.value.to_string();
        c.pass = res.value == rc.lp_value;
        if (rc.quoted && *rc.quoted != rc.lp_value)
            c.note = "documented discrepancy: the certified optimum " + rc.lp_value.to_string() +
                     " differs from the published value " + rc.quoted->to_string() +
                     " quoted for this ideal; the exact certificates favor " +
                     rc.lp_value.to_string();
        rep.add(std::move(c));
    }
    return rep;
}

}  // namespace detlink
