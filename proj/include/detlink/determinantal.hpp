// Determinantal ideals, the stage data of their standard log resolution, the
// iterated single-chart blow-up transform, generic links (with fresh link
// indeterminates or with sampled rational coefficients), and the order
// computations along exceptional divisors.
#pragma once

#include <optional>
#include <random>
#include <string>

#include "detlink/groebner.hpp"

namespace detlink {

struct MatrixSpec {
    int m = 1, n = 1, r = 1;  // m >= n >= r >= 1

    // inputs with n > m are transposed; the minors ideal is unchanged
    static MatrixSpec make(int m, int n, int r) {
        if (m < 1 || n < 1 || r < 1) throw std::invalid_argument("MatrixSpec: sizes must be positive");
        if (n > m) std::swap(m, n);
        if (r > n) throw std::invalid_argument("MatrixSpec: minor size exceeds min(m,n)");
        return MatrixSpec{m, n, r};
    }

    long long codim() const {
        return static_cast<long long>(m - r + 1) * static_cast<long long>(n - r + 1);
    }
    std::string to_string() const {
        return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
    }
};

struct StageData {
    int i;          // 1..r
    int m_i, n_i, r_i;
    int a_i;        // multiplicity along E_i, = r_i
    long long k_i;  // discrepancy, = m_i*n_i - 1
    long long q_i;  // generating-degree bound, = (n_i-r_i+1)(m_i-r_i)(r_i-1)
};

inline std::vector<StageData> resolution_data(const MatrixSpec& s) {
    std::vector<StageData> out;
    out.reserve(s.r);
    for (int i = 1; i <= s.r; ++i) {
        StageData d;
        d.i = i;
        d.m_i = s.m - i + 1;
        d.n_i = s.n - i + 1;
        d.r_i = s.r - i + 1;
        d.a_i = d.r_i;
        d.k_i = static_cast<long long>(d.m_i) * d.n_i - 1;
        d.q_i = static_cast<long long>(d.n_i - d.r_i + 1) * (d.m_i - d.r_i) * (d.r_i - 1);
        out.push_back(d);
    }
    return out;
}

// min over the resolution stages of the link-order bound against the stage size
inline long long predicted_link_order(const MatrixSpec& s, int stage) {
    if (stage < 1 || stage > s.r) throw std::invalid_argument("predicted_link_order: stage out of range");
    StageData d = resolution_data(s)[static_cast<size_t>(stage - 1)];
    return std::min<long long>(d.r_i, d.q_i);
}

// ---------------------------------------------------------------------------
// generic matrices and their minors

struct GenericMatrix {
    RingPtr ring;
    std::vector<std::vector<Polynomial>> entries;
};

inline std::string grid_var_name(const std::string& prefix, int i, int j, bool wide) {
    if (wide) return prefix + std::to_string(i) + "_" + std::to_string(j);
    return prefix + std::to_string(i) + std::to_string(j);
}

inline GenericMatrix make_generic_matrix(int m, int n, const std::string& prefix = "x",
                                         const std::string& tag = block_tag::xblock) {
    bool wide = m > 9 || n > 9;
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(m) * n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) names.push_back(grid_var_name(prefix, i, j, wide));
    GenericMatrix g;
    g.ring = RingDescriptor::make(names, tag);
    g.entries.assign(m, {});
    size_t k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.entries[i].push_back(Polynomial::variable(g.ring, k++));
    return g;
}

inline Ideal determinantal_ideal(const MatrixSpec& s) {
    GenericMatrix g = make_generic_matrix(s.m, s.n);
    return Ideal(g.ring, matrix_minors(g.entries, static_cast<size_t>(s.r)));
}

// ---------------------------------------------------------------------------
// single-chart blow-up iteration

struct ChartState {
    RingPtr ring;  // fresh generic-matrix coordinates for the current stage
    std::vector<std::vector<Polynomial>> matrix;
    int minor_size = 0;
    Ideal strict_transform;
    struct ExceptionalStep {
        int stage;
        std::string local_equation;
        int extracted_exponent;
    };
    std::vector<ExceptionalStep> record;
    int stage = 0;

    int rows() const { return static_cast<int>(matrix.size()); }
    int cols() const { return matrix.empty() ? 0 : static_cast<int>(matrix[0].size()); }
};

inline ChartState initial_chart(const MatrixSpec& s) {
    GenericMatrix g = make_generic_matrix(s.m, s.n);
    ChartState st;
    st.ring = g.ring;
    st.matrix = g.entries;
    st.minor_size = s.r;
    st.strict_transform = Ideal(g.ring, matrix_minors(g.entries, static_cast<size_t>(s.r)));
    return st;
}

namespace detail {
// p / v^k, checking exact divisibility term by term
inline Polynomial divide_by_var_power(const Polynomial& p, size_t var, uint16_t k) {
    Polynomial q(p.ring());
    for (const auto& [m, c] : p.terms()) {
        if (m.e[var] < k)
            throw std::logic_error("chart step: minor not divisible by the expected exceptional power");
        Monomial m2 = m;
        m2.e[var] = static_cast<uint16_t>(m2.e[var] - k);
        q.add_term(m2, c);
    }
    return q;
}
inline bool divisible_by_var(const Polynomial& p, size_t var) {
    for (const auto& [m, c] : p.terms())
        if (m.e[var] == 0) return false;
    return !p.is_zero();
}
}  // namespace detail

// One blow-up step on the distinguished chart: substitute the chart map,
// factor the exceptional power out of every minor, and restart from the
// smaller generic matrix in the straightened coordinates.
inline ChartState blowup_chart_step(const ChartState& st) {
    int m = st.rows(), n = st.cols(), r = st.minor_size;
    if (m < 1 || n < 1 || r < 1 || r > std::min(m, n))
        throw std::invalid_argument("blowup_chart_step: malformed state");

    // chart ring: exceptional equation, border coordinates, straightened interior
    bool wide = m > 9 || n > 9;
    std::vector<std::string> names{grid_var_name("y", 1, 1, wide)};
    std::vector<std::string> tags{block_tag::aux};
    for (int j = 2; j <= n; ++j) {
        names.push_back(grid_var_name("y", 1, j, wide));
        tags.push_back(block_tag::aux);
    }
    for (int i = 2; i <= m; ++i) {
        names.push_back(grid_var_name("y", i, 1, wide));
        tags.push_back(block_tag::aux);
    }
    for (int i = 2; i <= m; ++i)
        for (int j = 2; j <= n; ++j) {
            names.push_back(grid_var_name("f", i, j, wide));
            tags.push_back(block_tag::xblock);
        }
    RingPtr chart = RingDescriptor::make(names, tags);
    auto cvar = [&](const std::string& nm) { return Polynomial::variable(chart, nm); };

    Polynomial y11 = cvar(grid_var_name("y", 1, 1, wide));
    std::map<std::string, Polynomial> images;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            const std::string src = st.ring->name(static_cast<size_t>((i - 1) * n + (j - 1)));
            if (i == 1 && j == 1) {
                images.emplace(src, y11);
            } else if (i == 1) {
                images.emplace(src, y11 * cvar(grid_var_name("y", 1, j, wide)));
            } else if (j == 1) {
                images.emplace(src, y11 * cvar(grid_var_name("y", i, 1, wide)));
            } else {
                // y_ij = f_ij + y_i1*y_1j
                Polynomial yij = cvar(grid_var_name("f", i, j, wide)) +
                                 cvar(grid_var_name("y", i, 1, wide)) *
                                     cvar(grid_var_name("y", 1, j, wide));
                images.emplace(src, y11 * yij);
            }
        }

    std::vector<std::vector<Polynomial>> transformed(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            transformed[i].push_back(substitute(st.matrix[i][j], images, chart));

    // every r-minor must carry the factor y11^r exactly
    size_t y11_idx = chart->index_of(grid_var_name("y", 1, 1, wide));
    for (const auto& minor : matrix_minors(transformed, static_cast<size_t>(r))) {
        Polynomial q = detail::divide_by_var_power(minor, y11_idx, static_cast<uint16_t>(r));
        if (detail::divisible_by_var(q, y11_idx))
            throw std::logic_error("chart step: exceptional power higher than the minor size");
    }

    ChartState next;
    next.stage = st.stage + 1;
    next.record = st.record;
    next.record.push_back({next.stage, grid_var_name("y", 1, 1, wide), r});
    next.minor_size = r - 1;
    if (m - 1 >= 1 && n - 1 >= 1) {
        GenericMatrix g = make_generic_matrix(m - 1, n - 1);
        next.ring = g.ring;
        next.matrix = g.entries;
        next.strict_transform =
            next.minor_size >= 1
                ? Ideal(g.ring, matrix_minors(g.entries, static_cast<size_t>(next.minor_size)))
                : Ideal::unit(g.ring);
    } else {
        // degenerate shapes keep their row count but carry no coordinates
        next.ring = RingDescriptor::make(std::vector<std::string>{}, std::vector<std::string>{});
        next.matrix.assign(static_cast<size_t>(std::max(0, m - 1)), {});
        next.strict_transform = Ideal::unit(next.ring);
    }
    return next;
}

// ---------------------------------------------------------------------------
// generic links

enum class LinkMode { FullGeneric, Specialized };

struct LinkOptions {
    LinkMode mode = LinkMode::FullGeneric;
    uint64_t seed = 0;
    long long coeff_bound = 1000;  // specialized: entries sampled from [-B, B]
    int retries = 5;
    std::optional<long long> codim;  // derived via ideal_dimension when absent
    GbOptions gb;
};

struct LinkSetup {
    Ideal base;
    size_t mu = 0;
    long long c = 0;
    LinkMode mode = LinkMode::FullGeneric;
    uint64_t seed = 0;
    RingPtr ambient;
    std::vector<std::vector<Polynomial>> tmatrix;  // c x mu, in the ambient ring
    std::vector<Polynomial> fs;                    // the c combinations
    Ideal iv;                                      // (f_1, ..., f_c)
    Ideal iy;                                      // iv : base
};

namespace detail {
inline Rational sample_coefficient(std::mt19937_64& rng, long long bound) {
    unsigned long long span = static_cast<unsigned long long>(2 * bound + 1);
    long long v = static_cast<long long>(rng() % span) - bound;
    return Rational(v);
}
}  // namespace detail

// Builds the link from an explicit generating sequence; the result depends on
// the sequence (order and signs), though orders along extended divisors do not.
inline LinkSetup generic_link_sequence(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                       const LinkOptions& opt = {}) {
    if (gens.empty()) throw std::invalid_argument("generic_link: zero ideal has no link");
    for (const auto& g : gens) {
        require_same_ring(g.ring(), ring);
        if (g.is_zero()) throw std::invalid_argument("generic_link: zero generator in sequence");
    }
    Ideal I(ring, gens);
    LinkSetup link;
    link.base = I;
    link.mu = gens.size();
    link.mode = opt.mode;
    link.seed = opt.seed;
    long long c = opt.codim ? *opt.codim
                            : static_cast<long long>(ring->nvars()) - ideal_dimension(I, opt.gb);
    if (c < 1) throw std::invalid_argument("generic_link: nonpositive codimension");
    link.c = c;

    if (opt.mode == LinkMode::FullGeneric) {
        std::string prefix = "t";
        bool collision = true;
        while (collision) {
            collision = false;
            bool wide = c > 9 || link.mu > 9;
            for (long long j = 1; j <= c && !collision; ++j)
                for (size_t l = 1; l <= link.mu && !collision; ++l)
                    if (ring->has(grid_var_name(prefix, static_cast<int>(j), static_cast<int>(l), wide)))
                        collision = true;
            if (collision) prefix += "t";
        }
        bool wide = c > 9 || link.mu > 9;
        std::vector<std::string> tnames;
        for (long long j = 1; j <= c; ++j)
            for (size_t l = 1; l <= link.mu; ++l)
                tnames.push_back(grid_var_name(prefix, static_cast<int>(j), static_cast<int>(l), wide));
        link.ambient = ring->extended(tnames, block_tag::tblock);
        size_t k = ring->nvars();
        link.tmatrix.assign(static_cast<size_t>(c), {});
        for (long long j = 0; j < c; ++j)
            for (size_t l = 0; l < link.mu; ++l)
                link.tmatrix[static_cast<size_t>(j)].push_back(
                    Polynomial::variable(link.ambient, k++));
    } else {
        link.ambient = ring;
    }

    std::vector<Polynomial> ambient_gens;
    for (const auto& g : gens) ambient_gens.push_back(map_to_ring(g, link.ambient));

    int attempts = opt.mode == LinkMode::Specialized ? std::max(1, opt.retries) : 1;
    bool accepted = false;
    for (int attempt = 0; attempt < attempts && !accepted; ++attempt) {
        if (opt.mode == LinkMode::Specialized) {
            std::mt19937_64 rng(opt.seed + 1000003ULL * static_cast<uint64_t>(attempt));
            link.tmatrix.assign(static_cast<size_t>(c), {});
            for (long long j = 0; j < c; ++j)
                for (size_t l = 0; l < link.mu; ++l)
                    link.tmatrix[static_cast<size_t>(j)].push_back(Polynomial::constant(
                        link.ambient, detail::sample_coefficient(rng, opt.coeff_bound)));
        }
        link.fs.clear();
        for (long long j = 0; j < c; ++j) {
            Polynomial f = Polynomial::zero(link.ambient);
            for (size_t l = 0; l < link.mu; ++l)
                f += link.tmatrix[static_cast<size_t>(j)][l] * ambient_gens[l];
            link.fs.push_back(std::move(f));
        }
        link.iv = Ideal(link.ambient, link.fs);
        if (opt.mode == LinkMode::Specialized) {
            bool nonzero = true;
            for (const auto& f : link.fs)
                if (f.is_zero()) nonzero = false;
            accepted = nonzero &&
                       ideal_dimension(link.iv, opt.gb) ==
                           static_cast<long long>(link.ambient->nvars()) - c;
        } else {
            accepted = true;
        }
    }
    if (!accepted)
        throw std::runtime_error("generic_link: complete-intersection codimension check failed "
                                 "after resampling");
    link.iy = ideal_quotient(link.iv, Ideal(link.ambient, ambient_gens), opt.gb);
    return link;
}

inline LinkSetup generic_link(const Ideal& I, const LinkOptions& opt = {}) {
    return generic_link_sequence(I.ring(), I.generators(), opt);
}

// ---------------------------------------------------------------------------
// orders along variable-block divisors

inline constexpr uint32_t ORD_INFINITY = UINT32_MAX;

// ord of J along the ideal of a variable block: min over generators of the
// minimum block-degree of a term. Generating-set independent because the n-th
// power of a variable-block ideal holds exactly the polynomials all of whose
// terms have block-degree >= n. Returns ORD_INFINITY for the zero ideal.
inline uint32_t ord_variable_block(const Ideal& J, const std::vector<size_t>& block) {
    if (block.empty()) throw std::invalid_argument("ord_variable_block: empty block");
    if (J.is_zero_ideal()) return ORD_INFINITY;
    uint32_t best = ORD_INFINITY;
    for (const auto& g : J.generators()) best = std::min(best, *g.min_degree_on(block));
    return best;
}

inline uint32_t ord_variable_block(const Ideal& J, const std::string& tag) {
    return ord_variable_block(J, J.ring()->block_indices(tag));
}

struct OrdPowerResult {
    uint32_t value = 0;
    bool cap_exceeded = false;
};

// largest n <= cap with J contained in I^n; cap_exceeded when even I^cap works
inline OrdPowerResult ord_ideal_power(const Ideal& J, const Ideal& I, unsigned cap,
                                      const GbOptions& opt = {}) {
    require_same_ring(J.ring(), I.ring());
    if (cap < 1) throw std::invalid_argument("ord_ideal_power: cap must be positive");
    if (J.is_zero_ideal()) return {cap, true};
    OrdPowerResult res;
    for (unsigned n = 1; n <= cap; ++n) {
        Ideal power = ideal_power(I, n);
        bool inside = true;
        for (const auto& g : J.generators())
            if (!power.contains(g, opt)) {
                inside = false;
                break;
            }
        if (!inside) return res;
        res.value = n;
    }
    res.cap_exceeded = true;
    return res;
}

// ---------------------------------------------------------------------------
// predicted vs computed stage orders

struct LinkComputeOptions {
    LinkMode mode = LinkMode::FullGeneric;
    std::vector<uint64_t> seeds = {0, 1, 2};  // specialized-mode agreement policy
    long long coeff_bound = 1000;
    int budget_vars = 14;
    bool override_budget = false;
    GbOptions gb;
};

struct OrderReport {
    MatrixSpec spec;
    int stage = 1;
    LinkMode mode = LinkMode::FullGeneric;
    long long predicted = 0;
    std::optional<uint32_t> computed;
    bool agree = false;
    std::string status = "ok";  // ok | inconclusive
    std::vector<std::pair<uint64_t, uint32_t>> per_seed;
};

// Orders are computed on a fresh stage-size generic matrix: on the chart the
// center is cut out by the entries of an m_i x n_i matrix of indeterminates
// whose r_i-minors define the strict transform, and the stage link is again a
// generic link, so its order along the center is the block order of the link
// of the fresh minors ideal.
inline OrderReport computed_link_order(const MatrixSpec& spec, int stage,
                                       const LinkComputeOptions& opt = {}) {
    OrderReport rep;
    rep.spec = spec;
    rep.stage = stage;
    rep.mode = opt.mode;
    rep.predicted = predicted_link_order(spec, stage);
    StageData d = resolution_data(spec)[static_cast<size_t>(stage - 1)];
    MatrixSpec stage_spec = MatrixSpec::make(d.m_i, d.n_i, d.r_i);
    Ideal ix = determinantal_ideal(stage_spec);
    long long c = stage_spec.codim();
    size_t mu = ix.generators().size();

    if (opt.mode == LinkMode::FullGeneric) {
        long long var_count = static_cast<long long>(d.m_i) * d.n_i + c * static_cast<long long>(mu);
        if (var_count > opt.budget_vars && !opt.override_budget)
            throw std::invalid_argument(
                "computed_link_order: " + std::to_string(var_count) +
                " variables exceed the full-generic budget of " + std::to_string(opt.budget_vars) +
                " (use the override to proceed)");
        LinkOptions lo;
        lo.mode = LinkMode::FullGeneric;
        lo.codim = c;
        lo.gb = opt.gb;
        LinkSetup link = generic_link(ix, lo);
        rep.computed = ord_variable_block(link.iy, block_tag::xblock);
    } else {
        std::optional<uint32_t> agreed;
        bool consistent = true;
        for (uint64_t seed : opt.seeds) {
            LinkOptions lo;
            lo.mode = LinkMode::Specialized;
            lo.seed = seed;
            lo.coeff_bound = opt.coeff_bound;
            lo.codim = c;
            lo.gb = opt.gb;
            LinkSetup link = generic_link(ix, lo);
            uint32_t v = ord_variable_block(link.iy, block_tag::xblock);
            rep.per_seed.emplace_back(seed, v);
            if (!agreed)
                agreed = v;
            else if (*agreed != v)
                consistent = false;
        }
        if (consistent) {
            rep.computed = agreed;
        } else {
            rep.status = "inconclusive";
        }
    }
    rep.agree = rep.computed && static_cast<long long>(*rep.computed) == rep.predicted;
    return rep;
}

// ---------------------------------------------------------------------------
// structural checks

struct MinDegreeReport {
    MatrixSpec spec;
    long long expected = 0;  // (n-r+1)(m-r)(r-1)
    bool identity_holds = false;
    std::optional<uint32_t> observed;  // min x-degree over GB(I_Y) outside I_V
    bool pass = false;
};

// New link generators sit in x-degree (n-r+1)(m-r)(r-1); the same number is
// the closed form of rc - m(n-r+1).
inline MinDegreeReport link_min_degree_check(const MatrixSpec& spec,
                                             const LinkComputeOptions& opt = {}) {
    MinDegreeReport rep;
    rep.spec = spec;
    rep.expected =
        static_cast<long long>(spec.n - spec.r + 1) * (spec.m - spec.r) * (spec.r - 1);
    long long lhs = static_cast<long long>(spec.r) * spec.codim() -
                    static_cast<long long>(spec.m) * (spec.n - spec.r + 1);
    rep.identity_holds = lhs == rep.expected;

    Ideal ix = determinantal_ideal(spec);
    long long mu = static_cast<long long>(ix.generators().size());
    long long var_count = static_cast<long long>(spec.m) * spec.n + spec.codim() * mu;
    if (var_count > opt.budget_vars && !opt.override_budget)
        throw std::invalid_argument("link_min_degree_check: " + std::to_string(var_count) +
                                    " variables exceed the full-generic budget of " +
                                    std::to_string(opt.budget_vars));
    LinkOptions lo;
    lo.codim = spec.codim();
    lo.gb = opt.gb;
    LinkSetup link = generic_link(ix, lo);
    auto gby = link.iy.reduced_gb(MonomialOrder::grevlex(), opt.gb);
    std::vector<size_t> xidx = link.ambient->block_indices(block_tag::xblock);
    for (const auto& g : gby->elements) {
        if (link.iv.contains(g, opt.gb)) continue;
        uint32_t deg = *g.min_degree_on(xidx);
        rep.observed = rep.observed ? std::min(*rep.observed, deg) : deg;
    }
    rep.pass = rep.identity_holds && rep.observed &&
               static_cast<long long>(*rep.observed) == rep.expected;
    return rep;
}

// linkage symmetry: I_V : I_Y recovers the extension of I
inline bool double_link_check(const Ideal& I, const LinkSetup& link, const GbOptions& opt = {}) {
    std::vector<Polynomial> ext;
    for (const auto& g : I.generators()) ext.push_back(map_to_ring(g, link.ambient));
    Ideal ix(link.ambient, std::move(ext));
    Ideal back = ideal_quotient(link.iv, link.iy, opt);
    return ideal_equal(back, ix, opt);
}

// links built from G and from G + {redundant} report the same block order
inline bool order_invariance_check(const Ideal& I, const Polynomial& redundant,
                                   const std::string& block_tag_name = block_tag::xblock,
                                   const LinkOptions& opt = {}) {
    if (!I.contains(redundant, opt.gb))
        throw std::invalid_argument("order_invariance_check: polynomial is not in the ideal");
    LinkOptions lo = opt;
    if (!lo.codim)
        lo.codim = static_cast<long long>(I.ring()->nvars()) - ideal_dimension(I, opt.gb);
    LinkSetup l1 = generic_link(I, lo);
    std::vector<Polynomial> gens2 = I.generators();
    gens2.push_back(redundant);
    Ideal I2(I.ring(), std::move(gens2));
    LinkSetup l2 = generic_link(I2, lo);
    uint32_t o1 = ord_variable_block(l1.iy, l1.ambient->block_indices(block_tag_name));
    uint32_t o2 = ord_variable_block(l2.iy, l2.ambient->block_indices(block_tag_name));
    return o1 == o2;
}

}  // namespace detlink
