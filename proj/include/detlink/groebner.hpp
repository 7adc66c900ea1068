// Buchberger engine over exact rationals, plus the derived ideal operations:
// normal form, membership, elimination, intersection, quotient, power,
// Krull dimension.
//
// Internally the engine works on primitive integer polynomials sorted under
// the active order; content is stripped after every reduction step so
// coefficients stay small. Pair handling follows the Gebauer-Moeller update.
#pragma once

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "detlink/polynomial.hpp"

namespace detlink {

struct GbOptions {
    uint64_t max_steps = 50'000'000;  // single-divisor reduction steps
};

namespace gb {

struct ITerm {
    Monomial m;
    BigInt c;
};

struct IPoly {
    std::vector<ITerm> t;  // descending under the engine order
    uint64_t lt_mask = 0;

    bool zero() const { return t.empty(); }
    const Monomial& lt() const { return t.front().m; }
    const BigInt& lc() const { return t.front().c; }
    void refresh_mask() { lt_mask = t.empty() ? 0 : t.front().m.support_mask(); }
};

inline IPoly ipoly_from(const Polynomial& p, const MonomialOrder& ord) {
    IPoly out;
    Polynomial prim = p.normalized_primitive();
    out.t.reserve(prim.terms().size());
    for (const auto& [m, c] : prim.terms()) {
        assert(c.is_integer());
        out.t.push_back({m, c.num()});
    }
    std::sort(out.t.begin(), out.t.end(),
              [&](const ITerm& a, const ITerm& b) { return ord.greater(a.m, b.m); });
    out.refresh_mask();
    return out;
}

inline Polynomial ipoly_to(const IPoly& f, const RingPtr& ring, const Rational& scale) {
    Polynomial p(ring);
    for (const auto& t : f.t) p.add_term(t.m, scale * Rational(t.c));
    return p;
}

// strips integer content; early-exits once the running gcd hits 1
inline BigInt strip_content(IPoly& f) {
    if (f.t.empty()) return BigInt(1);
    BigInt g(0);
    for (const auto& t : f.t) {
        g = gcd(g, t.c);
        if (g == BigInt(1)) return g;
    }
    for (auto& t : f.t) t.c = t.c / g;
    return g;
}

inline void canonical_sign(IPoly& f) {
    if (!f.t.empty() && f.lc().sign() < 0)
        for (auto& t : f.t) t.c = -t.c;
}

// a*(sf*f) - b*(sg*g), merged; inputs descending, output descending
inline IPoly combine(const IPoly& f, const BigInt& a, const Monomial& sf, const IPoly& g,
                     const BigInt& b, const Monomial& sg, const MonomialOrder& ord) {
    IPoly out;
    out.t.reserve(f.t.size() + g.t.size());
    size_t i = 0, j = 0;
    while (i < f.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            out.t.push_back({f.t[i].m * sf, a * f.t[i].c});
            ++i;
            continue;
        }
        if (i == f.t.size()) {
            out.t.push_back({g.t[j].m * sg, -(b * g.t[j].c)});
            ++j;
            continue;
        }
        Monomial mf = f.t[i].m * sf;
        Monomial mg = g.t[j].m * sg;
        int c = ord.compare(mf, mg);
        if (c > 0) {
            out.t.push_back({std::move(mf), a * f.t[i].c});
            ++i;
        } else if (c < 0) {
            out.t.push_back({std::move(mg), -(b * g.t[j].c)});
            ++j;
        } else {
            BigInt coeff = a * f.t[i].c - b * g.t[j].c;
            if (!coeff.is_zero()) out.t.push_back({std::move(mf), std::move(coeff)});
            ++i;
            ++j;
        }
    }
    out.refresh_mask();
    return out;
}

struct Basis {
    MonomialOrder ord;
    std::vector<IPoly> polys;

    // index of the first element whose leading term divides m, or npos
    size_t find_divisor(const Monomial& m, uint64_t mask) const {
        for (size_t k = 0; k < polys.size(); ++k) {
            const IPoly& g = polys[k];
            if (g.zero()) continue;
            if ((g.lt_mask & ~mask) != 0) continue;
            if (divides(g.lt(), m)) return k;
        }
        return static_cast<size_t>(-1);
    }
};

struct Reduction {
    IPoly remainder;                                       // primitive
    std::vector<std::pair<Monomial, Rational>> true_terms;  // exact remainder terms
    bool track;
};

// Full multivariate division. Settled (irreducible) terms stay in the working
// vector before the cursor, so every integer rescale and content strip applies
// to them too and the final remainder is a consistently scaled element of the
// right coset. The exact rational remainder is reconstructed through the
// running scale alpha, which commutes with the rescales.
inline void reduce_full(IPoly h, const Basis& basis, Reduction& out, GbStats& stats,
                        const GbOptions& opt, Rational alpha = Rational(1)) {
    out.remainder.t.clear();
    out.true_terms.clear();
    size_t head = 0;
    while (head < h.t.size()) {
        const Monomial& mono = h.t[head].m;
        size_t k = basis.find_divisor(mono, mono.support_mask());
        if (k == static_cast<size_t>(-1)) {
            if (out.track) out.true_terms.emplace_back(mono, alpha * Rational(h.t[head].c));
            ++head;
            continue;
        }
        const IPoly& g = basis.polys[k];
        if (++stats.reduction_steps > opt.max_steps) {
            stats.basis_size = basis.polys.size();
            throw ResourceLimitError(stats);
        }
        BigInt d = gcd(h.t[head].c, g.lc());
        BigInt a = g.lc() / d;
        if (a.sign() < 0) {
            a = -a;
            d = -d;
        }
        BigInt b = h.t[head].c / d;
        Monomial shift = mono / g.lt();
        // new h = a*h - b*(shift*g); the subtrahend only reaches the suffix
        IPoly hn;
        hn.t.reserve(h.t.size() + g.t.size());
        for (size_t i = 0; i < head; ++i) hn.t.push_back({h.t[i].m, a * h.t[i].c});
        size_t i = head;
        size_t j = 0;
        while (i < h.t.size() || j < g.t.size()) {
            if (j == g.t.size()) {
                hn.t.push_back({h.t[i].m, a * h.t[i].c});
                ++i;
                continue;
            }
            Monomial mg = g.t[j].m * shift;
            if (i == h.t.size()) {
                hn.t.push_back({std::move(mg), -(b * g.t[j].c)});
                ++j;
                continue;
            }
            int c = basis.ord.compare(h.t[i].m, mg);
            if (c > 0) {
                hn.t.push_back({h.t[i].m, a * h.t[i].c});
                ++i;
            } else if (c < 0) {
                hn.t.push_back({std::move(mg), -(b * g.t[j].c)});
                ++j;
            } else {
                BigInt coeff = a * h.t[i].c - b * g.t[j].c;
                if (!coeff.is_zero()) hn.t.push_back({std::move(mg), std::move(coeff)});
                ++i;
                ++j;
            }
        }
        BigInt gamma = strip_content(hn);
        if (out.track) alpha = alpha * Rational(d * gamma, g.lc());
        h = std::move(hn);
    }
    out.remainder.t = std::move(h.t);
    strip_content(out.remainder);
    canonical_sign(out.remainder);
    out.remainder.refresh_mask();
}

struct Pair {
    size_t i, j;
    Monomial l;
    uint32_t deg;
};
struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Gebauer-Moeller pair update on adding element t to the basis.
inline void gm_update(const Basis& basis, std::set<Pair, PairLess>& pending, size_t t) {
    const IPoly& h = basis.polys[t];
    struct Cand {
        size_t i;
        Monomial l;
        bool kept = false;
    };
    std::vector<Cand> cands;
    for (size_t i = 0; i < t; ++i) {
        if (basis.polys[i].zero()) continue;
        cands.push_back({i, lcm(basis.polys[i].lt(), h.lt()), false});
    }
    // criterion M: drop a candidate if another live candidate's lcm divides
    // its lcm (coprime pairs survive this stage so they can dominate others)
    std::vector<Cand> kept;
    for (size_t a = 0; a < cands.size(); ++a) {
        bool cop = coprime(basis.polys[cands[a].i].lt(), h.lt());
        bool dominated = false;
        for (size_t b = a + 1; b < cands.size() && !cop && !dominated; ++b)
            if (divides(cands[b].l, cands[a].l)) dominated = true;
        for (size_t b = 0; b < kept.size() && !cop && !dominated; ++b)
            if (divides(kept[b].l, cands[a].l)) dominated = true;
        if (cop || !dominated) kept.push_back(cands[a]);
    }
    // criterion B: prune old pairs whose lcm the new element strictly refines
    for (auto it = pending.begin(); it != pending.end();) {
        const Pair& p = *it;
        if (divides(h.lt(), p.l) && lcm(basis.polys[p.i].lt(), h.lt()) != p.l &&
            lcm(basis.polys[p.j].lt(), h.lt()) != p.l) {
            it = pending.erase(it);
        } else {
            ++it;
        }
    }
    // criterion F/T: coprime leading terms never enter the queue
    for (const auto& k : kept) {
        if (coprime(basis.polys[k.i].lt(), h.lt())) continue;
        pending.insert(Pair{k.i, t, k.l, k.l.degree()});
    }
}

struct EngineResult {
    std::vector<IPoly> reduced;  // minimal + tail-reduced, primitive, lc > 0
    GbStats stats;
};

inline EngineResult buchberger(std::vector<IPoly> input, const MonomialOrder& ord,
                               const GbOptions& opt) {
    EngineResult res;
    Basis basis{ord, {}};
    std::set<Pair, PairLess> pending;
    for (auto& f : input) {
        if (f.zero()) continue;
        canonical_sign(f);
        strip_content(f);
        f.refresh_mask();
        basis.polys.push_back(std::move(f));
        gm_update(basis, pending, basis.polys.size() - 1);
    }
    Reduction red;
    red.track = false;
    while (!pending.empty()) {
        Pair p = *pending.begin();
        pending.erase(pending.begin());
        ++res.stats.pairs_considered;
        res.stats.max_degree = std::max<uint64_t>(res.stats.max_degree, p.deg);
        const IPoly& f = basis.polys[p.i];
        const IPoly& g = basis.polys[p.j];
        BigInt d = gcd(f.lc(), g.lc());
        IPoly s = combine(f, g.lc() / d, p.l / f.lt(), g, f.lc() / d, p.l / g.lt(), ord);
        strip_content(s);
        reduce_full(std::move(s), basis, red, res.stats, opt);
        if (!red.remainder.zero()) {
            ++res.stats.pairs_reduced;
            basis.polys.push_back(red.remainder);
            gm_update(basis, pending, basis.polys.size() - 1);
        }
    }
    // minimal basis: ascending leading terms, keep those with no prior divisor
    std::vector<size_t> order_idx(basis.polys.size());
    for (size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](size_t a, size_t b) {
        return ord.less(basis.polys[a].lt(), basis.polys[b].lt());
    });
    std::vector<IPoly> minimal;
    for (size_t idx : order_idx) {
        const Monomial& m = basis.polys[idx].lt();
        bool redundant = false;
        for (const auto& g : minimal)
            if (divides(g.lt(), m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis.polys[idx]);
    }
    // tail-reduce every element against the others
    Basis minbasis{ord, minimal};
    res.reduced.reserve(minimal.size());
    for (size_t i = 0; i < minimal.size(); ++i) {
        Basis others{ord, {}};
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.polys.push_back(minimal[j]);
        reduce_full(minimal[i], others, red, res.stats, opt);
        res.reduced.push_back(red.remainder);
    }
    std::sort(res.reduced.begin(), res.reduced.end(),
              [&](const IPoly& a, const IPoly& b) { return ord.less(a.lt(), b.lt()); });
    res.stats.basis_size = res.reduced.size();
    return res;
}

}  // namespace gb

// ---------------------------------------------------------------------------
// public surface

// A reduced Groebner basis packaged for repeated division.
struct PreparedBasis {
    RingPtr ring;
    MonomialOrder ord;
    std::vector<Polynomial> elements;  // monic, ascending leading terms
    gb::Basis engine;                  // primitive integer forms
    GbStats stats;

    bool is_unit() const {
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
};

inline std::shared_ptr<const PreparedBasis> compute_reduced_gb(
    const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& ord,
    const GbOptions& opt = {}) {
    std::vector<gb::IPoly> input;
    input.reserve(gens.size());
    for (const auto& g : gens) {
        if (!g.is_zero()) input.push_back(gb::ipoly_from(g, ord));
    }
    auto res = gb::buchberger(std::move(input), ord, opt);
    auto out = std::make_shared<PreparedBasis>();
    out->ring = ring;
    out->ord = ord;
    out->stats = res.stats;
    out->engine.ord = ord;
    out->engine.polys = std::move(res.reduced);
    for (const auto& ip : out->engine.polys) {
        Rational lc_inv = Rational(BigInt(1), ip.lc());
        out->elements.push_back(gb::ipoly_to(ip, ring, lc_inv));
    }
    return out;
}

// exact remainder of multivariate division by a Groebner basis
inline Polynomial normal_form(const Polynomial& p, const PreparedBasis& basis,
                              const GbOptions& opt = {}) {
    require_same_ring(p.ring(), basis.ring);
    if (p.is_zero()) return p;
    auto [scale, prim] = p.primitive_part();
    gb::Reduction red;
    red.track = true;
    GbStats stats;
    gb::reduce_full(gb::ipoly_from(prim, basis.ord), basis.engine, red, stats, opt, scale);
    Polynomial out(p.ring());
    for (auto& [m, c] : red.true_terms) out.add_term(m, c);
    return out;
}

inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& gbasis,
                              const MonomialOrder& ord = MonomialOrder::grevlex(),
                              const GbOptions& opt = {}) {
    PreparedBasis basis;
    basis.ring = p.ring();
    basis.ord = ord;
    basis.engine.ord = ord;
    for (const auto& g : gbasis) {
        require_same_ring(g.ring(), p.ring());
        if (!g.is_zero()) basis.engine.polys.push_back(gb::ipoly_from(g, ord));
    }
    return normal_form(p, basis, opt);
}

// ---------------------------------------------------------------------------

class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
        for (auto& g : gens) {
            require_same_ring(g.ring(), ring_);
            if (g.is_zero()) continue;
            Polynomial n = g.normalized_primitive();
            bool dup = false;
            for (const auto& h : gens_)
                if (h == n) {
                    dup = true;
                    break;
                }
            if (!dup) gens_.push_back(std::move(n));
        }
        cache_ = std::make_shared<Cache>();
    }

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring) {
        auto one = Polynomial::constant(ring, Rational(1));
        return Ideal(std::move(ring), {one});
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool has_zero_generators() const { return gens_.empty(); }

    std::shared_ptr<const PreparedBasis> reduced_gb(
        const MonomialOrder& ord = MonomialOrder::grevlex(), const GbOptions& opt = {}) const {
        std::string key = ord.key();
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->by_order.find(key);
            if (it != cache_->by_order.end()) return it->second;
        }
        auto basis = compute_reduced_gb(ring_, gens_, ord, opt);
        std::lock_guard<std::mutex> lock(cache_->mu);
        cache_->by_order[key] = basis;
        return basis;
    }

    bool contains(const Polynomial& p, const GbOptions& opt = {}) const {
        if (p.is_zero()) return true;
        return normal_form(p, *reduced_gb(MonomialOrder::grevlex(), opt), opt).is_zero();
    }

    bool is_unit(const GbOptions& opt = {}) const { return reduced_gb({}, opt)->is_unit(); }
    bool is_zero_ideal() const { return gens_.empty(); }

    friend bool ideal_equal(const Ideal& a, const Ideal& b, const GbOptions& opt = {}) {
        require_same_ring(a.ring_, b.ring_);
        const auto& ga = a.reduced_gb(MonomialOrder::grevlex(), opt)->elements;
        const auto& gbs = b.reduced_gb(MonomialOrder::grevlex(), opt)->elements;
        return ga == gbs;
    }

  private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const PreparedBasis>> by_order;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

inline bool ideal_membership(const Polynomial& p, const Ideal& I, const GbOptions& opt = {}) {
    require_same_ring(p.ring(), I.ring());
    return I.contains(p, opt);
}

// generators of I with the given variables eliminated, in the restricted ring
inline Ideal eliminate(const Ideal& I, const std::vector<std::string>& block,
                       const GbOptions& opt = {}) {
    const RingPtr& ring = I.ring();
    if (block.empty()) return I;
    std::vector<size_t> idx;
    for (const auto& name : block) {
        size_t i = ring->index_of(name);
        if (i == RingDescriptor::npos)
            throw std::invalid_argument("eliminate: unknown variable \"" + name + "\"");
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    auto basis = I.reduced_gb(MonomialOrder::block_elim(idx), opt);
    std::vector<std::string> keep;
    for (size_t i = 0, p = 0; i < ring->nvars(); ++i) {
        if (p < idx.size() && idx[p] == i) {
            ++p;
            continue;
        }
        keep.push_back(ring->name(i));
    }
    RingPtr target = ring->restricted(keep);
    std::vector<Polynomial> gens;
    for (const auto& g : basis->elements) {
        bool free_of_block = true;
        for (const auto& [m, c] : g.terms())
            if (m.degree_on(idx) > 0) {
                free_of_block = false;
                break;
            }
        if (free_of_block) gens.push_back(map_to_ring(g, target));
    }
    return Ideal(target, std::move(gens));
}

// I cap J via the auxiliary-variable construction
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J, const GbOptions& opt = {}) {
    require_same_ring(I.ring(), J.ring());
    const RingPtr& ring = I.ring();
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(ring);
    std::string u_name = ring->fresh_name("u");
    RingPtr ext = ring->extended({u_name}, block_tag::aux);
    Polynomial u = Polynomial::variable(ext, ext->index_of(u_name));
    Polynomial one_minus_u = Polynomial::constant(ext, Rational(1)) - u;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(u * map_to_ring(g, ext));
    for (const auto& h : J.generators()) gens.push_back(one_minus_u * map_to_ring(h, ext));
    Ideal mixed(ext, std::move(gens));
    Ideal elim = eliminate(mixed, {u_name}, opt);
    std::vector<Polynomial> back;
    for (const auto& g : elim.generators()) back.push_back(map_to_ring(g, ring));
    return Ideal(ring, std::move(back));
}

// exact division p / g; residue must vanish
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& g,
                               const MonomialOrder& ord = MonomialOrder::grevlex()) {
    require_same_ring(p.ring(), g.ring());
    if (g.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    Polynomial q(p.ring());
    Polynomial h = p;
    auto [gm, gc] = g.leading_term(ord);
    while (!h.is_zero()) {
        auto [hm, hc] = h.leading_term(ord);
        if (!divides(gm, hm))
            throw std::logic_error("exact_divide: nonzero residue (invariant violation)");
        Polynomial t = Polynomial::term(p.ring(), hm / gm, hc / gc);
        q += t;
        h -= t * g;
    }
    return q;
}

// I : J, via (I cap (g)) / g intersected over the generators g of J
inline Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GbOptions& opt = {}) {
    require_same_ring(I.ring(), J.ring());
    if (J.is_zero_ideal()) throw std::invalid_argument("ideal_quotient: zero divisor ideal");
    const RingPtr& ring = I.ring();
    bool first = true;
    Ideal acc;
    for (const auto& g : J.generators()) {
        Ideal cap = ideal_intersect(I, Ideal(ring, {g}), opt);
        std::vector<Polynomial> qgens;
        for (const auto& k : cap.generators()) qgens.push_back(exact_divide(k, g));
        Ideal qg(ring, std::move(qgens));
        acc = first ? qg : ideal_intersect(acc, qg, opt);
        first = false;
    }
    return acc;
}

// I^n with generators the n-fold products of the generators of I
inline Ideal ideal_power(const Ideal& I, unsigned n) {
    const RingPtr& ring = I.ring();
    if (n == 0) return Ideal::unit(ring);
    const auto& gens = I.generators();
    if (gens.empty()) return Ideal::zero(ring);
    std::vector<Polynomial> cur = gens;
    for (unsigned k = 1; k < n; ++k) {
        std::vector<Polynomial> next;
        for (const auto& a : cur)
            for (const auto& g : gens) {
                Polynomial prod = (a * g).normalized_primitive();
                bool dup = false;
                for (const auto& h : next)
                    if (h == prod) {
                        dup = true;
                        break;
                    }
                if (!dup) next.push_back(std::move(prod));
            }
        cur = std::move(next);
    }
    return Ideal(ring, std::move(cur));
}

// Krull dimension of ring/I from the leading-term ideal: the complement of a
// maximum independent variable set is a minimum hitting set of the supports.
inline long long ideal_dimension(const Ideal& I, const GbOptions& opt = {}) {
    const RingPtr& ring = I.ring();
    if (I.is_zero_ideal()) return static_cast<long long>(ring->nvars());
    auto basis = I.reduced_gb(MonomialOrder::grevlex(), opt);
    if (basis->is_unit()) return -1;
    if (ring->nvars() > 64) throw std::invalid_argument("ideal_dimension: too many variables");
    std::vector<uint64_t> supports;
    for (const auto& g : basis->engine.polys) supports.push_back(g.lt().support_mask());
    uint64_t universe = 0;
    for (uint64_t s : supports) universe |= s;
    int ubits = __builtin_popcountll(universe);
    if (ubits > 26) throw std::invalid_argument("ideal_dimension: leading-term support too large");
    std::vector<int> positions;
    for (int i = 0; i < 64; ++i)
        if (universe & (uint64_t(1) << i)) positions.push_back(i);
    int best = ubits;  // hitting set never needs more than the whole universe
    for (uint64_t sel = 0; sel < (uint64_t(1) << ubits); ++sel) {
        int size = __builtin_popcountll(sel);
        if (size >= best) continue;
        uint64_t mask = 0;
        for (int b = 0; b < ubits; ++b)
            if (sel & (uint64_t(1) << b)) mask |= uint64_t(1) << positions[b];
        bool hits_all = true;
        for (uint64_t s : supports)
            if ((s & mask) == 0) {
                hits_all = false;
                break;
            }
        if (hits_all) best = size;
    }
    return static_cast<long long>(ring->nvars()) - best;
}

// Buchberger postcondition: every S-polynomial of the basis reduces to zero.
inline bool is_groebner_basis(const std::vector<Polynomial>& basis_polys, const MonomialOrder& ord,
                              const GbOptions& opt = {}) {
    gb::Basis basis{ord, {}};
    for (const auto& g : basis_polys) {
        if (g.is_zero()) return false;
        basis.polys.push_back(gb::ipoly_from(g, ord));
    }
    GbStats stats;
    gb::Reduction red;
    red.track = false;
    for (size_t i = 0; i < basis.polys.size(); ++i)
        for (size_t j = i + 1; j < basis.polys.size(); ++j) {
            const auto& f = basis.polys[i];
            const auto& g = basis.polys[j];
            Monomial l = lcm(f.lt(), g.lt());
            BigInt d = gcd(f.lc(), g.lc());
            gb::IPoly s =
                gb::combine(f, g.lc() / d, l / f.lt(), g, f.lc() / d, l / g.lt(), ord);
            gb::strip_content(s);
            gb::reduce_full(std::move(s), basis, red, stats, opt);
            if (!red.remainder.zero()) return false;
        }
    return true;
}

}  // namespace detlink
