// Variable sets with block structure, exponent-vector monomials, and the
// monomial orders the basis engine understands. Rings are immutable and
// shared by pointer; polynomials refer back to them by name signature.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "detlink/errors.hpp"
#include "detlink/rational.hpp"

namespace detlink {

namespace block_tag {
inline constexpr const char* xblock = "xblock";
inline constexpr const char* tblock = "tblock";
inline constexpr const char* aux = "aux";
}  // namespace block_tag

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

class RingDescriptor {
  public:
    // names and tags run in parallel; declaration order is the variable order
    static RingPtr make(std::vector<std::string> names, std::vector<std::string> tags) {
        if (names.size() != tags.size())
            throw std::invalid_argument("RingDescriptor: names/tags size mismatch");
        std::set<std::string> seen(names.begin(), names.end());
        if (seen.size() != names.size())
            throw std::invalid_argument("RingDescriptor: duplicate variable names");
        return std::shared_ptr<RingDescriptor>(
            new RingDescriptor(std::move(names), std::move(tags)));
    }
    static RingPtr make(std::vector<std::string> names, const std::string& tag) {
        std::vector<std::string> tags(names.size(), tag);
        return make(std::move(names), std::move(tags));
    }

    size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::string& tag(size_t i) const { return tags_[i]; }

    // index of a variable name, or npos
    static constexpr size_t npos = static_cast<size_t>(-1);
    size_t index_of(const std::string& name) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return npos;
    }
    bool has(const std::string& name) const { return index_of(name) != npos; }

    std::vector<size_t> block_indices(const std::string& tag) const {
        std::vector<size_t> out;
        for (size_t i = 0; i < tags_.size(); ++i)
            if (tags_[i] == tag) out.push_back(i);
        return out;
    }

    // structural identity; rings with equal signatures are interchangeable
    const std::string& signature() const { return signature_; }
    friend bool same_ring(const RingDescriptor& a, const RingDescriptor& b) {
        return a.signature_ == b.signature_;
    }

    // new ring with extra variables appended (existing blocks untouched)
    RingPtr extended(const std::vector<std::string>& new_names, const std::string& tag) const {
        std::vector<std::string> names = names_, tags = tags_;
        for (const auto& n : new_names) {
            names.push_back(n);
            tags.push_back(tag);
        }
        return make(std::move(names), std::move(tags));
    }

    // new ring keeping only the named variables, in their current order
    RingPtr restricted(const std::vector<std::string>& keep) const {
        std::set<std::string> keepset(keep.begin(), keep.end());
        std::vector<std::string> names, tags;
        for (size_t i = 0; i < names_.size(); ++i) {
            if (keepset.count(names_[i])) {
                names.push_back(names_[i]);
                tags.push_back(tags_[i]);
            }
        }
        return make(std::move(names), std::move(tags));
    }

    // a name not colliding with any variable (base, base_, base__, ...)
    std::string fresh_name(std::string base) const {
        while (has(base)) base += "_";
        return base;
    }

  private:
    RingDescriptor(std::vector<std::string> names, std::vector<std::string> tags)
        : names_(std::move(names)), tags_(std::move(tags)) {
        signature_.reserve(names_.size() * 8);
        for (size_t i = 0; i < names_.size(); ++i) {
            signature_ += names_[i];
            signature_ += ':';
            signature_ += tags_[i];
            signature_ += ';';
        }
    }

    std::vector<std::string> names_;
    std::vector<std::string> tags_;
    std::string signature_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !same_ring(*a, *b)) throw RingMismatchError("polynomial ring mismatch");
}

// ---------------------------------------------------------------------------

struct Monomial {
    std::vector<uint16_t> e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}
    static Monomial var(size_t nvars, size_t i, uint16_t k = 1) {
        Monomial m(nvars);
        m.e[i] = k;
        return m;
    }

    size_t nvars() const { return e.size(); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](uint16_t x) { return x == 0; });
    }
    uint32_t degree() const { return std::accumulate(e.begin(), e.end(), uint32_t(0)); }
    uint32_t degree_on(const std::vector<size_t>& idx) const {
        uint32_t d = 0;
        for (size_t i : idx) d += e[i];
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a.e == b.e); }
    // structural (order-independent) comparison for canonical containers
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
        return r;
    }
    friend bool divides(const Monomial& a, const Monomial& b) {  // a | b
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > b.e[i]) return false;
        return true;
    }
    friend Monomial operator/(const Monomial& a, const Monomial& b) {  // requires b | a
        Monomial r(a.e.size());
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
        return r;
    }
    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }
    // support bitmask over the first 64 variables, for cheap divisibility rejects
    uint64_t support_mask() const {
        uint64_t m = 0;
        for (size_t i = 0; i < e.size() && i < 64; ++i)
            if (e[i]) m |= (uint64_t(1) << i);
        return m;
    }
};

// ---------------------------------------------------------------------------

// Total, multiplicative well-orders on monomials.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, BlockElim, WeightRefined };

    Kind kind = Kind::Grevlex;
    std::vector<size_t> elim;       // BlockElim: indices eliminated first
    std::vector<Rational> weights;  // WeightRefined: nonnegative weights
    Kind tie = Kind::Grevlex;       // inner/tie order for BlockElim and WeightRefined

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() {
        MonomialOrder o;
        o.kind = Kind::Lex;
        return o;
    }
    static MonomialOrder block_elim(std::vector<size_t> elim_indices,
                                    Kind inner = Kind::Grevlex) {
        MonomialOrder o;
        o.kind = Kind::BlockElim;
        o.elim = std::move(elim_indices);
        std::sort(o.elim.begin(), o.elim.end());
        o.tie = inner;
        return o;
    }
    static MonomialOrder weight_refined(std::vector<Rational> w, Kind tie_order = Kind::Grevlex) {
        MonomialOrder o;
        o.kind = Kind::WeightRefined;
        o.weights = std::move(w);
        o.tie = tie_order;
        return o;
    }

    // cache key for Groebner bases
    std::string key() const {
        std::string k;
        switch (kind) {
            case Kind::Grevlex: k = "grevlex"; break;
            case Kind::Lex: k = "lex"; break;
            case Kind::BlockElim:
                k = "elim[";
                for (size_t i : elim) k += std::to_string(i) + ",";
                k += "]";
                k += tie == Kind::Lex ? "lex" : "grevlex";
                break;
            case Kind::WeightRefined:
                k = "w[";
                for (const auto& w : weights) k += w.to_fraction_string() + ",";
                k += "]";
                k += tie == Kind::Lex ? "lex" : "grevlex";
                break;
        }
        return k;
    }

    // -1 / 0 / +1 for a < b, a == b, a > b
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::Grevlex: return cmp_grevlex_all(a, b);
            case Kind::Lex: return cmp_lex_all(a, b);
            case Kind::BlockElim: {
                int c = cmp_on(a, b, elim, tie);
                if (c != 0) return c;
                std::vector<size_t> rest;
                rest.reserve(a.nvars() - elim.size());
                size_t p = 0;
                for (size_t i = 0; i < a.nvars(); ++i) {
                    if (p < elim.size() && elim[p] == i) {
                        ++p;
                        continue;
                    }
                    rest.push_back(i);
                }
                return cmp_on(a, b, rest, tie);
            }
            case Kind::WeightRefined: {
                Rational wa, wb;
                for (size_t i = 0; i < a.nvars(); ++i) {
                    if (a.e[i]) wa += weights[i] * Rational(a.e[i]);
                    if (b.e[i]) wb += weights[i] * Rational(b.e[i]);
                }
                if (wa != wb) return wa < wb ? -1 : 1;
                return tie == Kind::Lex ? cmp_lex_all(a, b) : cmp_grevlex_all(a, b);
            }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  private:
    static int cmp_lex_all(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.nvars(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    }
    static int cmp_grevlex_all(const Monomial& a, const Monomial& b) {
        uint32_t da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        // same degree: a > b iff the last nonzero of a-b is negative
        for (size_t i = a.nvars(); i-- > 0;) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }
    static int cmp_on(const Monomial& a, const Monomial& b, const std::vector<size_t>& idx,
                      Kind inner) {
        if (inner == Kind::Lex) {
            for (size_t i : idx)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        }
        uint32_t da = a.degree_on(idx), db = b.degree_on(idx);
        if (da != db) return da < db ? -1 : 1;
        for (size_t k = idx.size(); k-- > 0;) {
            size_t i = idx[k];
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }
};

}  // namespace detlink
