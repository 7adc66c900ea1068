// Sparse multivariate polynomials over Q. Terms live in an order-independent
// canonical map; monomial orders only matter for display and for the basis
// engine, which keeps its own sorted views.
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "detlink/ring.hpp"

namespace detlink {

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Rational c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->nvars()), std::move(c));
        return p;
    }
    static Polynomial variable(RingPtr ring, size_t i, uint16_t k = 1) {
        Polynomial p(ring);
        if (k == 0) return constant(std::move(ring), Rational(1));
        p.terms_.emplace(Monomial::var(ring->nvars(), i, k), Rational(1));
        return p;
    }
    static Polynomial variable(const RingPtr& ring, const std::string& name) {
        size_t i = ring->index_of(name);
        if (i == RingDescriptor::npos)
            throw std::invalid_argument("unknown variable \"" + name + "\"");
        return variable(ring, i);
    }
    static Polynomial term(RingPtr ring, Monomial m, Rational c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("not a constant polynomial");
        return terms_.begin()->second;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    uint32_t total_degree() const {  // 0 for the zero polynomial
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    // min over terms of the degree in the given variable block; nullopt for 0
    std::optional<uint32_t> min_degree_on(const std::vector<size_t>& idx) const {
        if (terms_.empty()) return std::nullopt;
        uint32_t best = UINT32_MAX;
        for (const auto& [m, c] : terms_) best = std::min(best, m.degree_on(idx));
        return best;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.ring_);
        if (c.is_zero()) return r;
        for (const auto& [m, q] : p.terms_) r.terms_.emplace(m, c * q);
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned k) const {
        Polynomial acc = constant(ring_, Rational(1));
        Polynomial base = *this;
        while (k) {
            if (k & 1u) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_ring(*a.ring_, *b.ring_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw std::logic_error("leading term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }

    // p = c * primitive with integer coprime coefficients and a canonical sign
    // (coefficient of the structurally largest monomial positive)
    std::pair<Rational, Polynomial> primitive_part() const {
        if (terms_.empty()) return {Rational(0), *this};
        BigInt num_gcd(0), den_lcm(1);
        for (const auto& [m, c] : terms_) {
            num_gcd = gcd(num_gcd, c.num());
            den_lcm = lcm(den_lcm, c.den());
        }
        Rational scale(num_gcd, den_lcm);  // every c / scale is an integer
        if (terms_.rbegin()->second.sign() < 0) scale = -scale;
        Polynomial prim(ring_);
        for (const auto& [m, c] : terms_) prim.terms_.emplace(m, c / scale);
        return {scale, prim};
    }
    Polynomial normalized_primitive() const { return primitive_part().second; }

    // monic under the given order (leading coefficient 1)
    Polynomial monic(const MonomialOrder& ord) const {
        if (terms_.empty()) return *this;
        Rational lc = leading_term(ord).second;
        return lc.inverse() * *this;
    }

    std::string to_string(const MonomialOrder& ord = MonomialOrder::grevlex()) const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Monomial, Rational>*> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(),
                  [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });
        std::ostringstream out;
        bool first = true;
        for (auto* t : ts) {
            Rational c = t->second;
            if (first) {
                if (c.sign() < 0) {
                    out << "-";
                    c = -c;
                }
            } else {
                out << (c.sign() < 0 ? " - " : " + ");
                c = c.abs();
            }
            first = false;
            bool printed_coeff = false;
            if (!c.is_one() || t->first.is_one()) {
                out << c.to_string();
                printed_coeff = true;
            }
            bool any_var = false;
            for (size_t i = 0; i < t->first.nvars(); ++i) {
                uint16_t k = t->first.e[i];
                if (!k) continue;
                if (printed_coeff || any_var) out << "*";
                out << ring_->name(i);
                if (k > 1) out << "^" << k;
                any_var = true;
            }
        }
        return out.str();
    }

  private:
    RingPtr ring_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// ring homomorphisms

// Substitute variables by polynomials in a target ring. Unassigned variables
// map to the variable of the same name in the target (which must exist).
inline Polynomial substitute(const Polynomial& p,
                             const std::map<std::string, Polynomial>& images, RingPtr target) {
    const RingPtr& src = p.ring();
    for (const auto& [name, img] : images) {
        if (!src->has(name)) throw std::invalid_argument("substitute: unknown variable \"" + name + "\"");
        require_same_ring(img.ring(), target);
    }
    // per-variable image lookup table
    std::vector<const Polynomial*> image_of(src->nvars(), nullptr);
    for (size_t i = 0; i < src->nvars(); ++i) {
        auto it = images.find(src->name(i));
        if (it != images.end()) {
            image_of[i] = &it->second;
        }
    }
    Polynomial result(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial acc = Polynomial::constant(target, c);
        for (size_t i = 0; i < m.nvars(); ++i) {
            uint16_t k = m.e[i];
            if (!k) continue;
            if (image_of[i]) {
                acc = acc * image_of[i]->pow(k);
            } else {
                size_t j = target->index_of(src->name(i));
                if (j == RingDescriptor::npos)
                    throw std::invalid_argument("substitute: variable \"" + src->name(i) +
                                                "\" missing from target ring");
                acc = acc * Polynomial::variable(target, j, k);
            }
        }
        result += acc;
    }
    return result;
}

inline std::map<std::string, Polynomial> substitution_map(
    const std::vector<std::pair<std::string, Polynomial>>& entries) {
    return {entries.begin(), entries.end()};
}

// Move p into another ring that contains (by name) every variable p uses.
inline Polynomial map_to_ring(const Polynomial& p, const RingPtr& target) {
    if (same_ring(*p.ring(), *target)) {
        Polynomial q = Polynomial::zero(target);
        for (const auto& [m, c] : p.terms()) q.add_term(m, c);
        return q;
    }
    return substitute(p, {}, target);
}

// ---------------------------------------------------------------------------
// minors

namespace detail {
inline Polynomial det_laplace(const std::vector<std::vector<const Polynomial*>>& a, RingPtr ring) {
    size_t n = a.size();
    if (n == 1) return *a[0][0];
    Polynomial det = Polynomial::zero(ring);
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j]->is_zero()) continue;
        std::vector<std::vector<const Polynomial*>> sub;
        sub.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<const Polynomial*> row;
            row.reserve(n - 1);
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(a[i][jj]);
            sub.push_back(std::move(row));
        }
        Polynomial cof = *a[0][j] * det_laplace(sub, ring);
        if (j % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

inline bool next_combination(std::vector<size_t>& c, size_t n) {
    size_t k = c.size();
    for (size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}
}  // namespace detail

// All r-by-r minors of an m-by-n grid, row sets then column sets in
// lexicographic order; plain determinants of the selected submatrices.
inline std::vector<Polynomial> matrix_minors(const std::vector<std::vector<Polynomial>>& entries,
                                             size_t r) {
    size_t m = entries.size();
    size_t n = m ? entries[0].size() : 0;
    if (r < 1 || r > std::min(m, n))
        throw std::invalid_argument("matrix_minors: minor size out of range");
    RingPtr ring = entries[0][0].ring();
    std::vector<Polynomial> out;
    std::vector<size_t> rows(r), cols(r);
    for (size_t i = 0; i < r; ++i) rows[i] = i;
    do {
        for (size_t j = 0; j < r; ++j) cols[j] = j;
        do {
            std::vector<std::vector<const Polynomial*>> sub(r, std::vector<const Polynomial*>(r));
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) sub[i][j] = &entries[rows[i]][cols[j]];
            out.push_back(detail::det_laplace(sub, ring));
        } while (detail::next_combination(cols, n));
    } while (detail::next_combination(rows, m));
    return out;
}

}  // namespace detlink
