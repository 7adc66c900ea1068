#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "detlink/determinantal.hpp"
#include "detlink/groebner.hpp"
#include "detlink/parser.hpp"
#include "testutil.hpp"

using namespace detlink;

namespace {

RingPtr ring_of(const std::vector<std::string>& names) {
    return RingDescriptor::make(names, block_tag::xblock);
}

Ideal ideal_of(const RingPtr& ring, const std::string& gens) {
    return Ideal(ring, parse_generators(gens, ring));
}

// reduced bases compare as sets of polynomials
bool gb_equals(const std::vector<Polynomial>& got, const RingPtr& ring,
               const std::vector<std::string>& expected) {
    if (got.size() != expected.size()) return false;
    for (const auto& e : expected) {
        Polynomial p = parse_polynomial(e, ring);
        if (std::find(got.begin(), got.end(), p) == got.end()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("reduced basis hand examples") {
    RingPtr R = ring_of({"x", "y"});
    SUBCASE("cancellation") {
        auto gb = ideal_of(R, "x, x+y").reduced_gb();
        CHECK(gb_equals(gb->elements, R, {"x", "y"}));
    }
    SUBCASE("lex pair") {
        // hand Buchberger: S(xy-1, y^2-1) = x - y, then xy-1 reduces away
        auto gb = ideal_of(R, "x*y - 1, y^2 - 1").reduced_gb(MonomialOrder::lex());
        CHECK(gb_equals(gb->elements, R, {"x - y", "y^2 - 1"}));
    }
    SUBCASE("monomial generators already reduced") {
        auto gb = ideal_of(R, "x^2, x*y").reduced_gb();
        CHECK(gb_equals(gb->elements, R, {"x^2", "x*y"}));
    }
    SUBCASE("zero ideal") {
        CHECK(Ideal::zero(R).reduced_gb()->elements.empty());
    }
    SUBCASE("unit ideal") {
        auto gb = ideal_of(R, "x, x+1").reduced_gb();
        CHECK(gb->is_unit());
    }
}

TEST_CASE("reduced basis is monic autoreduced and deterministic") {
    auto rng = testutil::make_rng(21);
    RingPtr R = ring_of({"x", "y", "z"});
    MonomialOrder ord = MonomialOrder::grevlex();
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<Polynomial> gens;
        size_t k = 2 + rng() % 3;
        for (size_t i = 0; i < k; ++i) gens.push_back(testutil::random_polynomial(rng, R, 3, 2));
        auto basis = compute_reduced_gb(R, gens, ord);
        for (const auto& g : basis->elements) {
            CHECK(g.leading_term(ord).second == Rational(1));
            for (const auto& h : basis->elements) {
                if (&g == &h) continue;
                for (const auto& [m, c] : g.terms())
                    CHECK(!divides(h.leading_term(ord).first, m));
            }
        }
        CHECK(is_groebner_basis(basis->elements, ord));
        // uniqueness: shuffled generators give the identical basis
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto basis2 = compute_reduced_gb(R, shuffled, ord);
        CHECK(basis->elements == basis2->elements);
    }
}

TEST_CASE("normal form examples") {
    RingPtr R = ring_of({"x", "y"});
    auto gb = ideal_of(R, "x^2 - y").reduced_gb();
    CHECK(normal_form(parse_polynomial("x^2", R), *gb) == parse_polynomial("y", R));
    CHECK(normal_form(parse_polynomial("x^2 - y", R), *gb).is_zero());
    RingPtr R3 = ring_of({"x1", "x2", "x3"});
    auto gb3 = ideal_of(R3, "x1^2*x2, x3^3").reduced_gb();
    CHECK(normal_form(Polynomial::constant(R3, Rational(1)), *gb3) ==
          Polynomial::constant(R3, Rational(1)));
}

TEST_CASE("normal form agrees with membership on random combinations") {
    auto rng = testutil::make_rng(22);
    RingPtr R = ring_of({"x", "y", "z"});
    Ideal I = ideal_of(R, "x^2 - y*z, x*y - z");
    for (int iter = 0; iter < 60; ++iter) {
        // members: random coefficient combinations of the generators
        Polynomial member(R);
        for (const auto& g : I.generators())
            member += testutil::random_polynomial(rng, R, 3, 2) * g;
        CHECK(I.contains(member));
        CHECK(normal_form(member, *I.reduced_gb()).is_zero());
    }
    // non-members
    CHECK(!I.contains(Polynomial::constant(R, Rational(1))));
    CHECK(!I.contains(Polynomial::variable(R, "x")));
    CHECK(!ideal_of(R, "x^2").contains(Polynomial::variable(R, "x")));
    CHECK(ideal_of(R, "x, y").contains(parse_polynomial("x + y", R)));
}

TEST_CASE("elimination") {
    SUBCASE("intersection construction by hand") {
        RingPtr R = RingDescriptor::make({"u", "x", "y"},
                                         {block_tag::aux, block_tag::xblock, block_tag::xblock});
        Ideal I(R, parse_generators("u*x, (1-u)*y", R));
        Ideal E = eliminate(I, {"u"});
        CHECK(E.ring()->nvars() == 2);
        CHECK(gb_equals(E.reduced_gb()->elements, E.ring(), {"x*y"}));
    }
    SUBCASE("empty block is the identity") {
        RingPtr R = ring_of({"x", "y"});
        Ideal I = ideal_of(R, "x^2 - y");
        CHECK(ideal_equal(eliminate(I, {}), I));
    }
    SUBCASE("cuspidal parametrization") {
        RingPtr R = RingDescriptor::make({"u", "x", "y"},
                                         {block_tag::aux, block_tag::xblock, block_tag::xblock});
        Ideal I(R, parse_generators("x - u^2, y - u^3", R));
        Ideal E = eliminate(I, {"u"});
        CHECK(gb_equals(E.reduced_gb()->elements, E.ring(), {"x^3 - y^2"}));
        // both containments via normal forms
        Polynomial rel = parse_polynomial("x^3 - y^2", R);
        CHECK(I.contains(rel));
        for (const auto& g : E.generators())
            CHECK(normal_form(map_to_ring(g, R), *I.reduced_gb()).is_zero());
    }
}

TEST_CASE("intersection examples") {
    RingPtr R = ring_of({"x", "y"});
    CHECK(gb_equals(ideal_intersect(ideal_of(R, "x"), ideal_of(R, "y")).reduced_gb()->elements, R,
                    {"x*y"}));
    CHECK(gb_equals(ideal_intersect(ideal_of(R, "x^2, y"), ideal_of(R, "x")).reduced_gb()->elements,
                    R, {"x^2", "x*y"}));
    Ideal I = ideal_of(R, "x^2 - y, x*y");
    CHECK(ideal_equal(ideal_intersect(I, I), I));
}

TEST_CASE("quotient examples") {
    SUBCASE("cancellation in a domain") {
        RingPtr R = RingDescriptor::make({"x", "y", "t"},
                                         {block_tag::xblock, block_tag::xblock, block_tag::tblock});
        Polynomial g = parse_polynomial("x^2 + y", R);
        Polynomial t = Polynomial::variable(R, "t");
        Ideal Q = ideal_quotient(Ideal(R, {t * g}), Ideal(R, {g}));
        CHECK(gb_equals(Q.reduced_gb()->elements, R, {"t"}));
    }
    SUBCASE("monomial quotient") {
        RingPtr R = ring_of({"x", "y"});
        Ideal Q = ideal_quotient(ideal_of(R, "x^2, x*y"), ideal_of(R, "x"));
        CHECK(gb_equals(Q.reduced_gb()->elements, R, {"x", "y"}));
    }
    SUBCASE("exact division residue is fatal") {
        RingPtr R = ring_of({"x", "y"});
        CHECK_THROWS_AS(exact_divide(parse_polynomial("x^2 + y", R), parse_polynomial("x", R)),
                        std::logic_error);
        CHECK(exact_divide(parse_polynomial("x^2*y + x*y^2", R), parse_polynomial("x*y", R)) ==
              parse_polynomial("x + y", R));
    }
}

TEST_CASE("power examples") {
    RingPtr R = ring_of({"x", "y"});
    Ideal I = ideal_of(R, "x, y");
    CHECK(gb_equals(ideal_power(I, 2).reduced_gb()->elements, R, {"x^2", "x*y", "y^2"}));
    CHECK(ideal_power(I, 0).is_unit());
    CHECK(gb_equals(ideal_power(ideal_of(R, "x"), 3).reduced_gb()->elements, R, {"x^3"}));
}

TEST_CASE("dimension examples") {
    RingPtr R = ring_of({"x", "y"});
    CHECK(ideal_dimension(ideal_of(R, "x")) == 1);
    CHECK(ideal_dimension(ideal_of(R, "x, x+1")) == -1);
    CHECK(ideal_dimension(Ideal::zero(R)) == 2);
    // 2x2 minors of the generic 3x2 matrix cut codimension 2 out of 6
    Ideal det = determinantal_ideal(MatrixSpec::make(3, 2, 2));
    CHECK(ideal_dimension(det) == 4);
}

TEST_CASE("monomial ideal oracles agree with the engine") {
    auto rng = testutil::make_rng(23);
    RingPtr R = ring_of({"x1", "x2", "x3", "x4"});
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<Monomial> ms, ns;
        size_t ka = 1 + rng() % 3, kb = 1 + rng() % 3;
        for (size_t i = 0; i < ka; ++i) {
            Monomial m = testutil::random_monomial(rng, 4, 3);
            if (!m.is_one()) ms.push_back(m);
        }
        for (size_t i = 0; i < kb; ++i) {
            Monomial m = testutil::random_monomial(rng, 4, 3);
            if (!m.is_one()) ns.push_back(m);
        }
        if (ms.empty() || ns.empty()) continue;
        Ideal I = testutil::monomial_ideal(R, ms);
        Ideal J = testutil::monomial_ideal(R, ns);
        Ideal cap = ideal_intersect(I, J);
        CHECK(ideal_equal(cap,
                          testutil::monomial_ideal(R, testutil::monomial_intersect_oracle(ms, ns))));
        Ideal quot = ideal_quotient(I, J);
        CHECK(ideal_equal(quot,
                          testutil::monomial_ideal(R, testutil::monomial_quotient_oracle(ms, ns))));
        // (I : J) * J is inside I
        for (const auto& a : quot.generators())
            for (const auto& b : J.generators()) CHECK(I.contains(a * b));
        // dimension against the brute-force independent-set oracle
        CHECK(ideal_dimension(I) ==
              testutil::monomial_dimension_oracle(testutil::minimalize(ms), 4));
    }
}

TEST_CASE("quotient times divisor lands in the ideal for dense inputs") {
    auto rng = testutil::make_rng(24);
    RingPtr R = ring_of({"x", "y", "z"});
    for (int iter = 0; iter < 8; ++iter) {
        Ideal I(R, {testutil::random_polynomial(rng, R, 3, 1),
                    testutil::random_polynomial(rng, R, 3, 1)});
        Ideal J(R, {testutil::random_polynomial(rng, R, 2, 1)});
        if (I.has_zero_generators() || J.has_zero_generators()) continue;
        Ideal Q = ideal_quotient(I, J);
        for (const auto& a : Q.generators())
            for (const auto& b : J.generators()) CHECK(I.contains(a * b));
    }
}

TEST_CASE("cyclic-4 benchmark") {
    RingPtr R = ring_of({"x", "y", "z", "w"});
    Ideal cyc4(R, parse_generators("x + y + z + w, x*y + y*z + z*w + w*x, "
                                   "x*y*z + y*z*w + z*w*x + w*x*y, x*y*z*w - 1",
                                   R));
    auto gb = cyc4.reduced_gb();
    CHECK(gb->elements.size() == 7);
    CHECK(ideal_dimension(cyc4) == 1);  // the degenerate cyclic system
    CHECK(is_groebner_basis(gb->elements, MonomialOrder::grevlex()));
    for (const auto& g : cyc4.generators()) CHECK(cyc4.contains(g));
}

TEST_CASE("membership verdicts are independent of the monomial order") {
    auto rng = testutil::make_rng(25);
    RingPtr R = ring_of({"x", "y", "z"});
    std::vector<MonomialOrder> orders = {
        MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block_elim({1}),
        MonomialOrder::weight_refined({Rational(2), Rational(1), Rational(3)})};
    for (int iter = 0; iter < 15; ++iter) {
        std::vector<Polynomial> gens = {testutil::random_polynomial(rng, R, 3, 2),
                                        testutil::random_polynomial(rng, R, 3, 2)};
        std::vector<Polynomial> probes;
        probes.push_back(testutil::random_polynomial(rng, R, 3, 2));
        probes.push_back(gens[0] * testutil::random_polynomial(rng, R, 2, 1) +
                         gens[1] * testutil::random_polynomial(rng, R, 2, 1));
        for (const auto& p : probes) {
            std::optional<bool> verdict;
            for (const auto& ord : orders) {
                auto basis = compute_reduced_gb(R, gens, ord);
                bool inside = normal_form(p, *basis).is_zero();
                if (!verdict)
                    verdict = inside;
                else
                    CHECK(*verdict == inside);
            }
        }
    }
}

TEST_CASE("step limit aborts loudly with statistics") {
    RingPtr R = ring_of({"x", "y", "z"});
    // leading terms interact, so pair reductions are unavoidable
    Ideal I = ideal_of(R, "x^2 - y, y^2 - x, x*y - z^2");
    GbOptions tiny;
    tiny.max_steps = 5;
    CHECK_THROWS_AS(compute_reduced_gb(R, I.generators(), MonomialOrder::grevlex(), tiny),
                    ResourceLimitError);
    try {
        compute_reduced_gb(R, I.generators(), MonomialOrder::grevlex(), tiny);
    } catch (const ResourceLimitError& e) {
        CHECK(e.stats.reduction_steps >= 5);
    }
}
