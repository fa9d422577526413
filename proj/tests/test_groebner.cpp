#include <algorithm>
#include <random>

#include "doctest.h"
#include "hadstar/groebner.hpp"

using namespace hadstar;

namespace {

Poly mono(int nvars, Exp e, long c = 1) { return Poly::monomial(nvars, std::move(e), Rat(c)); }

/// Test-side validator: Buchberger's criterion checked from the definition,
/// plus reducedness and canonical scaling of every element.
void check_reduced_groebner_basis(const GroebnerBasis& gb, const Ideal& ideal) {
    // The input generators must lie in the ideal generated by the basis.
    for (const Poly& g : ideal.gens) CHECK(normal_form(g, gb).is_zero());
    // Every S-polynomial reduces to zero.
    for (size_t i = 0; i < gb.elems.size(); ++i)
        for (size_t j = i + 1; j < gb.elems.size(); ++j)
            CHECK(normal_form(s_polynomial(gb.elems[i], gb.elems[j], gb.order), gb).is_zero());
    // Reduced: no term of any element is divisible by another leading term.
    for (size_t i = 0; i < gb.elems.size(); ++i) {
        for (size_t j = 0; j < gb.elems.size(); ++j) {
            if (i == j) continue;
            Exp lj = *gb.elems[j].leading_exp(gb.order);
            for (const auto& [e, c] : gb.elems[i].terms()) {
                bool divisible = true;
                for (size_t v = 0; v < e.size(); ++v)
                    if (lj[v] > e[v]) divisible = false;
                CHECK_FALSE(divisible);
            }
        }
        CHECK(gb.elems[i] == gb.elems[i].normalized());
    }
}

}  // namespace

TEST_CASE("reduced lex basis of <x^2 - y, x^3 - x>") {
    // Hand derivation: S(x^2-y, x^3-x) -> xy - x; S(x^2-y, xy-x) -> y^2 - y;
    // everything else reduces to zero; x^3 - x is redundant.  Reduced basis:
    // {x^2 - y, xy - x, y^2 - y}.
    Ideal I(2, {mono(2, {2, 0}) - mono(2, {0, 1}), mono(2, {3, 0}) - mono(2, {1, 0})});
    GbOptions opts;
    opts.order = MonomialOrder::lex();
    GroebnerBasis gb = buchberger(I, opts);

    std::vector<Poly> want{mono(2, {0, 2}) - mono(2, {0, 1}),   // y^2 - y
                           mono(2, {1, 1}) - mono(2, {1, 0}),   // xy - x
                           mono(2, {2, 0}) - mono(2, {0, 1})};  // x^2 - y
    REQUIRE(gb.elems.size() == 3);
    for (const Poly& w : want)
        CHECK(std::count(gb.elems.begin(), gb.elems.end(), w.normalized()) == 1);
    check_reduced_groebner_basis(gb, I);

    // y^3 - y = (y+1)(y^2-y) is in the ideal.
    Poly y3y = mono(2, {0, 3}) - mono(2, {0, 1});
    CHECK(normal_form(y3y, gb).is_zero());
    // x*y^2 reduces to x (via xy - x twice).
    CHECK(normal_form(mono(2, {1, 2}), gb) == mono(2, {1, 0}));
}

TEST_CASE("normal form against non-divisor leaves input alone") {
    Ideal I(2, {mono(2, {2, 0})});  // <x^2>
    GroebnerBasis gb = buchberger(I);
    Poly p = mono(2, {1, 1}) + mono(2, {0, 1});
    CHECK(normal_form(p, gb) == p);
    CHECK(normal_form(Poly::zero(2), gb).is_zero());
}

TEST_CASE("reduced basis is independent of generator order") {
    std::vector<Poly> gens{
        mono(3, {1, 1, 0}) - mono(3, {0, 0, 1}),            // xy - z
        mono(3, {0, 1, 2}) - mono(3, {1, 0, 0}),            // yz^2 - x
        mono(3, {2, 0, 0}) + mono(3, {0, 1, 0}, 3),         // x^2 + 3y
    };
    Ideal a(3, gens);
    std::reverse(gens.begin(), gens.end());
    Ideal b(3, gens);
    GroebnerBasis ga = buchberger(a), gc = buchberger(b);
    CHECK(ga.elems == gc.elems);
    check_reduced_groebner_basis(ga, a);

    // Determinism: same call twice gives identical output.
    CHECK(buchberger(a).elems == ga.elems);
}

TEST_CASE("cyclic-3 system: validator and zero-dimensionality") {
    // x+y+z, xy+yz+zx, xyz-1.
    Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
    Ideal I(3, {x + y + z, x * y + y * z + z * x, x * y * z - Poly::constant(3, 1)});
    GroebnerBasis gb = buchberger(I);
    check_reduced_groebner_basis(gb, I);
    CHECK(ideal_dimension(I) == 0);
}

TEST_CASE("step limit raises instead of truncating") {
    Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
    Ideal I(3, {x * x + y * z, y * y + x * z, z * z + x * y, x * y * z - Poly::constant(3, 1)});
    GbOptions opts;
    opts.step_limit = 1;
    CHECK_THROWS_AS(buchberger(I, opts), LimitError);
}

TEST_CASE("elimination: product surface of a monomial parametrization") {
    // Ring (s, t, x, y, z); eliminating s, t from <x - st, y - s, z - t>
    // leaves <x - yz>.
    Poly s = Poly::variable(5, 0), t = Poly::variable(5, 1);
    Poly x = Poly::variable(5, 2), y = Poly::variable(5, 3), z = Poly::variable(5, 4);
    Ideal I(5, {x - s * t, y - s, z - t});
    Ideal E = eliminate(I, 2);
    REQUIRE(E.nvars == 3);
    REQUIRE(E.gens.size() == 1);
    Poly want = Poly::variable(3, 0) - Poly::variable(3, 1) * Poly::variable(3, 2);
    CHECK(E.gens[0].proportional(want));
}

TEST_CASE("elimination keeps polynomials already free of the block") {
    Poly s = Poly::variable(3, 0);
    Poly u = Poly::variable(3, 1), v = Poly::variable(3, 2);
    Ideal I(3, {u - v, s * s - u});
    Ideal E = eliminate(I, 1);
    REQUIRE(E.gens.size() == 1);
    CHECK(E.gens[0].proportional(Poly::variable(2, 0) - Poly::variable(2, 1)));
}

TEST_CASE("affine dimension of standard examples") {
    // Zero ideal: all of A^n.
    CHECK(ideal_dimension(Ideal(3, {})) == 3);
    // Unit ideal: empty variety.
    CHECK(ideal_dimension(Ideal(3, {Poly::constant(3, 5)})) == -1);
    // A hyperplane in A^2.
    CHECK(ideal_dimension(Ideal(2, {Poly::variable(2, 0)})) == 1);
    // Union of the two axes in A^2.
    CHECK(ideal_dimension(Ideal(2, {Poly::variable(2, 0) * Poly::variable(2, 1)})) == 1);
    // Twisted-cubic style curve in A^3: <y - x^2, z - x^3>.
    Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
    CHECK(ideal_dimension(Ideal(3, {y - x * x, z - x * x * x})) == 1);
    // A surface (hypersurface) in A^3.
    CHECK(ideal_dimension(Ideal(3, {x * y - z * z})) == 2);
    // A point in A^2.
    CHECK(ideal_dimension(Ideal(2, {Poly::variable(2, 0), Poly::variable(2, 1)})) == 0);
}

TEST_CASE("dimension is insensitive to the ambient generator scaling") {
    Poly x = Poly::variable(4, 0), y = Poly::variable(4, 1);
    Poly z = Poly::variable(4, 2), w = Poly::variable(4, 3);
    // Segre-style quadric cone in A^4 has affine dimension 3.
    Ideal I(4, {(x * w - y * z) * Rat(7, 3)});
    CHECK(ideal_dimension(I) == 3);
}

TEST_CASE("membership is stable under basis regeneration") {
    std::mt19937_64 rng(67);
    Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
    std::vector<Poly> gens{x * x - y, x * z - y * y, z * z - x * y * y};
    Ideal I(3, gens);
    GroebnerBasis gb = buchberger(I);
    check_reduced_groebner_basis(gb, I);

    for (int t = 0; t < 10; ++t) {
        std::shuffle(gens.begin(), gens.end(), rng);
        GroebnerBasis gb2 = buchberger(Ideal(3, gens));
        CHECK(gb2.elems == gb.elems);
        // Random ideal combinations reduce to zero in both bases.
        Poly combo(3);
        for (const Poly& g : gens) {
            Exp e(3);
            for (int i = 0; i < 3; ++i) e[i] = static_cast<int>(rng() % 2);
            combo += Poly::monomial(3, e, Rat(static_cast<long>(rng() % 5) + 1)) * g;
        }
        CHECK(normal_form(combo, gb).is_zero());
        CHECK(normal_form(combo, gb2).is_zero());
    }
}
