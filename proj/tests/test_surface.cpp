#include "doctest.h"
#include "hadstar/product.hpp"
#include "hadstar/quadric.hpp"
#include "hadstar/surface.hpp"

using namespace hadstar;

namespace {

ProjPoint pt(long a, long b, long c, long d) { return ProjPoint(Rat(a), Rat(b), Rat(c), Rat(d)); }

Poly xv(int i) { return Poly::variable(4, i); }
Poly yv(int i) { return Poly::variable(3, i); }

Poly segre() { return xv(0) * xv(3) - xv(1) * xv(2); }

/// Product of the line through e0 and a conic through (0 : 1 : 1 : 1); the
/// image is the cone over the conic with vertex e0.
ImplicitResult cone_image() {
    ParamCurve f = ParamCurve::from_line(LineP3::through(pt(1, 0, 0, 0), pt(1, 1, 1, 1)));
    ParamCurve g = ParamCurve::conic_through(pt(0, 1, 1, 1), pt(1, 1, 2, 3), pt(1, 2, 1, 1));
    return implicitize(product_parametrization(f, g));
}

/// Product of the line through (0 : 0 : 1 : 1) and a conic through
/// (1 : 1 : 0 : 0): the two points have complementary supports, so the map
/// has a base point and the image degree drops from four to three.
ImplicitResult cubic_image() {
    ParamCurve f = ParamCurve::from_line(LineP3::through(pt(0, 0, 1, 1), pt(1, 2, 3, 4)));
    ParamCurve g = ParamCurve::conic_through(pt(1, 1, 0, 0), pt(0, 1, 1, 0), pt(1, 2, 3, 4));
    return implicitize(product_parametrization(f, g));
}

}  // namespace

TEST_CASE("singular locus dimension: smooth, cone, double plane") {
    CHECK(singular_locus_dimension(segre()) == -1);
    CHECK(singular_locus_dimension(xv(0) * xv(0) + xv(1) * xv(1) + xv(2) * xv(2) +
                                   xv(3) * xv(3)) == -1);
    // Rank-3 quadric: one singular point, the vertex.
    CHECK(singular_locus_dimension(xv(0) * xv(0) + xv(1) * xv(1) + xv(2) * xv(2)) == 0);
    // Rank-2 quadric: singular along the line x0 = x1 = 0.
    CHECK(singular_locus_dimension(xv(0) * xv(0) + xv(1) * xv(1)) == 1);
    // A double plane is singular along all of itself.
    CHECK(singular_locus_dimension(xv(0) * xv(0)) == 2);
    // Cubic cone with an isolated vertex at e3.
    CHECK(singular_locus_dimension(xv(0).pow(3) + xv(1).pow(3) + xv(2).pow(3)) == 0);

    CHECK_THROWS_AS(singular_locus_dimension(xv(0) + xv(1)), InputError);       // degree 1
    CHECK_THROWS_AS(singular_locus_dimension(Poly::zero(4)), InputError);       // zero
    CHECK_THROWS_AS(singular_locus_dimension(xv(0) * xv(0) + xv(1)), InputError);  // inhomogeneous
    CHECK_THROWS_AS(singular_locus_dimension(Poly::variable(3, 0).pow(2)), InputError);
}

TEST_CASE("cone test: diagonal quadrics and a cubic cone") {
    Poly rank3 = xv(0) * xv(0) + xv(1) * xv(1) + xv(2) * xv(2);
    CHECK(is_cone_with_vertex(rank3, pt(0, 0, 0, 1)));
    CHECK(is_cone_with_vertex(rank3, pt(0, 0, 0, -7)));  // same point of P^3
    CHECK_FALSE(is_cone_with_vertex(rank3, pt(1, 0, 0, 0)));
    CHECK_FALSE(is_cone_with_vertex(rank3, pt(1, 1, 1, 1)));

    // Smooth quadrics are cones with no vertex at all.
    for (int i = 0; i < 4; ++i) {
        std::vector<Rat> e(4, Rat(0));
        e[static_cast<size_t>(i)] = Rat(1);
        CHECK_FALSE(is_cone_with_vertex(segre(), ProjPoint(e)));
    }
    CHECK_FALSE(is_cone_with_vertex(segre(), pt(1, 1, 1, 1)));

    // A cubic with no x0 is a cone over a plane cubic with vertex e0.
    Poly cub = xv(1).pow(3) + xv(2) * xv(2) * xv(3);
    CHECK(is_cone_with_vertex(cub, pt(1, 0, 0, 0)));
    CHECK_FALSE(is_cone_with_vertex(cub, pt(0, 1, 0, 0)));
    CHECK_FALSE(is_cone_with_vertex(segre() * xv(0), pt(1, 0, 0, 0)));
}

TEST_CASE("cone test: a plane is a cone over any of its points") {
    Poly plane = xv(0) - xv(1);
    CHECK(is_cone_with_vertex(plane, pt(1, 1, 0, 0)));
    CHECK(is_cone_with_vertex(plane, pt(0, 0, 1, 0)));
    CHECK_FALSE(is_cone_with_vertex(plane, pt(1, 0, 0, 0)));
}

TEST_CASE("sections of the standard smooth product quadric") {
    Poly w = Quadric::from_poly(xv(1) * xv(2) - xv(0) * xv(3)).poly();
    REQUIRE(w == xv(0) * xv(3) - xv(1) * xv(2));

    SectionCurve s0 = section(w, 0);
    CHECK(s0.plane == 0);
    CHECK(s0.degree == 2);
    CHECK(s0.embedded == -(xv(1) * xv(2)));
    CHECK(s0.form == -(yv(0) * yv(1)));  // coordinates (x1, x2, x3)
    CHECK(section_is_singular(s0));

    // All four coordinate sections of this quadric are line pairs.
    for (int i = 0; i < 4; ++i) CHECK(section_is_singular(section(w, i)));

    // A generic diagonal quadric meets every coordinate plane in a smooth
    // conic instead.
    Poly diag = xv(0) * xv(0) + xv(1) * xv(1) + xv(2) * xv(2) + xv(3) * xv(3);
    for (int i = 0; i < 4; ++i) CHECK_FALSE(section_is_singular(section(diag, i)));
}

TEST_CASE("section rejects planes contained in the surface") {
    Poly w = xv(0) * (xv(1) * xv(1) + xv(2) * xv(3));
    CHECK_THROWS_AS({ section(w, 0); }, DegenerateError);
    SectionCurve s1 = section(w, 1);  // the other sections are honest curves
    CHECK(s1.degree == 3);
    CHECK(s1.embedded == xv(0) * xv(2) * xv(3));
    CHECK_THROWS_AS({ section(Poly::variable(4, 2), 2); }, DegenerateError);
    CHECK_THROWS_AS({ section(w, 4); }, InputError);
    CHECK_THROWS_AS({ section(w, -1); }, InputError);
}

TEST_CASE("section singularity: lines, non-reduced curves") {
    // Degree-1 sections are always smooth.
    SectionCurve flat = section(xv(0) + xv(1) + xv(2) + xv(3), 0);
    CHECK(flat.degree == 1);
    CHECK_FALSE(section_is_singular(flat));

    // A non-reduced section (double line inside a cubic) counts as singular.
    SectionCurve dbl = section(xv(0) * xv(1) * xv(1), 2);
    CHECK(dbl.degree == 3);
    CHECK(section_is_singular(dbl));

    // Smooth plane cubic (Fermat) sitting inside a 4-variable cone.
    SectionCurve fermat = section(xv(0).pow(3) + xv(1).pow(3) + xv(2).pow(3), 3);
    CHECK(fermat.degree == 3);
    CHECK_FALSE(section_is_singular(fermat));
    // ... but the sections through the cone's vertex are singular.
    SectionCurve through_vertex = section(xv(0).pow(3) + xv(1).pow(3) + xv(2).pow(3), 0);
    CHECK(section_is_singular(through_vertex));
}

TEST_CASE("line containment in a surface") {
    CHECK(line_in_surface(segre(), LineP3::through(pt(1, 0, 1, 0), pt(0, 1, 0, 1))));
    CHECK(line_in_surface(segre(), LineP3::through(pt(1, 1, 0, 0), pt(0, 0, 1, 1))));
    CHECK_FALSE(line_in_surface(segre(), LineP3::through(pt(1, 1, 1, 1), pt(1, 2, 3, 4))));
    CHECK_FALSE(line_in_surface(xv(0) * xv(0) + xv(1) * xv(1) + xv(2) * xv(2),
                                LineP3::through(pt(1, 0, 0, 0), pt(0, 0, 0, 1))));
    CHECK(line_in_surface(xv(0) * xv(0) + xv(1) * xv(1),  // contains x0 = x1 = 0
                          LineP3::through(pt(0, 0, 1, 0), pt(0, 0, 0, 1))));
}

TEST_CASE("cone fixture: line through a coordinate point times a conic") {
    ImplicitResult r = cone_image();
    CHECK(r.kind == ImageKind::Surface);
    CHECK(r.degree == 2);
    REQUIRE(r.equation.has_value());
    Poly w = r.equation->normalized();

    Poly expected = xv(1) * xv(1) - Rat(7) * xv(1) * xv(2) + Rat(11) * xv(2) * xv(2) +
                    Rat(4) * xv(1) * xv(3) - Rat(13) * xv(2) * xv(3) + Rat(4) * xv(3) * xv(3);
    CHECK(w == expected);

    Quadric q = Quadric::from_poly(w);
    CHECK(q.rank() == 3);
    CHECK_FALSE(q.is_smooth());
    CHECK(is_cone_with_vertex(w, pt(1, 0, 0, 0)));
    CHECK(singular_locus_dimension(w) == 0);

    // The plane x0 = 0 misses the vertex and cuts the smooth base conic;
    // the planes through the vertex cut pairs of rulings.
    CHECK_FALSE(section_is_singular(section(w, 0)));
    for (int i = 1; i < 4; ++i) CHECK(section_is_singular(section(w, i)));

    // Every ruling joins the vertex to a conic point; check one rationally.
    CHECK(line_in_surface(w, LineP3::through(pt(1, 0, 0, 0), pt(0, 1, 1, 1))));

    std::vector<ProjPoint> cands =
        cone_vertex_candidates(w, {pt(1, 0, 0, 0), pt(1, 1, 1, 1), pt(0, 1, 1, 1)});
    int vertices = 0;
    for (const ProjPoint& c : cands)
        if (is_cone_with_vertex(w, c)) ++vertices;
    CHECK(vertices == 1);
    bool has_e0 = false;
    for (const ProjPoint& c : cands) has_e0 = has_e0 || c == pt(1, 0, 0, 0);
    CHECK(has_e0);
}

TEST_CASE("cubic fixture: base point drops the degree to three") {
    ImplicitResult r = cubic_image();
    CHECK(r.kind == ImageKind::Surface);
    CHECK(r.degree == 3);
    REQUIRE(r.equation.has_value());
    Poly w = r.equation->normalized();
    CHECK(w.term_count() == 16);
    CHECK(w.coeff({3, 0, 0, 0}) == Rat(64));
    CHECK(w.coeff({0, 1, 0, 2}) == Rat(-5));
    CHECK(w.coeff({0, 3, 0, 0}) == Rat(-10));

    CHECK(singular_locus_dimension(w) == 1);
    for (int i = 0; i < 4; ++i) CHECK(section_is_singular(section(w, i)));

    // The line x0 = x1 = 0 is the image of the line's intersection with the
    // plane pair x0 x1 = 0 under the product, and lies inside the surface.
    CHECK(line_in_surface(w, LineP3::through(pt(0, 0, 1, 0), pt(0, 0, 0, 1))));
    CHECK_FALSE(line_in_surface(w, LineP3::through(pt(1, 0, 0, 0), pt(0, 1, 0, 0))));

    // Singular along a curve but not a cone: no candidate passes.
    for (const ProjPoint& c :
         cone_vertex_candidates(w, {pt(0, 0, 1, 1), pt(1, 2, 3, 4), pt(1, 1, 0, 0)}))
        CHECK_FALSE(is_cone_with_vertex(w, c));
}

TEST_CASE("morphism quartic: all four sections stay singular") {
    ParamCurve f = ParamCurve::from_line(LineP3::through(pt(1, 1, 1, 1), pt(1, 2, 3, 4)));
    ParamCurve g = ParamCurve::conic_through(pt(1, 1, 2, 1), pt(1, 3, 1, 2), pt(2, 1, 1, 3));
    ProductMap pm = product_parametrization(f, g);
    CHECK(morphism_check(pm).is_morphism);
    ImplicitResult r = implicitize(pm);
    CHECK(r.degree == 4);
    REQUIRE(r.equation.has_value());
    Poly w = r.equation->normalized();
    CHECK(w.coeff({4, 0, 0, 0}) == Rat(242));

    CHECK(singular_locus_dimension(w) == 1);
    for (int i = 0; i < 4; ++i) CHECK(section_is_singular(section(w, i)));
    for (const ProjPoint& c :
         cone_vertex_candidates(w, {pt(1, 1, 1, 1), pt(1, 2, 3, 4), pt(1, 1, 2, 1)}))
        CHECK_FALSE(is_cone_with_vertex(w, c));
}

TEST_CASE("cone vertex candidates: deterministic and deduplicated") {
    Poly rank3 = xv(0) * xv(0) + xv(1) * xv(1) + xv(2) * xv(2);
    std::vector<ProjPoint> a = cone_vertex_candidates(rank3, {pt(0, 0, 0, 1), pt(0, 0, 0, 1)});
    std::vector<ProjPoint> b = cone_vertex_candidates(rank3, {pt(0, 0, 0, 1), pt(0, 0, 0, 1)});
    CHECK(a == b);
    int seen = 0;
    for (const ProjPoint& c : a)
        if (c == pt(0, 0, 0, 1)) ++seen;
    CHECK(seen == 1);

    // The Fermat cone's Jacobian basis has no linear part, so the harvest
    // falls back to the coordinate points, which still include the vertex.
    std::vector<ProjPoint> f = cone_vertex_candidates(xv(0).pow(3) + xv(1).pow(3) + xv(2).pow(3), {});
    bool found = false;
    for (const ProjPoint& c : f) found = found || is_cone_with_vertex(xv(0).pow(3) + xv(1).pow(3) + xv(2).pow(3), c);
    CHECK(found);

    // Rank-2 quadric: singular along a whole line, sampled candidates all work.
    Poly rank2 = xv(0) * xv(0) + xv(1) * xv(1);
    std::vector<ProjPoint> cands = cone_vertex_candidates(rank2, {});
    int verts = 0;
    for (const ProjPoint& c : cands)
        if (is_cone_with_vertex(rank2, c)) ++verts;
    CHECK(verts >= 3);  // e2, e3 and combinations along the singular line
}
