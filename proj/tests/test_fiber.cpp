#include <random>

#include "doctest.h"
#include "hadstar/errors.hpp"
#include "hadstar/fiber.hpp"
#include "hadstar/product.hpp"

using namespace hadstar;

namespace {

Poly cvar(int i) { return Poly::variable(kChartVars, i); }

Poly segre_form() {
    Poly q(4);
    q.add_term({1, 0, 0, 1}, 1);
    q.add_term({0, 1, 1, 0}, -1);
    return q;  // x0 x3 - x1 x2
}

std::vector<int> zeros(std::initializer_list<int> vs) { return std::vector<int>(vs); }

Rat rpow(const Rat& b, int e) {
    Rat out(1);
    for (int k = 0; k < e; ++k) out *= b;
    return out;
}

}  // namespace

TEST_CASE("membership slots: frozen expansion coefficients") {
    auto slots = membership_slots();

    CHECK(slots[0][0] == cvar(V1) * cvar(W1));
    CHECK(slots[0][1] == cvar(V1) * cvar(W2));
    CHECK(slots[0][2].is_zero());
    CHECK(slots[1][0] == cvar(V2) * cvar(W1));
    CHECK(slots[1][1] == cvar(V2) * cvar(W2) - cvar(U1) * cvar(Z1));
    CHECK(slots[1][2] == -(cvar(U1) * cvar(Z2)));
    CHECK(slots[2][0].is_zero());
    CHECK(slots[2][1] == -(cvar(U2) * cvar(Z1)));
    CHECK(slots[2][2] == -(cvar(U2) * cvar(Z2)));
}

TEST_CASE("membership slots: reassembled expansion equals direct evaluation") {
    auto slots = membership_slots();
    const Poly w = segre_form();
    std::mt19937_64 rng(41);
    auto draw = [&]() -> Rat { return Rat(static_cast<long>(rng() % 13) - 6); };

    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> chart(kChartVars);
        for (auto& x : chart) x = draw();
        Rat l1 = draw(), l2 = draw(), m1 = draw(), m2 = draw();

        // Evaluate the reference form at the product of the chart points.
        std::vector<Rat> p = {l1, l2, l1 * chart[U1] + l2 * chart[U2],
                              l1 * chart[V1] + l2 * chart[V2]};
        std::vector<Rat> q = {m1, m2, m1 * chart[Z1] + m2 * chart[Z2],
                              m1 * chart[W1] + m2 * chart[W2]};
        std::vector<Rat> x(4);
        for (int i = 0; i < 4; ++i) x[i] = p[i] * q[i];
        Rat direct = w.evaluate(x);

        Rat assembled(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                assembled += slots[i][j].evaluate(chart) * rpow(l1, 2 - i) * rpow(l2, i) *
                             rpow(m1, 2 - j) * rpow(m2, j);
        CHECK(direct == assembled);
    }
}

TEST_CASE("chart ideal: the seven normalized generators in scan order") {
    Ideal ideal = chart_ideal();
    CHECK(ideal.nvars == kChartVars);
    REQUIRE(ideal.gens.size() == 7);
    CHECK(ideal.gens[0] == cvar(V1) * cvar(W1));
    CHECK(ideal.gens[1] == cvar(V1) * cvar(W2));
    CHECK(ideal.gens[2] == cvar(V2) * cvar(W1));
    CHECK(ideal.gens[3] == cvar(U1) * cvar(Z1) - cvar(V2) * cvar(W2));
    CHECK(ideal.gens[4] == cvar(U1) * cvar(Z2));
    CHECK(ideal.gens[5] == cvar(U2) * cvar(Z1));
    CHECK(ideal.gens[6] == cvar(U2) * cvar(Z2));
}

TEST_CASE("chart locus decomposes into four 4-dim components and one 3-dim") {
    auto comps = enumerate_components(chart_ideal());
    REQUIRE(comps.size() == 5);

    CHECK(comps[0].zero_vars == zeros({U1, U2, V1, V2}));
    CHECK(comps[1].zero_vars == zeros({U1, U2, W1, W2}));
    CHECK(comps[2].zero_vars == zeros({V1, V2, Z1, Z2}));
    CHECK(comps[3].zero_vars == zeros({Z1, Z2, W1, W2}));
    for (int k = 0; k < 4; ++k) {
        CHECK(comps[k].dimension == 4);
        CHECK(comps[k].extra.empty());
    }
    CHECK(comps[4].zero_vars == zeros({U2, V1, Z2, W1}));
    REQUIRE(comps[4].extra.size() == 1);
    CHECK(comps[4].extra[0] == cvar(U1) * cvar(Z1) - cvar(V2) * cvar(W2));
    CHECK(comps[4].dimension == 3);
}

TEST_CASE("groebner dimension agrees with the component oracle") {
    ChartAnalysis a = analyze_chart();
    CHECK(a.dimension == 4);
    CHECK(a.oracle_dimension == 4);
    CHECK(a.components.size() == 5);
}

TEST_CASE("every generator vanishes on random points of every component") {
    ChartAnalysis a = analyze_chart();
    std::mt19937_64 rng(977);
    auto draw_nonzero = [&]() -> Rat {
        long v = static_cast<long>(rng() % 17) - 8;
        return Rat(v == 0 ? 5 : v);
    };

    for (const auto& comp : a.components) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rat> x(kChartVars);
            for (auto& v : x) v = draw_nonzero();
            for (int zv : comp.zero_vars) x[zv] = 0;
            // Solve the residual binomial (if any) for its first variable.
            for (const auto& e : comp.extra) {
                auto it = e.terms().begin();
                Exp m1 = it->first;
                Rat c1 = it->second;
                ++it;
                Exp m2 = it->first;
                Rat c2 = it->second;
                int target = -1;
                Rat rest(1), rhs(1);
                for (int v = 0; v < kChartVars; ++v) {
                    if (m1[v] > 0 && target < 0)
                        target = v;
                    else if (m1[v] > 0)
                        rest *= x[v];
                    if (m2[v] > 0) rhs *= x[v];
                }
                x[target] = -c2 * rhs / (c1 * rest);
            }
            for (const auto& g : a.ideal.gens) CHECK(g.evaluate(x) == 0);
        }
    }
}

TEST_CASE("component diagnostics: coordinate-plane lines and collapsing products") {
    ChartAnalysis a = analyze_chart();

    // u = v = 0: the left line is the coordinate line {x2 = x3 = 0}.
    CHECK(a.components[0].left_line_in_coordinate_plane);
    CHECK_FALSE(a.components[0].right_line_in_coordinate_plane);
    // u = w = 0: left inside {x2 = 0}, right inside {x3 = 0}.
    CHECK(a.components[1].left_line_in_coordinate_plane);
    CHECK(a.components[1].right_line_in_coordinate_plane);
    // v = z = 0: left inside {x3 = 0}, right inside {x2 = 0}.
    CHECK(a.components[2].left_line_in_coordinate_plane);
    CHECK(a.components[2].right_line_in_coordinate_plane);
    // z = w = 0: the right line is the coordinate line {x2 = x3 = 0}.
    CHECK_FALSE(a.components[3].left_line_in_coordinate_plane);
    CHECK(a.components[3].right_line_in_coordinate_plane);
    // The 3-dimensional component keeps both lines off the coordinate planes,
    // but the product still degenerates: it is a line inside the quadric.
    CHECK_FALSE(a.components[4].left_line_in_coordinate_plane);
    CHECK_FALSE(a.components[4].right_line_in_coordinate_plane);

    // On every component the four product forms span only a 2-dimensional
    // space, so no point of the locus is a pair with a surface product.
    for (const auto& comp : a.components) CHECK(comp.sampled_product_span_rank == 2);
}

TEST_CASE("left-line substitution: residual for the in-chart product factor") {
    // (u1, v1, u2, v2) = (1, 0, 0, 1) is the chart form of the line through
    // (1:0:1:0) and (0:1:0:1).
    auto residual = substitute_left_chart({Rat(1), Rat(0), Rat(0), Rat(1)});
    REQUIRE(residual.size() == 3);
    CHECK(residual[0] == cvar(W1));
    CHECK(residual[1] == cvar(Z2));
    CHECK(residual[2] == cvar(Z1) - cvar(W2));

    // The surviving partners w1 = z2 = 0, w2 = z1 collapse the product to a
    // line, so no partner in this chart completes a surface-product pair.
    const LineP3 left = LineP3::through(ProjPoint(Rat(1), Rat(0), Rat(1), Rat(0)),
                                        ProjPoint(Rat(0), Rat(1), Rat(0), Rat(1)));
    for (long c : {2L, 3L, -5L}) {
        const LineP3 right = LineP3::through(ProjPoint(Rat(1), Rat(0), Rat(c), Rat(0)),
                                             ProjPoint(Rat(0), Rat(1), Rat(0), Rat(c)));
        auto pm = product_parametrization(ParamCurve::from_line(left),
                                          ParamCurve::from_line(right));
        auto res = implicitize(pm);
        CHECK(res.kind == ImageKind::Curve);
    }
}

TEST_CASE("the standard factorization of the reference quadric") {
    auto [left, right] = segre_pair();
    auto pm = product_parametrization(ParamCurve::from_line(left), ParamCurve::from_line(right));
    auto res = implicitize(pm);
    REQUIRE(res.kind == ImageKind::Surface);
    CHECK(res.equation->proportional(segre_form()));

    // The left factor is not in chart position, so the fiber point the pair
    // represents is invisible to the chart locus analyzed above.
    CHECK_FALSE(line_in_chart(left));
    CHECK(line_in_chart(right));
    CHECK(chart_of_line(right) == std::array<Rat, 4>{Rat(1), Rat(0), Rat(0), Rat(1)});
    CHECK_THROWS_AS(chart_of_line(left), DegenerateError);
}

TEST_CASE("chart coordinates round-trip through line construction") {
    std::mt19937_64 rng(53);
    auto draw = [&]() -> Rat { return Rat(static_cast<long>(rng() % 19) - 9); };
    for (int trial = 0; trial < 25; ++trial) {
        std::array<Rat, 4> c = {draw(), draw(), draw(), draw()};
        const LineP3 line = LineP3::through(ProjPoint(Rat(1), Rat(0), c[0], c[1]),
                                            ProjPoint(Rat(0), Rat(1), c[2], c[3]));
        REQUIRE(line_in_chart(line));
        CHECK(chart_of_line(line) == c);
    }
}

TEST_CASE("torus translates of the standard pair keep the same product") {
    auto [left, right] = segre_pair();
    const Poly reference = segre_form().normalized();
    std::mt19937_64 rng(1729);
    auto draw_nonzero = [&]() -> Rat {
        long v = static_cast<long>(rng() % 9) - 4;
        return Rat(v == 0 ? 3 : v);
    };

    for (int trial = 0; trial < 10; ++trial) {
        DiagonalAuto t({draw_nonzero(), draw_nonzero(), draw_nonzero(), draw_nonzero()});
        const LineP3 tl = t.act(left);
        const LineP3 tr = t.inverse().act(right);
        auto pm = product_parametrization(ParamCurve::from_line(tl), ParamCurve::from_line(tr));
        auto res = implicitize(pm);
        REQUIRE(res.kind == ImageKind::Surface);
        CHECK(res.equation->normalized() == reference);
        // The whole orbit stays outside the chart: the translated left line
        // still has vanishing first Pluecker coordinate.
        CHECK_FALSE(line_in_chart(tl));
    }
}
