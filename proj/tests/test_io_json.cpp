#include <string>

#include "doctest.h"
#include "hadstar/identify.hpp"
#include "hadstar/io_json.hpp"

using namespace hadstar;
using hadstar::io::ojson;

namespace {

ProjPoint pt(long a, long b, long c, long d) { return ProjPoint(Rat(a), Rat(b), Rat(c), Rat(d)); }

Poly xv(int i) { return Poly::variable(4, i); }

std::string thrown_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

bool mentions(const std::string& msg, const std::string& needle) {
    return msg.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("json text parsing and rationals") {
    CHECK(io::parse_json_text("[1, 2]").is_array());
    CHECK(mentions(thrown_message([] { io::parse_json_text("{oops"); }), "invalid JSON"));

    CHECK(io::parse_rat(ojson("3/4"), "$") == Rat(3, 4));
    CHECK(io::parse_rat(ojson("-5"), "$") == Rat(-5));
    CHECK(io::parse_rat(ojson(7), "$") == Rat(7));
    CHECK(io::emit_rat(Rat(3, 4)) == "3/4");
    CHECK(io::emit_rat(Rat(-2)) == "-2");

    // Zero denominators and junk carry the JSON path of the bad value.
    std::string msg = thrown_message([] { io::parse_rat(ojson("1/0"), "$.c1[0]"); });
    CHECK(mentions(msg, "$.c1[0]"));
    CHECK_THROWS_AS({ io::parse_rat(ojson("x"), "$"); }, InputError);
    CHECK_THROWS_AS({ io::parse_rat(ojson(3.5), "$"); }, InputError);
}

TEST_CASE("point round trip and validation") {
    ProjPoint p = pt(0, 2, -4, 6);
    ojson j = io::emit_point(p);
    CHECK(j == ojson::array({"0", "1", "-2", "3"}));  // canonical form
    CHECK(io::parse_point(j, "$") == p);

    // Non-canonical rational input normalizes on parse.
    CHECK(io::parse_point(io::parse_json_text(R"(["1/2", "1", "0", "3/2"])"), "$") ==
          pt(1, 2, 0, 3));

    CHECK(mentions(thrown_message([] {
              io::parse_point(io::parse_json_text(R"(["0", "0", "0", "0"])"), "$.p");
          }),
          "$.p"));
    CHECK_THROWS_AS({ io::parse_point(io::parse_json_text(R"(["1", "2"])"), "$"); }, InputError);
}

TEST_CASE("line round trip via points and via Pluecker") {
    LineP3 l = LineP3::through(pt(1, 2, 3, 4), pt(0, 1, 1, 1));
    ojson j = io::emit_line(l);
    CHECK(io::parse_line(j, "$") == l);

    // Pluecker-only input rebuilds the same line.
    ojson plonly = ojson::object();
    plonly["pluecker"] = j["pluecker"];
    CHECK(io::parse_line(plonly, "$") == l);

    // A scaled, sign-flipped Pluecker vector still lands on the same line.
    ojson scaled = ojson::object();
    scaled["pluecker"] = ojson::array();
    for (const auto& entry : j["pluecker"])
        scaled["pluecker"].push_back(io::emit_rat(Rat(-3) * rat_parse(entry.get<std::string>())));
    CHECK(io::parse_line(scaled, "$") == l);

    // Mixed input must be consistent.
    ojson mixed = io::emit_line(l);
    mixed["pluecker"] = io::emit_line(LineP3::through(pt(1, 0, 0, 0), pt(0, 1, 0, 0)))["pluecker"];
    CHECK_THROWS_AS({ io::parse_line(mixed, "$"); }, InputError);

    // The quadratic relation is enforced.
    ojson bad = ojson::object();
    bad["pluecker"] = ojson::array({"1", "0", "0", "0", "0", "1"});
    CHECK(mentions(thrown_message([&] { io::parse_line(bad, "$.l"); }), "relation"));

    // Coincident points are malformed input, not a crash.
    ojson coincident = ojson::object();
    coincident["points"] = ojson::array({io::emit_point(pt(1, 1, 1, 1)), io::emit_point(pt(2, 2, 2, 2))});
    CHECK_THROWS_AS({ io::parse_line(coincident, "$"); }, InputError);

    CHECK_THROWS_AS({ io::parse_line(ojson::object(), "$"); }, InputError);
}

TEST_CASE("curve parsing: line, conic and raw forms") {
    LineP3 l = LineP3::through(pt(1, 1, 0, 0), pt(0, 0, 1, 1));
    ojson jl = ojson::object();
    jl["line"] = io::emit_line(l);
    ParamCurve cl = io::parse_curve(jl, "$");
    CHECK(cl.degree() == 1);
    CHECK(cl.forms() == ParamCurve::from_line(l).forms());

    ojson jc = io::parse_json_text(R"({"conic": {
        "through": ["0", "1", "1", "1"],
        "B": ["1", "1", "2", "3"],
        "C": ["1", "2", "1", "1"]}})");
    ParamCurve cc = io::parse_curve(jc, "$");
    CHECK(cc.degree() == 2);
    // Round trip through the forms representation.
    ParamCurve back = io::parse_curve(io::emit_curve(cc), "$");
    CHECK(back.forms() == cc.forms());

    // A collinear conic frame is rejected with the conic's path.
    ojson degenerate = io::parse_json_text(R"({"conic": {
        "through": ["1", "0", "0", "0"],
        "B": ["0", "1", "0", "0"],
        "C": ["1", "1", "0", "0"]}})");
    CHECK(mentions(thrown_message([&] { io::parse_curve(degenerate, "$.c2"); }), "$.c2.conic"));

    CHECK_THROWS_AS({ io::parse_curve(io::parse_json_text(R"({"x": 1})"), "$"); }, InputError);
}

TEST_CASE("polynomial round trip, accumulation, ordering") {
    Poly w = xv(0) * xv(3) - xv(1) * xv(2);
    ojson j = io::emit_poly(w);
    CHECK(io::parse_poly(j, "$") == w);
    CHECK(j["vars"] == 4);
    // Descending graded-reverse-lex order puts x1 x2 before x0 x3.
    CHECK(j["terms"][0]["exp"] == ojson::array({0, 1, 1, 0}));
    CHECK(j["terms"][0]["coef"] == "-1");
    CHECK(j["terms"][1]["exp"] == ojson::array({1, 0, 0, 1}));

    // Repeated exponents accumulate; zero coefficients vanish.
    Poly acc = io::parse_poly(io::parse_json_text(R"({"vars": 2, "terms": [
        {"exp": [1, 0], "coef": "2"},
        {"exp": [1, 0], "coef": "-1/2"},
        {"exp": [0, 1], "coef": "0"}]})"),
        "$");
    CHECK(acc == Poly::variable(2, 0) * Rat(3, 2));

    CHECK_THROWS_AS({
        io::parse_poly(io::parse_json_text(R"({"vars": 2, "terms": [{"exp": [1], "coef": "1"}]})"),
                       "$");
    }, InputError);
    CHECK(mentions(thrown_message([] {
              io::parse_poly(
                  io::parse_json_text(R"({"vars": 2, "terms": [{"exp": [1, -1], "coef": "1"}]})"),
                  "$.f");
          }),
          "$.f.terms[0].exp[1]"));
    CHECK_THROWS_AS({ io::parse_poly(io::parse_json_text(R"({"terms": []})"), "$"); }, InputError);
    CHECK(io::parse_poly(io::parse_json_text(R"({"vars": 3, "terms": []})"), "$").is_zero());
}

TEST_CASE("ideal round trip") {
    Ideal i(4, {xv(0) * xv(3) - xv(1) * xv(2), xv(0) * xv(0)});
    ojson j = io::emit_ideal(i);
    Ideal back = io::parse_ideal(j, "$");
    CHECK(back.nvars == 4);
    CHECK(back.gens == i.gens);

    ojson mismatch = io::parse_json_text(
        R"({"vars": 3, "generators": [{"vars": 2, "terms": [{"exp": [1, 0], "coef": "1"}]}]})");
    CHECK(mentions(thrown_message([&] { io::parse_ideal(mismatch, "$"); }), "generators[0]"));
}

TEST_CASE("quadric: three input routes, one canonical output") {
    Quadric q = Quadric::from_poly(xv(1) * xv(2) - xv(0) * xv(3));
    ojson j = io::emit_quadric(q);
    CHECK(io::parse_quadric(j, "$") == q);
    CHECK(j["display"] == q.poly().str());

    ojson viagram = ojson::object();
    viagram["gram"] = ojson::array();
    for (int r = 0; r < 4; ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < 4; ++c) row.push_back(io::emit_rat(q.gram().at(r, c)));
        viagram["gram"].push_back(row);
    }
    CHECK(io::parse_quadric(viagram, "$") == q);

    ojson viapoly = ojson::object();
    viapoly["poly"] = io::emit_poly(q.poly() * Rat(-6));  // any scale works
    CHECK(io::parse_quadric(viapoly, "$") == q);

    // Asymmetric Gram, wrong degree, and the zero vector are rejected.
    viagram["gram"][0][1] = "99";
    CHECK(mentions(thrown_message([&] { io::parse_quadric(viagram, "$"); }), "symmetric"));
    ojson cubic = ojson::object();
    cubic["poly"] = io::emit_poly(xv(0) * xv(0) * xv(0));
    CHECK_THROWS_AS({ io::parse_quadric(cubic, "$"); }, InputError);
    ojson zero = io::parse_json_text(
        R"({"coeffs": ["0","0","0","0","0","0","0","0","0","0"]})");
    CHECK_THROWS_AS({ io::parse_quadric(zero, "$"); }, InputError);
}

TEST_CASE("centers parsing") {
    std::array<ProjPoint, 4> cs = example_family_centers(Rat(2), Rat(3));
    ojson j = ojson::array();
    for (const ProjPoint& c : cs) j.push_back(io::emit_point(c));
    std::array<ProjPoint, 4> back = io::parse_centers(j, "$");
    CHECK(back == cs);
    j.erase(3);
    CHECK_THROWS_AS({ io::parse_centers(j, "$"); }, InputError);
}

TEST_CASE("result emitters: implicitization and SCL") {
    ParamCurve f = ParamCurve::from_line(LineP3::through(pt(1, 0, 1, 0), pt(0, 1, 0, 1)));
    ParamCurve g = ParamCurve::from_line(LineP3::through(pt(1, 1, 0, 0), pt(0, 0, 1, 1)));
    ImplicitResult r = implicitize(product_parametrization(f, g));
    ojson j = io::emit_implicit_result(r);
    CHECK(j["kind"] == "surface");
    CHECK(j["degree"] == 2);
    CHECK(j["jacobian_rank"] == 3);
    CHECK(io::parse_poly(j["equation"], "$") == *r.equation);
    CHECK(j["kernel_dims"].is_array());

    Quadric q = Quadric::from_poly(*r.equation);
    ojson s = io::emit_scl(scl(q));
    CHECK(s["all_sections_singular"] == true);
    REQUIRE(s.contains("centers"));
    CHECK(s["centers"].size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(s["sections"][i]["class"] == "reducible_conic");
    CHECK(s["centers_coplanar"].is_boolean());

    ojson fam = io::emit_family_check(family_check(q));
    CHECK(fam["smooth"] == true);
    CHECK(fam["adjugate_diagonal_zero"] == true);
    CHECK(fam["smooth_family_member"] == true);

    ojson m = io::emit_morphism(morphism_check(product_parametrization(f, g)));
    CHECK(m["is_morphism"] == true);
    CHECK_FALSE(m.contains("witness"));
}

TEST_CASE("result emitters: survey, chart analysis, Groebner basis") {
    ojson s = io::emit_survey(degeneracy_survey(5, 2, 42));
    CHECK(s["generic_samples"] == 5);
    CHECK(s["components"].size() == 14);
    CHECK(s["components"][0]["samples"] == 2);

    ChartAnalysis a = analyze_chart();
    ojson c = io::emit_chart_analysis(a);
    CHECK(c["dimension"] == 4);
    CHECK(c["oracle_dimension"] == 4);
    CHECK(c["reference_dimension"] == 3);
    CHECK(c["discrepancy_note"].is_string());
    CHECK(c["components"].size() == 5);
    CHECK(c["generators"].size() == 7);
    CHECK(c["generators_display"][3] == "u1*z1 - v2*w2");
    CHECK(c["components"][4]["zero_vars"] == ojson::array({"u2", "v1", "z2", "w1"}));
    // Deterministic bytes for identical inputs.
    CHECK(c.dump() == io::emit_chart_analysis(analyze_chart()).dump());

    Ideal i(4, {xv(0) * xv(1), xv(1) * xv(2) - xv(0) * xv(3)});
    GroebnerBasis gb = buchberger(i);
    ojson g = io::emit_gb(gb, ideal_dimension(i));
    CHECK(g["basis"].size() == gb.elems.size());
    CHECK(g["dimension"] == 2);
    CHECK(g["order"].is_string());
}
