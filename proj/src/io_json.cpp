#include "hadstar/io_json.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "hadstar/errors.hpp"
#include "hadstar/matrix.hpp"

namespace hadstar::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw InputError(path + ": " + msg);
}

std::string idx(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string key(const std::string& path, const std::string& k) { return path + "." + k; }

const ojson& need_key(const ojson& j, const std::string& path, const std::string& k) {
    if (!j.is_object()) fail(path, "expected a JSON object");
    auto it = j.find(k);
    if (it == j.end()) fail(path, "missing key \"" + k + "\"");
    return *it;
}

long need_int(const ojson& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
}

const ojson& need_array(const ojson& j, const std::string& path, size_t count = 0,
                        bool exact = false) {
    if (!j.is_array()) fail(path, "expected a JSON array");
    if (exact && j.size() != count)
        fail(path, "expected exactly " + std::to_string(count) + " entries, got " +
                       std::to_string(j.size()));
    return j;
}

/// Converts math-layer validation errors into path-annotated input errors.
template <typename F>
auto rewrap(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const InternalError&) {
        throw;
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

std::vector<Rat> parse_rat_vector(const ojson& j, const std::string& path, size_t count) {
    need_array(j, path, count, true);
    std::vector<Rat> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(parse_rat(j[i], idx(path, i)));
    return out;
}

ojson emit_rat_vector(const std::vector<Rat>& v) {
    ojson out = ojson::array();
    for (const Rat& r : v) out.push_back(emit_rat(r));
    return out;
}

const char* section_class_name(SectionClass c) {
    switch (c) {
        case SectionClass::SmoothConic: return "smooth_conic";
        case SectionClass::ReducibleConic: return "reducible_conic";
        case SectionClass::DoubleLine: return "double_line";
        case SectionClass::Zero: return "zero";
    }
    throw InternalError("unhandled section class");
}

const char* image_kind_name(ImageKind k) {
    switch (k) {
        case ImageKind::Point: return "point";
        case ImageKind::Curve: return "curve";
        case ImageKind::Plane: return "plane";
        case ImageKind::Surface: return "surface";
    }
    throw InternalError("unhandled image kind");
}

ojson emit_mat(const Mat& m) {
    ojson out = ojson::array();
    for (int r = 0; r < m.rows(); ++r) out.push_back(emit_rat_vector(m.row(r)));
    return out;
}

}  // namespace

ojson parse_json_text(const std::string& text, const std::string& where) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) fail(where, "invalid JSON");
    return j;
}

Rat parse_rat(const ojson& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) fail(path, "expected a rational as \"p/q\" string or integer");
    return rat_parse(j.get<std::string>(), path);
}

std::string emit_rat(const Rat& r) { return rat_str(r); }

ProjPoint parse_point(const ojson& j, const std::string& path) {
    std::vector<Rat> c = parse_rat_vector(j, path, 4);
    return rewrap(path, [&] { return ProjPoint(c); });
}

ojson emit_point(const ProjPoint& p) { return emit_rat_vector(p.coords()); }

LineP3 parse_line(const ojson& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a line object with \"points\" or \"pluecker\"");
    const bool has_points = j.contains("points");
    const bool has_pl = j.contains("pluecker");
    if (!has_points && !has_pl) fail(path, "expected a \"points\" or \"pluecker\" key");

    std::optional<LineP3> from_points;
    if (has_points) {
        const ojson& pts = need_array(j["points"], key(path, "points"), 2, true);
        ProjPoint a = parse_point(pts[0], idx(key(path, "points"), 0));
        ProjPoint b = parse_point(pts[1], idx(key(path, "points"), 1));
        from_points = rewrap(key(path, "points"), [&] { return LineP3::through(a, b); });
    }

    std::optional<LineP3> from_pl;
    if (has_pl) {
        const std::string ppath = key(path, "pluecker");
        std::vector<Rat> raw = parse_rat_vector(j["pluecker"], ppath, 6);
        std::array<Rat, 6> pl;
        std::copy(raw.begin(), raw.end(), pl.begin());
        bool all_zero = true;
        for (const Rat& r : pl) all_zero = all_zero && r == 0;
        if (all_zero) fail(ppath, "Pluecker vector must be nonzero");
        if (pluecker_relation(pl) != 0)
            fail(ppath, "Pluecker vector violates the quadratic relation");
        // The antisymmetric matrix of a decomposable vector has rank 2 and
        // its column space is the line; pick two independent columns.
        Mat m(4, 4);
        int pos = 0;
        for (int r = 0; r < 4; ++r)
            for (int c = r + 1; c < 4; ++c) {
                m.at(r, c) = pl[static_cast<size_t>(pos)];
                m.at(c, r) = -pl[static_cast<size_t>(pos)];
                ++pos;
            }
        std::vector<std::vector<Rat>> span;
        Mat probe(4, 0);
        for (int c = 0; c < 4 && span.size() < 2; ++c) {
            std::vector<Rat> col(4);
            for (int r = 0; r < 4; ++r) col[static_cast<size_t>(r)] = m.at(r, c);
            Mat widened(4, static_cast<int>(span.size()) + 1);
            for (size_t s = 0; s < span.size(); ++s)
                for (int r = 0; r < 4; ++r) widened.at(r, static_cast<int>(s)) = span[s][static_cast<size_t>(r)];
            for (int r = 0; r < 4; ++r) widened.at(r, static_cast<int>(span.size())) = col[static_cast<size_t>(r)];
            if (rank(widened) == static_cast<int>(span.size()) + 1) span.push_back(col);
        }
        if (span.size() != 2) fail(ppath, "Pluecker vector does not describe a line");
        LineP3 line = rewrap(ppath, [&] {
            return LineP3::through(ProjPoint(span[0]), ProjPoint(span[1]));
        });
        std::vector<Rat> prim(pl.begin(), pl.end());
        make_primitive(prim);
        for (size_t i = 0; i < 6; ++i)
            if (prim[i] != line.pluecker()[i])
                throw InternalError("Pluecker round-trip mismatch while parsing a line");
        from_pl = line;
    }

    if (from_points && from_pl && !(*from_points == *from_pl))
        fail(path, "\"points\" and \"pluecker\" describe different lines");
    return from_points ? *from_points : *from_pl;
}

ojson emit_line(const LineP3& l) {
    ojson out = ojson::object();
    out["points"] = ojson::array({emit_point(l.a()), emit_point(l.b())});
    std::vector<Rat> pl(l.pluecker().begin(), l.pluecker().end());
    out["pluecker"] = emit_rat_vector(pl);
    return out;
}

ParamCurve parse_curve(const ojson& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a curve object (\"line\", \"conic\" or \"forms\")");
    if (j.contains("line")) {
        LineP3 l = parse_line(j["line"], key(path, "line"));
        return ParamCurve::from_line(l);
    }
    if (j.contains("conic")) {
        const std::string cpath = key(path, "conic");
        const ojson& c = j["conic"];
        ProjPoint a = parse_point(need_key(c, cpath, "through"), key(cpath, "through"));
        ProjPoint b = parse_point(need_key(c, cpath, "B"), key(cpath, "B"));
        ProjPoint cc = parse_point(need_key(c, cpath, "C"), key(cpath, "C"));
        return rewrap(cpath, [&] { return ParamCurve::conic_through(a, b, cc); });
    }
    if (j.contains("forms")) {
        const std::string fpath = key(path, "forms");
        const ojson& fs = need_array(j["forms"], fpath, 4, true);
        std::vector<Poly> forms;
        for (size_t i = 0; i < 4; ++i) forms.push_back(parse_poly(fs[i], idx(fpath, i)));
        return rewrap(fpath, [&] { return ParamCurve(forms); });
    }
    fail(path, "expected a \"line\", \"conic\" or \"forms\" key");
}

ojson emit_curve(const ParamCurve& c) {
    ojson out = ojson::object();
    out["degree"] = c.degree();
    ojson fs = ojson::array();
    for (const Poly& f : c.forms()) fs.push_back(emit_poly(f));
    out["forms"] = std::move(fs);
    return out;
}

Poly parse_poly(const ojson& j, const std::string& path) {
    long vars = need_int(need_key(j, path, "vars"), key(path, "vars"));
    if (vars < 1 || vars > 64) fail(key(path, "vars"), "variable count must be in 1..64");
    Poly p(static_cast<int>(vars));
    const std::string tpath = key(path, "terms");
    const ojson& terms = need_array(need_key(j, path, "terms"), tpath);
    for (size_t t = 0; t < terms.size(); ++t) {
        const std::string tp = idx(tpath, t);
        const ojson& ej = need_key(terms[t], tp, "exp");
        need_array(ej, key(tp, "exp"), static_cast<size_t>(vars), true);
        Exp e;
        for (size_t i = 0; i < ej.size(); ++i) {
            long v = need_int(ej[i], idx(key(tp, "exp"), i));
            if (v < 0) fail(idx(key(tp, "exp"), i), "exponent must be nonnegative");
            e.push_back(static_cast<int>(v));
        }
        Rat c = parse_rat(need_key(terms[t], tp, "coef"), key(tp, "coef"));
        p.add_term(e, c);
    }
    return p;
}

ojson emit_poly(const Poly& p) {
    ojson out = ojson::object();
    out["vars"] = p.nvars();
    std::vector<std::pair<Exp, Rat>> terms(p.terms().begin(), p.terms().end());
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(terms.begin(), terms.end(),
              [&ord](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
    ojson ts = ojson::array();
    for (const auto& [e, c] : terms) {
        ojson t = ojson::object();
        t["exp"] = e;
        t["coef"] = emit_rat(c);
        ts.push_back(std::move(t));
    }
    out["terms"] = std::move(ts);
    return out;
}

Ideal parse_ideal(const ojson& j, const std::string& path) {
    long vars = need_int(need_key(j, path, "vars"), key(path, "vars"));
    if (vars < 1 || vars > 64) fail(key(path, "vars"), "variable count must be in 1..64");
    const std::string gpath = key(path, "generators");
    const ojson& gens = need_array(need_key(j, path, "generators"), gpath);
    std::vector<Poly> gs;
    for (size_t i = 0; i < gens.size(); ++i) {
        Poly g = parse_poly(gens[i], idx(gpath, i));
        if (g.nvars() != vars)
            fail(idx(gpath, i), "generator ring has " + std::to_string(g.nvars()) +
                                    " variables, ideal declares " + std::to_string(vars));
        gs.push_back(std::move(g));
    }
    return Ideal(static_cast<int>(vars), std::move(gs));
}

ojson emit_ideal(const Ideal& i) {
    ojson out = ojson::object();
    out["vars"] = i.nvars;
    ojson gens = ojson::array();
    for (const Poly& g : i.gens) gens.push_back(emit_poly(g));
    out["generators"] = std::move(gens);
    return out;
}

Quadric parse_quadric(const ojson& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a quadric object (\"coeffs\", \"gram\" or \"poly\")");
    if (j.contains("coeffs")) {
        std::vector<Rat> c = parse_rat_vector(j["coeffs"], key(path, "coeffs"), 10);
        return rewrap(key(path, "coeffs"), [&] { return Quadric(c); });
    }
    if (j.contains("gram")) {
        const std::string gpath = key(path, "gram");
        need_array(j["gram"], gpath, 4, true);
        Mat g(4, 4);
        for (size_t r = 0; r < 4; ++r) {
            std::vector<Rat> row = parse_rat_vector(j["gram"][r], idx(gpath, r), 4);
            for (size_t c = 0; c < 4; ++c) g.at(static_cast<int>(r), static_cast<int>(c)) = row[c];
        }
        for (int r = 0; r < 4; ++r)
            for (int c = r + 1; c < 4; ++c)
                if (g.at(r, c) != g.at(c, r)) fail(gpath, "Gram matrix must be symmetric");
        return rewrap(gpath, [&] { return Quadric::from_gram(g); });
    }
    if (j.contains("poly")) {
        Poly p = parse_poly(j["poly"], key(path, "poly"));
        if (p.nvars() != 4) fail(key(path, "poly"), "quadric polynomial must have 4 variables");
        if (p.is_zero() || !p.is_homogeneous() || p.degree() != 2)
            fail(key(path, "poly"), "quadric polynomial must be homogeneous of degree 2");
        return rewrap(key(path, "poly"), [&] { return Quadric::from_poly(p); });
    }
    fail(path, "expected a \"coeffs\", \"gram\" or \"poly\" key");
}

ojson emit_quadric(const Quadric& q) {
    ojson out = ojson::object();
    out["coeffs"] = emit_rat_vector(q.coeffs());
    out["poly"] = emit_poly(q.poly());
    out["display"] = q.poly().str();
    return out;
}

std::array<ProjPoint, 4> parse_centers(const ojson& j, const std::string& path) {
    need_array(j, path, 4, true);
    return {parse_point(j[0], idx(path, 0)), parse_point(j[1], idx(path, 1)),
            parse_point(j[2], idx(path, 2)), parse_point(j[3], idx(path, 3))};
}

ojson emit_implicit_result(const ImplicitResult& r) {
    ojson out = ojson::object();
    out["kind"] = image_kind_name(r.kind);
    out["degree"] = r.degree;
    out["jacobian_rank"] = r.jacobian_rank;
    if (r.equation) {
        out["equation"] = emit_poly(*r.equation);
        out["display"] = r.equation->str();
    }
    if (r.point) out["point"] = emit_point(*r.point);
    ojson kd = ojson::array();
    for (const auto& [d, k] : r.kernel_dims) kd.push_back(ojson::array({d, k}));
    out["kernel_dims"] = std::move(kd);
    return out;
}

ojson emit_morphism(const MorphismResult& m) {
    ojson out = ojson::object();
    out["is_morphism"] = m.is_morphism;
    if (m.witness) {
        ojson w = ojson::object();
        w["left_zero_set"] = m.witness->left_zero_set;
        w["left_factor"] = emit_poly(m.witness->left_factor);
        w["right_factor"] = emit_poly(m.witness->right_factor);
        out["witness"] = std::move(w);
    }
    return out;
}

ojson emit_plane_section(const PlaneSection& s) {
    ojson out = ojson::object();
    out["plane"] = s.plane;
    out["rank"] = s.rank;
    out["class"] = section_class_name(s.cls);
    out["gram3"] = emit_mat(s.gram3);
    if (s.center) {
        out["center"] = emit_point(*s.center);
        out["center_display"] = s.center->str();
    }
    return out;
}

ojson emit_scl(const SclResult& s) {
    ojson out = ojson::object();
    ojson secs = ojson::array();
    for (const PlaneSection& ps : s.sections) secs.push_back(emit_plane_section(ps));
    out["sections"] = std::move(secs);
    out["all_sections_singular"] = s.all_sections_singular;
    if (s.centers) {
        ojson cs = ojson::array();
        for (const ProjPoint& c : *s.centers) cs.push_back(emit_point(c));
        out["centers"] = std::move(cs);
        out["centers_distinct"] = *s.centers_distinct;
        out["centers_off_other_planes"] = *s.centers_off_other_planes;
        out["centers_coplanar"] = *s.centers_coplanar;
        out["center_matrix_det"] = emit_rat(*s.center_matrix_det);
    }
    return out;
}

ojson emit_family_check(const FamilyCheck& f) {
    ojson out = ojson::object();
    out["smooth"] = f.smooth;
    out["tangent_to_plane"] =
        ojson::array({f.tangent_to_plane[0], f.tangent_to_plane[1], f.tangent_to_plane[2],
                      f.tangent_to_plane[3]});
    out["adjugate_diagonal_zero"] = f.adjugate_diagonal_zero;
    out["smooth_family_member"] = f.smooth_family_member;
    return out;
}

ojson emit_survey(const SurveyResult& s) {
    ojson out = ojson::object();
    out["generic_samples"] = s.generic_samples;
    out["generic_rank_min"] = s.generic_rank_min;
    out["generic_rank_max"] = s.generic_rank_max;
    out["generic_all_rank_9"] = s.generic_all_rank_9;
    out["never_exceeds_9"] = s.never_exceeds_9;
    out["minor_cross_check"] = s.minor_cross_check;
    ojson comps = ojson::array();
    for (const ComponentReport& c : s.components) {
        ojson cj = ojson::object();
        cj["vanishing"] = c.vanishing;
        cj["samples"] = c.samples;
        cj["max_rank"] = c.max_rank;
        cj["all_rank_le_8"] = c.all_rank_le_8;
        comps.push_back(std::move(cj));
    }
    out["components"] = std::move(comps);
    return out;
}

ojson emit_chart_component(const ChartComponent& c) {
    ojson out = ojson::object();
    ojson zv = ojson::array();
    for (int v : c.zero_vars) zv.push_back(chart_var_names()[static_cast<size_t>(v)]);
    out["zero_vars"] = std::move(zv);
    ojson ex = ojson::array();
    for (const Poly& p : c.extra) ex.push_back(emit_poly(p));
    out["extra"] = std::move(ex);
    out["dimension"] = c.dimension;
    out["label"] = c.label;
    out["left_line_in_coordinate_plane"] = c.left_line_in_coordinate_plane;
    out["right_line_in_coordinate_plane"] = c.right_line_in_coordinate_plane;
    out["sampled_product_span_rank"] = c.sampled_product_span_rank;
    return out;
}

ojson emit_chart_analysis(const ChartAnalysis& a) {
    ojson out = ojson::object();
    out["chart_variables"] = chart_var_names();
    ojson gens = ojson::array(), disp = ojson::array();
    for (const Poly& g : a.generators) {
        gens.push_back(emit_poly(g));
        disp.push_back(g.str(chart_var_names()));
    }
    out["generators"] = std::move(gens);
    out["generators_display"] = std::move(disp);
    out["dimension"] = a.dimension;
    out["oracle_dimension"] = a.oracle_dimension;
    out["reference_dimension"] = kChartReferenceDimension;
    if (a.dimension != kChartReferenceDimension) {
        out["discrepancy_note"] =
            std::string("computed dimension ") + std::to_string(a.dimension) +
            " (Groebner and component enumeration agree) differs from the reference figure " +
            std::to_string(kChartReferenceDimension) +
            "; every component of this chart locus yields products that degenerate to lines, "
            "and the known surface-filling pairs lie outside the chart";
    } else {
        out["discrepancy_note"] = nullptr;
    }
    ojson comps = ojson::array();
    for (const ChartComponent& c : a.components) comps.push_back(emit_chart_component(c));
    out["components"] = std::move(comps);
    ojson res = ojson::array(), resd = ojson::array();
    for (const Poly& p : a.left_segre_residual) {
        res.push_back(emit_poly(p));
        resd.push_back(p.str(chart_var_names()));
    }
    out["left_segre_residual"] = std::move(res);
    out["left_segre_residual_display"] = std::move(resd);
    return out;
}

ojson emit_gb(const GroebnerBasis& gb, int dimension) {
    ojson out = ojson::object();
    out["order"] = gb.order.describe();
    ojson basis = ojson::array(), disp = ojson::array();
    for (const Poly& g : gb.elems) {
        basis.push_back(emit_poly(g));
        disp.push_back(g.str());
    }
    out["basis"] = std::move(basis);
    out["basis_display"] = std::move(disp);
    out["dimension"] = dimension;
    out["reductions"] = gb.reductions;
    return out;
}

}  // namespace hadstar::io
