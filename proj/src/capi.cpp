#include "hadstar.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "hadstar/errors.hpp"
#include "hadstar/fiber.hpp"
#include "hadstar/groebner.hpp"
#include "hadstar/identify.hpp"
#include "hadstar/io_json.hpp"
#include "hadstar/product.hpp"
#include "hadstar/quadric.hpp"
#include "hadstar/sampling.hpp"
#include "hadstar/surface.hpp"
#include "hadstar/verify.hpp"

using namespace hadstar;
using io::ojson;

struct hs_context {
    VerifyOptions vopts;  ///< seed, sample counts and Groebner limits
    int degree_cap = 0;   ///< implicitization degree cap; 0 = a-priori bound
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

/// Shared call wrapper: clears the error slot, runs the body, serializes the
/// response, and maps exceptions onto status codes.  The body fills the
/// response object and returns a status so hs_verify can report HS_E_VERIFY
/// while still writing its report.
template <typename Body>
hs_status run_call(hs_context* ctx, char** out_json, Body&& body) {
    if (!ctx) return HS_E_INPUT;
    ctx->last_error.clear();
    if (out_json) *out_json = nullptr;
    if (!out_json) {
        ctx->last_error = "out_json must not be null";
        return HS_E_INPUT;
    }
    try {
        ojson response = ojson::object();
        hs_status st = body(response);
        *out_json = dup_string(response.dump(2));
        return st;
    } catch (const InputError& e) {
        ctx->last_error = e.what();
        return HS_E_INPUT;
    } catch (const DegenerateError& e) {
        ctx->last_error = e.what();
        return HS_E_INPUT;
    } catch (const LimitError& e) {
        ctx->last_error = e.what();
        return HS_E_LIMIT;
    } catch (const ReconstructError& e) {
        ctx->last_error = e.what();
        return HS_E_VERIFY;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return HS_E_INTERNAL;
    }
}

std::string text_of(const char* s, hs_context* ctx) {
    if (!s) throw InputError("request JSON must not be null");
    (void)ctx;
    return std::string(s);
}

GbOptions gb_opts(const hs_context* ctx) { return ctx->vopts.gb; }

ImplicitizeOptions implicit_opts(const hs_context* ctx) {
    ImplicitizeOptions o;
    o.degree_cap = ctx->degree_cap;
    o.seed = ctx->vopts.seed;
    return o;
}

/// Unwraps {"key": inner} envelopes, so both {"quadric": {...}} and a bare
/// quadric object are accepted.
std::pair<const ojson*, std::string> unwrap(const ojson& j, const char* key) {
    if (j.is_object() && j.contains(key)) return {&j[key], std::string("$.") + key};
    return {&j, "$"};
}

Quadric parse_quadric_request(const char* request, hs_context* ctx) {
    ojson req = io::parse_json_text(text_of(request, ctx));
    auto [inner, path] = unwrap(req, "quadric");
    return io::parse_quadric(*inner, path);
}

}  // namespace

extern "C" {

hs_context* hs_context_new(void) { return new hs_context; }

void hs_context_free(hs_context* ctx) { delete ctx; }

void hs_context_set_seed(hs_context* ctx, uint64_t seed) {
    if (ctx) ctx->vopts.seed = seed;
}

void hs_context_set_samples(hs_context* ctx, int samples) {
    if (!ctx || samples <= 0) return;
    ctx->vopts.generic_pairs = samples;
    ctx->vopts.survey_generic = samples;
    ctx->vopts.survey_per_component = samples / 5 > 0 ? samples / 5 : 1;
    ctx->vopts.torus_samples = samples;
    ctx->vopts.family_samples = samples;
    ctx->vopts.oracle_pairs = samples;
}

void hs_context_set_gb_step_limit(hs_context* ctx, long limit) {
    if (ctx && limit > 0) ctx->vopts.gb.step_limit = limit;
}

void hs_context_set_degree_cap(hs_context* ctx, int cap) {
    if (ctx && cap >= 0) ctx->degree_cap = cap;
}

const char* hs_version(void) { return "1.0.0"; }

const char* hs_last_error(const hs_context* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

void hs_free_string(char* s) { std::free(s); }

hs_status hs_gb(hs_context* ctx, const char* request_json, char** out_json) {
    return run_call(ctx, out_json, [&](ojson& out) {
        ojson req = io::parse_json_text(text_of(request_json, ctx));
        auto [inner, path] = unwrap(req, "ideal");
        Ideal ideal = io::parse_ideal(*inner, path);
        GbOptions opts = gb_opts(ctx);
        if (req.is_object() && req.contains("elim")) {
            if (!req["elim"].is_number_integer())
                throw InputError("$.elim: expected an integer block size");
            int k = req["elim"].get<int>();
            if (k < 1 || k >= ideal.nvars)
                throw InputError("$.elim: block size must be between 1 and vars - 1");
            opts.order = MonomialOrder::block_elim(k);
        } else if (req.is_object() && req.contains("order")) {
            std::string name = req["order"].is_string() ? req["order"].get<std::string>() : "";
            if (name == "grevlex")
                opts.order = MonomialOrder::grevlex();
            else if (name == "lex")
                opts.order = MonomialOrder::lex();
            else
                throw InputError("$.order: expected \"grevlex\" or \"lex\"");
        }
        GroebnerBasis gb = buchberger(ideal, opts);
        GbOptions dim_opts = gb_opts(ctx);
        dim_opts.order = MonomialOrder::grevlex();
        out = io::emit_gb(gb, ideal_dimension(ideal, dim_opts));
        return HS_OK;
    });
}

hs_status hs_product(hs_context* ctx, const char* request_json, char** out_json) {
    return run_call(ctx, out_json, [&](ojson& out) {
        ojson req = io::parse_json_text(text_of(request_json, ctx));
        if (!req.is_object() || !req.contains("left") || !req.contains("right"))
            throw InputError("$: expected an object with \"left\" and \"right\" curves");
        ParamCurve f = io::parse_curve(req["left"], "$.left");
        ParamCurve g = io::parse_curve(req["right"], "$.right");
        ProductMap pm = product_parametrization(f, g);
        out["left"] = io::emit_curve(f);
        out["right"] = io::emit_curve(g);
        out["morphism"] = io::emit_morphism(morphism_check(pm));
        ImplicitResult r = implicitize(pm, implicit_opts(ctx));
        out["image"] = io::emit_implicit_result(r);
        if (r.kind == ImageKind::Surface && r.degree == 2 && r.equation) {
            Quadric q = Quadric::from_poly(*r.equation);
            out["quadric"] = io::emit_quadric(q);
            out["family_check"] = io::emit_family_check(family_check(q));
            out["scl"] = io::emit_scl(scl(q));
        }
        if (req.contains("oracle") && req["oracle"].is_boolean() && req["oracle"].get<bool>()) {
            Ideal oracle = implicit_ideal_via_elimination(pm, gb_opts(ctx));
            ojson oj = ojson::object();
            oj["generators"] = io::emit_ideal(oracle);
            bool matches = r.equation && oracle.gens.size() == 1 &&
                           oracle.gens[0].normalized() == r.equation->normalized();
            oj["matches_image"] = matches;
            out["oracle"] = std::move(oj);
            if (!matches) {
                ctx->last_error = "elimination oracle disagrees with the kernel method";
                return HS_E_VERIFY;
            }
        }
        return HS_OK;
    });
}

hs_status hs_analyze(hs_context* ctx, const char* quadric_json, char** out_json) {
    return run_call(ctx, out_json, [&](ojson& out) {
        Quadric q = parse_quadric_request(quadric_json, ctx);
        out["quadric"] = io::emit_quadric(q);
        out["rank"] = q.rank();
        ojson adj = ojson::array();
        for (const Rat& a : q.adjugate_diagonal()) adj.push_back(io::emit_rat(a));
        out["adjugate_diagonal"] = std::move(adj);
        out["family_check"] = io::emit_family_check(family_check(q));
        return HS_OK;
    });
}

hs_status hs_scl(hs_context* ctx, const char* quadric_json, char** out_json) {
    return run_call(ctx, out_json, [&](ojson& out) {
        Quadric q = parse_quadric_request(quadric_json, ctx);
        out["quadric"] = io::emit_quadric(q);
        out["scl"] = io::emit_scl(scl(q));
        return HS_OK;
    });
}

hs_status hs_reconstruct(hs_context* ctx, const char* centers_json, char** out_json) {
    return run_call(ctx, out_json, [&](ojson& out) {
        ojson req = io::parse_json_text(text_of(centers_json, ctx));
        auto [inner, path] = unwrap(req, "centers");
        std::array<ProjPoint, 4> centers = io::parse_centers(*inner, path);
        ojson cj = ojson::array();
        for (const ProjPoint& c : centers) cj.push_back(io::emit_point(c));
        out["centers"] = std::move(cj);
        out["system_rank"] = rank(build_system(centers));
        Quadric q = reconstruct(centers);
        out["quadric"] = io::emit_quadric(q);
        out["family_check"] = io::emit_family_check(family_check(q));
        return HS_OK;
    });
}

hs_status hs_survey(hs_context* ctx, char** out_json) {
    return run_call(ctx, out_json, [&](ojson& out) {
        out = io::emit_survey(degeneracy_survey(ctx->vopts.survey_generic,
                                                ctx->vopts.survey_per_component,
                                                ctx->vopts.seed));
        return HS_OK;
    });
}

hs_status hs_fiber(hs_context* ctx, char** out_json) {
    return run_call(ctx, out_json, [&](ojson& out) {
        out = io::emit_chart_analysis(analyze_chart(gb_opts(ctx)));
        // Orbit evidence: the surface-filling pair and all its diagonal
        // translates produce the reference quadric while staying outside the
        // chart, so the chart ideal cannot see them.
        Rng rng(ctx->vopts.seed);
        auto [l0, r0] = segre_pair();
        Poly x0 = Poly::variable(4, 0), x1 = Poly::variable(4, 1);
        Poly x2 = Poly::variable(4, 2), x3 = Poly::variable(4, 3);
        Poly target = (x0 * x3 - x1 * x2).normalized();
        const int n = ctx->vopts.torus_samples;
        int products_ok = 0, outside = 0;
        for (int i = 0; i < n; ++i) {
            DiagonalAuto psi = random_diagonal(rng);
            LineP3 tl = psi.act(l0), tr = psi.inverse().act(r0);
            if (!line_in_chart(tl)) ++outside;
            ImplicitResult r = implicitize(
                product_parametrization(ParamCurve::from_line(tl), ParamCurve::from_line(tr)),
                implicit_opts(ctx));
            if (r.equation && r.equation->normalized() == target) ++products_ok;
        }
        ojson orbit = ojson::object();
        orbit["samples"] = n;
        orbit["products_equal_reference_quadric"] = products_ok;
        orbit["translates_outside_chart"] = outside;
        out["torus_orbit_check"] = std::move(orbit);
        return HS_OK;
    });
}

hs_status hs_surface(hs_context* ctx, const char* request_json, char** out_json) {
    return run_call(ctx, out_json, [&](ojson& out) {
        ojson req = io::parse_json_text(text_of(request_json, ctx));
        if (!req.is_object() || !req.contains("equation"))
            throw InputError("$: expected an object with an \"equation\" polynomial");
        Poly w = io::parse_poly(req["equation"], "$.equation").normalized();
        out["equation"] = io::emit_poly(w);
        out["display"] = w.str();
        out["degree"] = w.degree();
        out["singular_locus_dimension"] = singular_locus_dimension(w, gb_opts(ctx));

        ojson sections = ojson::array();
        for (int i = 0; i < 4; ++i) {
            ojson sj = ojson::object();
            sj["plane"] = i;
            try {
                SectionCurve sc = section(w, i);
                sj["degree"] = sc.degree;
                sj["form"] = io::emit_poly(sc.form);
                sj["display"] = sc.form.str();
                sj["singular"] = section_is_singular(sc, gb_opts(ctx));
            } catch (const DegenerateError& e) {
                sj["plane_divides_surface"] = true;
                sj["note"] = e.what();
            }
            sections.push_back(std::move(sj));
        }
        out["sections"] = std::move(sections);

        if (req.contains("vertex")) {
            ProjPoint v = io::parse_point(req["vertex"], "$.vertex");
            ojson vj = ojson::object();
            vj["point"] = io::emit_point(v);
            vj["is_cone"] = is_cone_with_vertex(w, v);
            out["vertex_check"] = std::move(vj);
        }

        std::vector<ProjPoint> hints;
        if (req.contains("hints")) {
            if (!req["hints"].is_array()) throw InputError("$.hints: expected an array of points");
            for (size_t i = 0; i < req["hints"].size(); ++i)
                hints.push_back(io::parse_point(req["hints"][i],
                                                "$.hints[" + std::to_string(i) + "]"));
        }
        std::vector<ProjPoint> candidates = cone_vertex_candidates(w, hints, gb_opts(ctx));
        ojson vertices = ojson::array();
        for (const ProjPoint& v : candidates)
            if (is_cone_with_vertex(w, v)) vertices.push_back(io::emit_point(v));
        ojson cone = ojson::object();
        cone["candidates_tested"] = static_cast<int>(candidates.size());
        cone["vertices"] = std::move(vertices);
        out["cone"] = std::move(cone);
        return HS_OK;
    });
}

hs_status hs_verify(hs_context* ctx, const char* only, char** out_json) {
    return run_call(ctx, out_json, [&](ojson& out) {
        VerifyOptions opts = ctx->vopts;
        opts.only = only ? only : "";
        VerifyReport rep = run_verify(opts);
        out = verify_report_json(rep);
        if (rep.failed == 0) return HS_OK;
        std::string ids;
        for (const CheckResult& c : rep.checks)
            if (c.status == CheckStatus::Fail) ids += (ids.empty() ? "" : ", ") + c.id;
        ctx->last_error = std::to_string(rep.failed) + " check(s) failed: " + ids;
        return HS_E_VERIFY;
    });
}

}  // extern "C"
