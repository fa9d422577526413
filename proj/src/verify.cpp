#include "hadstar/verify.hpp"

#include <chrono>
#include <functional>
#include <utility>

#include "hadstar/errors.hpp"
#include "hadstar/fiber.hpp"
#include "hadstar/identify.hpp"
#include "hadstar/product.hpp"
#include "hadstar/quadric.hpp"
#include "hadstar/sampling.hpp"
#include "hadstar/surface.hpp"

namespace hadstar {

namespace {

using io::ojson;

/// Stable per-check sub-seed: filtering with --only never changes the
/// fixtures another check draws.
std::uint64_t seed_for(std::uint64_t base, int index) {
    return base * 1000003ULL + static_cast<std::uint64_t>(index);
}

Poly xv(int i) { return Poly::variable(4, i); }

Poly segre_poly() { return xv(0) * xv(3) - xv(1) * xv(2); }

/// The smooth quadric frozen for the worked (a, b) = (2, 3) family instance.
Poly frozen_family_poly() {
    return Rat(9) * xv(0).pow(2) - Rat(12) * xv(0) * xv(1) - Rat(6) * xv(0) * xv(3) +
           Rat(3) * xv(1).pow(2) - Rat(6) * xv(1) * xv(2) - Rat(9) * xv(2).pow(2) +
           Rat(12) * xv(2) * xv(3) - Rat(3) * xv(3).pow(2);
}

ProductMap pair_product(const LineP3& l, const LineP3& r) {
    return product_parametrization(ParamCurve::from_line(l), ParamCurve::from_line(r));
}

ojson pair_json(const GenericLinePair& gp) {
    ojson j = ojson::object();
    j["left"] = io::emit_line(gp.left);
    j["right"] = io::emit_line(gp.right);
    j["rejected"] = gp.rejected;
    return j;
}

/// The shared fixture list for the smooth-product and round-trip checks;
/// both draw from the same sub-seed so they see identical pairs.
std::vector<GenericLinePair> draw_generic_pairs(const VerifyOptions& opts) {
    Rng rng(seed_for(opts.seed, 2));
    std::vector<GenericLinePair> out;
    out.reserve(static_cast<size_t>(opts.generic_pairs));
    for (int i = 0; i < opts.generic_pairs; ++i) out.push_back(random_generic_line_pair(rng));
    return out;
}

std::vector<Poly> partials4(const Poly& p) {
    std::vector<Poly> out;
    for (int i = 0; i < p.nvars(); ++i) out.push_back(p.derivative(i));
    return out;
}

// ---------------------------------------------------------------------------

void check_segre_product(CheckResult& c, const VerifyOptions& opts) {
    LineP3 left = LineP3::through(ProjPoint(Rat(1), Rat(0), Rat(1), Rat(0)),
                                  ProjPoint(Rat(0), Rat(1), Rat(0), Rat(1)));
    LineP3 right = LineP3::through(ProjPoint(Rat(1), Rat(1), Rat(0), Rat(0)),
                                   ProjPoint(Rat(0), Rat(0), Rat(1), Rat(1)));
    c.inputs["left"] = io::emit_line(left);
    c.inputs["right"] = io::emit_line(right);
    Poly target = segre_poly().normalized();
    c.reference["equation"] = io::emit_poly(target);
    c.reference["display"] = target.str();

    ProductMap pm = pair_product(left, right);
    ImplicitResult r = implicitize(pm);
    Ideal oracle = implicit_ideal_via_elimination(pm, opts.gb);

    bool kernel_ok = r.kind == ImageKind::Surface && r.degree == 2 && r.equation &&
                     r.equation->normalized() == target;
    bool oracle_ok = oracle.gens.size() == 1 && oracle.gens[0].normalized() == target;
    c.computed["kernel"] = io::emit_implicit_result(r);
    c.computed["elimination_generators"] = io::emit_ideal(oracle);
    c.computed["kernel_matches"] = kernel_ok;
    c.computed["elimination_matches"] = oracle_ok;
    c.status = kernel_ok && oracle_ok ? CheckStatus::Pass : CheckStatus::Fail;
}

void check_smooth_products(CheckResult& c, const VerifyOptions& opts) {
    std::vector<GenericLinePair> pairs = draw_generic_pairs(opts);
    c.inputs["seed"] = seed_for(opts.seed, 2);
    c.inputs["samples"] = static_cast<int>(pairs.size());
    ojson fixtures = ojson::array();
    for (const GenericLinePair& gp : pairs) fixtures.push_back(pair_json(gp));
    c.inputs["pairs"] = std::move(fixtures);
    c.reference["degree"] = 2;
    c.reference["adjugate_diagonal"] = ojson::array({"0", "0", "0", "0"});
    c.reference["smooth"] = true;

    int bad = -1;
    std::string why;
    for (size_t i = 0; i < pairs.size() && bad < 0; ++i) {
        ImplicitResult r = implicitize(pair_product(pairs[i].left, pairs[i].right));
        if (r.kind != ImageKind::Surface || r.degree != 2 || !r.equation) {
            bad = static_cast<int>(i);
            why = "product is not a degree-2 surface";
            break;
        }
        Quadric q = Quadric::from_poly(*r.equation);
        if (!q.is_smooth()) {
            bad = static_cast<int>(i);
            why = "product quadric is singular";
            break;
        }
        std::array<Rat, 4> ad = q.adjugate_diagonal();
        for (const Rat& a : ad)
            if (a != 0) {
                bad = static_cast<int>(i);
                why = "adjugate diagonal entry is nonzero";
            }
    }
    c.computed["checked"] = static_cast<int>(pairs.size());
    c.computed["all_smooth_degree_2_adjugate_zero"] = bad < 0;
    if (bad >= 0) {
        c.computed["first_failure_index"] = bad;
        c.computed["first_failure_reason"] = why;
    }
    c.status = bad < 0 ? CheckStatus::Pass : CheckStatus::Fail;
}

void check_family_codimension(CheckResult& c, const VerifyOptions&) {
    const std::vector<Exp> basis = monomials_of_degree(4, 2);
    auto cindex = [&basis](int i, int j) -> int {
        Exp e(4, 0);
        e[static_cast<size_t>(i)] += 1;
        e[static_cast<size_t>(j)] += 1;
        for (size_t k = 0; k < basis.size(); ++k)
            if (basis[k] == e) return static_cast<int>(k);
        throw InternalError("quadric coefficient basis lookup failed");
    };
    // Symbolic Gram matrix over the ten coefficient variables c0..c9.
    std::vector<std::vector<Poly>> g(4, std::vector<Poly>(4, Poly::zero(10)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            g[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                i == j ? Poly::variable(10, cindex(i, i))
                       : Poly::variable(10, cindex(std::min(i, j), std::max(i, j))) * Rat(1, 2);
    // Adjugate diagonal entry i = principal 3x3 minor omitting row/column i.
    std::vector<Poly> adj;
    for (int i = 0; i < 4; ++i) {
        std::vector<std::vector<Poly>> m;
        for (int r = 0; r < 4; ++r) {
            if (r == i) continue;
            std::vector<Poly> row;
            for (int cc = 0; cc < 4; ++cc)
                if (cc != i) row.push_back(g[static_cast<size_t>(r)][static_cast<size_t>(cc)]);
            m.push_back(std::move(row));
        }
        adj.push_back(poly_det(m));
    }
    // Coefficient point of the reference quadric x0 x3 - x1 x2.
    std::vector<Rat> cstar(10, Rat(0));
    cstar[static_cast<size_t>(cindex(0, 3))] = Rat(1);
    cstar[static_cast<size_t>(cindex(1, 2))] = Rat(-1);
    Mat jac(4, 10);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 10; ++k)
            jac.at(i, k) = adj[static_cast<size_t>(i)].derivative(k).evaluate(cstar);
    int rk = rank(jac);

    c.inputs["point"] = ojson::array();
    for (const Rat& v : cstar) c.inputs["point"].push_back(io::emit_rat(v));
    c.reference["jacobian_rank"] = 4;
    c.reference["family_projective_dimension"] = 5;
    c.computed["jacobian_rank"] = rk;
    c.computed["family_projective_dimension"] = 9 - rk;
    c.status = rk == 4 ? CheckStatus::Pass : CheckStatus::Fail;
    c.note = "the four diagonal forms cut the family out of the nine-dimensional space of "
             "quadrics with independent differentials at this point: 9 - 4 = 5";
}

void check_scl_round_trip(CheckResult& c, const VerifyOptions& opts) {
    std::vector<GenericLinePair> pairs = draw_generic_pairs(opts);
    c.inputs["seed"] = seed_for(opts.seed, 2);
    c.inputs["samples"] = static_cast<int>(pairs.size());
    c.inputs["pairs_as_in_smooth_products_check"] = true;
    c.reference["centers"] = 4;
    c.reference["system_rank"] = 9;
    c.reference["round_trip"] = true;

    int bad = -1;
    std::string why;
    for (size_t i = 0; i < pairs.size() && bad < 0; ++i) {
        ImplicitResult r = implicitize(pair_product(pairs[i].left, pairs[i].right));
        if (!r.equation) {
            bad = static_cast<int>(i);
            why = "no implicit equation";
            break;
        }
        Quadric q = Quadric::from_poly(*r.equation);
        SclResult s = scl(q);
        if (!s.centers || !*s.centers_distinct) {
            bad = static_cast<int>(i);
            why = "sections do not give four distinct centers";
            break;
        }
        if (rank(build_system(*s.centers)) != 9) {
            bad = static_cast<int>(i);
            why = "reconstruction system rank is not 9";
            break;
        }
        if (!(reconstruct(*s.centers) == q)) {
            bad = static_cast<int>(i);
            why = "reconstructed quadric differs";
        }
    }
    c.computed["checked"] = static_cast<int>(pairs.size());
    c.computed["all_round_trips_exact"] = bad < 0;
    if (bad >= 0) {
        c.computed["first_failure_index"] = bad;
        c.computed["first_failure_reason"] = why;
    }
    c.status = bad < 0 ? CheckStatus::Pass : CheckStatus::Fail;
}

void check_degeneracy_survey(CheckResult& c, const VerifyOptions& opts) {
    c.inputs["seed"] = seed_for(opts.seed, 5);
    c.inputs["generic_samples"] = opts.survey_generic;
    c.inputs["per_component"] = opts.survey_per_component;
    c.reference["never_exceeds_9"] = true;
    c.reference["generic_rank"] = 9;
    c.reference["component_rank_max"] = 8;

    SurveyResult s =
        degeneracy_survey(opts.survey_generic, opts.survey_per_component, seed_for(opts.seed, 5));
    bool comps_ok = s.components.size() == 14;
    int total = s.generic_samples;
    for (const ComponentReport& cr : s.components) {
        comps_ok = comps_ok && cr.all_rank_le_8;
        total += cr.samples;
    }
    bool ok = s.never_exceeds_9 && s.minor_cross_check && s.generic_all_rank_9 && comps_ok;
    c.computed = io::emit_survey(s);
    c.computed["total_draws"] = total;
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
}

void check_coplanar_family(CheckResult& c, const VerifyOptions&) {
    Poly a = Poly::variable(2, 0), b = Poly::variable(2, 1);
    Poly variant_target = Rat(3) * a * a - Rat(2) * a * b;  // a (3a - 2b)
    Poly plain_target = a * a - Rat(4) * a * b + Rat(4) * b * b;  // (a - 2b)^2
    Poly variant_det = example_center_det(true);
    Poly plain_det = example_center_det(false);
    Quadric rec = reconstruct(example_family_centers(Rat(2), Rat(3)));
    Quadric frozen = Quadric::from_poly(frozen_family_poly());

    c.reference["variant_det"] = "a*(3*a - 2*b) up to scale";
    c.reference["quadric"] = io::emit_quadric(frozen);
    c.computed["variant_det"] = variant_det.str({"a", "b"});
    c.computed["plain_det"] = plain_det.str({"a", "b"});
    c.computed["variant_matches"] = variant_det.proportional(variant_target);
    c.computed["plain_is_square"] = plain_det.proportional(plain_target);
    c.computed["variant_det_at_2_3"] = io::emit_rat(variant_det.evaluate({Rat(2), Rat(3)}));
    c.computed["plain_det_at_2_3"] = io::emit_rat(plain_det.evaluate({Rat(2), Rat(3)}));
    c.computed["reconstructed"] = io::emit_quadric(rec);
    bool ok = variant_det.proportional(variant_target) && plain_det.proportional(plain_target) &&
              rec == frozen;
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.note = "the determinant figure a(3a - 2b) belongs to the variant family with one center "
             "coordinate sign-flipped; the plain family gives (a - 2b)^2, which is 16 at "
             "(a, b) = (2, 3), so those centers are honestly non-coplanar";
}

void check_cone_example(CheckResult& c, const VerifyOptions& opts) {
    Rng rng(seed_for(opts.seed, 7));
    ProjPoint vertex(Rat(1), Rat(0), Rat(0), Rat(0));
    ProjPoint through(Rat(0), Rat(1), Rat(1), Rat(1));
    c.inputs["seed"] = seed_for(opts.seed, 7);
    c.reference["degree"] = 2;
    c.reference["gram_rank"] = 3;
    c.reference["cone_with_vertex"] = io::emit_point(vertex);

    int rejected = 0;
    for (int attempt = 0; attempt <= kSampleRetryLimit; ++attempt) {
        LineP3 line = random_line_through(rng, vertex);
        ParamCurve conic = random_conic_through(rng, through);
        ImplicitResult r;
        try {
            r = implicitize(product_parametrization(ParamCurve::from_line(line), conic));
        } catch (const DegenerateError&) {
            ++rejected;
            continue;
        }
        if (r.kind != ImageKind::Surface || r.degree != 2 || !r.equation) {
            ++rejected;  // degenerate draw (vertex inside the conic's plane, ...)
            continue;
        }
        Quadric q = Quadric::from_poly(*r.equation);
        bool cone = is_cone_with_vertex(*r.equation, vertex);
        c.inputs["line"] = io::emit_line(line);
        c.inputs["conic"] = io::emit_curve(conic);
        c.inputs["rejected_draws"] = rejected;
        c.computed["surface"] = io::emit_implicit_result(r);
        c.computed["gram_rank"] = q.rank();
        c.computed["is_cone_with_vertex"] = cone;
        c.status = q.rank() == 3 && cone ? CheckStatus::Pass : CheckStatus::Fail;
        return;
    }
    c.status = CheckStatus::Fail;
    c.note = "no degree-2 product found within the retry budget";
}

void check_cubic_example(CheckResult& c, const VerifyOptions& opts) {
    Rng rng(seed_for(opts.seed, 8));
    ProjPoint line_base(Rat(0), Rat(0), Rat(1), Rat(1));
    ProjPoint conic_base(Rat(1), Rat(1), Rat(0), Rat(0));
    c.inputs["seed"] = seed_for(opts.seed, 8);
    c.reference["degree"] = 3;
    c.reference["singular_locus_dimension"] = 1;
    c.reference["singular_sections"] = 4;
    c.reference["is_cone"] = false;

    int rejected = 0;
    for (int attempt = 0; attempt <= kSampleRetryLimit; ++attempt) {
        LineP3 line = random_line_through(rng, line_base);
        ParamCurve conic = random_conic_through(rng, conic_base);
        ImplicitResult r;
        try {
            r = implicitize(product_parametrization(ParamCurve::from_line(line), conic));
        } catch (const DegenerateError&) {
            ++rejected;
            continue;
        }
        if (r.kind != ImageKind::Surface || r.degree != 3 || !r.equation) {
            ++rejected;
            continue;
        }
        const Poly w = r.equation->normalized();
        c.inputs["line"] = io::emit_line(line);
        c.inputs["conic"] = io::emit_curve(conic);
        c.inputs["rejected_draws"] = rejected;
        c.computed["surface"] = io::emit_implicit_result(r);

        int sing_dim = singular_locus_dimension(w, opts.gb);
        int singular_sections = 0;
        for (int i = 0; i < 4; ++i)
            if (section_is_singular(section(w, i), opts.gb)) ++singular_sections;

        // Candidate vertices: construction points, their pairwise products,
        // coordinate points, and rational singular-locus points.
        std::vector<ProjPoint> construction{line.a(), line.b(), conic.evaluate(Rat(1), Rat(0)),
                                            conic.evaluate(Rat(0), Rat(1))};
        const size_t base_count = construction.size();
        for (size_t i = 0; i < base_count; ++i)
            for (size_t j = 0; j < base_count; ++j) {
                try {
                    construction.push_back(
                        hadamard_point(construction[i], construction[j]));
                } catch (const DegenerateError&) {
                }
            }
        std::vector<ProjPoint> candidates = cone_vertex_candidates(w, construction, opts.gb);
        int cone_hits = 0;
        for (const ProjPoint& v : candidates)
            if (is_cone_with_vertex(w, v)) ++cone_hits;

        c.computed["singular_locus_dimension"] = sing_dim;
        c.computed["singular_sections"] = singular_sections;
        c.computed["cone_candidates_tested"] = static_cast<int>(candidates.size());
        c.computed["cone_hits"] = cone_hits;
        c.status = sing_dim == 1 && singular_sections == 4 && cone_hits == 0
                       ? CheckStatus::Pass
                       : CheckStatus::Fail;
        return;
    }
    c.status = CheckStatus::Fail;
    c.note = "no degree-3 product found within the retry budget";
}

void check_torus_stabilizer(CheckResult& c, const VerifyOptions& opts) {
    Rng rng(seed_for(opts.seed, 9));
    c.inputs["seed"] = seed_for(opts.seed, 9);
    c.inputs["samples"] = opts.torus_samples;
    c.reference["translated_product_equals_original"] = true;

    ojson fixtures = ojson::array();
    int bad = -1;
    for (int i = 0; i < opts.torus_samples; ++i) {
        GenericLinePair gp = random_generic_line_pair(rng);
        DiagonalAuto psi = random_diagonal(rng);
        ojson f = pair_json(gp);
        ojson wj = ojson::array();
        for (const Rat& w : psi.weights()) wj.push_back(io::emit_rat(w));
        f["psi"] = std::move(wj);
        fixtures.push_back(std::move(f));
        if (bad >= 0) continue;

        ImplicitResult base = implicitize(pair_product(gp.left, gp.right));
        ImplicitResult moved =
            implicitize(pair_product(psi.act(gp.left), psi.inverse().act(gp.right)));
        bool same = base.equation && moved.equation && *base.equation == *moved.equation;
        if (!same) bad = i;
    }
    c.inputs["fixtures"] = std::move(fixtures);
    c.computed["checked"] = opts.torus_samples;
    c.computed["all_equal"] = bad < 0;
    if (bad >= 0) c.computed["first_failure_index"] = bad;
    c.status = bad < 0 ? CheckStatus::Pass : CheckStatus::Fail;
}

void check_star_family_plane(CheckResult& c, const VerifyOptions& opts) {
    Rng rng(seed_for(opts.seed, 10));
    c.inputs["seed"] = seed_for(opts.seed, 10);
    c.inputs["samples"] = opts.family_samples;
    c.inputs["valid_point_rule"] = "all four coordinates nonzero";
    c.reference["biquadratics"] = ojson::array({"0", "0", "0"});
    c.reference["image_kind"] = "plane";

    LineP3 line = [&rng] {
        for (int i = 0; i <= kSampleRetryLimit; ++i) {
            LineP3 l = random_line(rng);
            if (l.pluecker_all_nonzero()) return l;
        }
        throw LimitError("no generic base line found");
    }();
    c.inputs["line"] = io::emit_line(line);

    ojson points = ojson::array();
    int bad = -1;
    std::string why;
    for (int i = 0; i < opts.family_samples; ++i) {
        ProjPoint p = random_torus_point(rng);
        points.push_back(io::emit_point(p));
        if (bad >= 0) continue;
        StarImage si = point_star_line(p, line);
        if (si.kind != StarImage::Kind::Line) {
            bad = i;
            why = "translate collapsed to a point";
            continue;
        }
        std::array<Rat, 3> biq = hadamard_family_biquadratics(line, *si.line);
        if (biq[0] != 0 || biq[1] != 0 || biq[2] != 0) {
            bad = i;
            why = "a biquadratic is nonzero on the translate";
            continue;
        }
        ImplicitResult r = implicitize(pair_product(line, *si.line));
        if (r.kind != ImageKind::Plane || r.degree != 1) {
            bad = i;
            why = "product image is not a plane";
        }
    }
    c.inputs["points"] = std::move(points);
    c.computed["checked"] = opts.family_samples;
    c.computed["all_in_family_and_planar"] = bad < 0;
    if (bad >= 0) {
        c.computed["first_failure_index"] = bad;
        c.computed["first_failure_reason"] = why;
    }
    c.status = bad < 0 ? CheckStatus::Pass : CheckStatus::Fail;
}

void check_chart_reproduction(CheckResult& c, const VerifyOptions& opts) {
    ChartAnalysis a = analyze_chart(opts.gb);
    auto V = [](int v) { return Poly::variable(kChartVars, v); };
    std::vector<Poly> reference = {V(V1) * V(W1),
                                   V(V1) * V(W2),
                                   V(V2) * V(W1),
                                   (V(V2) * V(W2) - V(U2) * V(Z2)).normalized(),
                                   V(U1) * V(Z2),
                                   V(U2) * V(Z1),
                                   V(U2) * V(Z2)};
    ojson refj = ojson::array();
    for (const Poly& g : reference) refj.push_back(g.str(chart_var_names()));
    c.reference["generators"] = std::move(refj);
    c.reference["dimension"] = kChartReferenceDimension;

    std::vector<bool> used(reference.size(), false);
    std::vector<Poly> computed_only, reference_only;
    int matched = 0;
    for (const Poly& g : a.generators) {
        bool hit = false;
        for (size_t k = 0; k < reference.size(); ++k)
            if (!used[k] && reference[k] == g) {
                used[k] = true;
                ++matched;
                hit = true;
                break;
            }
        if (!hit) computed_only.push_back(g);
    }
    for (size_t k = 0; k < reference.size(); ++k)
        if (!used[k]) reference_only.push_back(reference[k]);

    // Orbit evidence: every diagonal translate of the surface-filling pair
    // keeps its product equal to the reference quadric while the translated
    // left line stays outside this chart.
    Rng rng(seed_for(opts.seed, 11));
    auto [l0, r0] = segre_pair();
    Poly target = segre_poly().normalized();
    int orbit_ok = 0, orbit_outside = 0;
    const int orbit_samples = opts.torus_samples;
    for (int i = 0; i < orbit_samples; ++i) {
        DiagonalAuto psi = random_diagonal(rng);
        LineP3 tl = psi.act(l0), tr = psi.inverse().act(r0);
        if (!line_in_chart(tl)) ++orbit_outside;
        ImplicitResult r = implicitize(pair_product(tl, tr));
        if (r.equation && r.equation->normalized() == target) ++orbit_ok;
    }
    c.inputs["seed"] = seed_for(opts.seed, 11);
    c.inputs["orbit_samples"] = orbit_samples;

    c.computed = io::emit_chart_analysis(a);
    c.computed["generator_matches"] = matched;
    ojson co = ojson::array(), ro = ojson::array();
    for (const Poly& g : computed_only) co.push_back(g.str(chart_var_names()));
    for (const Poly& g : reference_only) ro.push_back(g.str(chart_var_names()));
    c.computed["computed_only"] = std::move(co);
    c.computed["reference_only"] = std::move(ro);
    ojson orbit = ojson::object();
    orbit["samples"] = orbit_samples;
    orbit["products_equal_reference_quadric"] = orbit_ok;
    orbit["translates_outside_chart"] = orbit_outside;
    c.computed["torus_orbit_check"] = std::move(orbit);

    Poly expected_computed_only = (V(U1) * V(Z1) - V(V2) * V(W2)).normalized();
    Poly expected_reference_only = (V(U2) * V(Z2) - V(V2) * V(W2)).normalized();
    bool shape_ok = matched == 6 && computed_only.size() == 1 && reference_only.size() == 1 &&
                    computed_only[0] == expected_computed_only &&
                    reference_only[0] == expected_reference_only && a.dimension == 4 &&
                    a.oracle_dimension == 4 && a.components.size() == 5 &&
                    orbit_ok == orbit_samples && orbit_outside == orbit_samples;
    if (!shape_ok) {
        c.status = CheckStatus::Fail;
        return;
    }
    c.status = a.dimension == kChartReferenceDimension ? CheckStatus::Pass
                                                       : CheckStatus::DiscrepancyNoted;
    c.note = "six of seven generators match; the computed binomial u1*z1 - v2*w2 differs from "
             "the reference's u2*z2 - v2*w2, and the computed dimension 4 (Groebner and "
             "component enumeration agree) differs from the reference figure 3; every chart "
             "component produces degenerate line products, and the diagonal orbit of the "
             "surface-filling pair avoids the chart entirely";
}

void check_oracle_equivalence(CheckResult& c, const VerifyOptions& opts) {
    Rng rng(seed_for(opts.seed, 12));
    c.inputs["seed"] = seed_for(opts.seed, 12);
    c.inputs["samples"] = opts.oracle_pairs;
    c.reference["methods_agree"] = true;

    ojson fixtures = ojson::array();
    int bad = -1;
    for (int i = 0; i < opts.oracle_pairs; ++i) {
        GenericLinePair gp = random_generic_line_pair(rng);
        fixtures.push_back(pair_json(gp));
        if (bad >= 0) continue;
        ProductMap pm = pair_product(gp.left, gp.right);
        ImplicitResult r = implicitize(pm);
        Ideal oracle = implicit_ideal_via_elimination(pm, opts.gb);
        bool same = r.equation && oracle.gens.size() == 1 &&
                    oracle.gens[0].normalized() == r.equation->normalized();
        if (!same) bad = i;
    }
    c.inputs["pairs"] = std::move(fixtures);
    c.computed["checked"] = opts.oracle_pairs;
    c.computed["all_agree"] = bad < 0;
    if (bad >= 0) c.computed["first_failure_index"] = bad;
    c.status = bad < 0 ? CheckStatus::Pass : CheckStatus::Fail;
}

void check_scl_definition(CheckResult& c, const VerifyOptions&) {
    // Worked family instance: chart lines (1, 1, 2, 3) and (1, 2, 1, 1).
    ChartLine lchart{Rat(1), Rat(1), Rat(2), Rat(3)};
    ChartLine mchart{Rat(1), Rat(2), Rat(1), Rat(1)};
    Poly w = frozen_family_poly();
    Quadric q = Quadric::from_poly(w);
    std::array<ProjPoint, 4> centers = *scl(q).centers;

    c.inputs["left_chart"] = ojson::array({"1", "1", "2", "3"});
    c.inputs["right_chart"] = ojson::array({"1", "2", "1", "1"});
    c.inputs["quadric"] = io::emit_quadric(q);
    c.reference["per_plane_singular_points"] = 4;

    std::array<std::vector<Rat>, 4> pvecs = plane_points_from_chart(lchart);
    std::array<std::vector<Rat>, 4> qvecs = plane_points_from_chart(mchart);

    const Poly pi = xv(0) * xv(1) * xv(2) * xv(3);
    std::vector<Poly> wp = partials4(w), pip = partials4(pi);
    auto curve_jacobian_rank = [&](const ProjPoint& pt) {
        Mat m(2, 4);
        for (int j = 0; j < 4; ++j) {
            m.at(0, j) = wp[static_cast<size_t>(j)].evaluate(pt.coords());
            m.at(1, j) = pip[static_cast<size_t>(j)].evaluate(pt.coords());
        }
        return rank(m);
    };

    bool ok = true;
    std::vector<ProjPoint> union_points;
    ojson crossings = ojson::array();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            std::vector<Rat> cvec(4);
            for (size_t k = 0; k < 4; ++k) cvec[k] = pvecs[static_cast<size_t>(i)][k] * qvecs[static_cast<size_t>(j)][k];
            ProjPoint cp{cvec};
            union_points.push_back(cp);
            bool on_quadric = w.evaluate(cp.coords()) == 0;
            bool two_zero = cp.zero_count() >= 2;
            int jr = curve_jacobian_rank(cp);
            ok = ok && on_quadric && two_zero && jr <= 1;
            ojson cj = ojson::object();
            cj["planes"] = ojson::array({i, j});
            cj["point"] = io::emit_point(cp);
            cj["on_quadric"] = on_quadric;
            cj["zero_coordinates"] = cp.zero_count();
            cj["curve_jacobian_rank"] = jr;
            crossings.push_back(std::move(cj));
        }
    ojson centerj = ojson::array();
    for (const ProjPoint& o : centers) {
        union_points.push_back(o);
        int jr = curve_jacobian_rank(o);
        ok = ok && jr <= 1 && w.evaluate(o.coords()) == 0;
        ojson oj = ojson::object();
        oj["point"] = io::emit_point(o);
        oj["curve_jacobian_rank"] = jr;
        centerj.push_back(std::move(oj));
    }
    int distinct = 0;
    for (size_t i = 0; i < union_points.size(); ++i) {
        bool fresh = true;
        for (size_t j = 0; j < i; ++j) fresh = fresh && !(union_points[i] == union_points[j]);
        if (fresh) ++distinct;
    }

    c.computed["crossing_points"] = std::move(crossings);
    c.computed["section_centers"] = std::move(centerj);
    c.computed["per_plane_singular_points"] = 4;
    c.computed["union_reading_singular_points"] = distinct;
    c.status = ok ? CheckStatus::DiscrepancyNoted : CheckStatus::Fail;
    c.note = "reading the singular coordinate locus plane by plane gives exactly the four "
             "section centers; reading it as the singular locus of the union curve (quadric "
             "meets the union of the four planes) adds the pairwise products of points in "
             "different planes, each certified singular by a curve Jacobian of rank at most 1; "
             "the toolkit implements the per-plane reading";
}

struct CheckSpec {
    const char* id;
    const char* statement;
    double bound;
    std::function<void(CheckResult&, const VerifyOptions&)> body;
};

const std::vector<CheckSpec>& check_specs() {
    static const std::vector<CheckSpec> specs = {
        {"01-segre-product",
         "the product of the two standard ruling lines has equation x0 x3 - x1 x2 by both the "
         "kernel method and the elimination oracle",
         1.0, check_segre_product},
        {"02-smooth-products",
         "seeded generic line pairs give smooth degree-2 surfaces whose adjugate diagonal is "
         "exactly zero",
         60.0, check_smooth_products},
        {"03-family-codimension",
         "the four adjugate-diagonal forms have independent differentials (Jacobian rank 4) at "
         "the reference quadric's coefficient point",
         0.0, check_family_codimension},
        {"04-scl-round-trip",
         "every sampled product quadric has four distinct section centers, a rank-9 linear "
         "system, and reconstructs exactly",
         60.0, check_scl_round_trip},
        {"05-degeneracy-survey",
         "the reconstruction system never reaches rank 10, is rank 9 on generic draws, and rank "
         "at most 8 on all fourteen degeneracy components",
         0.0, check_degeneracy_survey},
        {"06-coplanar-family",
         "the sign-flipped center family has determinant proportional to a(3a - 2b), and the "
         "(2, 3) centers reconstruct the frozen quadric",
         0.0, check_coplanar_family},
        {"07-cone-example",
         "a line through a coordinate point times a conic through the complementary point gives "
         "a rank-3 quadric cone with that vertex",
         0.0, check_cone_example},
        {"08-cubic-example",
         "complementary touching points drop the product to a degree-3 surface, singular along "
         "a curve, with all sections singular and no cone vertex",
         120.0, check_cubic_example},
        {"09-torus-stabilizer",
         "rescaling the factors by a diagonal automorphism and its inverse leaves the product "
         "equation unchanged",
         0.0, check_torus_stabilizer},
        {"10-star-family-plane",
         "point-translates of a line satisfy the family biquadratics and their products with "
         "the line span only a plane",
         0.0, check_star_family_plane},
        {"11-chart-reproduction",
         "the chart ideal generators, components and dimension against the reference list, with "
         "diagonal-orbit evidence",
         0.0, check_chart_reproduction},
        {"12-oracle-equivalence",
         "kernel implicitization and Groebner elimination give the same equation on sampled "
         "pairs",
         0.0, check_oracle_equivalence},
        {"13-scl-definition",
         "per-plane singular points of the coordinate sections versus the singular locus of the "
         "full coordinate curve",
         0.0, check_scl_definition},
    };
    return specs;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::DiscrepancyNoted: return "discrepancy-noted";
    }
    throw InternalError("unhandled check status");
}

VerifyReport run_verify(const VerifyOptions& opts) {
    VerifyReport rep;
    rep.seed = opts.seed;
    for (const CheckSpec& spec : check_specs()) {
        if (!opts.only.empty() && std::string(spec.id).find(opts.only) == std::string::npos)
            continue;
        CheckResult c;
        c.id = spec.id;
        c.statement = spec.statement;
        c.time_bound = spec.bound;
        auto t0 = std::chrono::steady_clock::now();
        try {
            spec.body(c, opts);
        } catch (const Error& e) {
            c.status = CheckStatus::Fail;
            c.note = e.what();
            c.computed["error"] = e.what();
        } catch (const std::exception& e) {
            c.status = CheckStatus::Fail;
            c.note = std::string("unexpected exception: ") + e.what();
            c.computed["error"] = c.note;
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.status == CheckStatus::Pass && c.time_bound > 0 && c.seconds > c.time_bound) {
            c.status = CheckStatus::Fail;
            c.note = "time bound of " + std::to_string(c.time_bound) + " s exceeded";
        }
        switch (c.status) {
            case CheckStatus::Pass: ++rep.passed; break;
            case CheckStatus::Fail: ++rep.failed; break;
            case CheckStatus::DiscrepancyNoted: ++rep.discrepancies; break;
        }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

io::ojson verify_report_json(const VerifyReport& r) {
    ojson out = ojson::object();
    out["seed"] = r.seed;
    ojson checks = ojson::array();
    for (const CheckResult& c : r.checks) {
        ojson cj = ojson::object();
        cj["id"] = c.id;
        cj["statement"] = c.statement;
        cj["status"] = check_status_name(c.status);
        cj["inputs"] = c.inputs;
        cj["reference"] = c.reference;
        cj["computed"] = c.computed;
        if (!c.note.empty()) cj["note"] = c.note;
        checks.push_back(std::move(cj));
    }
    out["checks"] = std::move(checks);
    ojson summary = ojson::object();
    summary["passed"] = r.passed;
    summary["failed"] = r.failed;
    summary["discrepancy_noted"] = r.discrepancies;
    summary["ok"] = r.ok();
    out["summary"] = std::move(summary);
    return out;
}

}  // namespace hadstar
