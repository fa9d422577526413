#include "hadstar/product.hpp"

#include <random>

#include "hadstar/errors.hpp"
#include "hadstar/matrix.hpp"

namespace hadstar {

ProductMap product_parametrization(const ParamCurve& f, const ParamCurve& g) {
    Poly s = Poly::variable(4, 0), t = Poly::variable(4, 1);
    Poly u = Poly::variable(4, 2), v = Poly::variable(4, 3);
    std::vector<Poly> forms;
    bool any = false;
    for (size_t i = 0; i < 4; ++i) {
        Poly fi = f.forms()[i].compose({s, t});
        Poly gi = g.forms()[i].compose({u, v});
        forms.push_back(fi * gi);
        any = any || !forms.back().is_zero();
    }
    if (!any)
        throw DegenerateError(
            "product parametrization vanishes identically (complementary coordinate supports)");
    return {f, g, std::move(forms), {f.degree(), g.degree()}};
}

namespace {

/// Random parameter point with small nonzero entries.
std::vector<Rat> probe_point(std::mt19937_64& rng) {
    std::vector<Rat> p(4);
    for (auto& x : p) {
        long v = 1 + static_cast<long>(rng() % 9);
        if (rng() % 2) v = -v;
        x = v;
    }
    return p;
}

/// Generic rank of the 4x4 Jacobian of the coordinate forms over the
/// parameters, probed at a few random points (the maximum is kept, so a
/// probe that happens to land on a base point cannot overstate it).
int jacobian_rank_probe(const ProductMap& pm, std::uint64_t seed) {
    std::vector<std::vector<Poly>> partials(4);
    for (size_t i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) partials[i].push_back(pm.forms[i].derivative(j));
    std::mt19937_64 rng(seed);
    int best = 0;
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Rat> p = probe_point(rng);
        Mat jac(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                jac.at(i, j) = partials[static_cast<size_t>(i)][static_cast<size_t>(j)].evaluate(p);
        best = std::max(best, rank(jac));
    }
    return best;
}

/// Coefficient matrix of all pullbacks x^e -> prod F_i^{e_i} for |e| = d,
/// rows indexed by the bidegree-(d*d1, d*d2) monomials of the parameter ring.
Mat pullback_matrix(const ProductMap& pm, int d, const std::vector<Exp>& monos) {
    int rd1 = d * pm.bidegree[0], rd2 = d * pm.bidegree[1];
    std::vector<std::vector<Poly>> pow(4);
    for (size_t i = 0; i < 4; ++i) {
        pow[i].push_back(Poly::constant(4, 1));
        for (int k = 1; k <= d; ++k) pow[i].push_back(pow[i].back() * pm.forms[i]);
    }
    Mat m((rd1 + 1) * (rd2 + 1), static_cast<int>(monos.size()));
    for (size_t col = 0; col < monos.size(); ++col) {
        const Exp& e = monos[col];
        Poly p = pow[0][static_cast<size_t>(e[0])] * pow[1][static_cast<size_t>(e[1])] *
                 pow[2][static_cast<size_t>(e[2])] * pow[3][static_cast<size_t>(e[3])];
        for (const auto& [pe, c] : p.terms())
            m.at(pe[0] * (rd2 + 1) + pe[2], static_cast<int>(col)) = c;
    }
    return m;
}

ProjPoint image_point(const ProductMap& pm, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Rat> p = probe_point(rng);
        std::vector<Rat> val(4);
        bool any = false;
        for (size_t i = 0; i < 4; ++i) {
            val[i] = pm.forms[i].evaluate(p);
            any = any || val[i] != 0;
        }
        if (any) return ProjPoint(std::move(val));
    }
    throw InternalError("could not find a parameter point off the base locus");
}

}  // namespace

ImplicitResult implicitize(const ProductMap& pm, const ImplicitizeOptions& opts) {
    ImplicitResult res;
    res.jacobian_rank = jacobian_rank_probe(pm, opts.seed);
    if (res.jacobian_rank <= 1) {
        res.kind = ImageKind::Point;
        res.point = image_point(pm, opts.seed);
        return res;
    }
    if (res.jacobian_rank == 2) {
        res.kind = ImageKind::Curve;
        return res;
    }
    int cap = opts.degree_cap > 0 ? opts.degree_cap : 2 * pm.bidegree[0] * pm.bidegree[1];
    for (int d = 1; d <= cap; ++d) {
        std::vector<Exp> monos = monomials_of_degree(4, d);
        Mat m = pullback_matrix(pm, d, monos);
        std::vector<std::vector<Rat>> ker = kernel_basis(m);
        res.kernel_dims.emplace_back(d, static_cast<int>(ker.size()));
        if (ker.empty()) continue;
        if (ker.size() != 1)
            throw InternalError("hypersurface image should give a 1-dimensional kernel at degree " +
                                std::to_string(d) + ", got " + std::to_string(ker.size()));
        Poly eq(4);
        for (size_t k = 0; k < monos.size(); ++k) eq.add_term(monos[k], ker[0][k]);
        res.equation = eq.normalized();
        res.degree = d;
        res.kind = d == 1 ? ImageKind::Plane : ImageKind::Surface;
        return res;
    }
    throw LimitError("no implicit equation found up to degree " + std::to_string(cap) +
                     "; raise the cap to continue");
}

Ideal implicit_ideal_via_elimination(const ProductMap& pm, const GbOptions& opts) {
    // Ring (s, t, u, v, x0, x1, x2, x3); the graph ideal <x_i - F_i>.
    std::vector<Poly> params;
    for (int j = 0; j < 4; ++j) params.push_back(Poly::variable(8, j));
    std::vector<Poly> gens;
    for (size_t i = 0; i < 4; ++i)
        gens.push_back(Poly::variable(8, 4 + static_cast<int>(i)) - pm.forms[i].compose(params));
    return eliminate(Ideal(8, std::move(gens)), 4, opts);
}

namespace {

/// True when the listed binary forms have a common zero on P^1.  Zero forms
/// vanish everywhere, so they never constrain; an empty or all-zero list is
/// unconstrained.
bool forms_have_common_zero(const std::vector<Poly>& forms, Poly* factor) {
    std::vector<Poly> nz;
    for (const Poly& f : forms)
        if (!f.is_zero()) nz.push_back(f);
    if (nz.empty()) {
        *factor = Poly::zero(2);
        return true;
    }
    Poly g = binary_form_gcd(nz);
    *factor = g;
    return g.degree() > 0;
}

}  // namespace

MorphismResult morphism_check(const ProductMap& pm) {
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<Poly> left, right;
        std::vector<int> left_set;
        for (int i = 0; i < 4; ++i) {
            if (mask & (1 << i)) {
                left.push_back(pm.left.forms()[static_cast<size_t>(i)]);
                left_set.push_back(i);
            } else {
                right.push_back(pm.right.forms()[static_cast<size_t>(i)]);
            }
        }
        Poly lf(2), rf(2);
        if (forms_have_common_zero(left, &lf) && forms_have_common_zero(right, &rf))
            return {false, MorphismWitness{std::move(left_set), std::move(lf), std::move(rf)}};
    }
    return {true, std::nullopt};
}

Poly substitute_diagonal(const Poly& p, const DiagonalAuto& t) {
    std::vector<Poly> images;
    for (int i = 0; i < 4; ++i) images.push_back(Poly::variable(4, i) * t.weights()[static_cast<size_t>(i)]);
    return p.compose(images);
}

}  // namespace hadstar
