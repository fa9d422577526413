#include "hadstar/surface.hpp"

#include <string>

#include "hadstar/errors.hpp"
#include "hadstar/matrix.hpp"

namespace hadstar {

namespace {

void require_surface_equation(const Poly& surface, int min_degree) {
    if (surface.nvars() != 4)
        throw InputError("surface equation must live in 4 variables, got " +
                         std::to_string(surface.nvars()));
    if (surface.is_zero()) throw InputError("surface equation is identically zero");
    if (!surface.is_homogeneous()) throw InputError("surface equation must be homogeneous");
    if (surface.degree() < min_degree)
        throw InputError("surface equation must have degree >= " + std::to_string(min_degree) +
                         ", got " + std::to_string(surface.degree()));
}

std::vector<Poly> partials(const Poly& p) {
    std::vector<Poly> out;
    out.reserve(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) out.push_back(p.derivative(i));
    return out;
}

}  // namespace

int singular_locus_dimension(const Poly& surface, const GbOptions& opts) {
    require_surface_equation(surface, 2);
    // The four partials all vanish at the affine origin, so the affine cone
    // over the singular locus is nonempty and its dimension exceeds the
    // projective dimension by exactly one (with dimension 0 <-> smooth).
    Ideal jac(4, partials(surface));
    return ideal_dimension(jac, opts) - 1;
}

bool is_cone_with_vertex(const Poly& surface, const ProjPoint& v) {
    require_surface_equation(surface, 1);
    const int d = surface.degree();
    // Work in Q[s, t, y0..y3]: vars 0,1 are the line parameters, 2..5 the
    // ambient coordinates.
    const int n = 6;
    Poly s = Poly::variable(n, 0);
    Poly t = Poly::variable(n, 1);
    std::vector<Poly> joined, ambient;
    for (int i = 0; i < 4; ++i) {
        Poly yi = Poly::variable(n, 2 + i);
        ambient.push_back(yi);
        joined.push_back(Poly::constant(n, v[static_cast<size_t>(i)]) * s + yi * t);
    }
    // v is a vertex exactly when W(s v + t y) = t^d W(y) as polynomials:
    // every line joining v to a point of the surface then lies on it.
    return surface.compose(joined) == t.pow(d) * surface.compose(ambient);
}

SectionCurve section(const Poly& surface, int plane) {
    require_surface_equation(surface, 1);
    if (plane < 0 || plane > 3)
        throw InputError("section plane index must be 0..3, got " + std::to_string(plane));
    SectionCurve out;
    out.plane = plane;
    out.embedded = surface.set_zero({plane});
    if (out.embedded.is_zero())
        throw DegenerateError("coordinate plane x" + std::to_string(plane) +
                              " = 0 is a component of the surface; the section is not a curve");
    out.form = out.embedded.drop_vars({plane});
    out.degree = out.embedded.degree();
    if (out.degree != surface.degree())
        throw InternalError("section of a homogeneous form changed its degree");
    return out;
}

bool section_is_singular(const SectionCurve& c, const GbOptions& opts) {
    if (c.form.nvars() != 3) throw InputError("section curve must live in 3 variables");
    if (c.form.is_zero()) throw InputError("section curve equation is identically zero");
    const int d = c.form.degree();
    if (d == 1) return false;  // a line is smooth
    if (d == 2) {
        // Conic: singular iff the symmetric 3x3 Gram matrix is singular.
        Mat g(3, 3);
        for (int i = 0; i < 3; ++i) {
            for (int j = i; j < 3; ++j) {
                Exp e(3, 0);
                e[static_cast<size_t>(i)] += 1;
                e[static_cast<size_t>(j)] += 1;
                Rat cij = c.form.coeff(e);
                if (i == j) {
                    g.at(i, i) = cij;
                } else {
                    g.at(i, j) = cij / Rat(2);
                    g.at(j, i) = cij / Rat(2);
                }
            }
        }
        return det_bareiss(g) == Rat(0);
    }
    // Higher degree (or a non-reduced curve): singular over the complex
    // numbers iff the three partials share a zero beyond the origin, i.e.
    // the affine dimension of their ideal is at least 1.
    Ideal jac(3, partials(c.form));
    return ideal_dimension(jac, opts) >= 1;
}

bool line_in_surface(const Poly& surface, const LineP3& line) {
    require_surface_equation(surface, 1);
    return surface.compose(ParamCurve::from_line(line).forms()).is_zero();
}

std::vector<ProjPoint> cone_vertex_candidates(const Poly& surface,
                                              const std::vector<ProjPoint>& construction_points,
                                              const GbOptions& opts) {
    require_surface_equation(surface, 2);
    std::vector<ProjPoint> out;
    auto push = [&out](const ProjPoint& p) {
        for (const ProjPoint& q : out)
            if (q == p) return;
        out.push_back(p);
    };
    for (const ProjPoint& p : construction_points) push(p);
    for (int i = 0; i < 4; ++i) {
        std::vector<Rat> e(4, Rat(0));
        e[static_cast<size_t>(i)] = Rat(1);
        push(ProjPoint(e));
    }
    // Rational points cut out by the linear part of the Jacobian ideal's
    // Groebner basis: a vertex is always a singular point, and for the
    // surfaces this toolkit builds the singular locus is low-degree enough
    // that linear basis elements usually pin it down.
    GroebnerBasis gb = buchberger(Ideal(4, partials(surface)), opts);
    std::vector<Poly> linears;
    for (const Poly& g : gb.elems)
        if (g.degree() == 1) linears.push_back(g);
    if (!linears.empty()) {
        Mat m(static_cast<int>(linears.size()), 4);
        for (int r = 0; r < static_cast<int>(linears.size()); ++r) {
            for (int j = 0; j < 4; ++j) {
                Exp e(4, 0);
                e[static_cast<size_t>(j)] = 1;
                m.at(r, j) = linears[static_cast<size_t>(r)].coeff(e);
            }
        }
        std::vector<std::vector<Rat>> kb = kernel_basis(m);
        auto combo = [](const std::vector<Rat>& a, const std::vector<Rat>& b, const Rat& ca,
                        const Rat& cb) {
            std::vector<Rat> v(4);
            for (size_t i = 0; i < 4; ++i) v[i] = ca * a[i] + cb * b[i];
            return v;
        };
        for (const auto& b : kb) push(ProjPoint(b));
        // When the common zero set is a line (or bigger), sample a few more
        // rational points of it so the exact cone test gets a fair shot.
        for (size_t i = 0; i + 1 < kb.size(); ++i) {
            push(ProjPoint(combo(kb[i], kb[i + 1], Rat(1), Rat(1))));
            push(ProjPoint(combo(kb[i], kb[i + 1], Rat(1), Rat(-1))));
            push(ProjPoint(combo(kb[i], kb[i + 1], Rat(1), Rat(2))));
        }
    }
    return out;
}

}  // namespace hadstar
