#pragma once

#include <vector>

#include "hadstar/groebner.hpp"
#include "hadstar/polynomial.hpp"
#include "hadstar/projective.hpp"

namespace hadstar {

/// Plane curve cut out on a coordinate plane {x_plane = 0}.
struct SectionCurve {
    int plane = 0;
    /// The surface equation with x_plane set to zero, still in x0..x3.
    Poly embedded;
    /// The same curve written in the three remaining variables, in order.
    Poly form;
    int degree = 0;
};

/// Projective dimension of the singular locus of the surface {W = 0}: -1 for
/// a smooth surface, 0 for isolated singular points, 1 for a singular curve.
/// Computed as the affine dimension of the ideal of the four partial
/// derivatives, minus one.  Throws InputError unless W is nonzero,
/// homogeneous of degree >= 2, in 4 variables.
int singular_locus_dimension(const Poly& surface, const GbOptions& opts = {});

/// True exactly when the surface is a cone with vertex v, verified
/// symbolically: substituting x_i -> v_i s + x_i t must turn the equation
/// into t^deg times itself, which says every line from v through a surface
/// point stays inside the surface.
bool is_cone_with_vertex(const Poly& surface, const ProjPoint& v);

/// Section by {x_plane = 0}.  Throws DegenerateError when x_plane divides
/// the equation, i.e. the plane is a component of the surface.
SectionCurve section(const Poly& surface, int plane);

/// True when the section curve has a singular point over the complex
/// numbers, or is non-reduced: the three partial derivatives share a zero
/// other than the origin (affine dimension >= 1).  Degree-2 sections
/// shortcut through the 3x3 Gram determinant; lines are always smooth.
bool section_is_singular(const SectionCurve& c, const GbOptions& opts = {});

/// True when the whole line lies inside the surface: the equation pulled
/// back along the line's parametrization is the zero binary form.
bool line_in_surface(const Poly& surface, const LineP3& line);

/// Candidate cone vertices for a surface with known rational construction
/// points: the points themselves, the four coordinate points, and rational
/// points harvested from the linear forms in the Jacobian ideal's Groebner
/// basis (two independent linear forms cut out a candidate line, three a
/// single candidate point).  Deduplicated, deterministic order.
std::vector<ProjPoint> cone_vertex_candidates(const Poly& surface,
                                              const std::vector<ProjPoint>& construction_points,
                                              const GbOptions& opts = {});

}  // namespace hadstar
