#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadstar/matrix.hpp"
#include "hadstar/polynomial.hpp"
#include "hadstar/projective.hpp"
#include "hadstar/quadric.hpp"

namespace hadstar {

/// Chart for lines meeting no coordinate vertex pair: the span of
/// p0 = (0 : 1 : a1 : a2) and p1 = (1 : 0 : a3 : a4).
struct ChartLine {
    Rat a1, a2, a3, a4;
};

LineP3 line_from_chart(const ChartLine& c);

/// The four intersection points p_i of the chart line with the coordinate
/// planes {x_i = 0}, as raw coordinate vectors:
///   p0 = (0, 1, a1, a2)                     p1 = (1, 0, a3, a4)
///   p2 = (-a1, a3, 0, a2 a3 - a1 a4)        p3 = (-a2, a4, a1 a4 - a2 a3, 0)
/// For special parameter values a vector may vanish, which is why this
/// returns raw vectors instead of projective points.
std::array<std::vector<Rat>, 4> plane_points_from_chart(const ChartLine& c);

/// Coordinate-wise products O_i = p_i * q_i of the plane points of two chart
/// lines (raw vectors, same caveat as above).
std::array<std::vector<Rat>, 4> center_vectors_from_charts(const ChartLine& l, const ChartLine& m);

/// The 12x10 linear system expressing that the section of a quadric by the
/// plane {x_i = 0} is singular at O_i: one row per pair (i, j != i), listing
/// the partial derivative of each basis monomial by x_j evaluated at O_i.
/// Throws InputError unless each center lies on its own coordinate plane.
Mat build_system(const std::array<ProjPoint, 4>& centers);

/// Same matrix without any validation; zero vectors give zero rows.
Mat build_system_raw(const std::array<std::vector<Rat>, 4>& centers);

/// The unique quadric whose coordinate-plane sections are singular at the
/// given centers.  Throws ReconstructError (kind Inconsistent) when no
/// quadric fits, and (kind Degenerate) when a whole positive-dimensional
/// family does.
Quadric reconstruct(const std::array<ProjPoint, 4>& centers);

/// A two-parameter family of center quadruples realized by the chart lines
/// (1, 1, a, b) and (1, 2, 1, 1):
///   O0 = (0 : 1 : 1 : 2),  O1 = (1 : 0 : a : b),
///   O2 = (1 : a : 0 : a - b),  O3 = (2 : b : a - b : 0).
std::array<ProjPoint, 4> example_family_centers(const Rat& a, const Rat& b);

/// Same family with the third coordinate of O3 negated: O3 = (2 : b : b - a : 0).
std::array<ProjPoint, 4> example_family_centers_variant(const Rat& a, const Rat& b);

/// det of the 4x4 matrix stacking the family centers as rows, expanded
/// symbolically in the ring (a, b).  The plain family gives (a - 2b)^2; the
/// variant gives a (3a - 2b).
Poly example_center_det(bool variant);

/// Rank statistics of the reconstruction system over random chart-line
/// pairs.  Generic parameter draws should give rank exactly 9 (one quadric
/// in the kernel); on each listed degeneracy component the rank falls to 8
/// or below; the rank never exceeds 9.
struct ComponentReport {
    std::vector<std::string> vanishing;  // chart coordinates set to zero
    int samples = 0;
    int max_rank = 0;
    bool all_rank_le_8 = false;
};

struct SurveyResult {
    int generic_samples = 0;
    int generic_rank_min = 0;
    int generic_rank_max = 0;
    bool generic_all_rank_9 = false;
    bool never_exceeds_9 = false;
    /// All 10x10 minors vanish on the first generic samples (an independent
    /// certificate that the rank stays below 10 there).
    bool minor_cross_check = false;
    std::vector<ComponentReport> components;
};

/// Draws chart coordinates from [-50, 50] \ {0} (a sample lands on a proper
/// closed subvariety only if every defining minor, of degree at most 40,
/// vanishes on it; each has at most a 0.4 chance per uniform draw by the
/// usual degree bound, so false "generic" degenerations are vanishingly
/// rare and would only flip the reported flags, never the exact ranks).
SurveyResult degeneracy_survey(int generic_samples, int per_component, std::uint64_t seed);

}  // namespace hadstar
