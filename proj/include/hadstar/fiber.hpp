#pragma once

#include <array>
#include <string>
#include <vector>

#include "hadstar/groebner.hpp"
#include "hadstar/polynomial.hpp"
#include "hadstar/projective.hpp"

namespace hadstar {

/// Chart for pairs of lines in which both lines admit the reduced row form
/// with pivots in the first two coordinates:
///   L = rowspan [1 0 u1 v1; 0 1 u2 v2],  M = rowspan [1 0 z1 w1; 0 1 z2 w2].
/// Points p = l1 (1,0,u1,v1) + l2 (0,1,u2,v2) and q = m1 (1,0,z1,w1) +
/// m2 (0,1,z2,w2) multiply coordinate-wise to
///   p * q = (l1 m1, l2 m2, (l1 u1 + l2 u2)(m1 z1 + m2 z2),
///            (l1 v1 + l2 v2)(m1 w1 + m2 w2)).
/// Asking that x0 x3 - x1 x2 vanish on every such product imposes one
/// condition per (l, m)-bidegree slot of the expansion: nine coefficient
/// polynomials in the eight chart variables, of which seven are nonzero.
/// Their common vanishing locus is the chart's locus of line pairs whose
/// coordinate-wise product is contained in the reference quadric.
inline constexpr int kChartVars = 8;

/// Reference figure for the dimension of the chart locus that reports are
/// checked against.  The computed value is 4 (the Groebner route and the
/// component enumeration agree); reports carry both numbers and flag the
/// difference as a discrepancy rather than a failure.
inline constexpr int kChartReferenceDimension = 3;

/// Variable names in ring order: u1, u2, v1, v2, z1, z2, w1, w2.
const std::vector<std::string>& chart_var_names();

/// Indices of the chart variables in ring order.
enum ChartVar : int { U1 = 0, U2 = 1, V1 = 2, V2 = 3, Z1 = 4, Z2 = 5, W1 = 6, W2 = 7 };

/// All nine bidegree-(2,2) slot coefficients: slots[i][j] is the coefficient
/// of l1^(2-i) l2^i m1^(2-j) m2^j, a polynomial in the chart variables.
/// Slots (0,2) and (2,0) vanish identically; the other seven do not.
std::array<std::array<Poly, 3>, 3> membership_slots();

/// The ideal of Q[u1,u2,v1,v2,z1,z2,w1,w2] generated by the nonzero slot
/// coefficients, normalized, in slot scan order:
///   v1 w1, v1 w2, v2 w1, u1 z1 - v2 w2, u1 z2, u2 z1, u2 z2.
Ideal chart_ideal();

/// One irreducible component of the chart locus: a coordinate subspace
/// (the listed variables vanish) intersected with at most one residual
/// binomial hypersurface in the remaining variables.
struct ChartComponent {
    std::vector<int> zero_vars;  ///< ascending chart-variable indices
    std::vector<Poly> extra;     ///< residual equations (empty or one binomial)
    int dimension = 0;           ///< affine dimension
    std::string label;
    /// The left (right) line lies inside a coordinate plane at *every* point
    /// of the component; read off the chart rows symbolically.
    bool left_line_in_coordinate_plane = false;
    bool right_line_in_coordinate_plane = false;
    /// Rank of the span of the four product forms at sampled points of the
    /// component; rank 2 means the product degenerates to a line (never a
    /// surface), which holds on every component of this locus.
    int sampled_product_span_rank = 0;
};

/// Decomposes the vanishing locus of an ideal generated by quadratic
/// monomials and differences of two quadratic monomials: enumerate the
/// minimal covers of the monomial generators, refine each cover by the
/// binomials (splitting when a binomial degenerates to a single monomial),
/// and drop components contained in others.  Deterministic order: descending
/// dimension, then lexicographic zero-variable sets.  Buchberger-free, so it
/// serves as an independent dimension oracle for the Groebner route.
std::vector<ChartComponent> enumerate_components(const Ideal& ideal);

/// Everything the chart computation yields, bundled for reporting.
struct ChartAnalysis {
    Ideal ideal;
    std::vector<Poly> generators;             ///< = ideal.gens
    std::array<std::array<Poly, 3>, 3> slots;
    int dimension = 0;          ///< affine dimension via Groebner
    int oracle_dimension = 0;   ///< max component dimension via enumerate_components
    std::vector<ChartComponent> components;
    /// Generators after substituting the left chart (u1,v1,u2,v2) = (1,0,0,1)
    /// (the line through (1:0:1:0) and (0:1:0:1)); nonzero residuals in the
    /// right-line variables, normalized, ascending leading monomial.
    std::vector<Poly> left_segre_residual;
};

ChartAnalysis analyze_chart(const GbOptions& opts = {});

/// A pair of lines whose coordinate-wise product fills the reference quadric
/// x0 x3 - x1 x2: the left line through (1:1:0:0), (0:0:1:1) and the right
/// line through (1:0:1:0), (0:1:0:1).
std::pair<LineP3, LineP3> segre_pair();

/// True when the line admits the pivots-(x0,x1) reduced row form the chart
/// uses; equivalent to its first Pluecker coordinate being nonzero.
bool line_in_chart(const LineP3& line);

/// Chart coordinates (u1, v1, u2, v2) of a line with line_in_chart true.
/// Throws DegenerateError otherwise.
std::array<Rat, 4> chart_of_line(const LineP3& line);

/// Substitutes values for (u1, v1, u2, v2) into the chart generators and
/// returns the nonzero residuals, normalized, ascending leading monomial.
std::vector<Poly> substitute_left_chart(const std::array<Rat, 4>& left);

}  // namespace hadstar
