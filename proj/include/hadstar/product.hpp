#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hadstar/groebner.hpp"
#include "hadstar/polynomial.hpp"
#include "hadstar/projective.hpp"

namespace hadstar {

/// Coordinate-wise product of two parametrized curves, viewed as the map
/// P^1 x P^1 -> P^3 with coordinate forms F_i = f_i(s, t) g_i(u, v) in the
/// 4-variable ring (s, t, u, v).
struct ProductMap {
    ParamCurve left, right;
    std::vector<Poly> forms;      // 4 forms, ring (s, t, u, v)
    std::array<int, 2> bidegree;  // (deg left, deg right)
};

/// Throws DegenerateError when every coordinate product vanishes identically
/// (the two curves hit complementary coordinate supports).
ProductMap product_parametrization(const ParamCurve& f, const ParamCurve& g);

enum class ImageKind { Point, Curve, Plane, Surface };

struct ImplicitizeOptions {
    /// Largest implicit degree tried before giving up; 0 means the a-priori
    /// bound 2 * d1 * d2 on the image degree.
    int degree_cap = 0;
    /// Seed for the random parameter points used in the Jacobian rank probe.
    std::uint64_t seed = 1729;
};

struct ImplicitResult {
    ImageKind kind = ImageKind::Surface;
    /// Normalized implicit equation (Plane and Surface kinds only).
    std::optional<Poly> equation;
    /// Degree of the implicit equation; 0 otherwise.
    int degree = 0;
    /// The image point (Point kind only).
    std::optional<ProjPoint> point;
    /// Kernel dimension of the vanishing-form system per degree examined.
    std::vector<std::pair<int, int>> kernel_dims;
    /// Generic rank of the 4x4 parameter Jacobian: 1 point, 2 curve, 3 surface.
    int jacobian_rank = 0;
};

/// Finds the implicit equation of the image by linear algebra: degree-d forms
/// in x0..x3 vanishing on the image are the kernel of the coefficient matrix
/// of their pullbacks, and the image is a hypersurface exactly when the first
/// nonzero kernel is one-dimensional.  Lower-dimensional images are
/// classified by the Jacobian rank instead.  Throws LimitError if the degree
/// cap is exhausted while a hypersurface image is still expected.
ImplicitResult implicitize(const ProductMap& pm, const ImplicitizeOptions& opts = {});

/// Slow independent oracle: eliminates the parameters from the graph ideal
/// <x_i - F_i> by a Groebner elimination order, leaving the full implicit
/// ideal of the image cone in x0..x3.
Ideal implicit_ideal_via_elimination(const ProductMap& pm, const GbOptions& opts = {});

struct MorphismWitness {
    /// Indices i with f_i forced to vanish; the complement is forced on g.
    std::vector<int> left_zero_set;
    Poly left_factor;   // common factor of {f_i : i in left_zero_set}
    Poly right_factor;  // common factor of {g_j : j not in left_zero_set}
};

struct MorphismResult {
    bool is_morphism = false;
    /// A certified base point pattern when the map is not a morphism.
    std::optional<MorphismWitness> witness;
};

/// The product map is a morphism (defined on all of P^1 x P^1) exactly when
/// no split S of the coordinates gives both a common zero of {f_i : i in S}
/// and one of {g_j : j not in S}.  Zero forms vanish everywhere; by the
/// gcd conventions an empty or all-zero side never constrains.
MorphismResult morphism_check(const ProductMap& pm);

/// Substitution x_i -> w_i x_i for a diagonal automorphism, on a polynomial
/// in the 4-variable coordinate ring x0..x3.
Poly substitute_diagonal(const Poly& p, const DiagonalAuto& t);

}  // namespace hadstar
