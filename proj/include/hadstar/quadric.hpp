#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hadstar/matrix.hpp"
#include "hadstar/polynomial.hpp"
#include "hadstar/projective.hpp"

namespace hadstar {

/// Quadric surface in P^3, stored as the canonical primitive coefficient
/// vector (c0..c9) over the monomial basis
///   x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2
/// with the first nonzero entry positive.  Note the sign convention follows
/// this basis order, not the graded-reverse-lex one used by
/// Poly::normalized(), so poly() can differ from a normalized input by -1.
class Quadric {
public:
    /// Throws InputError unless coeffs has exactly 10 entries, not all zero.
    explicit Quadric(std::vector<Rat> coeffs);

    /// From a nonzero homogeneous degree-2 polynomial in x0..x3.
    static Quadric from_poly(const Poly& p);
    /// From a symmetric 4x4 Gram matrix: c_ii = G_ii, c_ij = 2 G_ij.
    static Quadric from_gram(const Mat& g);

    const std::vector<Rat>& coeffs() const { return c_; }
    Poly poly() const;
    Mat gram() const;

    Rat det() const { return det_bareiss(gram()); }
    bool is_smooth() const { return det() != 0; }
    int rank() const;

    /// Diagonal of the adjugate of the Gram matrix; entry i equals the
    /// determinant of the 3x3 Gram of the section by {x_i = 0}.
    std::array<Rat, 4> adjugate_diagonal() const;
    bool adjugate_diagonal_vanishes() const;

    bool operator==(const Quadric& rhs) const = default;

private:
    std::vector<Rat> c_;
};

/// Classification of the conic cut out on a coordinate plane.
enum class SectionClass {
    SmoothConic,      // 3x3 rank 3
    ReducibleConic,   // rank 2: two lines through one singular point
    DoubleLine,       // rank 1: a line counted twice, singular along itself
    Zero,             // rank 0: the plane lies inside the quadric
};

struct PlaneSection {
    int plane = 0;  // section by {x_plane = 0}
    Mat gram3;      // Gram of the restricted conic in the remaining coordinates
    int rank = 0;
    SectionClass cls = SectionClass::SmoothConic;
    /// Unique singular point of the section, embedded back into P^3
    /// (ReducibleConic only).
    std::optional<ProjPoint> center;
};

/// Section of the quadric by the coordinate plane {x_i = 0}.
PlaneSection restrict_to_plane(const Quadric& q, int i);

/// Singular loci of the four coordinate-plane sections.
struct SclResult {
    std::array<PlaneSection, 4> sections;
    /// Every section is singular (rank <= 2); equivalent to the quadric
    /// being tangent to (or containing a piece of) every coordinate plane.
    bool all_sections_singular = false;
    /// The four section centers, present when every section has rank
    /// exactly 2 so each singular locus is a single point.
    std::optional<std::array<ProjPoint, 4>> centers;
    /// The remaining flags are present exactly when `centers` is.
    std::optional<bool> centers_distinct;
    /// Center i lies on no coordinate plane other than {x_i = 0}.
    std::optional<bool> centers_off_other_planes;
    /// The four centers span only a plane (vanishing 4x4 determinant).
    std::optional<bool> centers_coplanar;
    /// det of the 4x4 matrix with the centers as rows.
    std::optional<Rat> center_matrix_det;
};

SclResult scl(const Quadric& q);

/// The closed conditions satisfied by coordinate-wise products of curves:
/// every diagonal entry of the adjugate Gram vanishes (equivalently, the
/// quadric is tangent to all four coordinate planes), and membership in the
/// open part additionally needs smoothness.
struct FamilyCheck {
    bool smooth = false;
    std::array<bool, 4> tangent_to_plane{};
    bool adjugate_diagonal_zero = false;
    /// smooth && adjugate_diagonal_zero.
    bool smooth_family_member = false;
};

FamilyCheck family_check(const Quadric& q);

}  // namespace hadstar
