#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hadstar/matrix.hpp"
#include "hadstar/polynomial.hpp"
#include "hadstar/rational.hpp"

namespace hadstar {

/// A point of P^3 held in canonical form: a primitive integer 4-vector whose
/// first nonzero coordinate is positive.  Equality of canonical forms is
/// equality of points.
class ProjPoint {
public:
    /// Throws InputError unless coords has exactly 4 entries with at least
    /// one nonzero.
    explicit ProjPoint(std::vector<Rat> coords);
    ProjPoint(const Rat& x0, const Rat& x1, const Rat& x2, const Rat& x3);

    const std::vector<Rat>& coords() const { return c_; }
    const Rat& operator[](size_t i) const { return c_[i]; }
    bool operator==(const ProjPoint& rhs) const = default;

    /// True when the point lies in the coordinate plane {x_i = 0}.
    bool in_coordinate_plane(int i) const { return c_[i] == 0; }
    /// Number of vanishing coordinates.
    int zero_count() const;
    /// True when every coordinate is nonzero (the open torus orbit).
    bool all_coords_nonzero() const { return zero_count() == 0; }

    std::string str() const;  // "(a : b : c : d)"

private:
    std::vector<Rat> c_;
};

/// e_i, the i-th coordinate point.
ProjPoint coordinate_point(int i);

/// Coordinate-wise (Hadamard) product p * q.  Throws DegenerateError when
/// every product p_i q_i vanishes, i.e. the supports are complementary.
ProjPoint hadamard_point(const ProjPoint& p, const ProjPoint& q);

/// A line in P^3 in canonical form: the two rows of the reduced row echelon
/// form of any spanning pair, plus the primitive Pluecker vector
/// (p01, p02, p03, p12, p13, p23) derived from them.
class LineP3 {
public:
    /// Throws DegenerateError when a == b.
    static LineP3 through(const ProjPoint& a, const ProjPoint& b);

    const ProjPoint& a() const { return a_; }
    const ProjPoint& b() const { return b_; }
    const std::array<Rat, 6>& pluecker() const { return pl_; }

    bool contains(const ProjPoint& p) const;
    bool operator==(const LineP3& rhs) const { return pl_ == rhs.pl_; }
    bool operator!=(const LineP3& rhs) const { return !(*this == rhs); }

    /// True when the whole line lies inside some coordinate plane {x_i = 0}.
    bool in_coordinate_plane() const;
    /// True when every Pluecker coordinate is nonzero; equivalent to the line
    /// meeting none of the six coordinate lines {x_i = x_j = 0}.
    bool pluecker_all_nonzero() const;

    std::string str() const;

private:
    LineP3(ProjPoint a, ProjPoint b, std::array<Rat, 6> pl);
    ProjPoint a_, b_;
    std::array<Rat, 6> pl_;
};

/// Pluecker coordinates of the row span of a 2x4 matrix [a; b], not
/// normalized: (p01, p02, p03, p12, p13, p23) with p_ij = a_i b_j - a_j b_i.
std::array<Rat, 6> pluecker_of_pair(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// p01 p23 - p02 p13 + p03 p12; zero exactly on valid line coordinates.
Rat pluecker_relation(const std::array<Rat, 6>& p);

/// Image of a line under the Hadamard product with a fixed point.  The map
/// x -> p * x is linear on span(a, b), so the image is a line when p * a and
/// p * b stay independent and collapses to a point otherwise.
struct StarImage {
    enum class Kind { Line, Point };
    Kind kind;
    std::optional<LineP3> line;    // set when kind == Line
    std::optional<ProjPoint> point;  // set when kind == Point
};

/// Throws DegenerateError when p * x vanishes identically on the line.
StarImage point_star_line(const ProjPoint& p, const LineP3& line);

/// The three biquadratic forms cutting out the family {p * L : p} inside the
/// space of lines, evaluated on canonical Pluecker vectors (l of L, m of M):
///   l01 l23 m02 m13 - l02 l13 m01 m23,
///   l01 l23 m03 m12 - l03 l12 m01 m23,
///   l02 l13 m03 m12 - l03 l12 m02 m13.
/// All three vanish on every pair (L, p * L); swapping L and M only flips
/// signs, so membership is symmetric.
std::array<Rat, 3> hadamard_family_biquadratics(const LineP3& l, const LineP3& m);

/// True when all three biquadratics vanish.
bool in_hadamard_family(const LineP3& l, const LineP3& m);

/// A diagonal automorphism of P^3: coordinates scaled by a fixed weight
/// vector with all entries nonzero (an element of the standard torus).
class DiagonalAuto {
public:
    /// Throws InputError unless weights has 4 entries, all nonzero.
    explicit DiagonalAuto(std::vector<Rat> weights);

    const std::vector<Rat>& weights() const { return w_; }
    /// The automorphism with reciprocal weights.
    DiagonalAuto inverse() const;
    ProjPoint act(const ProjPoint& p) const;
    LineP3 act(const LineP3& line) const;

private:
    std::vector<Rat> w_;
};

/// A curve in P^3 given by four binary forms of a common degree in (s, t).
/// Invariants enforced by the constructor: four forms over a 2-variable
/// ring, homogeneous of one shared degree >= 1, not all zero, with trivial
/// common factor (so the map is defined away from finitely many points and
/// never contracts a factor).
class ParamCurve {
public:
    explicit ParamCurve(std::vector<Poly> forms);

    /// Degree-1 parametrization s * a + t * b of a line.
    static ParamCurve from_line(const LineP3& line);
    /// The plane conic s^2 A + s t B + t^2 C.  Throws DegenerateError unless
    /// A, B, C span a plane (coefficient rank 3), which is what makes the
    /// image an irreducible conic rather than a line or point.
    static ParamCurve conic_through(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

    int degree() const { return degree_; }
    const std::vector<Poly>& forms() const { return forms_; }

    /// Rank of the 4-column coefficient matrix (rows = monomials s^k t^(d-k)).
    int span_rank() const;

    /// Throws DegenerateError if all four forms vanish at (s, t) — a base
    /// point of the parametrization.
    ProjPoint evaluate(const Rat& s, const Rat& t) const;

    bool operator==(const ParamCurve& rhs) const = default;

private:
    int degree_ = 0;
    std::vector<Poly> forms_;  // size 4, ring (s, t)
};

/// Coordinate-wise product of a curve with a weight action.
ParamCurve torus_act(const DiagonalAuto& t, const ParamCurve& c);

/// Gcd of two binary forms in (s, t), in canonical normalized() scaling.
/// Conventions: gcd(0, g) = normalized g, gcd(0, 0) = 0.
Poly binary_form_gcd(const Poly& f, const Poly& g);

/// Gcd of a list of binary forms; the empty list gives 0.
Poly binary_form_gcd(const std::vector<Poly>& fs);

}  // namespace hadstar
