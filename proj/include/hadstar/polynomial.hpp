#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hadstar/matrix.hpp"
#include "hadstar/rational.hpp"

namespace hadstar {

/// Exponent vector of a monomial; length = number of ring variables.
using Exp = std::vector<int>;

int exp_degree(const Exp& e);

/// Monomial orders used by the Groebner layer.  Block(k) is the elimination
/// order for the *first* k variables: graded reverse lex on that block first,
/// ties broken by graded reverse lex on the rest, so any monomial touching
/// the first block beats every monomial that avoids it.
struct MonomialOrder {
    enum class Kind { Lex, Grevlex, Block };
    Kind kind = Kind::Grevlex;
    int block = 0;  // size of the eliminated leading block (Kind::Block only)

    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder block_elim(int k) { return {Kind::Block, k}; }

    /// Strict "a before b" (a is the larger monomial).
    bool greater(const Exp& a, const Exp& b) const;
    std::string describe() const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms live in a std::map keyed by exponent vector (lexicographic key
/// compare), which gives a canonical, order-independent representation:
/// equality is plain container equality, and iteration order is
/// deterministic regardless of which MonomialOrder a caller works with.
/// Invariants: no stored coefficient is zero; every key has length nvars().
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rat& c);
    static Poly monomial(int nvars, Exp e, const Rat& c);
    static Poly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Exp, Rat>& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Degree counting only the variables listed in `vars`.
    int degree_in(const std::vector<int>& vars) const;

    bool is_homogeneous() const;
    /// True when every term has the same degree within each listed block.
    bool is_multihomogeneous(const std::vector<std::vector<int>>& blocks) const;

    Rat coeff(const Exp& e) const;
    void add_term(const Exp& e, const Rat& c);

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    bool operator==(const Poly& rhs) const = default;

    Poly pow(int e) const;
    Poly derivative(int var) const;
    Rat evaluate(const std::vector<Rat>& point) const;

    /// Ring morphism x_i -> images[i]; all images must share one ring.
    Poly compose(const std::vector<Poly>& images) const;

    /// Sets the listed variables to zero (a cheap special-case of compose).
    Poly set_zero(const std::vector<int>& vars) const;

    /// Removes the listed variables, which must not occur in any term, and
    /// reindexes the survivors in order.
    Poly drop_vars(const std::vector<int>& vars) const;

    /// Leading exponent under `ord`; nullopt for zero.
    std::optional<Exp> leading_exp(const MonomialOrder& ord) const;
    Rat leading_coeff(const MonomialOrder& ord) const;

    /// Canonical scaling: integer coefficients with content 1 and a positive
    /// leading coefficient under graded reverse lex.  Zero stays zero.
    Poly normalized() const;
    /// True if *this and rhs agree up to a nonzero rational factor.
    bool proportional(const Poly& rhs) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_ = 0;
    std::map<Exp, Rat> terms_;

    void check_ring(const Poly& rhs) const;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// d*p - sum_i x_i dp/dx_i; zero exactly when p is homogeneous of degree d.
Poly euler_defect(const Poly& p);
/// Throws DegenerateError when p is nonzero and inhomogeneous.
void euler_check(const Poly& p);

/// All degree-d exponent vectors in n variables, in descending lexicographic
/// order: for n = 4, d = 2 that is x0^2, x0x1, x0x2, x0x3, x1^2, ...,
/// matching the coefficient-vector convention used for quadrics.
std::vector<Exp> monomials_of_degree(int nvars, int d);

/// Determinant of a square matrix of polynomials (Laplace expansion; the
/// toolkit only needs n <= 4).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

/// Positional default names x0, x1, ...
std::vector<std::string> default_var_names(int nvars);

}  // namespace hadstar
