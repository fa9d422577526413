#pragma once

#include <vector>

#include "hadstar/polynomial.hpp"

namespace hadstar {

/// A finitely generated ideal of Q[x0..x_{n-1}].  Zero generators are
/// dropped at construction; an empty generator list is the zero ideal.
struct Ideal {
    int nvars = 0;
    std::vector<Poly> gens;

    Ideal() = default;
    Ideal(int n, std::vector<Poly> gs);
};

struct GbOptions {
    MonomialOrder order = MonomialOrder::grevlex();
    /// Cap on S-pair reductions; exceeding it raises LimitError (results are
    /// never silently truncated).
    long step_limit = 200000;
};

struct GroebnerBasis {
    MonomialOrder order;
    /// Reduced basis: each element primitive-integer normalized, no term of
    /// any element divisible by another element's leading term, sorted by
    /// ascending leading monomial.  Unique for a given ideal and order.
    std::vector<Poly> elems;
    long reductions = 0;  ///< S-pair reductions actually performed
};

/// S-polynomial with integer-friendly scaling:
/// lc(g)*(lcm/lt(f))*f - lc(f)*(lcm/lt(g))*g.
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord);

/// Full normal form: every term of the result is reducible by no element of
/// the basis.  Divisor choice is the first basis element in stored order, so
/// the result is deterministic; for a Groebner basis it is also canonical.
Poly normal_form(Poly p, const std::vector<Poly>& basis, const MonomialOrder& ord);
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

/// Buchberger's algorithm with the normal selection strategy (smallest
/// S-pair lcm first, ties by generator index pair) and the coprime-lead and
/// chain pruning criteria, followed by auto-reduction to the reduced basis.
GroebnerBasis buchberger(const Ideal& ideal, const GbOptions& opts = {});

/// Generators of the elimination ideal obtained by dropping the *first*
/// `drop` variables, reindexed into Q[x0..x_{n-drop-1}].  Uses the block
/// elimination order; opts.order is ignored.
Ideal eliminate(const Ideal& ideal, int drop, const GbOptions& opts = {});

/// Krull dimension of the affine zero set V(I) in A^n, computed as the
/// largest cardinality of a variable subset S such that no leading monomial
/// of the (grevlex) basis is supported inside S.  Unit ideal (empty variety)
/// gives -1; the zero ideal gives n.
int ideal_dimension(const Ideal& ideal, const GbOptions& opts = {});

}  // namespace hadstar
