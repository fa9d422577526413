#include "hadstar/fiber.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "hadstar/errors.hpp"
#include "hadstar/matrix.hpp"
#include "hadstar/product.hpp"

namespace hadstar {

namespace {

// Ring layout for the expansion: l1, l2, m1, m2, then the 8 chart variables.
constexpr int kExpVars = 4 + kChartVars;

Poly ev(int i) { return Poly::variable(kExpVars, i); }

int support_mask(const Exp& e) {
    int mask = 0;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) mask |= 1 << i;
    return mask;
}

std::string join_zero_vars(const std::vector<int>& vars, const std::vector<std::string>& names) {
    std::string out;
    for (int v : vars) {
        if (!out.empty()) out += " = ";
        out += names[v];
    }
    return out.empty() ? std::string() : out + " = 0";
}

}  // namespace

const std::vector<std::string>& chart_var_names() {
    static const std::vector<std::string> names = {"u1", "u2", "v1", "v2",
                                                   "z1", "z2", "w1", "w2"};
    return names;
}

std::array<std::array<Poly, 3>, 3> membership_slots() {
    const Poly l1 = ev(0), l2 = ev(1), m1 = ev(2), m2 = ev(3);
    const Poly u1 = ev(4), u2 = ev(5), v1 = ev(6), v2 = ev(7);
    const Poly z1 = ev(8), z2 = ev(9), w1 = ev(10), w2 = ev(11);

    const Poly p0 = l1, p1 = l2, p2 = l1 * u1 + l2 * u2, p3 = l1 * v1 + l2 * v2;
    const Poly q0 = m1, q1 = m2, q2 = m1 * z1 + m2 * z2, q3 = m1 * w1 + m2 * w2;

    // The reference quadric x0 x3 - x1 x2 composed with x = p * q.
    const Poly membership = (p0 * q0) * (p3 * q3) - (p1 * q1) * (p2 * q2);

    std::array<std::array<Poly, 3>, 3> slots;
    for (auto& row : slots)
        for (auto& s : row) s = Poly::zero(kChartVars);
    for (const auto& [e, c] : membership.terms()) {
        const int i = e[1], j = e[3];
        if (e[0] + e[1] != 2 || e[2] + e[3] != 2)
            throw InternalError("membership expansion is not bidegree (2,2)");
        Exp chart(e.begin() + 4, e.end());
        slots[i][j].add_term(chart, c);
    }
    return slots;
}

Ideal chart_ideal() {
    std::vector<Poly> gens;
    const auto slots = membership_slots();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!slots[i][j].is_zero()) gens.push_back(slots[i][j].normalized());
    return Ideal(kChartVars, std::move(gens));
}

namespace {

struct BinomialGen {
    Exp m1, m2;    // the two monomials
    Rat c1, c2;    // their coefficients
    int sup1 = 0;  // support masks
    int sup2 = 0;
};

struct Candidate {
    int mask = 0;
    std::vector<Poly> extras;
};

/// Repeatedly scans the binomials over the current zero set: a binomial with
/// both monomials killed is satisfied, one with exactly one survivor forces
/// that monomial to vanish (split on its variables), and one with both
/// survivors stays as a residual hypersurface equation.
void refine(int nvars, int mask, const std::vector<BinomialGen>& bins,
            std::vector<Candidate>& out) {
    std::vector<const BinomialGen*> extras;
    for (const auto& b : bins) {
        const bool alive1 = (b.sup1 & mask) == 0;
        const bool alive2 = (b.sup2 & mask) == 0;
        if (!alive1 && !alive2) continue;
        if (alive1 && alive2) {
            extras.push_back(&b);
            continue;
        }
        const int sup = alive1 ? b.sup1 : b.sup2;
        for (int v = 0; v < nvars; ++v)
            if (sup & (1 << v)) refine(nvars, mask | (1 << v), bins, out);
        return;
    }
    Candidate c;
    c.mask = mask;
    for (const auto* b : extras) {
        Poly e = Poly::monomial(nvars, b->m1, b->c1);
        e.add_term(b->m2, b->c2);
        c.extras.push_back(e.normalized());
    }
    out.push_back(std::move(c));
}

}  // namespace

std::vector<ChartComponent> enumerate_components(const Ideal& ideal) {
    const int n = ideal.nvars;
    if (n > 16) throw InternalError("component oracle limited to 16 variables");

    std::vector<int> mono_sup;
    std::vector<BinomialGen> bins;
    for (const auto& g : ideal.gens) {
        if (g.term_count() == 1) {
            mono_sup.push_back(support_mask(g.terms().begin()->first));
        } else if (g.term_count() == 2) {
            auto it = g.terms().begin();
            BinomialGen b;
            b.m1 = it->first;
            b.c1 = it->second;
            ++it;
            b.m2 = it->first;
            b.c2 = it->second;
            b.sup1 = support_mask(b.m1);
            b.sup2 = support_mask(b.m2);
            if (b.sup1 & b.sup2)
                throw InternalError("component oracle needs disjoint binomial supports");
            bins.push_back(std::move(b));
        } else {
            throw InternalError("component oracle limited to monomial and binomial generators");
        }
    }

    // Minimal covers of the monomial generators.
    std::vector<int> covers;
    for (int mask = 0; mask < (1 << n); ++mask) {
        bool hit = true;
        for (int s : mono_sup)
            if ((s & mask) == 0) { hit = false; break; }
        if (!hit) continue;
        bool minimal = true;
        for (int v = 0; v < n && minimal; ++v) {
            if (!(mask & (1 << v))) continue;
            bool still = true;
            for (int s : mono_sup)
                if ((s & (mask & ~(1 << v))) == 0) { still = false; break; }
            if (still) minimal = false;
        }
        if (minimal) covers.push_back(mask);
    }

    std::vector<Candidate> candidates;
    for (int mask : covers) refine(n, mask, bins, candidates);

    // Deduplicate, then drop candidates whose locus sits inside another's.
    auto poly_list_less = [](const std::vector<Poly>& a, const std::vector<Poly>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t k = 0; k < a.size(); ++k) {
            if (a[k] == b[k]) continue;
            return a[k].terms() < b[k].terms();
        }
        return false;
    };
    std::sort(candidates.begin(), candidates.end(),
              [&](const Candidate& a, const Candidate& b) {
                  if (a.mask != b.mask) return a.mask < b.mask;
                  return poly_list_less(a.extras, b.extras);
              });
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](const Candidate& a, const Candidate& b) {
                                     return a.mask == b.mask && a.extras == b.extras;
                                 }),
                     candidates.end());

    auto absorbed_by = [n](const Candidate& a, const Candidate& b) {
        // V(a) inside V(b): b's zero set within a's, b's extras vanishing on a.
        if ((b.mask & a.mask) != b.mask) return false;
        std::vector<int> azeros;
        for (int v = 0; v < n; ++v)
            if (a.mask & (1 << v)) azeros.push_back(v);
        for (const auto& e : b.extras) {
            const Poly r = e.set_zero(azeros);
            if (r.is_zero()) continue;
            bool matches = false;
            for (const auto& ae : a.extras)
                if (r.proportional(ae)) { matches = true; break; }
            if (!matches) return false;
        }
        return true;
    };
    std::vector<Candidate> kept;
    for (size_t i = 0; i < candidates.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < candidates.size() && !drop; ++j) {
            if (i == j) continue;
            const bool sub = absorbed_by(candidates[i], candidates[j]);
            const bool sup = absorbed_by(candidates[j], candidates[i]);
            if (sub && !sup) drop = true;
            if (sub && sup && j < i) drop = true;  // equal loci: keep the first
        }
        if (!drop) kept.push_back(candidates[i]);
    }

    const std::vector<std::string> names =
        n == kChartVars ? chart_var_names() : default_var_names(n);
    std::vector<ChartComponent> comps;
    for (const auto& c : kept) {
        ChartComponent comp;
        for (int v = 0; v < n; ++v)
            if (c.mask & (1 << v)) comp.zero_vars.push_back(v);
        comp.extra = c.extras;
        for (const auto& e : comp.extra) {
            // Each residual must be an irreducible binomial quadric on the
            // free variables for the dimension count below to be exact.
            if (e.term_count() != 2 || e.degree() != 2 ||
                std::popcount(static_cast<unsigned>(support_mask(e.terms().begin()->first) |
                                                    support_mask(std::next(e.terms().begin())->first))) != 4)
                throw InternalError("component oracle: unexpected residual shape");
        }
        comp.dimension = n - static_cast<int>(comp.zero_vars.size()) -
                         static_cast<int>(comp.extra.size());
        comp.label = join_zero_vars(comp.zero_vars, names);
        for (const auto& e : comp.extra)
            comp.label += (comp.label.empty() ? "" : ", ") + e.str(names) + " = 0";
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const ChartComponent& a, const ChartComponent& b) {
        if (a.dimension != b.dimension) return a.dimension > b.dimension;
        return a.zero_vars < b.zero_vars;
    });
    return comps;
}

namespace {

bool zeroed(const ChartComponent& c, std::initializer_list<int> vars) {
    for (int v : vars)
        if (!std::binary_search(c.zero_vars.begin(), c.zero_vars.end(), v)) return false;
    return true;
}

/// A point of the component with every free variable nonzero: free variables
/// take the offered values except that one variable of a residual binomial is
/// solved for to satisfy it.
std::array<Rat, kChartVars> component_point(const ChartComponent& c, int salt) {
    std::array<Rat, kChartVars> x;
    for (int v = 0; v < kChartVars; ++v) x[v] = Rat(2 + ((v * 5 + salt * 3) % 7));
    for (int v : c.zero_vars) x[v] = 0;
    for (const auto& e : c.extra) {
        auto it = e.terms().begin();
        const Exp m1 = it->first;
        const Rat c1 = it->second;
        ++it;
        const Exp m2 = it->first;
        const Rat c2 = it->second;
        // Solve c1 * m1 + c2 * m2 = 0 for the first variable of m1.
        int target = -1;
        Rat rest(1);
        for (int v = 0; v < kChartVars; ++v) {
            for (int k = 0; k < m1[v]; ++k) {
                if (target < 0 && k == 0)
                    target = v;
                else
                    rest *= x[v];
            }
        }
        Rat rhs(1);
        for (int v = 0; v < kChartVars; ++v)
            for (int k = 0; k < m2[v]; ++k) rhs *= x[v];
        x[target] = -c2 * rhs / (c1 * rest);
        if (x[target] == 0) throw InternalError("component sample degenerated");
    }
    return x;
}

std::pair<LineP3, LineP3> chart_lines(const std::array<Rat, kChartVars>& x) {
    const LineP3 left = LineP3::through(ProjPoint(Rat(1), Rat(0), x[U1], x[V1]),
                                        ProjPoint(Rat(0), Rat(1), x[U2], x[V2]));
    const LineP3 right = LineP3::through(ProjPoint(Rat(1), Rat(0), x[Z1], x[W1]),
                                         ProjPoint(Rat(0), Rat(1), x[Z2], x[W2]));
    return {left, right};
}

int product_span_rank(const LineP3& left, const LineP3& right) {
    const ProductMap pm =
        product_parametrization(ParamCurve::from_line(left), ParamCurve::from_line(right));
    std::set<Exp> monomials;
    for (const auto& f : pm.forms)
        for (const auto& [e, c] : f.terms()) monomials.insert(e);
    Mat m(4, static_cast<int>(monomials.size()));
    for (int row = 0; row < 4; ++row) {
        int col = 0;
        for (const auto& e : monomials) m.at(row, col++) = pm.forms[row].coeff(e);
    }
    return rank(m);
}

}  // namespace

ChartAnalysis analyze_chart(const GbOptions& opts) {
    ChartAnalysis a;
    a.slots = membership_slots();
    a.ideal = chart_ideal();
    a.generators = a.ideal.gens;
    a.dimension = ideal_dimension(a.ideal, opts);
    a.components = enumerate_components(a.ideal);
    a.oracle_dimension = 0;
    for (auto& c : a.components) {
        a.oracle_dimension = std::max(a.oracle_dimension, c.dimension);
        c.left_line_in_coordinate_plane = zeroed(c, {U1, U2}) || zeroed(c, {V1, V2});
        c.right_line_in_coordinate_plane = zeroed(c, {Z1, Z2}) || zeroed(c, {W1, W2});
        c.sampled_product_span_rank = 0;
        for (int salt = 0; salt < 3; ++salt) {
            const auto x = component_point(c, salt);
            const auto [left, right] = chart_lines(x);
            c.sampled_product_span_rank =
                std::max(c.sampled_product_span_rank, product_span_rank(left, right));
        }
    }
    a.left_segre_residual = substitute_left_chart({Rat(1), Rat(0), Rat(0), Rat(1)});
    return a;
}

std::pair<LineP3, LineP3> segre_pair() {
    return {LineP3::through(ProjPoint(Rat(1), Rat(1), Rat(0), Rat(0)),
                            ProjPoint(Rat(0), Rat(0), Rat(1), Rat(1))),
            LineP3::through(ProjPoint(Rat(1), Rat(0), Rat(1), Rat(0)),
                            ProjPoint(Rat(0), Rat(1), Rat(0), Rat(1)))};
}

bool line_in_chart(const LineP3& line) { return line.pluecker()[0] != 0; }

std::array<Rat, 4> chart_of_line(const LineP3& line) {
    if (!line_in_chart(line))
        throw DegenerateError("line is not in chart position (first Pluecker coordinate vanishes)");
    Mat m(2, 4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = line.a()[j];
        m.at(1, j) = line.b()[j];
    }
    std::vector<int> pivots;
    const Mat r = rref(m, &pivots);
    if (pivots != std::vector<int>{0, 1})
        throw InternalError("chart_of_line: unexpected pivot columns");
    return {r.at(0, 2), r.at(0, 3), r.at(1, 2), r.at(1, 3)};
}

std::vector<Poly> substitute_left_chart(const std::array<Rat, 4>& left) {
    std::vector<Poly> images;
    for (int v = 0; v < kChartVars; ++v) images.push_back(Poly::variable(kChartVars, v));
    images[U1] = Poly::constant(kChartVars, left[0]);
    images[V1] = Poly::constant(kChartVars, left[1]);
    images[U2] = Poly::constant(kChartVars, left[2]);
    images[V2] = Poly::constant(kChartVars, left[3]);

    std::vector<Poly> out;
    for (const auto& g : chart_ideal().gens) {
        const Poly r = g.compose(images).normalized();
        if (r.is_zero()) continue;
        bool dup = false;
        for (const auto& o : out)
            if (o == r) { dup = true; break; }
        if (!dup) out.push_back(r);
    }
    const MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
        return ord.greater(*b.leading_exp(ord), *a.leading_exp(ord));
    });
    return out;
}

}  // namespace hadstar
