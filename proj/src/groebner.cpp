#include "hadstar/groebner.hpp"

#include <algorithm>
#include <set>

namespace hadstar {

namespace {

Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

bool exp_divides(const Exp& a, const Exp& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp exp_quot(const Exp& b, const Exp& a) {  // b / a
    Exp out(b.size());
    for (size_t i = 0; i < b.size(); ++i) out[i] = b[i] - a[i];
    return out;
}

bool exp_coprime(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace

Ideal::Ideal(int n, std::vector<Poly> gs) : nvars(n) {
    for (Poly& g : gs) {
        if (g.is_zero()) continue;
        if (g.nvars() != n) throw InternalError("ideal generator in wrong ring");
        gens.push_back(std::move(g));
    }
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    Exp lf = *f.leading_exp(ord), lg = *g.leading_exp(ord);
    Exp l = exp_lcm(lf, lg);
    Poly mf = Poly::monomial(f.nvars(), exp_quot(l, lf), g.leading_coeff(ord));
    Poly mg = Poly::monomial(g.nvars(), exp_quot(l, lg), f.leading_coeff(ord));
    return mf * f - mg * g;
}

Poly normal_form(Poly p, const std::vector<Poly>& basis, const MonomialOrder& ord) {
    struct Lead {
        Exp e;
        Rat c;
    };
    std::vector<Lead> leads;
    leads.reserve(basis.size());
    for (const Poly& b : basis) {
        if (b.is_zero()) throw InternalError("normal_form against zero divisor");
        leads.push_back({*b.leading_exp(ord), b.leading_coeff(ord)});
    }

    Poly remainder(p.nvars());
    while (!p.is_zero()) {
        Exp le = *p.leading_exp(ord);
        Rat lc = p.coeff(le);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!exp_divides(leads[i].e, le)) continue;
            Poly m = Poly::monomial(p.nvars(), exp_quot(le, leads[i].e), lc / leads[i].c);
            p -= m * basis[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            // Move the irreducible leading term to the remainder.
            remainder.add_term(le, lc);
            Poly t = Poly::monomial(p.nvars(), le, lc);
            p -= t;
        }
    }
    return remainder;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
    return normal_form(p, gb.elems, gb.order);
}

GroebnerBasis buchberger(const Ideal& ideal, const GbOptions& opts) {
    const MonomialOrder ord = opts.order;
    GroebnerBasis out{ord, {}, 0};

    std::vector<Poly> g;
    for (const Poly& p : ideal.gens) g.push_back(p.normalized());
    if (g.empty()) return out;

    auto lead = [&](size_t i) { return *g[i].leading_exp(ord); };

    // Pending S-pairs keyed for the normal strategy: smallest lcm first
    // (under the active order), ties by index pair.
    struct PairKey {
        Exp lcm;
        size_t i, j;
    };
    auto key_less = [ord](const PairKey& a, const PairKey& b) {
        if (a.lcm != b.lcm) return ord.greater(b.lcm, a.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(key_less)> pending(key_less);
    std::set<std::pair<size_t, size_t>> pending_idx;

    auto push_pairs_for = [&](size_t t) {
        for (size_t i = 0; i < t; ++i) {
            pending.insert({exp_lcm(lead(i), lead(t)), i, t});
            pending_idx.insert({i, t});
        }
    };
    for (size_t t = 1; t < g.size(); ++t) push_pairs_for(t);

    long steps = 0;
    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        pending_idx.erase({pk.i, pk.j});

        // Coprime-lead criterion: such S-pairs always reduce to zero.
        if (exp_coprime(lead(pk.i), lead(pk.j))) continue;

        // Chain criterion: skip when some third element divides the lcm and
        // both side pairs were already treated.
        bool chained = false;
        for (size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!exp_divides(lead(k), pk.lcm)) continue;
            auto side1 = std::minmax(pk.i, k), side2 = std::minmax(pk.j, k);
            if (!pending_idx.count({side1.first, side1.second}) &&
                !pending_idx.count({side2.first, side2.second}))
                chained = true;
        }
        if (chained) continue;

        if (++steps > opts.step_limit)
            throw LimitError("Groebner step limit exceeded (" + std::to_string(opts.step_limit) +
                             " S-pair reductions); raise the cap to continue");
        Poly s = normal_form(s_polynomial(g[pk.i], g[pk.j], ord), g, ord);
        if (s.is_zero()) continue;
        g.push_back(s.normalized());
        push_pairs_for(g.size() - 1);
    }
    out.reductions = steps;

    // Minimize: drop elements whose leading monomial another element divides.
    std::vector<Poly> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        Exp li = lead(i);
        bool redundant = false;
        for (size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            Exp lj = lead(j);
            if (lj == li ? j < i : exp_divides(lj, li)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // Auto-reduce tails to reach the reduced basis, then fix a canonical
    // element order (ascending leading monomial).
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly reduced = normal_form(minimal[i], others, ord).normalized();
            if (reduced != minimal[i]) {
                minimal[i] = reduced;
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return ord.greater(*b.leading_exp(ord), *a.leading_exp(ord));
    });
    out.elems = std::move(minimal);
    return out;
}

Ideal eliminate(const Ideal& ideal, int drop, const GbOptions& opts) {
    if (drop < 0 || drop > ideal.nvars) throw InternalError("eliminate: bad variable count");
    GbOptions block = opts;
    block.order = MonomialOrder::block_elim(drop);
    GroebnerBasis gb = buchberger(ideal, block);

    std::vector<int> dropped(drop);
    for (int i = 0; i < drop; ++i) dropped[i] = i;
    std::vector<Poly> kept;
    for (const Poly& p : gb.elems) {
        bool uses_block = false;
        for (const auto& [e, c] : p.terms())
            for (int i = 0; i < drop && !uses_block; ++i)
                if (e[i] > 0) uses_block = true;
        if (!uses_block) kept.push_back(p.drop_vars(dropped));
    }
    return Ideal(ideal.nvars - drop, std::move(kept));
}

int ideal_dimension(const Ideal& ideal, const GbOptions& opts) {
    const int n = ideal.nvars;
    if (n > 20) throw InternalError("ideal_dimension: too many variables for subset search");
    GroebnerBasis gb = buchberger(ideal, opts);
    if (gb.elems.empty()) return n;  // zero ideal: whole affine space

    std::vector<unsigned> supports;
    for (const Poly& p : gb.elems) {
        Exp le = *p.leading_exp(gb.order);
        if (exp_degree(le) == 0) return -1;  // unit ideal: empty variety
        unsigned mask = 0;
        for (int i = 0; i < n; ++i)
            if (le[i] > 0) mask |= 1u << i;
        supports.push_back(mask);
    }

    int best = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (unsigned m : supports)
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

}  // namespace hadstar
