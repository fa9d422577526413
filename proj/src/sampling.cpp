#include "hadstar/sampling.hpp"

#include <vector>

#include "hadstar/errors.hpp"

namespace hadstar {

long Rng::integer(long lo, long hi) {
    if (lo > hi) throw InputError("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
}

long Rng::nonzero(long bound) {
    if (bound < 1) throw InputError("nonzero draws need bound >= 1");
    for (;;) {
        long v = integer(-bound, bound);
        if (v != 0) return v;
    }
}

std::uint64_t Rng::fork() { return eng_(); }

ProjPoint random_point(Rng& rng, long bound) {
    for (;;) {
        std::vector<Rat> c(4);
        bool nonzero = false;
        for (auto& x : c) {
            x = Rat(rng.integer(-bound, bound));
            nonzero = nonzero || x != 0;
        }
        if (nonzero) return ProjPoint(c);
    }
}

ProjPoint random_torus_point(Rng& rng, long bound) {
    std::vector<Rat> c(4);
    for (auto& x : c) x = Rat(rng.nonzero(bound));
    return ProjPoint(c);
}

LineP3 random_line(Rng& rng, long bound) {
    for (;;) {
        ProjPoint a = random_point(rng, bound);
        ProjPoint b = random_point(rng, bound);
        if (!(a == b)) return LineP3::through(a, b);
    }
}

LineP3 random_line_through(Rng& rng, const ProjPoint& base, long bound) {
    for (;;) {
        ProjPoint b = random_point(rng, bound);
        if (!(base == b)) return LineP3::through(base, b);
    }
}

ParamCurve random_conic_through(Rng& rng, const ProjPoint& base, long bound) {
    for (;;) {
        ProjPoint b = random_point(rng, bound);
        ProjPoint c = random_point(rng, bound);
        try {
            return ParamCurve::conic_through(base, b, c);
        } catch (const DegenerateError&) {
            // collinear frame; redraw
        }
    }
}

DiagonalAuto random_diagonal(Rng& rng, long bound) {
    std::vector<Rat> w(4);
    for (auto& x : w) x = Rat(rng.nonzero(bound));
    return DiagonalAuto(w);
}

GenericLinePair random_generic_line_pair(Rng& rng, long bound, int retry_limit) {
    int rejected = 0;
    for (;;) {
        if (rejected > retry_limit)
            throw LimitError("no generic line pair found within " + std::to_string(retry_limit) +
                             " rejections");
        LineP3 l = random_line(rng, bound);
        LineP3 r = random_line(rng, bound);
        if (l == r || l.in_coordinate_plane() || r.in_coordinate_plane() ||
            !l.pluecker_all_nonzero() || !r.pluecker_all_nonzero() || in_hadamard_family(l, r)) {
            ++rejected;
            continue;
        }
        ProductMap pm =
            product_parametrization(ParamCurve::from_line(l), ParamCurve::from_line(r));
        if (!morphism_check(pm).is_morphism) {
            ++rejected;
            continue;
        }
        return {l, r, rejected};
    }
}

}  // namespace hadstar
