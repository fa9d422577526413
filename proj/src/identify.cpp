#include "hadstar/identify.hpp"

#include <random>

#include "hadstar/errors.hpp"

namespace hadstar {

LineP3 line_from_chart(const ChartLine& c) {
    return LineP3::through(ProjPoint(Rat(0), Rat(1), c.a1, c.a2), ProjPoint(Rat(1), Rat(0), c.a3, c.a4));
}

std::array<std::vector<Rat>, 4> plane_points_from_chart(const ChartLine& c) {
    Rat d = c.a2 * c.a3 - c.a1 * c.a4;
    return {std::vector<Rat>{0, 1, c.a1, c.a2}, std::vector<Rat>{1, 0, c.a3, c.a4},
            std::vector<Rat>{-c.a1, c.a3, 0, d}, std::vector<Rat>{-c.a2, c.a4, -d, 0}};
}

std::array<std::vector<Rat>, 4> center_vectors_from_charts(const ChartLine& l, const ChartLine& m) {
    auto p = plane_points_from_chart(l), q = plane_points_from_chart(m);
    std::array<std::vector<Rat>, 4> o;
    for (size_t i = 0; i < 4; ++i) {
        o[i].resize(4);
        for (size_t j = 0; j < 4; ++j) o[i][j] = p[i][j] * q[i][j];
    }
    return o;
}

Mat build_system_raw(const std::array<std::vector<Rat>, 4>& centers) {
    std::vector<Exp> monos = monomials_of_degree(4, 2);
    Mat m(12, 10);
    int row = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            for (size_t k = 0; k < monos.size(); ++k) {
                Poly dm = Poly::monomial(4, monos[k], Rat(1)).derivative(j);
                m.at(row, static_cast<int>(k)) = dm.evaluate(centers[static_cast<size_t>(i)]);
            }
            ++row;
        }
    }
    return m;
}

Mat build_system(const std::array<ProjPoint, 4>& centers) {
    std::array<std::vector<Rat>, 4> raw;
    for (size_t i = 0; i < 4; ++i) {
        if (centers[i][i] != 0)
            throw InputError("center " + std::to_string(i) + " = " + centers[i].str() +
                             " must lie on the coordinate plane {x" + std::to_string(i) + " = 0}");
        raw[i] = centers[i].coords();
    }
    return build_system_raw(raw);
}

Quadric reconstruct(const std::array<ProjPoint, 4>& centers) {
    Mat sys = build_system(centers);
    std::vector<std::vector<Rat>> ker = kernel_basis(sys);
    if (ker.empty())
        throw ReconstructError(ReconstructError::Kind::Inconsistent,
                               "no quadric has singular plane sections at the given centers");
    if (ker.size() > 1)
        throw ReconstructError(ReconstructError::Kind::Degenerate,
                               "the centers admit a " + std::to_string(ker.size()) +
                                   "-dimensional family of quadrics");
    return Quadric(ker[0]);
}

std::array<ProjPoint, 4> example_family_centers(const Rat& a, const Rat& b) {
    auto raw = center_vectors_from_charts({Rat(1), Rat(1), a, b}, {Rat(1), Rat(2), Rat(1), Rat(1)});
    return {ProjPoint(raw[0]), ProjPoint(raw[1]), ProjPoint(raw[2]), ProjPoint(raw[3])};
}

std::array<ProjPoint, 4> example_family_centers_variant(const Rat& a, const Rat& b) {
    auto o = example_family_centers(a, b);
    std::vector<Rat> last = o[3].coords();
    last[2] = -last[2];
    return {o[0], o[1], o[2], ProjPoint(std::move(last))};
}

Poly example_center_det(bool variant) {
    Poly a = Poly::variable(2, 0), b = Poly::variable(2, 1);
    auto k = [](long v) { return Poly::constant(2, Rat(v)); };
    std::vector<std::vector<Poly>> m{
        {k(0), k(1), k(1), k(2)},
        {k(1), k(0), a, b},
        {k(1), a, k(0), a - b},
        {k(2), b, variant ? b - a : a - b, k(0)},
    };
    return poly_det(m);
}

namespace {

Rat draw_nonzero(std::mt19937_64& rng) {
    long v = 1 + static_cast<long>(rng() % 50);
    if (rng() % 2) v = -v;
    return Rat(v);
}

/// Chart coordinates (a1..a4, b1..b4) with the listed indices forced to zero.
std::pair<ChartLine, ChartLine> draw_charts(std::mt19937_64& rng, const std::vector<int>& zeroed) {
    std::array<Rat, 8> c;
    for (auto& x : c) x = draw_nonzero(rng);
    for (int i : zeroed) c[static_cast<size_t>(i)] = 0;
    return {ChartLine{c[0], c[1], c[2], c[3]}, ChartLine{c[4], c[5], c[6], c[7]}};
}

/// All 10x10 minors of the 12x10 system vanish.
bool all_top_minors_vanish(const Mat& m) {
    for (int skip1 = 0; skip1 < 12; ++skip1)
        for (int skip2 = skip1 + 1; skip2 < 12; ++skip2) {
            Mat sub(10, 10);
            int r = 0;
            for (int i = 0; i < 12; ++i) {
                if (i == skip1 || i == skip2) continue;
                for (int j = 0; j < 10; ++j) sub.at(r, j) = m.at(i, j);
                ++r;
            }
            if (det_bareiss(sub) != 0) return false;
        }
    return true;
}

const std::vector<std::pair<std::vector<std::string>, std::vector<int>>>& degeneracy_components() {
    static const std::vector<std::pair<std::vector<std::string>, std::vector<int>>> comps{
        {{"a1", "a2"}, {0, 1}},
        {{"a1", "a3"}, {0, 2}},
        {{"a2", "a4"}, {1, 3}},
        {{"a3", "a4"}, {2, 3}},
        {{"b1", "b2"}, {4, 5}},
        {{"b1", "b3"}, {4, 6}},
        {{"b2", "b4"}, {5, 7}},
        {{"b3", "b4"}, {6, 7}},
        {{"a4", "b1"}, {3, 4}},
        {{"a3", "b2"}, {2, 5}},
        {{"a2", "b3"}, {1, 6}},
        {{"a1", "b4"}, {0, 7}},
        {{"a1", "a4", "b2", "b3"}, {0, 3, 5, 6}},
        {{"a2", "a3", "b1", "b4"}, {1, 2, 4, 7}},
    };
    return comps;
}

}  // namespace

SurveyResult degeneracy_survey(int generic_samples, int per_component, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SurveyResult res;
    res.generic_samples = generic_samples;
    res.generic_rank_min = 10;
    res.generic_rank_max = 0;
    res.never_exceeds_9 = true;
    res.minor_cross_check = true;
    for (int s = 0; s < generic_samples; ++s) {
        auto [l, m] = draw_charts(rng, {});
        Mat sys = build_system_raw(center_vectors_from_charts(l, m));
        int r = rank(sys);
        res.generic_rank_min = std::min(res.generic_rank_min, r);
        res.generic_rank_max = std::max(res.generic_rank_max, r);
        res.never_exceeds_9 = res.never_exceeds_9 && r <= 9;
        if (s < 2) res.minor_cross_check = res.minor_cross_check && all_top_minors_vanish(sys);
    }
    res.generic_all_rank_9 = generic_samples > 0 && res.generic_rank_min == 9 && res.generic_rank_max == 9;
    for (const auto& [names, idx] : degeneracy_components()) {
        ComponentReport rep;
        rep.vanishing = names;
        rep.samples = per_component;
        rep.all_rank_le_8 = true;
        for (int s = 0; s < per_component; ++s) {
            auto [l, m] = draw_charts(rng, idx);
            int r = rank(build_system_raw(center_vectors_from_charts(l, m)));
            rep.max_rank = std::max(rep.max_rank, r);
            rep.all_rank_le_8 = rep.all_rank_le_8 && r <= 8;
            res.never_exceeds_9 = res.never_exceeds_9 && r <= 9;
        }
        res.components.push_back(std::move(rep));
    }
    return res;
}

}  // namespace hadstar
