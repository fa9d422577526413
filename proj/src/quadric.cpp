#include "hadstar/quadric.hpp"

#include <algorithm>

#include "hadstar/errors.hpp"

namespace hadstar {

namespace {

/// Position of monomial x_i x_j (i <= j) in the coefficient basis.
int coeff_index(int i, int j) {
    static constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 4, 5, 6}, {2, 5, 7, 8}, {3, 6, 8, 9}};
    return idx[i][j];
}

}  // namespace

Quadric::Quadric(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.size() != 10) throw InputError("quadric needs exactly 10 coefficients");
    make_primitive(c_);
    if (std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; }))
        throw InputError("quadric has all coefficients zero");
}

Quadric Quadric::from_poly(const Poly& p) {
    if (p.nvars() != 4) throw InputError("quadric polynomial must live in the ring x0..x3");
    if (p.is_zero() || p.degree() != 2 || !p.is_homogeneous())
        throw InputError("quadric polynomial must be homogeneous of degree 2");
    std::vector<Exp> monos = monomials_of_degree(4, 2);
    std::vector<Rat> c(10);
    for (size_t k = 0; k < monos.size(); ++k) c[k] = p.coeff(monos[k]);
    return Quadric(std::move(c));
}

Quadric Quadric::from_gram(const Mat& g) {
    if (g.rows() != 4 || g.cols() != 4) throw InputError("Gram matrix must be 4x4");
    if (g != g.transposed()) throw InputError("Gram matrix must be symmetric");
    std::vector<Rat> c(10);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) c[static_cast<size_t>(coeff_index(i, j))] = i == j ? g.at(i, i) : 2 * g.at(i, j);
    return Quadric(std::move(c));
}

Poly Quadric::poly() const {
    Poly p(4);
    std::vector<Exp> monos = monomials_of_degree(4, 2);
    for (size_t k = 0; k < monos.size(); ++k) p.add_term(monos[k], c_[k]);
    return p;
}

Mat Quadric::gram() const {
    Mat g(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Rat& c = c_[static_cast<size_t>(coeff_index(std::min(i, j), std::max(i, j)))];
            g.at(i, j) = i == j ? c : c / 2;
        }
    return g;
}

int Quadric::rank() const { return hadstar::rank(gram()); }

std::array<Rat, 4> Quadric::adjugate_diagonal() const {
    Mat adj = adjugate(gram());
    return {adj.at(0, 0), adj.at(1, 1), adj.at(2, 2), adj.at(3, 3)};
}

bool Quadric::adjugate_diagonal_vanishes() const {
    auto d = adjugate_diagonal();
    return std::all_of(d.begin(), d.end(), [](const Rat& x) { return x == 0; });
}

PlaneSection restrict_to_plane(const Quadric& q, int i) {
    if (i < 0 || i > 3) throw InputError("coordinate plane index must be 0..3");
    Mat g = q.gram();
    PlaneSection sec;
    sec.plane = i;
    sec.gram3 = Mat(3, 3);
    std::vector<int> keep;
    for (int j = 0; j < 4; ++j)
        if (j != i) keep.push_back(j);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) sec.gram3.at(r, c) = g.at(keep[static_cast<size_t>(r)], keep[static_cast<size_t>(c)]);
    sec.rank = rank(sec.gram3);
    switch (sec.rank) {
        case 3: sec.cls = SectionClass::SmoothConic; break;
        case 2: sec.cls = SectionClass::ReducibleConic; break;
        case 1: sec.cls = SectionClass::DoubleLine; break;
        default: sec.cls = SectionClass::Zero; break;
    }
    if (sec.rank == 2) {
        std::vector<std::vector<Rat>> ker = kernel_basis(sec.gram3);
        if (ker.size() != 1) throw InternalError("rank-2 section must have a 1-dimensional kernel");
        std::vector<Rat> c(4, Rat(0));
        for (size_t r = 0; r < 3; ++r) c[static_cast<size_t>(keep[r])] = ker[0][r];
        sec.center = ProjPoint(std::move(c));
    }
    return sec;
}

SclResult scl(const Quadric& q) {
    SclResult res;
    for (int i = 0; i < 4; ++i) res.sections[static_cast<size_t>(i)] = restrict_to_plane(q, i);
    res.all_sections_singular =
        std::all_of(res.sections.begin(), res.sections.end(), [](const PlaneSection& s) { return s.rank <= 2; });
    bool unique_centers =
        std::all_of(res.sections.begin(), res.sections.end(), [](const PlaneSection& s) { return s.rank == 2; });
    if (!unique_centers) return res;
    res.centers = {*res.sections[0].center, *res.sections[1].center, *res.sections[2].center,
                   *res.sections[3].center};
    const auto& o = *res.centers;
    bool distinct = true;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) distinct = distinct && !(o[i] == o[j]);
    res.centers_distinct = distinct;
    bool off = true;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            if (j != i) off = off && o[i][j] != 0;
    res.centers_off_other_planes = off;
    Mat m(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = o[static_cast<size_t>(r)][static_cast<size_t>(c)];
    res.center_matrix_det = det_bareiss(m);
    res.centers_coplanar = *res.center_matrix_det == 0;
    return res;
}

FamilyCheck family_check(const Quadric& q) {
    FamilyCheck fc;
    fc.smooth = q.is_smooth();
    auto d = q.adjugate_diagonal();
    for (size_t i = 0; i < 4; ++i) fc.tangent_to_plane[i] = d[i] == 0;
    fc.adjugate_diagonal_zero =
        std::all_of(fc.tangent_to_plane.begin(), fc.tangent_to_plane.end(), [](bool b) { return b; });
    fc.smooth_family_member = fc.smooth && fc.adjugate_diagonal_zero;
    return fc;
}

}  // namespace hadstar
