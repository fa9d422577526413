#include <random>

#include "doctest.h"
#include "hadstar/matrix.hpp"
#include "oracles.hpp"

using namespace hadstar;

namespace {

Mat random_matrix(std::mt19937_64& rng, int n, int coeff_range = 9) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long num = static_cast<long>(rng() % (2 * coeff_range + 1)) - coeff_range;
            long den = 1 + static_cast<long>(rng() % 3);
            Rat x(num, den);
            x.canonicalize();
            m.at(i, j) = x;
        }
    return m;
}

/// Gram matrix of x0*x3 - x1*x2 (antidiagonal 1/2, -1/2, -1/2, 1/2).
Mat segre_gram() {
    Rat h(1, 2);
    return Mat{{0, 0, 0, h}, {0, 0, -h, 0}, {0, -h, 0, 0}, {h, 0, 0, 0}};
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_parse("3/6") == Rat(1, 2));
    CHECK(rat_parse("-4/2") == Rat(-2));
    CHECK(rat_parse("7") == Rat(7));
    CHECK(rat_str(rat_parse("-10/4")) == "-5/2");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK_THROWS_AS(rat_parse("1/0"), InputError);
    CHECK_THROWS_AS(rat_parse("a"), InputError);
    CHECK_THROWS_AS(rat_parse("1.5"), InputError);
    CHECK_THROWS_AS(rat_parse(""), InputError);
    CHECK_THROWS_AS(rat_parse("1/ 2"), InputError);
}

TEST_CASE("primitive normalization") {
    std::vector<Rat> v{Rat(1, 2), Rat(0), Rat(-3, 4)};
    make_primitive(v);
    CHECK(v == std::vector<Rat>{Rat(2), Rat(0), Rat(-3)});

    std::vector<Rat> w{Rat(0), Rat(-4), Rat(6)};
    make_primitive(w);  // first nonzero must become positive
    CHECK(w == std::vector<Rat>{Rat(0), Rat(2), Rat(-3)});

    std::vector<Rat> z{Rat(0), Rat(0)};
    make_primitive(z);
    CHECK(z == std::vector<Rat>{Rat(0), Rat(0)});
}

TEST_CASE("rref of the two-line span") {
    // [[0,1,0,1],[1,0,1,0]] -> [[1,0,1,0],[0,1,0,1]], pivots 0,1
    Mat m{{0, 1, 0, 1}, {1, 0, 1, 0}};
    std::vector<int> pivots;
    Mat r = rref(m, &pivots);
    CHECK(r == Mat{{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(pivots == std::vector<int>{0, 1});
    CHECK(rank(m) == 2);
}

TEST_CASE("rref fixpoint and idempotence property") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 25; ++t) {
        Mat m(3 + static_cast<int>(rng() % 3), 4);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
        Mat r = rref(m);
        CHECK(rref(r) == r);
    }
}

TEST_CASE("kernel basis is exact and primitive") {
    // x + y + z = 0 over 3 columns: kernel dim 2.
    Mat m{{1, 1, 1}};
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        Rat dot = 0;
        for (int c = 0; c < 3; ++c) dot += m.at(0, c) * v[c];
        CHECK(dot == 0);
        // primitive-integer: all denominators 1, first nonzero positive
        bool seen = false;
        for (const Rat& x : v) {
            CHECK(x.get_den() == 1);
            if (!seen && x != 0) {
                CHECK(x > 0);
                seen = true;
            }
        }
    }

    Mat full{{1, 0}, {0, 1}};
    CHECK(kernel_basis(full).empty());
}

TEST_CASE("kernel vectors annihilate random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        int rows = 2 + static_cast<int>(rng() % 3), cols = 4 + static_cast<int>(rng() % 3);
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(static_cast<long>(rng() % 9) - 4);
        auto basis = kernel_basis(m);
        CHECK(static_cast<int>(basis.size()) == cols - rank(m));
        for (const auto& v : basis)
            for (int i = 0; i < rows; ++i) {
                Rat dot = 0;
                for (int j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("determinant matches the cofactor oracle") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        Mat m = random_matrix(rng, n);
        CHECK(det_bareiss(m) == oracles::det_cofactor(m));
    }
    CHECK(det_bareiss(Mat(0, 0)) == 1);
    CHECK(det_bareiss(Mat::identity(4)) == 1);
}

TEST_CASE("determinant of the Segre Gram matrix") {
    Mat g = segre_gram();
    CHECK(oracles::det_cofactor(g) == Rat(1, 16));  // oracle value, frozen
    CHECK(det_bareiss(g) == Rat(1, 16));
}

TEST_CASE("determinant is multiplicative and alternating") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) {
        Mat a = random_matrix(rng, 4), b = random_matrix(rng, 4);
        CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
    }
    Mat repeated{{1, 2, 3}, {1, 2, 3}, {4, 5, 6}};
    CHECK(det_bareiss(repeated) == 0);
}

TEST_CASE("adjugate identity on random matrices") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        Mat m = random_matrix(rng, n);
        Mat adj = adjugate(m);
        Rat d = det_bareiss(m);
        Mat left = m * adj, right = adj * m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat want = (i == j) ? d : Rat(0);
                CHECK(left.at(i, j) == want);
                CHECK(right.at(i, j) == want);
            }
    }
    Mat one{{Rat(-7)}};
    CHECK(adjugate(one) == Mat{{1}});
}

TEST_CASE("adjugate of the Segre Gram matrix has zero diagonal") {
    Mat adj = adjugate(segre_gram());
    for (int i = 0; i < 4; ++i) CHECK(adj.at(i, i) == 0);
    // Full value pinned: antidiagonal (1/8, -1/8, -1/8, 1/8).
    Rat e(1, 8);
    CHECK(adj == Mat{{0, 0, 0, e}, {0, 0, -e, 0}, {0, -e, 0, 0}, {e, 0, 0, 0}});
}

TEST_CASE("singular matrices: rank drop, zero determinant, adjugate rank") {
    Mat m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};  // row1 = 2*row0
    CHECK(rank(m) == 2);
    CHECK(det_bareiss(m) == 0);
    Mat adj = adjugate(m);
    Mat z = m * adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(z.at(i, j) == 0);
}
