#include "doctest.h"
#include "nilorb/errors.hpp"
#include "nilorb/lie_algebra.hpp"

using namespace nilorb;

namespace {

// [[a,b],c] + [[b,c],a] + [[c,a],b] over basis triples.
bool jacobi_holds(const LieAlgebra& L, std::size_t a, std::size_t b, std::size_t c) {
    const auto A = LieElement::basis(L, a);
    const auto B = LieElement::basis(L, b);
    const auto C = LieElement::basis(L, c);
    const auto s = bracket(bracket(A, B), C) + bracket(bracket(B, C), A) + bracket(bracket(C, A), B);
    return s.is_zero();
}

int string_length(const RootSystem& rs, int a, int b) {
    Coeffs c = rs.coeffs(b);
    const Coeffs ca = rs.coeffs(a);
    int p = 0;
    while (true) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= ca[i];
        if (!rs.find(c)) return p;
        ++p;
    }
}

}  // namespace

TEST_CASE("Jacobi identity on all basis triples of G2") {
    const LieAlgebra& L = algebra_for(Kind::G2);
    REQUIRE(L.dim() == 14);
    for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = 0; b < L.dim(); ++b)
            for (std::size_t c = 0; c < L.dim(); ++c) REQUIRE(jacobi_holds(L, a, b, c));
}

TEST_CASE("Jacobi identity on root-vector triples of F4 and E6") {
    for (Kind k : {Kind::F4, Kind::E6}) {
        const LieAlgebra& L = algebra_for(k);
        for (std::size_t a = 0; a < L.dim(); a += 3)
            for (std::size_t b = 0; b < L.dim(); b += 2)
                for (std::size_t c = 0; c < L.dim(); ++c) REQUIRE(jacobi_holds(L, a, b, c));
    }
}

TEST_CASE("Jacobi identity on sampled E8 triples") {
    const LieAlgebra& L = algebra_for(Kind::E8);
    REQUIRE(L.dim() == 248);
    for (std::size_t a = 0; a < L.dim(); a += 7)
        for (std::size_t b = 1; b < L.dim(); b += 11)
            for (std::size_t c = 2; c < L.dim(); c += 5) REQUIRE(jacobi_holds(L, a, b, c));
}

TEST_CASE("structure constants are +-(p+1) and antisymmetric") {
    for (Kind k : all_kinds) {
        const LieAlgebra& L = algebra_for(k);
        const RootSystem& rs = L.roots();
        const int n = static_cast<int>(rs.num_positive());
        for (int a = -n; a <= n; ++a) {
            if (a == 0) continue;
            for (int b = -n; b <= n; ++b) {
                if (b == 0 || a == -b) continue;
                Coeffs s = rs.coeffs(a);
                const Coeffs cb = rs.coeffs(b);
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += cb[i];
                const int N = L.structure_constant(a, b);
                if (!rs.find(s)) {
                    CHECK(N == 0);
                    continue;
                }
                const int p = string_length(rs, a, b);
                CHECK(std::abs(N) == p + 1);
                CHECK(L.structure_constant(b, a) == -N);
                CHECK(L.structure_constant(-a, -b) == -N);
            }
        }
    }
}

TEST_CASE("Chevalley relations for simple generators") {
    const LieAlgebra& L = algebra_for(Kind::F4);
    for (std::size_t i = 0; i < L.rank(); ++i) {
        const auto x = LieElement::basis(L, L.x_index(i + 1));
        const auto y = LieElement::basis(L, L.y_index(i + 1));
        CHECK(bracket(x, y) == LieElement::basis(L, L.h_index(i)));
        for (std::size_t j = 0; j < L.rank(); ++j) {
            const auto h = LieElement::basis(L, L.h_index(j));
            const int cij = L.roots().cartan()[i][j];
            CHECK(bracket(h, x) == Rational(cij) * x);
            CHECK(bracket(h, y) == Rational(-cij) * y);
        }
    }
}

TEST_CASE("ad matrix columns are brackets") {
    const LieAlgebra& L = algebra_for(Kind::G2);
    const auto e = LieElement::basis(L, 0) + Rational(3) * LieElement::basis(L, 4);
    const RatMatrix ad = ad_matrix(e);
    for (std::size_t j = 0; j < L.dim(); ++j) {
        const auto col = bracket(e, LieElement::basis(L, j)).to_vector();
        for (std::size_t i = 0; i < L.dim(); ++i) CHECK(ad(i, j) == col[i]);
    }
}

TEST_CASE("bracket rejects elements of different algebras") {
    const auto a = LieElement::basis(algebra_for(Kind::G2), 0);
    const auto b = LieElement::basis(algebra_for(Kind::F4), 0);
    CHECK_THROWS_AS(bracket(a, b), InputError);
}

TEST_CASE("grading by a Cartan element") {
    const LieAlgebra& L = algebra_for(Kind::G2);
    LieElement h(L);
    h.add(L.h_index(0), 1);
    const Grading g = grade(L, h);
    CHECK(g.degree[L.x_index(1)] == 2);
    CHECK(g.degree[L.y_index(1)] == -2);
    CHECK(g.component(0).size() >= 2);
    CHECK_THROWS_AS(grade(L, LieElement::basis(L, 0)), InputError);
    LieElement half(L);
    half.add(L.h_index(0), Rational(1, 3));
    CHECK_THROWS_AS(grade(L, half), InputError);
}
