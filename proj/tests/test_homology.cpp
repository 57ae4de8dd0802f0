#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "morse/error.hpp"
#include "morse/homology.hpp"
#include "oracles.hpp"

using namespace morse;
using morse::testing::Rng;
using Counts = std::vector<std::size_t>;

namespace {

Simplex S(std::initializer_list<Vertex> v) { return Simplex(v); }

Counts cobetti_numbers(const Complex& k) { return Homology(complex_to_presented(k)).cobetti_numbers(); }

}  // namespace

TEST_CASE("betti numbers of the bundled complexes") {
  CHECK(betti_numbers(testing::full_simplex(3)) == Counts{1, 0, 0});
  CHECK(betti_numbers(testing::fixture("torus")) == Counts{1, 2, 1});
  CHECK(betti_numbers(testing::fixture("dunce_hat")) == Counts{1, 0, 0});
  CHECK(betti_numbers(testing::fixture("tetra_boundary")) == Counts{1, 0, 1});

  CHECK(cobetti_numbers(testing::fixture("torus")) == Counts{1, 2, 1});
  CHECK(cobetti_numbers(testing::fixture("tetra_boundary")) == Counts{1, 0, 1});
  CHECK(betti_numbers(Complex()).empty());
  CHECK(cobetti_numbers(Complex()).empty());
}

TEST_CASE("fixture triangulations have the advertised sizes") {
  const Complex torus = testing::fixture("torus");
  CHECK(torus.count(0) == 7);
  CHECK(torus.count(2) == 14);
  const Complex hat = testing::fixture("dunce_hat");
  CHECK(hat.count(0) == 8);
  CHECK(hat.count(2) == 17);
  // no free pair anywhere: every edge lies in two or three triangles
  CHECK(free_pairs(hat).empty());
}

TEST_CASE("a presented complex must square to zero") {
  PresentedChainComplex cc;
  cc.basis = {{S({1}), S({2})}, {S({1, 2})}, {S({1, 2, 3})}};
  cc.boundary = {BitMatrix(0, 2), BitMatrix(2, 1), BitMatrix(1, 1)};
  cc.boundary[1].set(0, 0);
  cc.boundary[1].set(1, 0);
  cc.boundary[2].set(0, 0);
  CHECK_THROWS_AS(cc.validate(), Error);
  try {
    betti(cc, 1);
    FAIL("expected NotAChainComplex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAChainComplex);
  }
}

TEST_CASE("cycles, boundaries and homology classes") {
  const Complex sphere = testing::fixture("tetra_boundary");
  const Chain rim = boundary(S({0, 1, 2}), sphere);
  CHECK(is_cycle(rim, sphere));
  CHECK(is_boundary(rim, sphere));
  CHECK_FALSE(is_cycle(Chain::of({S({0, 1}), S({1, 2})}), sphere));

  const Complex torus = testing::fixture("torus");
  std::vector<Simplex> loop;
  for (Vertex i = 0; i < 7; ++i) loop.push_back(Simplex({i, (i + 1) % 7}));
  const Chain z = Chain::of(loop);
  CHECK(is_cycle(z, torus));
  CHECK_FALSE(homologous(z, Chain(1), torus));
  CHECK(homologous(z, z, torus));

  try {
    homologous(z, Chain(0), torus);
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
  const auto cc = complex_to_presented(torus);
  CHECK_THROWS_AS(is_cycle(cc, 1, BitVector(3)), Error);
  CHECK_THROWS_AS(is_boundary(cc, 5, BitVector(0)), Error);
}

TEST_CASE("presentation of a complex") {
  const auto edge = complex_to_presented(Complex::closure(std::vector<std::vector<Vertex>>{{1, 2}}));
  REQUIRE(edge.boundary.size() == 2);
  CHECK(edge.boundary[1].rows() == 2);
  CHECK(edge.boundary[1].cols() == 1);
  CHECK(edge.boundary[1].column(0).count() == 2);

  CHECK(complex_to_presented(Complex()).basis.empty());

  const auto tri = complex_to_presented(testing::full_simplex(3));
  CHECK(tri.boundary[2].column(0).count() == 3);
  CHECK(tri.basis[1] == std::vector<Simplex>{S({1, 2}), S({1, 3}), S({2, 3})});
}

TEST_CASE("bit matrices: rank, kernel and solve against a dense reference") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = rng() % 70;
    const std::size_t cols = rng() % 70;
    BitMatrix m(rows, cols);
    std::vector<std::vector<std::uint8_t>> dense(rows, std::vector<std::uint8_t>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 3 == 0) {
          m.set(r, c);
          dense[r][c] = 1;
        }
      }
    }
    const std::size_t rank = oracle::rank_mod2(dense);
    CHECK(m.rank() == rank);
    CHECK(m.transpose().rank() == rank);
    const auto kernel = m.kernel_basis();
    CHECK(kernel.size() == cols - rank);
    for (const BitVector& v : kernel) CHECK_FALSE(m.apply(v).any());

    BitVector x(cols);
    for (std::size_t c = 0; c < cols; ++c) x.set(c, rng() % 2);
    const BitVector b = m.apply(x);
    const auto solved = m.solve(b);
    REQUIRE(solved.has_value());
    CHECK(m.apply(*solved) == b);
  }
}

TEST_CASE("random complexes: betti agrees with the dense oracle, cobetti and Euler characteristic") {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex k = testing::random_complex(rng);
    const Counts b = betti_numbers(k);
    CHECK(b == oracle::betti(k));
    CHECK(b == cobetti_numbers(k));
    long long euler_faces = 0;
    long long euler_betti = 0;
    for (int p = 0; p <= k.dim(); ++p) {
      const long long sign = p % 2 ? -1 : 1;
      euler_faces += sign * static_cast<long long>(k.count(p));
      euler_betti += sign * static_cast<long long>(b[static_cast<std::size_t>(p)]);
    }
    CHECK(euler_faces == euler_betti);
  }
}

TEST_CASE("random cycles: homology is an equivalence relation") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Complex k = testing::random_complex(rng);
    const auto cc = complex_to_presented(k);
    for (int p = 0; p <= k.dim(); ++p) {
      const auto kernel = cc.boundary[static_cast<std::size_t>(p)].kernel_basis();
      if (kernel.empty()) continue;
      auto cycle = [&] {
        BitVector v(cc.rank_of(p));
        for (const BitVector& g : kernel) {
          if (rng() % 2) v ^= g;
        }
        return v;
      };
      const BitVector a = cycle(), b = cycle(), c = cycle();
      CHECK(is_cycle(cc, p, a));
      CHECK(homologous(cc, p, a, a));
      CHECK(homologous(cc, p, a, b) == homologous(cc, p, b, a));
      if (homologous(cc, p, a, b) && homologous(cc, p, b, c)) CHECK(homologous(cc, p, a, c));
    }
  }
}
