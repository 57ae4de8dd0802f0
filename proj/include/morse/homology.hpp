#pragma once

#include <cstddef>
#include <vector>

#include "morse/bitmatrix.hpp"
#include "morse/complex.hpp"

namespace morse {

/// A finite chain complex over Z/2 given by bases and boundary matrices.
/// boundary[p] maps degree p to degree p-1 and has |basis[p-1]| rows and
/// |basis[p]| columns; boundary[0] has zero rows.
struct PresentedChainComplex {
  std::vector<std::vector<Simplex>> basis;
  std::vector<BitMatrix> boundary;

  int top_degree() const noexcept { return static_cast<int>(basis.size()) - 1; }
  std::size_t rank_of(int p) const noexcept {
    return p < 0 || p > top_degree() ? 0 : basis[static_cast<std::size_t>(p)].size();
  }
  /// Raises NotAChainComplex when shapes disagree or some composite
  /// boundary[p-1] * boundary[p] is nonzero.
  void validate() const;
};

/// Ranks of every boundary matrix, computed once, plus the ranks of the
/// transposed (coboundary) matrices computed independently.
class Homology {
 public:
  explicit Homology(const PresentedChainComplex& cc);

  std::size_t betti(int p) const;
  std::size_t cobetti(int p) const;
  std::vector<std::size_t> betti_numbers() const;
  std::vector<std::size_t> cobetti_numbers() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> boundary_rank_;    // rank of boundary[p]
  std::vector<std::size_t> coboundary_rank_;  // rank of transpose(boundary[p+1])
};

std::size_t betti(const PresentedChainComplex& cc, int p);
std::size_t cobetti(const PresentedChainComplex& cc, int p);

/// Degree-p chains are bit vectors over basis[p]; a wrong length or degree
/// raises DegreeMismatch.
bool is_cycle(const PresentedChainComplex& cc, int p, const BitVector& c);
bool is_boundary(const PresentedChainComplex& cc, int p, const BitVector& c);
bool homologous(const PresentedChainComplex& cc, int p, const BitVector& a, const BitVector& b);

PresentedChainComplex complex_to_presented(const Complex& k);
/// Coordinates of a chain of k in the basis used by complex_to_presented.
BitVector chain_vector(const Complex& k, const IdChain& c, int p);
IdChain chain_from_vector(const Complex& k, const BitVector& v, int p);

bool is_cycle(const Chain& c, const Complex& k);
bool is_boundary(const Chain& c, const Complex& k);
bool homologous(const Chain& a, const Chain& b, const Complex& k);
std::vector<std::size_t> betti_numbers(const Complex& k);

}  // namespace morse
