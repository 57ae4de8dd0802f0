#include "morse/homology.hpp"

#include <string>

#include "morse/error.hpp"

namespace morse {

void PresentedChainComplex::validate() const {
  if (boundary.size() != basis.size()) {
    throw Error(ErrorKind::NotAChainComplex, "one boundary matrix per degree is required");
  }
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const std::size_t rows = p == 0 ? 0 : basis[p - 1].size();
    if (boundary[p].rows() != rows || boundary[p].cols() != basis[p].size()) {
      throw Error(ErrorKind::NotAChainComplex, "boundary matrix of degree " + std::to_string(p) +
                                                   " has the wrong shape");
    }
  }
  for (std::size_t p = 2; p < basis.size(); ++p) {
    if (!(boundary[p - 1] * boundary[p]).is_zero()) {
      throw Error(ErrorKind::NotAChainComplex,
                  "boundary of boundary is nonzero in degree " + std::to_string(p));
    }
  }
}

Homology::Homology(const PresentedChainComplex& cc) {
  cc.validate();
  const std::size_t n = cc.basis.size();
  dims_.resize(n);
  boundary_rank_.resize(n + 1, 0);
  coboundary_rank_.resize(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    dims_[p] = cc.basis[p].size();
    boundary_rank_[p] = cc.boundary[p].rank();
  }
  for (std::size_t p = 0; p + 1 < n; ++p) coboundary_rank_[p] = cc.boundary[p + 1].transpose().rank();
}

std::size_t Homology::betti(int p) const {
  if (p < 0 || static_cast<std::size_t>(p) >= dims_.size()) return 0;
  const auto q = static_cast<std::size_t>(p);
  return dims_[q] - boundary_rank_[q] - boundary_rank_[q + 1];
}

std::size_t Homology::cobetti(int p) const {
  if (p < 0 || static_cast<std::size_t>(p) >= dims_.size()) return 0;
  const auto q = static_cast<std::size_t>(p);
  const std::size_t incoming = q == 0 ? 0 : coboundary_rank_[q - 1];
  return dims_[q] - coboundary_rank_[q] - incoming;
}

std::vector<std::size_t> Homology::betti_numbers() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < dims_.size(); ++p) out.push_back(betti(static_cast<int>(p)));
  return out;
}

std::vector<std::size_t> Homology::cobetti_numbers() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < dims_.size(); ++p) out.push_back(cobetti(static_cast<int>(p)));
  return out;
}

std::size_t betti(const PresentedChainComplex& cc, int p) { return Homology(cc).betti(p); }

std::size_t cobetti(const PresentedChainComplex& cc, int p) { return Homology(cc).cobetti(p); }

namespace {

void check_degree(const PresentedChainComplex& cc, int p, const BitVector& c) {
  if (p < 0 || p > cc.top_degree() || c.size() != cc.rank_of(p)) {
    throw Error(ErrorKind::DegreeMismatch, "chain does not live in degree " + std::to_string(p));
  }
}

}  // namespace

bool is_cycle(const PresentedChainComplex& cc, int p, const BitVector& c) {
  check_degree(cc, p, c);
  return !cc.boundary[static_cast<std::size_t>(p)].apply(c).any();
}

bool is_boundary(const PresentedChainComplex& cc, int p, const BitVector& c) {
  check_degree(cc, p, c);
  if (!c.any()) return true;
  if (p == cc.top_degree()) return false;
  return cc.boundary[static_cast<std::size_t>(p + 1)].solve(c).has_value();
}

bool homologous(const PresentedChainComplex& cc, int p, const BitVector& a, const BitVector& b) {
  check_degree(cc, p, a);
  check_degree(cc, p, b);
  return is_boundary(cc, p, a ^ b);
}

PresentedChainComplex complex_to_presented(const Complex& k) {
  PresentedChainComplex cc;
  const int top = k.dim();
  for (int p = 0; p <= top; ++p) {
    auto faces = k.faces(p);
    cc.basis.emplace_back(faces.begin(), faces.end());
    BitMatrix d(p == 0 ? 0 : k.count(p - 1), k.count(p));
    if (p > 0) {
      const FaceId lo = k.first_id(p - 1);
      const FaceId base = k.first_id(p);
      for (std::size_t j = 0; j < k.count(p); ++j) {
        for (FaceId f : k.boundary_ids(base + static_cast<FaceId>(j))) d.set(f - lo, j);
      }
    }
    cc.boundary.push_back(std::move(d));
  }
  return cc;
}

BitVector chain_vector(const Complex& k, const IdChain& c, int p) {
  BitVector v(k.count(p));
  const FaceId lo = k.first_id(p);
  for (FaceId id : c) {
    if (k.dim_of(id) != p) {
      throw Error(ErrorKind::DegreeMismatch, "face " + k.face(id).to_string() +
                                                 " is not of dimension " + std::to_string(p));
    }
    v.set(id - lo);
  }
  return v;
}

IdChain chain_from_vector(const Complex& k, const BitVector& v, int p) {
  std::vector<FaceId> ids;
  const FaceId lo = k.first_id(p);
  for (std::size_t i : v.support()) ids.push_back(lo + static_cast<FaceId>(i));
  return IdChain(std::move(ids));
}

bool is_cycle(const Chain& c, const Complex& k) {
  if (c.dim() == 0) {
    to_ids(k, c);
    return true;
  }
  return boundary_op(c, k).empty();
}

bool is_boundary(const Chain& c, const Complex& k) {
  const IdChain ids = to_ids(k, c);
  if (c.empty()) return true;
  return is_boundary(complex_to_presented(k), c.dim(), chain_vector(k, ids, c.dim()));
}

bool homologous(const Chain& a, const Chain& b, const Complex& k) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DegreeMismatch, "chains of dimensions " + std::to_string(a.dim()) + " and " +
                                               std::to_string(b.dim()) + " cannot be compared");
  }
  return is_boundary(a + b, k);
}

std::vector<std::size_t> betti_numbers(const Complex& k) {
  return Homology(complex_to_presented(k)).betti_numbers();
}

}  // namespace morse
