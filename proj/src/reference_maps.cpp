#include "morse/reference_maps.hpp"

#include <random>

#include "morse/error.hpp"
#include "morse/sampling.hpp"

namespace morse {

IdChain Frame::apply(const IdChain& c) const {
  std::vector<FaceId> ids;
  for (FaceId id : c) {
    const IdChain& v = values_[id];
    ids.insert(ids.end(), v.begin(), v.end());
  }
  return IdChain(std::move(ids));
}

Chain Frame::of(const Simplex& s) const {
  return to_chain(k_, values_[k_.id_of(s)], s.dim());
}

Chain Frame::apply(const Chain& c) const { return to_chain(k_, apply(to_ids(k_, c)), c.dim()); }

namespace {

// Sum of the values of `ids` other than `skip`; each of them must already be
// assigned, which is where an out-of-order sequence would be caught.
IdChain sum_except(std::span<const FaceId> ids, FaceId skip, const std::vector<IdChain>& values,
                   const std::vector<bool>& assigned) {
  std::vector<FaceId> out;
  for (FaceId id : ids) {
    if (id == skip) continue;
    if (!assigned[id]) throw Error(ErrorKind::IllegalMove, "scan reached an unassigned face");
    out.insert(out.end(), values[id].begin(), values[id].end());
  }
  return IdChain(std::move(out));
}

}  // namespace

Frame reference_map(const IndexedSequence& seq) {
  const Complex& k = seq.complex();
  std::vector<IdChain> values(k.size());
  std::vector<bool> assigned(k.size(), false);
  for (const auto& st : seq.steps()) {
    if (st.critical()) {
      values[st.lower] = IdChain::single(st.lower);
    } else {
      values[st.lower] = sum_except(k.boundary_ids(st.upper), st.lower, values, assigned);
      assigned[st.upper] = true;
    }
    assigned[st.lower] = true;
  }
  return Frame(k, std::move(values));
}

Frame coreference_map(const IndexedSequence& seq) {
  const Complex& k = seq.complex();
  std::vector<IdChain> values(k.size());
  std::vector<bool> assigned(k.size(), false);
  const auto steps = seq.steps();
  for (std::size_t i = steps.size(); i-- > 0;) {
    const auto& st = steps[i];
    if (st.critical()) {
      values[st.lower] = IdChain::single(st.lower);
      assigned[st.lower] = true;
    } else {
      values[st.upper] = sum_except(k.coboundary_ids(st.lower), st.upper, values, assigned);
      assigned[st.upper] = true;
      assigned[st.lower] = true;
    }
  }
  return Frame(k, std::move(values));
}

// ---------------------------------------------------------------------------

CriticalComplex::CriticalComplex(const IndexedSequence& seq, const Frame& ref, const Frame& coref)
    : k_(seq.complex()), pos_(seq.complex().size(), 0) {
  const int d = k_.dim();
  for (int p = 0; p <= d; ++p) {
    basis_.push_back(seq.critical(p));
    for (std::size_t i = 0; i < basis_.back().size(); ++i) pos_[basis_.back()[i]] = i;
  }
  for (int p = 0; p <= d; ++p) {
    const auto& cols = basis_[static_cast<std::size_t>(p)];
    BitMatrix bd(p == 0 ? 0 : basis_[static_cast<std::size_t>(p - 1)].size(), cols.size());
    BitMatrix cobd(p == d ? 0 : basis_[static_cast<std::size_t>(p + 1)].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const IdChain kappa = IdChain::single(cols[j]);
      if (p > 0) {
        for (FaceId f : ref.apply(boundary_ids(kappa, k_))) bd.set(pos_[f], j);
      }
      if (p < d) {
        for (FaceId f : coref.apply(coboundary_ids(kappa, k_))) cobd.set(pos_[f], j);
      }
    }
    boundary_.push_back(std::move(bd));
    coboundary_.push_back(std::move(cobd));
  }
}

const std::vector<FaceId>& CriticalComplex::basis(int p) const {
  static const std::vector<FaceId> kEmpty;
  if (p < 0 || p > top()) return kEmpty;
  return basis_[static_cast<std::size_t>(p)];
}

IdChain CriticalComplex::boundary(FaceId kappa) const {
  const int p = k_.dim_of(kappa);
  if (p == 0) return {};
  std::vector<FaceId> ids;
  const auto& rows = basis_[static_cast<std::size_t>(p - 1)];
  const BitMatrix& m = boundary_[static_cast<std::size_t>(p)];
  const std::size_t j = pos_[kappa];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.get(r, j)) ids.push_back(rows[r]);
  }
  return IdChain(std::move(ids));
}

IdChain CriticalComplex::coboundary(FaceId kappa) const {
  const int p = k_.dim_of(kappa);
  if (p == top()) return {};
  std::vector<FaceId> ids;
  const auto& rows = basis_[static_cast<std::size_t>(p + 1)];
  const BitMatrix& m = coboundary_[static_cast<std::size_t>(p)];
  const std::size_t j = pos_[kappa];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.get(r, j)) ids.push_back(rows[r]);
  }
  return IdChain(std::move(ids));
}

IdChain CriticalComplex::boundary(const IdChain& c) const {
  IdChain out;
  for (FaceId id : c) out += boundary(id);
  return out;
}

IdChain CriticalComplex::coboundary(const IdChain& c) const {
  IdChain out;
  for (FaceId id : c) out += coboundary(id);
  return out;
}

PresentedChainComplex CriticalComplex::presented() const {
  PresentedChainComplex cc;
  for (const auto& ids : basis_) {
    std::vector<Simplex> labels;
    for (FaceId id : ids) labels.push_back(k_.face(id));
    cc.basis.push_back(std::move(labels));
  }
  cc.boundary = boundary_;
  return cc;
}

std::vector<std::size_t> CriticalComplex::betti_numbers() const {
  return Homology(presented()).betti_numbers();
}

std::vector<std::size_t> CriticalComplex::cobetti_numbers() const {
  std::vector<std::size_t> rank;
  for (const BitMatrix& m : coboundary_) rank.push_back(m.rank());
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < basis_.size(); ++p) {
    const std::size_t incoming = p == 0 ? 0 : rank[p - 1];
    out.push_back(basis_[p].size() - rank[p] - incoming);
  }
  return out;
}

CriticalComplex critical_complex(const IndexedSequence& seq, const Frame& ref, const Frame& coref) {
  return CriticalComplex(seq, ref, coref);
}

std::size_t chain_map_defect(const IndexedSequence& seq, const Frame& ref,
                             const CriticalComplex& crit, std::size_t samples, std::uint64_t seed) {
  const Complex& k = seq.complex();
  std::size_t defects = 0;
  auto test = [&](const IdChain& c) {
    if (crit.boundary(ref.apply(c)) != ref.apply(boundary_ids(c, k))) ++defects;
  };
  for (FaceId id = 0; id < k.size(); ++id) test(IdChain::single(id));
  std::mt19937_64 rng(seed);
  for (int p = 0; p <= k.dim(); ++p) {
    for (std::size_t s = 0; s < samples; ++s) test(random_chain(k, p, rng));
  }
  return defects;
}

std::size_t cochain_map_defect(const IndexedSequence& seq, const Frame& coref,
                               const CriticalComplex& crit, std::size_t samples,
                               std::uint64_t seed) {
  const Complex& k = seq.complex();
  std::size_t defects = 0;
  auto test = [&](const IdChain& c) {
    if (crit.coboundary(coref.apply(c)) != coref.apply(coboundary_ids(c, k))) ++defects;
  };
  for (FaceId id = 0; id < k.size(); ++id) test(IdChain::single(id));
  std::mt19937_64 rng(seed);
  for (int p = 0; p <= k.dim(); ++p) {
    for (std::size_t s = 0; s < samples; ++s) test(random_chain(k, p, rng));
  }
  return defects;
}

bool duality_check(const CriticalComplex& crit) {
  for (int p = 0; p < crit.top(); ++p) {
    if (crit.boundary_matrix(p + 1) != crit.coboundary_matrix(p).transpose()) return false;
  }
  return true;
}

}  // namespace morse
