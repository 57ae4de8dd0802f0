#include <set>

#include "morse/error.hpp"
#include "morse/morse_sequence.hpp"

namespace morse {

SkeletonSequence::SkeletonSequence(const IndexedSequence& seq) : k_(seq.complex()) {
  const int d = k_.dim();
  for (int p = 0; p <= d; ++p) {
    std::vector<bool> lo(k_.size(), false);
    std::vector<bool> up(k_.size(), false);
    for (FaceId id = 0; id < k_.size(); ++id) {
      const int q = k_.dim_of(id);
      const FaceRole r = seq.role(id);
      lo[id] = r == FaceRole::Upper ? q <= p : q <= p - 1;
      up[id] = r == FaceRole::Lower ? q <= p - 1 : q <= p;
    }
    lower_.push_back(std::move(lo));
    upper_.push_back(std::move(up));
  }
}

namespace {

Complex materialize(const Complex& k, const std::vector<bool>& mask) {
  std::vector<Simplex> faces;
  for (FaceId id = 0; id < k.size(); ++id) {
    if (mask[id]) faces.push_back(k.face(id));
  }
  return Complex::from_faces(std::move(faces));
}

}  // namespace

Complex SkeletonSequence::lower(int p) const { return materialize(k_, lower_mask(p)); }

Complex SkeletonSequence::upper(int p) const { return materialize(k_, upper_mask(p)); }

SkeletonSequence skeletons(const IndexedSequence& seq) { return SkeletonSequence(seq); }

SkeletonCollapse check_skeleton_collapse(const IndexedSequence& seq) {
  const Complex& k = seq.complex();
  const SkeletonSequence sk(seq);
  SkeletonCollapse out;
  out.ok = true;
  for (int p = 0; p < k.dim(); ++p) {
    std::vector<bool> in = sk.lower_mask(p + 1);
    const std::vector<bool>& target = sk.upper_mask(p);
    std::vector<std::uint32_t> cofaces(k.size(), 0);
    for (FaceId id = 0; id < k.size(); ++id) {
      if (!in[id]) continue;
      for (FaceId b : k.boundary_ids(id)) ++cofaces[b];
    }
    auto upper_of = [&](FaceId s) {
      for (FaceId c : k.coboundary_ids(s)) {
        if (in[c]) return c;
      }
      return kNoFace;
    };
    std::set<std::pair<FaceId, FaceId>> free;  // (upper, lower)
    auto consider = [&](FaceId s) {
      if (in[s] && !target[s] && cofaces[s] == 1) free.insert({upper_of(s), s});
    };
    for (FaceId id = 0; id < k.size(); ++id) consider(id);

    std::vector<std::pair<Simplex, Simplex>> steps;
    while (!free.empty()) {
      const auto [tau, sigma] = *free.begin();
      free.erase(free.begin());
      if (!in[sigma] || !in[tau] || cofaces[sigma] != 1 || upper_of(sigma) != tau) continue;
      if (cofaces[tau] != 0) continue;
      in[tau] = false;
      in[sigma] = false;
      for (FaceId b : k.boundary_ids(tau)) --cofaces[b];
      for (FaceId b : k.boundary_ids(sigma)) --cofaces[b];
      steps.emplace_back(k.face(sigma), k.face(tau));
      for (FaceId b : k.boundary_ids(tau)) consider(b);
      for (FaceId b : k.boundary_ids(sigma)) consider(b);
    }
    out.witness.push_back(std::move(steps));
    if (in != target && out.ok) {
      out.ok = false;
      out.failure = "no greedy collapse of lower(" + std::to_string(p + 1) + ") onto upper(" +
                    std::to_string(p) + ")";
    }
  }
  return out;
}

}  // namespace morse
