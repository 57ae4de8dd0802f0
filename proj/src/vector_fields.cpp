#include "morse/vector_fields.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "morse/error.hpp"

namespace morse {

namespace {

// up[sigma] = tau and down[tau] = sigma for every pair, kNoFace elsewhere.
struct ResolvedField {
  std::vector<FaceId> up;
  std::vector<FaceId> down;
};

ResolvedField resolve(const VectorField& v, const Complex& k) {
  ResolvedField r{std::vector<FaceId>(k.size(), kNoFace), std::vector<FaceId>(k.size(), kNoFace)};
  for (const auto& [sigma, tau] : v.pairs()) {
    const FaceId s = k.id_of(sigma);
    const FaceId t = k.id_of(tau);
    r.up[s] = t;
    r.down[t] = s;
  }
  return r;
}

}  // namespace

bool is_acyclic(const VectorField& v, const Complex& k) {
  const ResolvedField r = resolve(v, k);
  // Edges sigma -> sigma' for sigma' in the boundary of up[sigma], sigma' != sigma.
  std::vector<std::uint32_t> indegree(k.size(), 0);
  auto successors = [&](FaceId s, auto&& visit) {
    if (r.up[s] == kNoFace) return;
    for (FaceId b : k.boundary_ids(r.up[s])) {
      if (b != s) visit(b);
    }
  };
  for (FaceId s = 0; s < k.size(); ++s) successors(s, [&](FaceId b) { ++indegree[b]; });
  std::vector<FaceId> ready;
  for (FaceId s = 0; s < k.size(); ++s) {
    if (indegree[s] == 0) ready.push_back(s);
  }
  std::size_t processed = 0;
  while (!ready.empty()) {
    const FaceId s = ready.back();
    ready.pop_back();
    ++processed;
    successors(s, [&](FaceId b) {
      if (--indegree[b] == 0) ready.push_back(b);
    });
  }
  return processed == k.size();
}

MorseSequence vf_to_morse_sequence(const VectorField& v, const Complex& k) {
  const ResolvedField r = resolve(v, k);
  std::set<FaceId> present;
  for (FaceId id = 0; id < k.size(); ++id) present.insert(id);
  std::set<FaceId> critical;
  for (FaceId id = 0; id < k.size(); ++id) {
    if (r.up[id] == kNoFace && r.down[id] == kNoFace) critical.insert(id);
  }
  std::vector<std::uint32_t> cofaces(k.size());
  for (FaceId id = 0; id < k.size(); ++id) {
    cofaces[id] = static_cast<std::uint32_t>(k.coboundary_ids(id).size());
  }
  auto remove = [&](FaceId id) {
    present.erase(id);
    critical.erase(id);
    for (FaceId b : k.boundary_ids(id)) --cofaces[b];
  };

  std::vector<MorseItem> reversed;
  while (!present.empty()) {
    const int d = k.dim_of(*present.rbegin());
    const FaceId top_lo = k.first_id(d);
    auto crit = critical.lower_bound(top_lo);
    if (crit != critical.end()) {
      reversed.push_back(Fill{k.face(*crit)});
      remove(*crit);
      continue;
    }
    // No critical face of top dimension: every top face is the upper face of
    // a pair. Extend a gradient path backwards until its head pair is free.
    FaceId tau = *present.lower_bound(top_lo);
    FaceId sigma = r.down[tau];
    if (sigma == kNoFace) throw Error(ErrorKind::CyclicField, "unpaired top face " + k.face(tau).to_string());
    std::size_t steps = 0;
    while (cofaces[sigma] != 1) {
      FaceId other = kNoFace;
      for (FaceId c : k.coboundary_ids(sigma)) {
        if (c != tau && present.count(c)) {
          other = c;
          break;
        }
      }
      if (other == kNoFace || r.down[other] == kNoFace || ++steps > k.size()) {
        throw Error(ErrorKind::CyclicField, "gradient path through " + k.face(sigma).to_string() +
                                                " does not reach a free pair");
      }
      tau = other;
      sigma = r.down[tau];
    }
    reversed.push_back(Expand{k.face(sigma), k.face(tau)});
    remove(tau);
    remove(sigma);
  }
  std::reverse(reversed.begin(), reversed.end());
  return MorseSequence{k, std::move(reversed)};
}

}  // namespace morse
