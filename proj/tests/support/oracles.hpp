#pragma once

// Slow, direct implementations used as independent references in tests. They
// work on std::set<Simplex> and the raw item list, never on library indices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "morse/complex.hpp"
#include "morse/morse_sequence.hpp"

namespace morse::oracle {

using FaceSet = std::set<Simplex>;
using SimplexChain = std::set<Simplex>;

inline FaceSet faces_of(const Complex& k) { return FaceSet(k.all_faces().begin(), k.all_faces().end()); }

inline std::vector<Simplex> drop_one(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.dim() == 0) return out;
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    std::vector<Vertex> v(s.vertices().begin(), s.vertices().end());
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    out.emplace_back(std::move(v));
  }
  return out;
}

inline bool subset_of(const Simplex& a, const Simplex& b) {
  return std::includes(b.vertices().begin(), b.vertices().end(), a.vertices().begin(), a.vertices().end());
}

/// Every nonempty subset of every face is a face.
inline bool downward_closed(const FaceSet& faces) {
  for (const Simplex& s : faces) {
    const auto n = s.vertices().size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vertex> v;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) v.push_back(s[i]);
      }
      if (!faces.count(Simplex(std::move(v)))) return false;
    }
  }
  return true;
}

inline std::size_t rank_mod2(std::vector<std::vector<std::uint8_t>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && !m[pivot][c]) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

/// Betti numbers from boundary matrices built by vertex deletion.
inline std::vector<std::size_t> betti(const Complex& k) {
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(k.dim() + 1));
  for (const Simplex& s : k.all_faces()) by_dim[static_cast<std::size_t>(s.dim())].push_back(s);
  std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
  for (std::size_t p = 1; p < by_dim.size(); ++p) {
    std::map<Simplex, std::size_t> row;
    for (std::size_t i = 0; i < by_dim[p - 1].size(); ++i) row[by_dim[p - 1][i]] = i;
    std::vector<std::vector<std::uint8_t>> m(by_dim[p - 1].size(), std::vector<std::uint8_t>(by_dim[p].size(), 0));
    for (std::size_t j = 0; j < by_dim[p].size(); ++j) {
      for (const Simplex& f : drop_one(by_dim[p][j])) m[row.at(f)][j] = 1;
    }
    ranks[p] = rank_mod2(std::move(m));
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < by_dim.size(); ++p) out.push_back(by_dim[p].size() - ranks[p] - ranks[p + 1]);
  return out;
}

/// tau is the only face of `faces` strictly containing sigma.
inline bool is_free(const FaceSet& faces, const Simplex& sigma, const Simplex& tau) {
  if (!faces.count(sigma) || !faces.count(tau) || tau.dim() != sigma.dim() + 1 || !subset_of(sigma, tau)) return false;
  for (const Simplex& s : faces) {
    if (s != sigma && s != tau && subset_of(sigma, s)) return false;
  }
  return true;
}

inline std::vector<std::pair<Simplex, Simplex>> free_pairs(const FaceSet& faces) {
  std::vector<std::pair<Simplex, Simplex>> out;
  for (const Simplex& tau : faces) {
    for (const Simplex& sigma : drop_one(tau)) {
      if (is_free(faces, sigma, tau)) out.emplace_back(sigma, tau);
    }
  }
  return out;
}

/// All (sigma, tau) with both outside `current`, inside `target`, such that
/// adding them gives a complex in which they form a free pair.
inline std::vector<std::pair<Simplex, Simplex>> legal_expansions(const FaceSet& current, const FaceSet& target) {
  std::vector<std::pair<Simplex, Simplex>> out;
  for (const Simplex& tau : target) {
    if (current.count(tau)) continue;
    for (const Simplex& sigma : drop_one(tau)) {
      if (current.count(sigma)) continue;
      FaceSet next = current;
      next.insert(sigma);
      next.insert(tau);
      if (downward_closed(next) && is_free(next, sigma, tau)) out.emplace_back(sigma, tau);
    }
  }
  return out;
}

/// A fill happens only when no expansion is legal.
inline bool increasing_maximal(const MorseSequence& seq) {
  const FaceSet target = faces_of(seq.target);
  FaceSet current;
  for (const MorseItem& item : seq.items) {
    if (const auto* f = std::get_if<Fill>(&item)) {
      if (!legal_expansions(current, target).empty()) return false;
      current.insert(f->face);
    } else {
      current.insert(std::get<Expand>(item).lower);
      current.insert(std::get<Expand>(item).upper);
    }
  }
  return true;
}

/// Read right to left, a perforation happens only when no collapse is legal.
inline bool decreasing_maximal(const MorseSequence& seq) {
  FaceSet current;
  for (const MorseItem& item : seq.items) {
    if (const auto* f = std::get_if<Fill>(&item)) {
      current.insert(f->face);
      if (!free_pairs(current).empty()) return false;
    } else {
      current.insert(std::get<Expand>(item).lower);
      current.insert(std::get<Expand>(item).upper);
    }
  }
  return true;
}

/// Stable sort by (dimension, critical after regular).
inline std::vector<MorseItem> arranged(std::vector<MorseItem> items) {
  std::stable_sort(items.begin(), items.end(), [](const MorseItem& a, const MorseItem& b) {
    return std::make_pair(item_dim(a), is_fill(a)) < std::make_pair(item_dim(b), is_fill(b));
  });
  return items;
}

struct Pairing {
  std::map<Simplex, Simplex> up;    // lower face -> upper face
  std::map<Simplex, Simplex> down;  // upper face -> lower face
  FaceSet critical;
};

inline Pairing pairing(const MorseSequence& seq) {
  Pairing out;
  for (const MorseItem& item : seq.items) {
    if (const auto* f = std::get_if<Fill>(&item)) {
      out.critical.insert(f->face);
    } else {
      const auto& e = std::get<Expand>(item);
      out.up.emplace(e.lower, e.upper);
      out.down.emplace(e.upper, e.lower);
    }
  }
  return out;
}

inline void toggle(SimplexChain& c, const Simplex& s) {
  if (!c.erase(s)) c.insert(s);
}

/// Left scan straight from the defining recursion.
inline std::map<Simplex, SimplexChain> reference_scan(const MorseSequence& seq) {
  std::map<Simplex, SimplexChain> ref;
  for (const MorseItem& item : seq.items) {
    if (const auto* f = std::get_if<Fill>(&item)) {
      ref[f->face] = {f->face};
      continue;
    }
    const auto& e = std::get<Expand>(item);
    ref[e.upper] = {};
    SimplexChain value;
    for (const Simplex& s : drop_one(e.upper)) {
      if (s == e.lower) continue;
      for (const Simplex& c : ref.at(s)) toggle(value, c);
    }
    ref[e.lower] = value;
  }
  return ref;
}

/// Right scan, with cofaces taken in the whole target.
inline std::map<Simplex, SimplexChain> coreference_scan(const MorseSequence& seq) {
  std::map<Simplex, std::vector<Simplex>> cofaces;
  for (const Simplex& t : seq.target.all_faces()) {
    for (const Simplex& s : drop_one(t)) cofaces[s].push_back(t);
  }
  std::map<Simplex, SimplexChain> coref;
  for (auto it = seq.items.rbegin(); it != seq.items.rend(); ++it) {
    if (const auto* f = std::get_if<Fill>(&*it)) {
      coref[f->face] = {f->face};
      continue;
    }
    const auto& e = std::get<Expand>(*it);
    coref[e.lower] = {};
    SimplexChain value;
    for (const Simplex& t : cofaces[e.lower]) {
      if (t == e.upper) continue;
      for (const Simplex& c : coref.at(t)) toggle(value, c);
    }
    coref[e.upper] = value;
  }
  return coref;
}

/// Explicit enumeration of gradient paths from nu; calls `visit` on the last
/// face of every path (including the trivial one).
inline void walk_gradient(const Pairing& v, const Simplex& nu, const std::function<bool(const Simplex&)>& allowed,
                          const std::function<void(const Simplex&)>& visit) {
  if (!allowed(nu)) return;
  visit(nu);
  auto it = v.up.find(nu);
  if (it == v.up.end()) return;
  for (const Simplex& next : drop_one(it->second)) {
    if (next != nu) walk_gradient(v, next, allowed, visit);
  }
}

/// Explicit enumeration of cogradient paths from tau.
inline void walk_cogradient(const Pairing& v, const Simplex& tau, const std::function<bool(const Simplex&)>& allowed,
                            const std::function<void(const Simplex&)>& visit) {
  if (!allowed(tau)) return;
  visit(tau);
  for (const Simplex& sigma : drop_one(tau)) {
    auto it = v.up.find(sigma);
    if (it != v.up.end() && it->second != tau) walk_cogradient(v, it->second, allowed, visit);
  }
}

inline std::uint64_t gradient_path_count(const MorseSequence& seq, const Simplex& nu, const Simplex& kappa) {
  std::uint64_t n = 0;
  walk_gradient(pairing(seq), nu, [](const Simplex&) { return true; }, [&](const Simplex& s) { n += s == kappa; });
  return n;
}

inline std::uint64_t cogradient_path_count(const MorseSequence& seq, const Simplex& kappa, const Simplex& nu) {
  std::uint64_t n = 0;
  walk_cogradient(pairing(seq), kappa, [](const Simplex&) { return true; }, [&](const Simplex& s) { n += s == nu; });
  return n;
}

/// A gradient path from nu to kappa whose every face has kappa in its frame.
inline bool restricted_gradient_path(const MorseSequence& seq, const std::map<Simplex, SimplexChain>& ref,
                                     const Simplex& nu, const Simplex& kappa) {
  bool found = false;
  walk_gradient(pairing(seq), nu, [&](const Simplex& s) { return !found && ref.at(s).count(kappa) > 0; },
                [&](const Simplex& s) { found = found || s == kappa; });
  return found;
}

/// A cogradient path from kappa to nu whose every face has kappa in its frame.
inline bool restricted_cogradient_path(const MorseSequence& seq, const std::map<Simplex, SimplexChain>& coref,
                                       const Simplex& kappa, const Simplex& nu) {
  bool found = false;
  walk_cogradient(pairing(seq), kappa, [&](const Simplex& s) { return !found && coref.at(s).count(kappa) > 0; },
                  [&](const Simplex& s) { found = found || s == nu; });
  return found;
}

}  // namespace morse::oracle
