#include <algorithm>
#include <iterator>
#include <random>
#include <set>

#include "morse/morse_sequence.hpp"

namespace morse {

namespace {

template <class Set>
auto pick(const Set& pool, TieBreak tie, std::mt19937_64& rng) {
  if (tie.kind == TieBreak::Kind::Lex) return *pool.begin();
  std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
  return *std::next(pool.begin(), static_cast<std::ptrdiff_t>(dist(rng)));
}

class Builder {
 public:
  explicit Builder(const Complex& k) : k_(k), present_(k.size(), false), missing_(k.size()) {
    for (FaceId id = 0; id < k.size(); ++id) {
      missing_[id] = static_cast<std::uint32_t>(k.boundary_ids(id).size());
      evaluate(id);
    }
  }

  MorseSequence run(TieBreak tie) {
    std::mt19937_64 rng(tie.seed);
    MorseSequence seq{k_, {}};
    while (true) {
      if (!expandable_.empty()) {
        const FaceId tau = pick(expandable_, tie, rng);
        const FaceId sigma = missing_face(tau);
        seq.items.push_back(Expand{k_.face(sigma), k_.face(tau)});
        add(sigma);
        add(tau);
      } else if (!fillable_.empty()) {
        const FaceId nu = pick(fillable_, tie, rng);
        seq.items.push_back(Fill{k_.face(nu)});
        add(nu);
      } else {
        break;
      }
    }
    return seq;
  }

 private:
  FaceId missing_face(FaceId id) const {
    for (FaceId b : k_.boundary_ids(id)) {
      if (!present_[b]) return b;
    }
    return kNoFace;
  }

  void evaluate(FaceId id) {
    fillable_.erase(id);
    expandable_.erase(id);
    if (present_[id]) return;
    if (missing_[id] == 0) {
      fillable_.insert(id);
    } else if (missing_[id] == 1 && missing_[missing_face(id)] == 0) {
      expandable_.insert(id);
    }
  }

  void add(FaceId id) {
    present_[id] = true;
    for (FaceId c : k_.coboundary_ids(id)) --missing_[c];
    evaluate(id);
    for (FaceId c : k_.coboundary_ids(id)) {
      evaluate(c);
      for (FaceId cc : k_.coboundary_ids(c)) evaluate(cc);
    }
  }

  const Complex& k_;
  std::vector<bool> present_;
  std::vector<std::uint32_t> missing_;
  std::set<FaceId> fillable_;
  std::set<FaceId> expandable_;  // keyed by the upper face
};

class Reducer {
 public:
  explicit Reducer(const Complex& k)
      : k_(k), present_(k.size(), true), cofaces_(k.size()), entry_(k.size(), kNoFace) {
    for (FaceId id = 0; id < k.size(); ++id) {
      cofaces_[id] = static_cast<std::uint32_t>(k.coboundary_ids(id).size());
    }
    for (FaceId id = 0; id < k.size(); ++id) evaluate(id);
  }

  MorseSequence run(TieBreak tie) {
    std::mt19937_64 rng(tie.seed);
    MorseSequence seq{k_, {}};
    while (true) {
      if (!collapsible_.empty()) {
        const auto [tau, sigma] = pick(collapsible_, tie, rng);
        seq.items.push_back(Expand{k_.face(sigma), k_.face(tau)});
        remove(tau);
        remove(sigma);
      } else if (!facets_.empty()) {
        const FaceId nu = pick(facets_, tie, rng).second;
        seq.items.push_back(Fill{k_.face(nu)});
        remove(nu);
      } else {
        break;
      }
    }
    std::reverse(seq.items.begin(), seq.items.end());
    return seq;
  }

 private:
  void evaluate(FaceId id) {
    if (entry_[id] != kNoFace) {
      collapsible_.erase({entry_[id], id});
      entry_[id] = kNoFace;
    }
    facets_.erase({-k_.dim_of(id), id});
    if (!present_[id]) return;
    if (cofaces_[id] == 0) {
      facets_.insert({-k_.dim_of(id), id});
    } else if (cofaces_[id] == 1) {
      for (FaceId c : k_.coboundary_ids(id)) {
        if (present_[c]) entry_[id] = c;
      }
      collapsible_.insert({entry_[id], id});
    }
  }

  void remove(FaceId id) {
    present_[id] = false;
    for (FaceId b : k_.boundary_ids(id)) --cofaces_[b];
    evaluate(id);
    for (FaceId b : k_.boundary_ids(id)) evaluate(b);
  }

  const Complex& k_;
  std::vector<bool> present_;
  std::vector<std::uint32_t> cofaces_;
  std::vector<FaceId> entry_;  // upper partner of a free face, else kNoFace
  std::set<std::pair<FaceId, FaceId>> collapsible_;  // (upper, lower)
  std::set<std::pair<int, FaceId>> facets_;          // (-dim, id)
};

}  // namespace

MorseSequence increasing_scheme(const Complex& k, TieBreak tie) { return Builder(k).run(tie); }

MorseSequence decreasing_scheme(const Complex& k, TieBreak tie) { return Reducer(k).run(tie); }

}  // namespace morse
