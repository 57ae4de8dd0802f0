#include <algorithm>
#include <map>

#include "morse/error.hpp"
#include "morse/vector_fields.hpp"

namespace morse {

bool is_morse_function_on_sequence(const MorseFunction& f, const IndexedSequence& seq) {
  const Complex& k = seq.complex();
  if (f.values().size() != k.size()) return false;
  for (const auto& st : seq.steps()) {
    if (st.critical()) {
      for (FaceId b : k.boundary_ids(st.lower)) {
        if (!(f[st.lower] > f[b])) return false;
      }
    } else if (!(f[st.lower] >= f[st.upper])) {
      return false;
    }
  }
  return true;
}

MorseFunction canonical_morse_function(const IndexedSequence& seq) {
  std::vector<std::int64_t> values(seq.complex().size(), 0);
  const auto steps = seq.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    values[steps[i].lower] = static_cast<std::int64_t>(i + 1);
    if (!steps[i].critical()) values[steps[i].upper] = static_cast<std::int64_t>(i + 1);
  }
  return MorseFunction(seq.complex(), std::move(values));
}

namespace {

std::map<std::int64_t, std::vector<FaceId>> level_sets(const MorseFunction& f) {
  std::map<std::int64_t, std::vector<FaceId>> levels;
  for (FaceId id = 0; id < f.values().size(); ++id) levels[f[id]].push_back(id);
  return levels;
}

}  // namespace

BasicCheck is_basic_morse_function(const MorseFunction& f) {
  const Complex& k = f.complex();
  for (FaceId id = 0; id < k.size(); ++id) {
    for (FaceId b : k.boundary_ids(id)) {
      if (f[b] > f[id]) return {false, "monotone"};
    }
  }
  const auto levels = level_sets(f);
  for (const auto& [value, ids] : levels) {
    if (ids.size() > 2) return {false, "semi-injective"};
  }
  for (const auto& [value, ids] : levels) {
    if (ids.size() == 2 && !k.face(ids[0]).is_face_of(k.face(ids[1]))) return {false, "generic"};
  }
  return {true, ""};
}

MorseSequence basic_function_to_sequence(const MorseFunction& f) {
  const BasicCheck check = is_basic_morse_function(f);
  if (!check.ok) throw Error(ErrorKind::NotBasic, "the function is not " + check.violated);
  const Complex& k = f.complex();
  MorseSequence seq{k, {}};
  for (const auto& [value, ids] : level_sets(f)) {
    if (ids.size() == 1) {
      seq.items.push_back(Fill{k.face(ids[0])});
    } else {
      // Ids are ordered by dimension, so ids[0] is the smaller face.
      seq.items.push_back(Expand{k.face(ids[0]), k.face(ids[1])});
    }
  }
  return seq;
}

VectorField gradient_field_of_function(const MorseFunction& f) {
  const Complex& k = f.complex();
  std::vector<VectorField::Pair> pairs;
  std::vector<int> uses(k.size(), 0);
  for (FaceId tau = 0; tau < k.size(); ++tau) {
    for (FaceId sigma : k.boundary_ids(tau)) {
      if (f[sigma] >= f[tau]) {
        pairs.emplace_back(k.face(sigma), k.face(tau));
        if (++uses[sigma] > 1 || ++uses[tau] > 1) {
          throw Error(ErrorKind::NotAMorseFunction, "face in more than one pair near " + k.face(tau).to_string());
        }
      }
    }
  }
  return VectorField::from_pairs(std::move(pairs));
}

bool strongly_equivalent(const MorseFunction& f, const MorseFunction& g) {
  if (!(f.complex() == g.complex())) return false;
  const std::size_t n = f.values().size();
  for (FaceId a = 0; a < n; ++a) {
    for (FaceId b = 0; b < n; ++b) {
      if ((f[a] <= f[b]) != (g[a] <= g[b])) return false;
    }
  }
  return true;
}

bool is_flat(const MorseFunction& f) {
  const VectorField v = gradient_field_of_function(f);
  for (const auto& [sigma, tau] : v.pairs()) {
    if (f(sigma) != f(tau)) return false;
  }
  return true;
}

bool is_excellent(const MorseFunction& f) {
  const VectorField v = gradient_field_of_function(f);
  const Complex& k = f.complex();
  std::vector<bool> paired(k.size(), false);
  for (const auto& [sigma, tau] : v.pairs()) {
    paired[k.id_of(sigma)] = true;
    paired[k.id_of(tau)] = true;
  }
  std::vector<std::int64_t> critical_values;
  for (FaceId id = 0; id < k.size(); ++id) {
    if (!paired[id]) critical_values.push_back(f[id]);
  }
  std::sort(critical_values.begin(), critical_values.end());
  return std::adjacent_find(critical_values.begin(), critical_values.end()) == critical_values.end();
}

}  // namespace morse
