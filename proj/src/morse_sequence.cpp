#include "morse/morse_sequence.hpp"

#include <algorithm>
#include <sstream>

#include "morse/error.hpp"

namespace morse {

int item_dim(const MorseItem& item) {
  if (const auto* f = std::get_if<Fill>(&item)) return f->face.dim();
  return std::get<Expand>(item).upper.dim();
}

bool is_fill(const MorseItem& item) { return std::holds_alternative<Fill>(item); }

std::string to_string(const MorseItem& item) {
  std::ostringstream os;
  if (const auto* f = std::get_if<Fill>(&item)) {
    os << "fill " << f->face;
  } else {
    const auto& e = std::get<Expand>(item);
    os << "expand " << e.lower << ' ' << e.upper;
  }
  return os.str();
}

namespace {

struct Replay {
  Validation result;
  std::vector<IndexedSequence::Step> steps;
};

Replay replay(const MorseSequence& seq) {
  const Complex& k = seq.target;
  Replay out;
  std::vector<bool> present(k.size(), false);
  auto fail = [&](std::size_t i, std::string why) {
    out.result.ok = false;
    out.result.failed_item = i;
    out.result.violation = std::move(why);
    return out;
  };
  auto lookup = [&](const Simplex& s) -> std::optional<FaceId> {
    if (s.empty()) return std::nullopt;
    return k.find(s);
  };

  for (std::size_t i = 0; i < seq.items.size(); ++i) {
    const MorseItem& item = seq.items[i];
    if (const auto* f = std::get_if<Fill>(&item)) {
      auto id = lookup(f->face);
      if (!id) return fail(i, "fill of " + f->face.to_string() + ": not a face of the target");
      if (present[*id]) return fail(i, "fill of " + f->face.to_string() + ": face already added");
      for (FaceId b : k.boundary_ids(*id)) {
        if (!present[b]) {
          return fail(i, "fill of " + f->face.to_string() + ": face " + k.face(b).to_string() +
                             " is not present yet");
        }
      }
      present[*id] = true;
      out.steps.push_back({*id, kNoFace});
      continue;
    }
    const auto& e = std::get<Expand>(item);
    const std::string label = "expansion (" + e.lower.to_string() + ", " + e.upper.to_string() + ")";
    auto sid = lookup(e.lower);
    auto tid = lookup(e.upper);
    if (!sid || !tid) return fail(i, label + ": not a pair of faces of the target");
    if (e.lower.dim() + 1 != e.upper.dim() || !e.lower.is_face_of(e.upper)) {
      return fail(i, label + ": lower face is not a codimension-one face of the upper face");
    }
    if (present[*sid] || present[*tid]) return fail(i, label + ": face already added");
    for (FaceId b : k.boundary_ids(*tid)) {
      if (b != *sid && !present[b]) {
        return fail(i, label + ": face " + k.face(b).to_string() + " is not present yet");
      }
    }
    for (FaceId b : k.boundary_ids(*sid)) {
      if (!present[b]) {
        return fail(i, label + ": face " + k.face(b).to_string() + " is not present yet");
      }
    }
    for (FaceId c : k.coboundary_ids(*sid)) {
      if (present[c]) return fail(i, label + ": the pair would not be free");
    }
    present[*sid] = true;
    present[*tid] = true;
    out.steps.push_back({*sid, *tid});
  }
  for (FaceId id = 0; id < k.size(); ++id) {
    if (!present[id]) {
      return fail(seq.items.size(), "the sequence never adds " + k.face(id).to_string());
    }
  }
  out.result.ok = true;
  for (const auto& st : out.steps) {
    if (st.critical()) {
      out.result.partition.critical.push_back(k.face(st.lower));
    } else {
      out.result.partition.lower.push_back(k.face(st.lower));
      out.result.partition.upper.push_back(k.face(st.upper));
    }
  }
  return out;
}

}  // namespace

Validation validate(const MorseSequence& seq) { return replay(seq).result; }

IndexedSequence::IndexedSequence(MorseSequence seq) : seq_(std::move(seq)) {
  Replay r = replay(seq_);
  if (!r.result.ok) {
    std::string where = r.result.failed_item ? " at item " + std::to_string(*r.result.failed_item) : "";
    throw Error(ErrorKind::IllegalMove, "invalid sequence" + where + ": " + r.result.violation);
  }
  steps_ = std::move(r.steps);
  const Complex& k = seq_.target;
  role_.assign(k.size(), FaceRole::Critical);
  partner_.assign(k.size(), kNoFace);
  step_of_.assign(k.size(), 0);
  critical_.assign(static_cast<std::size_t>(std::max(k.dim() + 1, 0)), {});
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& st = steps_[i];
    step_of_[st.lower] = i;
    if (st.critical()) {
      critical_[static_cast<std::size_t>(k.dim_of(st.lower))].push_back(st.lower);
      continue;
    }
    role_[st.lower] = FaceRole::Lower;
    role_[st.upper] = FaceRole::Upper;
    partner_[st.lower] = st.upper;
    partner_[st.upper] = st.lower;
    step_of_[st.upper] = i;
  }
  for (auto& ids : critical_) std::sort(ids.begin(), ids.end());
}

const std::vector<FaceId>& IndexedSequence::critical(int p) const {
  static const std::vector<FaceId> kEmpty;
  if (p < 0 || static_cast<std::size_t>(p) >= critical_.size()) return kEmpty;
  return critical_[static_cast<std::size_t>(p)];
}

std::vector<std::size_t> IndexedSequence::critical_counts() const {
  std::vector<std::size_t> out;
  for (const auto& ids : critical_) out.push_back(ids.size());
  return out;
}

// ---------------------------------------------------------------------------

VectorField VectorField::from_pairs(std::vector<Pair> pairs) {
  std::vector<Simplex> seen;
  for (const auto& [sigma, tau] : pairs) {
    if (sigma.empty() || sigma.dim() + 1 != tau.dim() || !sigma.is_face_of(tau)) {
      throw Error(ErrorKind::InvalidField,
                  "(" + sigma.to_string() + ", " + tau.to_string() + ") is not a codimension-one pair");
    }
    seen.push_back(sigma);
    seen.push_back(tau);
  }
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end()) {
    throw Error(ErrorKind::InvalidField, dup->to_string() + " belongs to more than one pair");
  }
  VectorField v;
  std::sort(pairs.begin(), pairs.end());
  v.pairs_ = std::move(pairs);
  return v;
}

bool VectorField::contains(const Simplex& sigma, const Simplex& tau) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair(sigma, tau));
}

VectorField gradient_vector_field(const MorseSequence& seq) {
  std::vector<VectorField::Pair> pairs;
  for (const MorseItem& item : seq.items) {
    if (const auto* e = std::get_if<Expand>(&item)) pairs.emplace_back(e->lower, e->upper);
  }
  return VectorField::from_pairs(std::move(pairs));
}

bool equivalent(const MorseSequence& a, const MorseSequence& b) {
  if (!(a.target == b.target)) {
    throw Error(ErrorKind::TargetMismatch, "sequences build different complexes");
  }
  return gradient_vector_field(a) == gradient_vector_field(b);
}

namespace {

// Adjacent items (a, b) must be swapped when this holds.
bool out_of_order(const MorseItem& a, const MorseItem& b) {
  const int da = item_dim(a);
  const int db = item_dim(b);
  if (da > db) return true;
  return da == db && is_fill(a) && !is_fill(b);
}

}  // namespace

bool is_arranged(const MorseSequence& seq) {
  for (std::size_t i = 0; i + 1 < seq.items.size(); ++i) {
    if (out_of_order(seq.items[i], seq.items[i + 1])) return false;
  }
  return true;
}

MorseSequence arrange(const MorseSequence& seq) {
  MorseSequence out = seq;
  auto& items = out.items;
  bool swapped = true;
  std::size_t end = items.size();
  while (swapped && end > 1) {
    swapped = false;
    std::size_t last = 0;
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (out_of_order(items[i], items[i + 1])) {
        std::swap(items[i], items[i + 1]);
        swapped = true;
        last = i + 1;
      }
    }
    end = last;
  }
  return out;
}

}  // namespace morse
