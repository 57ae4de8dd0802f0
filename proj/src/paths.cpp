#include <functional>

#include "morse/error.hpp"
#include "morse/extension_flow.hpp"

namespace morse {

GradientPaths::GradientPaths(const IndexedSequence& seq) : seq_(seq) {}

std::vector<FaceId> GradientPaths::gradient_next(FaceId nu) const {
  std::vector<FaceId> out;
  if (seq_.role(nu) != FaceRole::Lower) return out;
  for (FaceId b : seq_.complex().boundary_ids(seq_.partner(nu))) {
    if (b != nu) out.push_back(b);
  }
  return out;
}

std::vector<FaceId> GradientPaths::cogradient_next(FaceId nu) const {
  std::vector<FaceId> out;
  for (FaceId sigma : seq_.complex().boundary_ids(nu)) {
    if (seq_.role(sigma) == FaceRole::Lower && seq_.partner(sigma) != nu) {
      out.push_back(seq_.partner(sigma));
    }
  }
  return out;
}

namespace {

// count(v) = [v == target] + sum of count(w) over w in adj(v), for every face
// of the given dimension, by memoized depth-first search.
std::vector<PathCount> count_walks(const Complex& k, int p, FaceId target,
                                   const std::function<std::vector<FaceId>(FaceId)>& adj) {
  std::vector<PathCount> count(k.size());
  std::vector<std::uint8_t> state(k.size(), 0);  // 0 new, 1 open, 2 done
  struct Visit {
    FaceId v;
    std::vector<FaceId> next;
    std::size_t i;
  };
  const FaceId lo = k.first_id(p);
  for (FaceId start = lo; start < lo + k.count(p); ++start) {
    if (state[start] == 2) continue;
    std::vector<Visit> stack;
    stack.push_back({start, adj(start), 0});
    state[start] = 1;
    while (!stack.empty()) {
      Visit& f = stack.back();
      if (f.i < f.next.size()) {
        const FaceId w = f.next[f.i++];
        if (state[w] == 1) throw Error(ErrorKind::CyclicField, "closed path through " + k.face(w).to_string());
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, adj(w), 0});
        }
        continue;
      }
      PathCount total = f.v == target ? 1 : 0;
      for (FaceId w : f.next) total += count[w];
      count[f.v] = std::move(total);
      state[f.v] = 2;
      stack.pop_back();
    }
  }
  return count;
}

}  // namespace

std::vector<PathCount> GradientPaths::gradient_counts_to(FaceId kappa) const {
  return count_walks(seq_.complex(), seq_.complex().dim_of(kappa), kappa,
                     [this](FaceId v) { return gradient_next(v); });
}

std::vector<PathCount> GradientPaths::cogradient_counts_from(FaceId kappa) const {
  const Complex& k = seq_.complex();
  // Predecessors of v: the other cofaces of the lower partner of v.
  auto prev = [this, &k](FaceId v) {
    std::vector<FaceId> out;
    if (seq_.role(v) != FaceRole::Upper) return out;
    for (FaceId u : k.coboundary_ids(seq_.partner(v))) {
      if (u != v) out.push_back(u);
    }
    return out;
  };
  return count_walks(k, k.dim_of(kappa), kappa, prev);
}

PathCount count_gradient_paths(const IndexedSequence& seq, FaceId nu, FaceId kappa) {
  if (seq.complex().dim_of(nu) != seq.complex().dim_of(kappa)) return 0;
  return GradientPaths(seq).gradient(nu, kappa);
}

PathCount count_cogradient_paths(const IndexedSequence& seq, FaceId kappa, FaceId nu) {
  if (seq.complex().dim_of(nu) != seq.complex().dim_of(kappa)) return 0;
  return GradientPaths(seq).cogradient(kappa, nu);
}

bool frame_parity_check(const IndexedSequence& seq, const Frame& ref, const Frame& coref) {
  const Complex& k = seq.complex();
  const GradientPaths paths(seq);
  for (int p = 0; p <= k.dim(); ++p) {
    const FaceId lo = k.first_id(p);
    for (FaceId kappa : seq.critical(p)) {
      const auto down = paths.gradient_counts_to(kappa);
      const auto up = paths.cogradient_counts_from(kappa);
      for (FaceId nu = lo; nu < lo + k.count(p); ++nu) {
        if (bit_test(down[nu], 0) != ref[nu].contains(kappa)) return false;
        if (bit_test(up[nu], 0) != coref[nu].contains(kappa)) return false;
      }
    }
  }
  return true;
}

bool restricted_path_exists(const IndexedSequence& seq, FaceId nu, FaceId kappa, PathKind kind,
                            const Frame& ref, const Frame& coref) {
  const GradientPaths paths(seq);
  const bool gradient = kind == PathKind::Gradient;
  const Frame& frame = gradient ? ref : coref;
  const FaceId start = gradient ? nu : kappa;
  const FaceId goal = gradient ? kappa : nu;
  if (!frame[start].contains(kappa)) return false;
  std::vector<bool> seen(seq.complex().size(), false);
  std::vector<FaceId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const FaceId v = stack.back();
    stack.pop_back();
    if (v == goal) return true;
    for (FaceId w : gradient ? paths.gradient_next(v) : paths.cogradient_next(v)) {
      if (!seen[w] && frame[w].contains(kappa)) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

std::vector<CompositePath> critical_composite_paths(const IndexedSequence& seq, FaceId nu,
                                                    std::size_t cap) {
  const GradientPaths paths(seq);
  const std::size_t max_len = 2 * seq.complex().count(seq.complex().dim_of(nu)) + 2;
  std::vector<CompositePath> out;
  CompositePath cur{{nu}, {}};
  std::function<void(std::size_t)> walk = [&](std::size_t critical_seen) {
    if (out.size() >= cap) throw Error(ErrorKind::IterationCap, "too many composite paths");
    if (cur.faces.size() > max_len) throw Error(ErrorKind::CyclicField, "unbounded composite walk");
    const FaceId v = cur.faces.back();
    if (critical_seen) out.push_back(cur);
    for (PathKind kind : {PathKind::Gradient, PathKind::Cogradient}) {
      const auto next = kind == PathKind::Gradient ? paths.gradient_next(v) : paths.cogradient_next(v);
      for (FaceId w : next) {
        cur.faces.push_back(w);
        cur.steps.push_back(kind);
        walk(critical_seen + (seq.is_critical(w) ? 1 : 0));
        cur.faces.pop_back();
        cur.steps.pop_back();
      }
    }
  };
  walk(seq.is_critical(nu) ? 1 : 0);
  return out;
}

}  // namespace morse
