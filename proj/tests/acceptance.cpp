// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "morse/extension_flow.hpp"
#include "morse/homology.hpp"
#include "morse/reference_maps.hpp"
#include "morse/sampling.hpp"
#include "morse/vector_fields.hpp"
#include "oracles.hpp"

using namespace morse;
using morse::testing::Rng;
using Counts = std::vector<std::size_t>;

namespace {

const std::vector<std::string> kFixtures = {"torus", "dunce_hat", "tetra_boundary", "four_triangles", "wedge", "solid_tetra"};
constexpr int kRandomComplexes = 200;

Simplex S(std::initializer_list<Vertex> v) { return Simplex(v); }

std::string counts_str(const Counts& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

/// Everything derived from one sequence.
struct Built {
  IndexedSequence seq;
  Frame ref;
  Frame coref;
  CriticalComplex crit;
  ExtensionMap ext;
  ExtensionMap coext;

  explicit Built(MorseSequence s)
      : seq(std::move(s)),
        ref(reference_map(seq)),
        coref(coreference_map(seq)),
        crit(critical_complex(seq, ref, coref)),
        ext(extension_map(seq, coref)),
        coext(coextension_map(seq, ref)) {}
};

/// Every sequence the criteria are evaluated on: all builders on every
/// fixture, then all builders on the random complexes.
template <class F>
void for_each_sequence(F&& f, int random_complexes = kRandomComplexes) {
  for (const std::string& name : kFixtures) {
    const Complex k = testing::fixture(name);
    for (const auto& b : testing::all_builders()) f(Built(b(k, 5)), name + " " + b.name());
  }
  Rng rng(2024);
  for (int i = 0; i < random_complexes; ++i) {
    const Complex k = testing::random_complex(rng);
    for (const auto& b : testing::all_builders()) {
      f(Built(b(k, static_cast<std::uint64_t>(i))), "random#" + std::to_string(i) + " " + b.name());
    }
  }
}

struct Report {
  int failures = 0;
  void line(int n, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << std::endl;
    if (!ok) ++failures;
  }
};

std::vector<FaceId> faces_of_dim(const Complex& k, int p) {
  std::vector<FaceId> v;
  for (FaceId id = k.first_id(p); id < k.first_id(p) + k.count(p); ++id) v.push_back(id);
  return v;
}

std::vector<IdChain> test_chains(const Complex& k, int p, Rng& rng, std::size_t samples) {
  std::vector<IdChain> out;
  for (FaceId id : faces_of_dim(k, p)) out.push_back(IdChain::single(id));
  for (std::size_t i = 0; i < samples; ++i) out.push_back(random_chain(k, p, rng));
  return out;
}

// 1. Betti numbers of K, the critical complex and the extension complex.
void betti_reproduction(Report& r) {
  const std::map<std::string, Counts> expected = {
      {"torus", {1, 2, 1}}, {"dunce_hat", {1, 0, 0}}, {"tetra_boundary", {1, 0, 1}}};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [name, want] : expected) {
    const Complex k = testing::fixture(name);
    ok = ok && oracle::betti(k) == want && betti_numbers(k) == want;
    for (const auto& b : testing::all_builders()) {
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Built m(b(k, seed));
        ok = ok && m.crit.betti_numbers() == want && extension_complex(m.seq, m.ext).homology == want;
      }
    }
    detail << (detail.tellp() > 0 ? " " : "") << name << counts_str(want);
  }
  r.line(1, ok, "betti numbers agree for K, critical and extension complexes: " + detail.str());
}

// 2. Worked dunce hat values and critical duality everywhere.
void dunce_hat_critical_complex(Report& r) {
  const Complex hat = testing::fixture("dunce_hat");
  std::string found;
  for (const auto& b : testing::all_builders()) {
    for (std::uint64_t seed = 0; seed < 20 && found.empty(); ++seed) {
      const Built m(b(hat, seed));
      if (m.seq.critical_counts() != Counts{1, 1, 1}) continue;
      const FaceId e = m.seq.critical(1).front();
      const FaceId t = m.seq.critical(2).front();
      if (m.crit.boundary(t) == IdChain::single(e) && m.crit.coboundary(e) == IdChain::single(t)) {
        found = b.name() + " seed " + std::to_string(seed);
      }
    }
  }

  bool dual = true;
  for_each_sequence(
      [&](const Built& m, const std::string&) {
        const Complex& k = m.seq.complex();
        for (int p = 0; p < k.dim(); ++p) {
          for (FaceId s : m.seq.critical(p)) {
            for (FaceId t : m.seq.critical(p + 1)) {
              dual = dual && m.crit.boundary(t).contains(s) == m.crit.coboundary(s).contains(t);
            }
          }
        }
      },
      0);
  r.line(2, !found.empty() && dual,
         "dunce hat critical boundary c -> b and coboundary b -> c (" + (found.empty() ? "not found" : found) +
             "), duality on all fixtures");
}

// 3. Chain-map identities and their duals on random complexes.
void chain_map_identities(Report& r) {
  std::size_t violations = 0, sequences = 0;
  Rng rng(3);
  for_each_sequence([&](const Built& m, const std::string&) {
    ++sequences;
    const Complex& k = m.seq.complex();
    const FlowOperator phi(m.seq);
    for (int p = 0; p <= k.dim(); ++p) {
      for (const IdChain& c : test_chains(k, p, rng, 8)) {
        const IdChain rc = m.ref.apply(c);
        const IdChain cc = m.coref.apply(c);
        violations += m.ref.apply(boundary_ids(c, k)) != m.crit.boundary(rc);
        violations += m.coref.apply(coboundary_ids(c, k)) != m.crit.coboundary(cc);
        violations += phi.stabilize(c) != m.ext.apply(rc);
        violations += phi.costabilize(c) != m.coext.apply(cc);
      }
      std::vector<IdChain> critical_chains;
      for (FaceId kappa : m.seq.critical(p)) critical_chains.push_back(IdChain::single(kappa));
      for (int i = 0; i < 8; ++i) critical_chains.push_back(random_combination(m.seq.critical(p), rng));
      for (const IdChain& c : critical_chains) {
        violations += !m.crit.boundary(m.crit.boundary(c)).empty();
        violations += !m.crit.coboundary(m.crit.coboundary(c)).empty();
        violations += m.ref.apply(m.ext.apply(c)) != c;
        violations += m.coref.apply(m.coext.apply(c)) != c;
        violations += boundary_ids(m.ext.apply(c), k) != m.ext.apply(m.crit.boundary(c));
        violations += coboundary_ids(m.coext.apply(c), k) != m.coext.apply(m.crit.coboundary(c));
      }
    }
  });
  r.line(3, violations == 0,
         std::to_string(sequences) + " sequences, " + std::to_string(violations) +
             " violations of the chain-map, retraction, extension and flow identities and their duals");
}

// 4. Frame membership by gradient path parity, and restricted paths.
void parity_oracle(Report& r) {
  std::size_t mismatches = 0, pairs = 0;
  for_each_sequence(
      [&](const Built& m, const std::string&) {
        const Complex& k = m.seq.complex();
        const MorseSequence& seq = m.seq.sequence();
        const oracle::Pairing v = oracle::pairing(seq);
        const auto ref = oracle::reference_scan(seq);
        const auto coref = oracle::coreference_scan(seq);
        for (int p = 0; p <= k.dim(); ++p) {
          std::map<Simplex, std::map<Simplex, std::uint64_t>> down;  // nu -> kappa -> count
          for (FaceId nu : faces_of_dim(k, p)) {
            oracle::walk_gradient(v, k.face(nu), [](const Simplex&) { return true; },
                                  [&](const Simplex& s) { ++down[k.face(nu)][s]; });
          }
          for (FaceId kappa : m.seq.critical(p)) {
            std::map<Simplex, std::uint64_t> up;
            oracle::walk_cogradient(v, k.face(kappa), [](const Simplex&) { return true; },
                                    [&](const Simplex& s) { ++up[s]; });
            for (FaceId nu : faces_of_dim(k, p)) {
              ++pairs;
              const Simplex& n = k.face(nu);
              const Simplex& c = k.face(kappa);
              const bool in_ref = m.ref[nu].contains(kappa);
              const bool in_coref = m.coref[nu].contains(kappa);
              mismatches += in_ref != (down[n][c] % 2 == 1);
              mismatches += in_coref != (up[n] % 2 == 1);
              mismatches += in_ref != oracle::restricted_gradient_path(seq, ref, n, c);
              mismatches += in_coref != oracle::restricted_cogradient_path(seq, coref, c, n);
            }
          }
        }
      });
  r.line(4, mismatches == 0,
         std::to_string(pairs) + " (face, critical face) pairs checked by explicit path enumeration, " +
             std::to_string(mismatches) + " mismatches");
}

// 5. Chains fixed by the stabilized flow are exactly the extension chains.
void flow_fixed_points(Report& r) {
  std::size_t degrees = 0, chains = 0, mismatches = 0;
  for_each_sequence([&](const Built& m, const std::string&) {
    const Complex& k = m.seq.complex();
    const FlowOperator phi(m.seq);
    for (int p = 0; p <= k.dim(); ++p) {
      const auto faces = faces_of_dim(k, p);
      if (faces.size() > 12) continue;
      ++degrees;
      auto mask_of = [&](const IdChain& c) {
        std::uint32_t mask = 0;
        for (FaceId id : c) mask |= 1u << (id - faces.front());
        return mask;
      };
      const auto& critical = m.seq.critical(p);
      std::set<std::uint32_t> span;
      for (std::uint32_t pick = 0; pick < (1u << critical.size()); ++pick) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < critical.size(); ++i) {
          if (pick >> i & 1u) mask ^= mask_of(m.ext[critical[i]]);
        }
        span.insert(mask);
      }
      for (std::uint32_t mask = 0; mask < (1u << faces.size()); ++mask) {
        std::vector<FaceId> ids;
        for (std::size_t i = 0; i < faces.size(); ++i) {
          if (mask >> i & 1u) ids.push_back(faces[i]);
        }
        const IdChain c(ids);
        ++chains;
        mismatches += (phi.stabilize(c) == c) != (span.count(mask) > 0);
      }
    }
  });
  r.line(5, mismatches == 0 && degrees > 0,
         std::to_string(chains) + " chains in " + std::to_string(degrees) + " degrees enumerated, " +
             std::to_string(mismatches) + " disagreements between flow fixed points and extension chains");
}

// 6. Collapse witnesses between skeletons, replayed independently.
void skeleton_collapses(Report& r) {
  std::size_t failures = 0, steps = 0;
  for_each_sequence([&](const Built& m, const std::string&) {
    const Complex& k = m.seq.complex();
    const SkeletonSequence sk = skeletons(m.seq);
    const SkeletonCollapse sc = check_skeleton_collapse(m.seq);
    if (!sc.ok) {
      ++failures;
      return;
    }
    auto as_set = [&](const std::vector<bool>& mask) {
      oracle::FaceSet s;
      for (FaceId id = 0; id < k.size(); ++id) {
        if (mask[id]) s.insert(k.face(id));
      }
      return s;
    };
    for (int p = 0; p <= sk.top(); ++p) {
      const oracle::FaceSet lower = as_set(sk.lower_mask(p));
      const oracle::FaceSet upper = as_set(sk.upper_mask(p));
      oracle::FaceSet difference;
      for (const Simplex& s : upper) {
        if (!lower.count(s)) difference.insert(s);
      }
      oracle::FaceSet critical;
      for (FaceId id : m.seq.critical(p)) critical.insert(k.face(id));
      failures += difference != critical;
      if (p == sk.top()) continue;
      oracle::FaceSet current = as_set(sk.lower_mask(p + 1));
      for (const auto& [sigma, tau] : sc.witness[static_cast<std::size_t>(p)]) {
        ++steps;
        if (!oracle::is_free(current, sigma, tau)) {
          ++failures;
          break;
        }
        current.erase(sigma);
        current.erase(tau);
      }
      failures += current != upper;
    }
  });
  r.line(6, failures == 0,
         std::to_string(steps) + " witness collapses replayed, " + std::to_string(failures) +
             " failures (including critical-face differences between skeletons)");
}

// 7. Conversions back and forth.
void round_trips(Report& r) {
  std::size_t failures = 0, sequences = 0;
  for_each_sequence([&](const Built& m, const std::string&) {
    ++sequences;
    const MorseSequence& seq = m.seq.sequence();
    const VectorField v = gradient_vector_field(seq);
    const MorseSequence from_field = vf_to_morse_sequence(v, seq.target);
    failures += !validate(from_field).ok || !equivalent(from_field, seq);

    const MorseFunction f = canonical_morse_function(m.seq);
    if (!is_basic_morse_function(f).ok) {
      ++failures;
    } else {
      failures += gradient_vector_field(basic_function_to_sequence(f)) != v;
    }

    const MorseSequence tidy = arrange(seq);
    failures += !is_arranged(tidy) || !equivalent(tidy, seq);
    failures += tidy.items != oracle::arranged(seq.items);
    const IndexedSequence tidy_indexed(tidy);
    failures += reference_map(tidy_indexed) != m.ref || coreference_map(tidy_indexed) != m.coref;
  });
  r.line(7, failures == 0,
         std::to_string(sequences) + " sequences through field, canonical function and arrangement, " +
             std::to_string(failures) + " failures");
}

// 8. Same critical faces and frames, different gradient fields.
void counterexample(Report& r) {
  const Complex tri = testing::full_simplex(3);
  const Built v(MorseSequence{tri, {Fill{S({1})}, Expand{S({2}), S({1, 2})}, Expand{S({3}), S({2, 3})},
                                    Expand{S({1, 3}), S({1, 2, 3})}}});
  const Built w(MorseSequence{tri, {Fill{S({1})}, Expand{S({3}), S({1, 3})}, Expand{S({2}), S({2, 3})},
                                    Expand{S({1, 2}), S({1, 2, 3})}}});
  bool same_critical = true;
  for (int p = 0; p <= 2; ++p) same_critical = same_critical && v.seq.critical(p) == w.seq.critical(p);
  const bool fields_differ = gradient_vector_field(v.seq.sequence()) != gradient_vector_field(w.seq.sequence());
  const bool same_frames = v.ref == w.ref && v.coref == w.coref;
  const bool oracle_frames = oracle::reference_scan(v.seq.sequence()) == oracle::reference_scan(w.seq.sequence()) &&
                             oracle::coreference_scan(v.seq.sequence()) == oracle::coreference_scan(w.seq.sequence());
  r.line(8, same_critical && fields_differ && same_frames && oracle_frames,
         "two sequences on a triangle: equal critical faces and frames, different gradient fields");
}

// 9. Critical counts bound betti numbers; dunce hat minimum.
void morse_inequalities(Report& r) {
  std::size_t violations = 0;
  for_each_sequence([&](const Built& m, const std::string&) {
    const Counts c = m.seq.critical_counts();
    const Counts b = betti_numbers(m.seq.complex());
    for (std::size_t p = 0; p < b.size(); ++p) violations += c[p] < b[p];
  });

  const Complex hat = testing::fixture("dunce_hat");
  std::size_t runs = 0, below_three = 0, minimal = 0, best = SIZE_MAX;
  for (const auto& b : testing::all_builders()) {
    for (std::uint64_t seed = 0; seed < (b.seeded ? 100u : 1u); ++seed) {
      const Counts c = IndexedSequence(b(hat, seed)).critical_counts();
      const std::size_t total = c[0] + c[1] + c[2];
      ++runs;
      below_three += total < 3;
      minimal += c == Counts{1, 1, 1};
      best = std::min(best, total);
    }
  }
  r.line(9, violations == 0 && below_three == 0,
         std::to_string(violations) + " inequality violations; dunce hat over " + std::to_string(runs) +
             " runs: least total " + std::to_string(best) + ", (1,1,1) " +
             (minimal ? "attained in " + std::to_string(minimal) + " runs" : "not attained"));
}

}  // namespace

int main() {
  Report r;
  betti_reproduction(r);
  dunce_hat_critical_complex(r);
  chain_map_identities(r);
  parity_oracle(r);
  flow_fixed_points(r);
  skeleton_collapses(r);
  round_trips(r);
  counterexample(r);
  morse_inequalities(r);
  return r.failures == 0 ? 0 : 1;
}
