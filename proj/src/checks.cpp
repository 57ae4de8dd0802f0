#include "morse/checks.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "morse/error.hpp"
#include "morse/extension_flow.hpp"
#include "morse/homology.hpp"
#include "morse/reference_maps.hpp"
#include "morse/sampling.hpp"
#include "morse/vector_fields.hpp"

namespace morse {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

class Suite {
 public:
  Suite(const IndexedSequence& seq, const SuiteOptions& opt)
      : seq_(seq),
        k_(seq.complex()),
        opt_(opt),
        rng_(opt.seed),
        ref_(reference_map(seq)),
        coref_(coreference_map(seq)),
        crit_(seq, ref_, coref_),
        ext_(extension_map(seq, coref_)),
        coext_(coextension_map(seq, ref_)) {}

  std::vector<CheckResult> run() {
    morse_inequalities();
    critical_complex_checks();
    frame_checks();
    path_checks();
    extension_checks();
    skeleton_checks();
    cycle_checks();
    flow_checks();
    conversion_checks();
    return std::move(results_);
  }

 private:
  void add(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, ""};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }

  static std::string fail_if(bool bad, const std::string& why) { return bad ? why : std::string(); }

  bool is_cycle_ids(const IdChain& c, int p) const { return p == 0 || boundary_ids(c, k_).empty(); }

  // ------------------------------------------------------------------------

  void morse_inequalities() {
    add("weak Morse inequalities c_p >= betti_p", [&]() -> std::string {
      const auto betti = betti_numbers(k_);
      const auto c = seq_.critical_counts();
      long long euler_c = 0, euler_b = 0;
      for (std::size_t p = 0; p < betti.size(); ++p) {
        if (c[p] < betti[p]) return "c=" + join(c) + " betti=" + join(betti);
        const long long sign = p % 2 ? -1 : 1;
        euler_c += sign * static_cast<long long>(c[p]);
        euler_b += sign * static_cast<long long>(betti[p]);
      }
      return fail_if(euler_c != euler_b, "Euler characteristics differ");
    });
  }

  void critical_complex_checks() {
    add("critical boundary squares to zero", [&]() -> std::string {
      crit_.presented().validate();
      return std::string();
    });
    add("critical complex homology equals homology of K", [&]() -> std::string {
      const auto a = betti_numbers(k_);
      const auto b = crit_.betti_numbers();
      return fail_if(a != b, "K " + join(a) + " vs critical " + join(b));
    });
    add("critical cohomology equals homology of K", [&]() -> std::string {
      const auto a = betti_numbers(k_);
      const auto b = crit_.cobetti_numbers();
      const auto c = Homology(complex_to_presented(k_)).cobetti_numbers();
      return fail_if(a != b || a != c, "betti " + join(a) + " critical cobetti " + join(b) +
                                           " cobetti " + join(c));
    });
    add("reference map is a chain map", [&]() -> std::string {
      const auto n = chain_map_defect(seq_, ref_, crit_, opt_.samples, opt_.seed);
      return fail_if(n != 0, std::to_string(n) + " mismatches");
    });
    add("coreference map is a cochain map", [&]() -> std::string {
      const auto n = cochain_map_defect(seq_, coref_, crit_, opt_.samples, opt_.seed);
      return fail_if(n != 0, std::to_string(n) + " mismatches");
    });
    add("critical boundary and coboundary are dual", [&]() -> std::string {
      return fail_if(!duality_check(crit_), "incidence matrices are not transposes");
    });
    add("reference map sends cycles to cycles and boundaries to boundaries", [&]() -> std::string {
      const PresentedChainComplex cc = crit_.presented();
      for (int p = 1; p <= k_.dim(); ++p) {
        for (std::size_t s = 0; s < opt_.samples; ++s) {
          const IdChain b = boundary_ids(random_chain(k_, p, rng_), k_);
          const IdChain image = ref_.apply(b);
          BitVector v(crit_.basis(p - 1).size());
          for (FaceId f : image) v.set(crit_.index_of(f));
          if (!is_boundary(cc, p - 1, v)) return std::string("boundary mapped outside the critical boundaries");
        }
      }
      return std::string();
    });
  }

  void frame_checks() {
    add("frames take values in critical faces of the same dimension", [&]() -> std::string {
      for (FaceId id = 0; id < k_.size(); ++id) {
        for (const Frame* f : {&ref_, &coref_}) {
          for (FaceId c : (*f)[id]) {
            if (!seq_.is_critical(c) || k_.dim_of(c) != k_.dim_of(id)) return "bad value at " + k_.face(id).to_string();
          }
        }
        if (seq_.is_critical(id) && (ref_[id] != IdChain::single(id) || coref_[id] != IdChain::single(id))) {
          return "critical face " + k_.face(id).to_string() + " not fixed";
        }
      }
      return std::string();
    });
    add("reference vanishes on upper chains and their boundaries", [&]() -> std::string {
      for (FaceId id = 0; id < k_.size(); ++id) {
        if (seq_.role(id) == FaceRole::Upper) {
          const IdChain c = IdChain::single(id);
          if (!ref_.apply(c).empty() || !ref_.apply(boundary_ids(c, k_)).empty()) return "at " + k_.face(id).to_string();
        }
        if (seq_.role(id) == FaceRole::Lower) {
          const IdChain c = IdChain::single(id);
          if (!coref_.apply(c).empty() || !coref_.apply(coboundary_ids(c, k_)).empty()) return "at " + k_.face(id).to_string();
        }
      }
      return std::string();
    });
    add("equal references give equal references of boundaries", [&]() -> std::string {
      for (int p = 1; p <= k_.dim(); ++p) {
        // Chains with zero reference: upper p-faces and boundaries of upper (p+1)-faces.
        std::vector<IdChain> null;
        for (FaceId id = k_.first_id(p); id < k_.first_id(p) + k_.count(p); ++id) {
          if (seq_.role(id) == FaceRole::Upper) null.push_back(IdChain::single(id));
        }
        for (FaceId id = k_.first_id(p + 1); id < k_.first_id(p + 1) + k_.count(p + 1); ++id) {
          if (seq_.role(id) == FaceRole::Upper) null.push_back(boundary_ids(IdChain::single(id), k_));
        }
        for (std::size_t s = 0; s < opt_.samples; ++s) {
          const IdChain c = random_chain(k_, p, rng_);
          IdChain other = c;
          for (const IdChain& n : null) {
            if (rng_() & 1u) other += n;
          }
          if (ref_.apply(c) != ref_.apply(other)) return std::string("collision construction failed");
          if (ref_.apply(boundary_ids(c, k_)) != ref_.apply(boundary_ids(other, k_))) {
            return std::string("boundaries of colliding chains differ");
          }
        }
      }
      return std::string();
    });
    add("frames depend only on the gradient field", [&]() -> std::string {
      const IndexedSequence arranged(arrange(seq_.sequence()));
      return fail_if(!(reference_map(arranged) == ref_) || !(coreference_map(arranged) == coref_),
                     "arranged sequence has different frames");
    });
  }

  void path_checks() {
    add("reference membership is the parity of gradient paths", [&]() -> std::string {
      return fail_if(!frame_parity_check(seq_, ref_, coref_), "parity mismatch");
    });
    add("reference membership is the existence of a restricted path", [&]() -> std::string {
      for (int p = 0; p <= k_.dim(); ++p) {
        for (FaceId kappa : seq_.critical(p)) {
          for (FaceId nu = k_.first_id(p); nu < k_.first_id(p) + k_.count(p); ++nu) {
            if (restricted_path_exists(seq_, nu, kappa, PathKind::Gradient, ref_, coref_) != ref_[nu].contains(kappa) ||
                restricted_path_exists(seq_, nu, kappa, PathKind::Cogradient, ref_, coref_) != coref_[nu].contains(kappa)) {
              return "mismatch at " + k_.face(nu).to_string() + " / " + k_.face(kappa).to_string();
            }
          }
        }
      }
      return std::string();
    });
  }

  void extension_checks() {
    add("each extension holds one critical face and otherwise regular faces of one kind", [&]() -> std::string {
      for (int p = 0; p <= k_.dim(); ++p) {
        for (FaceId kappa : seq_.critical(p)) {
          for (const auto& [map, role] : {std::pair{&ext_, FaceRole::Upper}, std::pair{&coext_, FaceRole::Lower}}) {
            const IdChain& e = (*map)[kappa];
            if (!e.contains(kappa)) return "extension of " + k_.face(kappa).to_string() + " misses it";
            for (FaceId f : e) {
              if (f != kappa && seq_.role(f) != role) return "extension of " + k_.face(kappa).to_string() + " has " + k_.face(f).to_string();
            }
          }
        }
      }
      return std::string();
    });
    add("reference retracts the extension and coreference the coextension", [&]() -> std::string {
      return fail_if(!retraction_check(seq_, ref_, coref_, ext_, coext_, opt_.samples, opt_.seed), "identity fails");
    });
    add("extension maps commute with boundary and coboundary", [&]() -> std::string {
      return fail_if(!extension_chain_map_check(seq_, crit_, ext_, coext_, opt_.samples, opt_.seed), "identity fails");
    });
    add("critical parts of boundaries of extensions are the critical boundaries", [&]() -> std::string {
      for (int p = 0; p <= k_.dim(); ++p) {
        for (FaceId kappa : seq_.critical(p)) {
          IdChain crit_part;
          for (FaceId f : boundary_ids(ext_[kappa], k_)) {
            if (seq_.role(f) == FaceRole::Lower) return "lower face in boundary of an extension";
            if (seq_.is_critical(f)) crit_part.toggle(f);
          }
          if (crit_part != crit_.boundary(kappa)) return "boundary mismatch at " + k_.face(kappa).to_string();
          IdChain cocrit_part;
          for (FaceId f : coboundary_ids(coext_[kappa], k_)) {
            if (seq_.role(f) == FaceRole::Upper) return "upper face in coboundary of a coextension";
            if (seq_.is_critical(f)) cocrit_part.toggle(f);
          }
          if (cocrit_part != crit_.coboundary(kappa)) return "coboundary mismatch at " + k_.face(kappa).to_string();
        }
      }
      return std::string();
    });
    add("extension complex is isomorphic to the critical complex", [&]() -> std::string {
      const ExtensionComplex e = extension_complex(seq_, ext_);
      const ExtensionComplex ce = coextension_complex(seq_, coext_);
      const auto betti = betti_numbers(k_);
      if (!e.independent || !ce.independent) return std::string("extension chains are dependent");
      if (!e.closed || !ce.closed) return std::string("span not closed under (co)boundary");
      return fail_if(e.homology != betti || ce.homology != betti,
                     "extension " + join(e.homology) + " coextension " + join(ce.homology) + " K " + join(betti));
    });
    add("extensions send critical cycles to cycles", [&]() -> std::string {
      for (int p = 1; p <= k_.dim(); ++p) {
        for (const BitVector& z : crit_.boundary_matrix(p).kernel_basis()) {
          IdChain c;
          for (std::size_t i : z.support()) c.toggle(crit_.basis(p)[i]);
          if (!is_cycle_ids(ext_.apply(c), p)) return std::string("extension of a cycle is not a cycle");
        }
      }
      return std::string();
    });
  }

  void skeleton_checks() {
    const SkeletonSequence sk(seq_);
    const int d = k_.dim();
    add("skeletons are nested complexes from the void complex to K", [&]() -> std::string {
      if (d < 0) return std::string();
      for (int p = 0; p <= d; ++p) {
        sk.lower(p);
        sk.upper(p);
        for (FaceId id = 0; id < k_.size(); ++id) {
          if (sk.lower_mask(p)[id] && !sk.upper_mask(p)[id]) return "lower not inside upper at p=" + std::to_string(p);
          if (p < d && sk.upper_mask(p)[id] && !sk.lower_mask(p + 1)[id]) return "upper not inside next lower at p=" + std::to_string(p);
          const bool diff = sk.upper_mask(p)[id] && !sk.lower_mask(p)[id];
          const bool crit = seq_.is_critical(id) && k_.dim_of(id) == p;
          if (diff != crit) return "difference is not the critical faces at p=" + std::to_string(p);
        }
      }
      for (FaceId id = 0; id < k_.size(); ++id) {
        if (sk.lower_mask(0)[id]) return std::string("lower(0) is not void");
        if (!sk.upper_mask(d)[id]) return std::string("upper(top) is not K");
      }
      return std::string();
    });
    add("each lower skeleton collapses onto the previous upper skeleton", [&]() -> std::string {
      const SkeletonCollapse c = check_skeleton_collapse(seq_);
      return c.ok ? std::string() : c.failure;
    });
    add("skeletons depend only on the gradient field", [&]() -> std::string {
      const SkeletonSequence other(IndexedSequence(arrange(seq_.sequence())));
      for (int p = 0; p <= d; ++p) {
        if (other.lower_mask(p) != sk.lower_mask(p) || other.upper_mask(p) != sk.upper_mask(p)) {
          return "skeleton " + std::to_string(p) + " differs";
        }
      }
      return std::string();
    });
    add("frames are trivial on the matching skeletons", [&]() -> std::string {
      for (int p = 0; p <= d; ++p) {
        for (FaceId id = k_.first_id(p); id < k_.first_id(p) + k_.count(p); ++id) {
          const IdChain self = seq_.is_critical(id) ? IdChain::single(id) : IdChain();
          if (sk.upper_mask(p)[id] && ref_[id] != self) return "reference at " + k_.face(id).to_string();
          if (!sk.lower_mask(p)[id] && coref_[id] != self) return "coreference at " + k_.face(id).to_string();
        }
        for (FaceId kappa : seq_.critical(p)) {
          for (FaceId f : ext_[kappa]) {
            if (!sk.upper_mask(p)[f]) return "extension leaves the upper skeleton";
          }
          for (FaceId f : coext_[kappa]) {
            if (sk.lower_mask(p)[f]) return "coextension enters the lower skeleton";
          }
        }
      }
      return std::string();
    });
    add("cycles of an upper skeleton are determined by their reference", [&]() -> std::string {
      for (int p = 1; p <= d; ++p) {
        std::vector<FaceId> cols;
        for (FaceId id = k_.first_id(p); id < k_.first_id(p) + k_.count(p); ++id) {
          if (sk.upper_mask(p)[id]) cols.push_back(id);
        }
        BitMatrix bd(k_.count(p - 1), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
          for (FaceId b : k_.boundary_ids(cols[j])) bd.set(b - k_.first_id(p - 1), j);
        }
        const auto cycles = bd.kernel_basis();
        SpanReducer images(crit_.basis(p).size());
        for (const BitVector& z : cycles) {
          IdChain c;
          for (std::size_t j : z.support()) c.toggle(cols[j]);
          BitVector v(crit_.basis(p).size());
          for (FaceId f : ref_.apply(c)) v.set(crit_.index_of(f));
          if (!images.insert(v)) return "two cycles share a reference in degree " + std::to_string(p);
        }
      }
      return std::string();
    });
    add("successive critical steps are joined by collapses", [&]() -> std::string { return critical_step_collapses(); });
  }

  std::string critical_step_collapses() {
    // Replaying up to just before a fill, then undoing the expansions since
    // the previous fill, must consist of legal collapses.
    const auto steps = seq_.steps();
    std::vector<bool> present(k_.size(), false);
    std::vector<std::uint32_t> cofaces(k_.size(), 0);
    auto put = [&](FaceId f, bool on) {
      present[f] = on;
      for (FaceId b : k_.boundary_ids(f)) on ? ++cofaces[b] : --cofaces[b];
    };
    std::size_t last_fill = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].critical() && i > 0) {
        std::vector<bool> saved = present;
        std::vector<std::uint32_t> saved_cofaces = cofaces;
        for (std::size_t j = i; j-- > last_fill + 1;) {
          const auto& st = steps[j];
          if (cofaces[st.lower] != 1 || cofaces[st.upper] != 0) return "expansion " + std::to_string(j) + " cannot be undone";
          put(st.upper, false);
          put(st.lower, false);
        }
        present = std::move(saved);
        cofaces = std::move(saved_cofaces);
      }
      if (steps[i].critical()) last_fill = i;
      put(steps[i].lower, true);
      if (!steps[i].critical()) put(steps[i].upper, true);
    }
    return std::string();
  }

  void cycle_checks() {
    add("cycles with equal reference are homologous", [&]() -> std::string {
      const PresentedChainComplex cc = complex_to_presented(k_);
      for (int p = 1; p <= k_.dim(); ++p) {
        const auto cycles = cc.boundary[static_cast<std::size_t>(p)].kernel_basis();
        BitMatrix images(crit_.basis(p).size(), cycles.size());
        for (std::size_t j = 0; j < cycles.size(); ++j) {
          for (FaceId f : ref_.apply(chain_from_vector(k_, cycles[j], p))) images.set(crit_.index_of(f), j);
        }
        for (const BitVector& x : images.kernel_basis()) {
          BitVector z(k_.count(p));
          for (std::size_t j : x.support()) z ^= cycles[j];
          if (!is_boundary(cc, p, z)) return "a cycle with zero reference is not a boundary in degree " + std::to_string(p);
        }
        for (const BitVector& z : cycles) {
          const IdChain back = ext_.apply(ref_.apply(chain_from_vector(k_, z, p)));
          if (!homologous(cc, p, chain_vector(k_, back, p), z)) return std::string("extension of reference not homologous");
        }
      }
      return std::string();
    });
  }

  void flow_checks() {
    add("stabilized flow factors through reference and extension", [&]() -> std::string {
      return fail_if(!flow_decomposition_check(seq_, ref_, coref_, ext_, coext_, opt_.samples, opt_.seed), "factorization fails");
    });
    add("fixed chains of the stabilized flow are the extension complex", [&]() -> std::string {
      return fail_if(!flow_fixed_point_check(seq_, ext_, opt_.exhaustive_bits, opt_.samples, opt_.seed), "fixed-point set differs");
    });
    if (k_.size() > opt_.composite_path_limit) return;
    add("composite paths through a critical face split at it and count the flow mod 2", [&]() -> std::string {
      const FlowOperator phi(seq_);
      for (FaceId nu = 0; nu < k_.size(); ++nu) {
        std::map<FaceId, std::size_t> ends;
        for (const CompositePath& path : critical_composite_paths(seq_, nu)) {
          std::size_t i = 0;
          while (i < path.steps.size() && path.steps[i] == PathKind::Gradient) ++i;
          for (std::size_t j = i; j < path.steps.size(); ++j) {
            if (path.steps[j] != PathKind::Cogradient) return std::string("cogradient step before a gradient step");
          }
          std::size_t critical = 0;
          for (FaceId f : path.faces) critical += seq_.is_critical(f) ? 1 : 0;
          if (critical != 1 || !seq_.is_critical(path.faces[i])) return std::string("critical face is not the junction");
          ++ends[path.faces.back()];
        }
        const IdChain image = phi.stabilize(IdChain::single(nu));
        IdChain odd;
        for (const auto& [mu, n] : ends) {
          if (n % 2) odd.toggle(mu);
        }
        if (odd != image) return "parity of composite paths differs from the flow at " + k_.face(nu).to_string();
      }
      return std::string();
    });
  }

  void conversion_checks() {
    add("arranging keeps the gradient field and yields an arranged sequence", [&]() -> std::string {
      const MorseSequence a = arrange(seq_.sequence());
      const Validation v = validate(a);
      if (!v) return "arranged sequence is invalid: " + v.violation;
      if (!is_arranged(a)) return std::string("result is not arranged");
      return fail_if(!equivalent(a, seq_.sequence()), "gradient field changed");
    });
    add("gradient field round-trips through an equivalent sequence", [&]() -> std::string {
      const VectorField v = gradient_vector_field(seq_.sequence());
      if (!is_acyclic(v, k_)) return std::string("gradient field reported cyclic");
      const MorseSequence back = vf_to_morse_sequence(v, k_);
      const Validation val = validate(back);
      if (!val) return "rebuilt sequence is invalid: " + val.violation;
      return fail_if(!equivalent(back, seq_.sequence()), "rebuilt sequence is not equivalent");
    });
    add("canonical Morse function round-trips", [&]() -> std::string {
      const MorseFunction f = canonical_morse_function(seq_);
      if (!is_morse_function_on_sequence(f, seq_)) return std::string("not a Morse function on the sequence");
      if (!is_flat(f) || !is_excellent(f)) return std::string("not flat and excellent");
      const BasicCheck b = is_basic_morse_function(f);
      if (!b.ok) return "not basic: " + b.violated;
      if (!(gradient_field_of_function(f) == gradient_vector_field(seq_.sequence()))) return std::string("field differs");
      const MorseSequence back = basic_function_to_sequence(f);
      return fail_if(back.items != seq_.sequence().items, "recovered sequence differs");
    });
  }

  const IndexedSequence& seq_;
  const Complex& k_;
  SuiteOptions opt_;
  std::mt19937_64 rng_;
  Frame ref_;
  Frame coref_;
  CriticalComplex crit_;
  ExtensionMap ext_;
  ExtensionMap coext_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_invariant_suite(const IndexedSequence& seq, const SuiteOptions& options) {
  return Suite(seq, options).run();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace morse
