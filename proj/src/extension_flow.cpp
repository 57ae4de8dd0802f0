#include "morse/extension_flow.hpp"

#include <bit>
#include <random>

#include "morse/error.hpp"
#include "morse/homology.hpp"
#include "morse/sampling.hpp"

namespace morse {

IdChain ExtensionMap::apply(const IdChain& critical_chain) const {
  std::vector<FaceId> ids;
  for (FaceId kappa : critical_chain) {
    ids.insert(ids.end(), values_[kappa].begin(), values_[kappa].end());
  }
  return IdChain(std::move(ids));
}

namespace {

// values[kappa] = {nu : kappa in frame(nu)}
ExtensionMap invert(const IndexedSequence& seq, const Frame& frame) {
  const Complex& k = seq.complex();
  std::vector<std::vector<FaceId>> lists(k.size());
  for (FaceId nu = 0; nu < k.size(); ++nu) {
    for (FaceId kappa : frame[nu]) lists[kappa].push_back(nu);
  }
  std::vector<IdChain> values;
  values.reserve(k.size());
  for (auto& l : lists) values.emplace_back(std::move(l));
  return ExtensionMap(k, std::move(values));
}

std::vector<FaceId> all_critical(const IndexedSequence& seq, int p) { return seq.critical(p); }

}  // namespace

ExtensionMap extension_map(const IndexedSequence& seq, const Frame& coref) { return invert(seq, coref); }

ExtensionMap coextension_map(const IndexedSequence& seq, const Frame& ref) { return invert(seq, ref); }

bool retraction_check(const IndexedSequence& seq, const Frame& ref, const Frame& coref,
                      const ExtensionMap& ext, const ExtensionMap& coext, std::size_t samples,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto ok = [&](const IdChain& c) {
    return ref.apply(ext.apply(c)) == c && coref.apply(coext.apply(c)) == c;
  };
  for (int p = 0; p <= seq.complex().dim(); ++p) {
    for (FaceId kappa : seq.critical(p)) {
      if (!ok(IdChain::single(kappa))) return false;
    }
    for (std::size_t s = 0; s < samples; ++s) {
      if (!ok(random_combination(all_critical(seq, p), rng))) return false;
    }
  }
  return true;
}

bool extension_chain_map_check(const IndexedSequence& seq, const CriticalComplex& crit,
                               const ExtensionMap& ext, const ExtensionMap& coext,
                               std::size_t samples, std::uint64_t seed) {
  const Complex& k = seq.complex();
  std::mt19937_64 rng(seed);
  auto ok = [&](const IdChain& c) {
    return boundary_ids(ext.apply(c), k) == ext.apply(crit.boundary(c)) &&
           coboundary_ids(coext.apply(c), k) == coext.apply(crit.coboundary(c));
  };
  for (int p = 0; p <= k.dim(); ++p) {
    for (FaceId kappa : seq.critical(p)) {
      if (!ok(IdChain::single(kappa))) return false;
    }
    for (std::size_t s = 0; s < samples; ++s) {
      if (!ok(random_combination(all_critical(seq, p), rng))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

FlowOperator::FlowOperator(const IndexedSequence& seq) : seq_(seq) {}

IdChain FlowOperator::up(const IdChain& c) const {
  std::vector<FaceId> ids;
  for (FaceId id : c) {
    if (seq_.role(id) == FaceRole::Lower) ids.push_back(seq_.partner(id));
  }
  return IdChain(std::move(ids));
}

IdChain FlowOperator::down(const IdChain& c) const {
  std::vector<FaceId> ids;
  for (FaceId id : c) {
    if (seq_.role(id) == FaceRole::Upper) ids.push_back(seq_.partner(id));
  }
  return IdChain(std::move(ids));
}

IdChain FlowOperator::apply(const IdChain& c) const {
  const Complex& k = seq_.complex();
  return c + boundary_ids(up(c), k) + up(boundary_ids(c, k));
}

IdChain FlowOperator::coapply(const IdChain& c) const {
  const Complex& k = seq_.complex();
  return c + coboundary_ids(down(c), k) + down(coboundary_ids(c, k));
}

namespace {

template <class Step>
IdChain iterate(const IdChain& c, std::size_t cap, Step step) {
  IdChain cur = c;
  for (std::size_t i = 0; i <= cap; ++i) {
    IdChain next = step(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw Error(ErrorKind::IterationCap, "flow did not stabilize within " + std::to_string(cap) + " rounds");
}

}  // namespace

IdChain FlowOperator::stabilize(const IdChain& c) const {
  return iterate(c, seq_.complex().size(), [this](const IdChain& x) { return apply(x); });
}

IdChain FlowOperator::costabilize(const IdChain& c) const {
  return iterate(c, seq_.complex().size(), [this](const IdChain& x) { return coapply(x); });
}

FlowOperator flow(const IndexedSequence& seq) { return FlowOperator(seq); }

bool flow_decomposition_check(const IndexedSequence& seq, const Frame& ref, const Frame& coref,
                              const ExtensionMap& ext, const ExtensionMap& coext,
                              std::size_t samples, std::uint64_t seed) {
  const Complex& k = seq.complex();
  const FlowOperator phi(seq);
  std::mt19937_64 rng(seed);
  auto ok = [&](const IdChain& c) {
    return phi.stabilize(c) == ext.apply(ref.apply(c)) &&
           phi.costabilize(c) == coext.apply(coref.apply(c));
  };
  for (FaceId id = 0; id < k.size(); ++id) {
    if (!ok(IdChain::single(id))) return false;
  }
  for (int p = 0; p <= k.dim(); ++p) {
    for (std::size_t s = 0; s < samples; ++s) {
      if (!ok(random_chain(k, p, rng))) return false;
    }
  }
  return true;
}

namespace {

ExtensionComplex build_extension_complex(const IndexedSequence& seq, const ExtensionMap& ext,
                                         bool dual) {
  const Complex& k = seq.complex();
  const int d = k.dim();
  ExtensionComplex out;
  out.independent = true;
  out.closed = true;
  std::vector<SpanReducer> spans;
  std::vector<std::size_t> dims;
  for (int p = 0; p <= d; ++p) {
    out.labels.push_back(seq.critical(p));
    std::vector<IdChain> chains;
    SpanReducer span(k.count(p));
    for (FaceId kappa : seq.critical(p)) {
      chains.push_back(ext[kappa]);
      if (!span.insert(chain_vector(k, ext[kappa], p))) out.independent = false;
    }
    dims.push_back(span.rank());
    out.basis.push_back(std::move(chains));
    spans.push_back(std::move(span));
  }
  // image_rank[p] is the rank of the (co)boundary applied to degree p.
  std::vector<std::size_t> image_rank(static_cast<std::size_t>(d + 1), 0);
  for (int p = 0; p <= d; ++p) {
    const int q = dual ? p + 1 : p - 1;
    if (q < 0 || q > d) continue;
    SpanReducer image(k.count(q));
    for (const IdChain& c : out.basis[static_cast<std::size_t>(p)]) {
      const IdChain b = dual ? coboundary_ids(c, k) : boundary_ids(c, k);
      const BitVector v = chain_vector(k, b, q);
      if (!spans[static_cast<std::size_t>(q)].contains(v)) out.closed = false;
      image.insert(v);
    }
    image_rank[static_cast<std::size_t>(p)] = image.rank();
  }
  for (int p = 0; p <= d; ++p) {
    const auto u = static_cast<std::size_t>(p);
    const int incoming = dual ? p - 1 : p + 1;
    const std::size_t in_rank =
        incoming < 0 || incoming > d ? 0 : image_rank[static_cast<std::size_t>(incoming)];
    out.homology.push_back(dims[u] - image_rank[u] - in_rank);
  }
  return out;
}

}  // namespace

ExtensionComplex extension_complex(const IndexedSequence& seq, const ExtensionMap& ext) {
  return build_extension_complex(seq, ext, false);
}

ExtensionComplex coextension_complex(const IndexedSequence& seq, const ExtensionMap& coext) {
  return build_extension_complex(seq, coext, true);
}

bool flow_fixed_point_check(const IndexedSequence& seq, const ExtensionMap& ext,
                            std::size_t max_exhaustive_bits, std::size_t samples,
                            std::uint64_t seed) {
  const Complex& k = seq.complex();
  const FlowOperator phi(seq);
  std::mt19937_64 rng(seed);
  for (int p = 0; p <= k.dim(); ++p) {
    const std::size_t n = k.count(p);
    const FaceId lo = k.first_id(p);
    SpanReducer span(n);
    for (FaceId kappa : seq.critical(p)) span.insert(chain_vector(k, ext[kappa], p));

    auto direct = [&](const IdChain& c) {
      const bool fixed = phi.stabilize(c) == c;
      return fixed == span.contains(chain_vector(k, c, p));
    };
    for (std::size_t s = 0; s < samples; ++s) {
      if (!direct(random_chain(k, p, rng))) return false;
      if (!direct(ext.apply(random_combination(seq.critical(p), rng)))) return false;
    }
    if (n > max_exhaustive_bits || n >= 63) continue;

    // Both the stabilized flow and the residue modulo the span are linear,
    // so a Gray-code walk visits every chain with one update per step.
    std::vector<BitVector> flow_of(n), residue_of(n);
    for (std::size_t i = 0; i < n; ++i) {
      const IdChain e = IdChain::single(lo + static_cast<FaceId>(i));
      flow_of[i] = chain_vector(k, phi.stabilize(e), p);
      BitVector v(n);
      v.set(i);
      residue_of[i] = span.reduce(v);
    }
    BitVector c(n), image(n), residue(n);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
      const auto i = static_cast<std::size_t>(std::countr_zero(step));
      c.flip(i);
      image ^= flow_of[i];
      residue ^= residue_of[i];
      if ((image == c) == residue.any()) return false;
    }
  }
  return true;
}

}  // namespace morse
