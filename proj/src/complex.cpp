#include "morse/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "morse/error.hpp"

namespace morse {

struct Complex::Data {
  std::vector<Simplex> faces;
  std::vector<FaceId> offsets{0};  // offsets[p] is the first id of dimension p
  std::unordered_map<Simplex, FaceId, SimplexHash> index;
  std::vector<std::uint32_t> bd_start{0};
  std::vector<FaceId> bd;
  std::vector<std::uint32_t> cobd_start;
  std::vector<FaceId> cobd;
};

namespace {

bool dim_lex_less(const Simplex& a, const Simplex& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a < b;
}

}  // namespace

Complex::Complex() : Complex(std::make_shared<Data>()) {}

Complex::Complex(std::shared_ptr<const Data> data) : data_(std::move(data)), faces_(&data_->faces) {}

Complex Complex::build(std::vector<Simplex> faces) {
  auto d = std::make_shared<Data>();
  d->faces = std::move(faces);
  const int top = d->faces.empty() ? -1 : d->faces.back().dim();
  d->offsets.assign(static_cast<std::size_t>(top + 2), 0);
  for (const Simplex& s : d->faces) ++d->offsets[static_cast<std::size_t>(s.dim() + 1)];
  for (std::size_t p = 1; p < d->offsets.size(); ++p) d->offsets[p] += d->offsets[p - 1];

  d->index.reserve(d->faces.size());
  for (FaceId i = 0; i < d->faces.size(); ++i) d->index.emplace(d->faces[i], i);

  std::vector<std::uint32_t> cobd_count(d->faces.size(), 0);
  d->bd_start.reserve(d->faces.size() + 1);
  for (const Simplex& s : d->faces) {
    for (const Simplex& f : s.facets()) {
      auto it = d->index.find(f);
      if (it == d->index.end()) {
        throw Error(ErrorKind::NotAComplex, "face " + f.to_string() + " of " + s.to_string() +
                                                " is missing");
      }
      d->bd.push_back(it->second);
      ++cobd_count[it->second];
    }
    d->bd_start.push_back(static_cast<std::uint32_t>(d->bd.size()));
  }

  d->cobd_start.assign(d->faces.size() + 1, 0);
  for (std::size_t i = 0; i < d->faces.size(); ++i) {
    d->cobd_start[i + 1] = d->cobd_start[i] + cobd_count[i];
  }
  d->cobd.resize(d->bd.size());
  std::vector<std::uint32_t> fill_pos(d->cobd_start.begin(), d->cobd_start.end() - 1);
  // Faces are visited in id order, so every coboundary list comes out sorted.
  for (FaceId i = 0; i < d->faces.size(); ++i) {
    for (std::uint32_t k = d->bd_start[i]; k < d->bd_start[i + 1]; ++k) {
      d->cobd[fill_pos[d->bd[k]]++] = i;
    }
  }
  return Complex(std::move(d));
}

Complex Complex::closure(std::span<const Simplex> facets) {
  std::unordered_set<Simplex, SimplexHash> all;
  for (const Simplex& f : facets) {
    if (f.empty()) throw Error(ErrorKind::InvalidFacet, "empty facet");
    const auto verts = f.vertices();
    const std::size_t n = verts.size();
    if (n > 24) throw Error(ErrorKind::InvalidFacet, "facet too large: " + f.to_string());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) sub.push_back(verts[i]);
      }
      all.insert(Simplex(std::move(sub)));
    }
  }
  std::vector<Simplex> faces(all.begin(), all.end());
  std::sort(faces.begin(), faces.end(), dim_lex_less);
  return build(std::move(faces));
}

Complex Complex::closure(const std::vector<std::vector<Vertex>>& facets) {
  std::vector<Simplex> simplices;
  simplices.reserve(facets.size());
  for (const auto& f : facets) simplices.emplace_back(f);
  return closure(simplices);
}

Complex Complex::from_faces(std::vector<Simplex> faces) {
  for (const Simplex& s : faces) {
    if (s.empty()) throw Error(ErrorKind::InvalidFacet, "empty face");
  }
  std::sort(faces.begin(), faces.end(), dim_lex_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return build(std::move(faces));
}

int Complex::dim() const noexcept { return static_cast<int>(data_->offsets.size()) - 2; }

std::size_t Complex::size() const noexcept { return data_->faces.size(); }

std::size_t Complex::count(int p) const noexcept {
  if (p < 0 || p > dim()) return 0;
  return data_->offsets[static_cast<std::size_t>(p + 1)] - data_->offsets[static_cast<std::size_t>(p)];
}

FaceId Complex::first_id(int p) const noexcept {
  if (p < 0) return 0;
  if (p > dim()) return static_cast<FaceId>(size());
  return data_->offsets[static_cast<std::size_t>(p)];
}

std::span<const Simplex> Complex::faces(int p) const noexcept {
  return std::span<const Simplex>(data_->faces).subspan(first_id(p), count(p));
}

std::optional<FaceId> Complex::find(const Simplex& s) const {
  auto it = data_->index.find(s);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

FaceId Complex::id_of(const Simplex& s) const {
  auto id = find(s);
  if (!id) throw Error(ErrorKind::NotAFace, s.to_string() + " is not a face of the complex");
  return *id;
}

std::span<const FaceId> Complex::boundary_ids(FaceId id) const {
  return std::span<const FaceId>(data_->bd).subspan(data_->bd_start[id],
                                                    data_->bd_start[id + 1] - data_->bd_start[id]);
}

std::span<const FaceId> Complex::coboundary_ids(FaceId id) const {
  return std::span<const FaceId>(data_->cobd)
      .subspan(data_->cobd_start[id], data_->cobd_start[id + 1] - data_->cobd_start[id]);
}

std::vector<Simplex> Complex::facets() const {
  std::vector<Simplex> out;
  for (FaceId i = 0; i < size(); ++i) {
    if (is_facet(i)) out.push_back(face(i));
  }
  return out;
}

bool Complex::operator==(const Complex& other) const {
  return data_ == other.data_ || data_->faces == other.data_->faces;
}

// ---------------------------------------------------------------------------

IdChain::IdChain(std::vector<FaceId> ids) {
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) % 2 == 1) ids_.push_back(ids[i]);
    i = j;
  }
}

bool IdChain::contains(FaceId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

void IdChain::toggle(FaceId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it != ids_.end() && *it == id) {
    ids_.erase(it);
  } else {
    ids_.insert(it, id);
  }
}

IdChain& IdChain::operator+=(const IdChain& other) {
  if (other.ids_.empty()) return *this;
  if (other.ids_.size() == 1) {
    toggle(other.ids_.front());
    return *this;
  }
  std::vector<FaceId> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_symmetric_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                                std::back_inserter(out));
  ids_ = std::move(out);
  return *this;
}

Chain Chain::of(int dim, std::vector<Simplex> simplices) {
  Chain c(dim);
  std::sort(simplices.begin(), simplices.end());
  for (std::size_t i = 0; i < simplices.size();) {
    if (simplices[i].dim() != dim) {
      throw Error(ErrorKind::HeterogeneousChain,
                  simplices[i].to_string() + " does not have dimension " + std::to_string(dim));
    }
    std::size_t j = i;
    while (j < simplices.size() && simplices[j] == simplices[i]) ++j;
    if ((j - i) % 2 == 1) c.members_.push_back(simplices[i]);
    i = j;
  }
  return c;
}

Chain Chain::of(std::vector<Simplex> simplices) {
  const int d = simplices.empty() ? 0 : simplices.front().dim();
  return of(d, std::move(simplices));
}

bool Chain::contains(const Simplex& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.dim_ != dim_) {
    throw Error(ErrorKind::HeterogeneousChain, "adding chains of dimensions " +
                                                   std::to_string(dim_) + " and " +
                                                   std::to_string(other.dim_));
  }
  std::vector<Simplex> out;
  std::set_symmetric_difference(members_.begin(), members_.end(), other.members_.begin(),
                                other.members_.end(), std::back_inserter(out));
  members_ = std::move(out);
  return *this;
}

IdChain to_ids(const Complex& k, const Chain& c) {
  std::vector<FaceId> ids;
  ids.reserve(c.size());
  for (const Simplex& s : c.members()) ids.push_back(k.id_of(s));
  return IdChain(std::move(ids));
}

Chain to_chain(const Complex& k, const IdChain& c, int dim) {
  std::vector<Simplex> simplices;
  simplices.reserve(c.size());
  for (FaceId id : c) simplices.push_back(k.face(id));
  return Chain::of(dim, std::move(simplices));
}

IdChain boundary_ids(const IdChain& c, const Complex& k) {
  std::vector<FaceId> ids;
  for (FaceId id : c) {
    auto b = k.boundary_ids(id);
    ids.insert(ids.end(), b.begin(), b.end());
  }
  return IdChain(std::move(ids));
}

IdChain coboundary_ids(const IdChain& c, const Complex& k) {
  std::vector<FaceId> ids;
  for (FaceId id : c) {
    auto b = k.coboundary_ids(id);
    ids.insert(ids.end(), b.begin(), b.end());
  }
  return IdChain(std::move(ids));
}

Chain boundary(const Simplex& s, const Complex& k) {
  return boundary_op(Chain::of(s.dim(), {s}), k);
}

Chain coboundary(const Simplex& s, const Complex& k) {
  return coboundary_op(Chain::of(s.dim(), {s}), k);
}

Chain boundary_op(const Chain& c, const Complex& k) {
  return to_chain(k, boundary_ids(to_ids(k, c), k), c.dim() - 1);
}

Chain coboundary_op(const Chain& c, const Complex& k) {
  return to_chain(k, coboundary_ids(to_ids(k, c), k), c.dim() + 1);
}

std::vector<std::pair<Simplex, Simplex>> free_pairs(const Complex& k) {
  std::vector<std::pair<Simplex, Simplex>> out;
  for (FaceId i = 0; i < k.size(); ++i) {
    auto cofaces = k.coboundary_ids(i);
    if (cofaces.size() == 1) out.emplace_back(k.face(i), k.face(cofaces[0]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

[[noreturn]] void illegal(const std::string& what) { throw Error(ErrorKind::IllegalMove, what); }

void require_codim_one(const Simplex& sigma, const Simplex& tau) {
  if (sigma.dim() + 1 != tau.dim() || !sigma.is_face_of(tau)) {
    illegal(sigma.to_string() + " is not a codimension-one face of " + tau.to_string());
  }
}

std::vector<Simplex> faces_without(const Complex& k, const Simplex& a, const Simplex* b) {
  std::vector<Simplex> faces;
  faces.reserve(k.size());
  for (const Simplex& s : k.all_faces()) {
    if (s != a && (b == nullptr || s != *b)) faces.push_back(s);
  }
  return faces;
}

std::vector<Simplex> faces_with(const Complex& k, std::initializer_list<Simplex> extra) {
  std::vector<Simplex> faces(k.all_faces().begin(), k.all_faces().end());
  faces.insert(faces.end(), extra);
  return faces;
}

}  // namespace

Complex collapse(const Complex& k, const Simplex& sigma, const Simplex& tau) {
  require_codim_one(sigma, tau);
  auto sid = k.find(sigma);
  auto tid = k.find(tau);
  if (!sid || !tid) illegal("collapse of a pair that is not in the complex");
  auto cofaces = k.coboundary_ids(*sid);
  if (cofaces.size() != 1 || cofaces[0] != *tid) {
    illegal("(" + sigma.to_string() + ", " + tau.to_string() + ") is not a free pair");
  }
  return Complex::from_faces(faces_without(k, sigma, &tau));
}

Complex expand(const Complex& k, const Simplex& sigma, const Simplex& tau) {
  require_codim_one(sigma, tau);
  if (k.contains(sigma) || k.contains(tau)) illegal("expansion onto faces already present");
  for (const Simplex& f : tau.facets()) {
    if (f != sigma && !k.contains(f)) illegal("face " + f.to_string() + " of " + tau.to_string() + " is missing");
  }
  for (const Simplex& f : sigma.facets()) {
    if (!k.contains(f)) illegal("face " + f.to_string() + " of " + sigma.to_string() + " is missing");
  }
  return Complex::from_faces(faces_with(k, {sigma, tau}));
}

Complex perforate(const Complex& k, const Simplex& nu) {
  auto id = k.find(nu);
  if (!id) illegal(nu.to_string() + " is not in the complex");
  if (!k.is_facet(*id)) illegal(nu.to_string() + " is not a facet");
  return Complex::from_faces(faces_without(k, nu, nullptr));
}

Complex fill(const Complex& k, const Simplex& nu) {
  if (nu.empty()) illegal("cannot fill the empty simplex");
  if (k.contains(nu)) illegal(nu.to_string() + " is already present");
  for (const Simplex& f : nu.facets()) {
    if (!k.contains(f)) illegal("face " + f.to_string() + " of " + nu.to_string() + " is missing");
  }
  return Complex::from_faces(faces_with(k, {nu}));
}

}  // namespace morse
