#include "polyprod/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace polyprod {

namespace {

struct FaceLess {
  bool operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw ComplexError(msg);
}

bool is_permutation_of(const Permutation& perm, int m) {
  if (static_cast<int>(perm.size()) != m) return false;
  std::vector<char> seen(m, 0);
  for (Vertex v : perm) {
    if (v < 0 || v >= m || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation identity(int m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Vertex>(i);
  return inv;
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

namespace {
// Faces are stored explicitly, so a face of size k costs 2^k entries.
constexpr std::size_t kMaxFaceSize = 20;
}  // namespace

SimplicialComplex::SimplicialComplex() : m_(0), faces_{Face{}} {}

SimplicialComplex::SimplicialComplex(int m, std::vector<Face> faces) : m_(m), faces_(std::move(faces)) {}

SimplicialComplex SimplicialComplex::from_facets(int ground_size, const std::vector<Face>& facets) {
  require(ground_size >= 0, "ground size must be non-negative");
  std::set<Face, FaceLess> closure;
  closure.insert(Face{});
  for (Face f : facets) {
    for (Vertex v : f) {
      require(v >= 0 && v < ground_size,
              "vertex label " + std::to_string(v) + " out of range for ground size " + std::to_string(ground_size));
    }
    f = sorted_unique(std::move(f));
    require(f.size() <= kMaxFaceSize, "face with " + std::to_string(f.size()) + " vertices is too large to store");
    if (closure.count(f)) continue;
    const std::uint64_t n = std::uint64_t{1} << f.size();
    for (std::uint64_t mask = 1; mask < n; ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1u) sub.push_back(f[i]);
      closure.insert(std::move(sub));
    }
  }
  return SimplicialComplex(ground_size, std::vector<Face>(closure.begin(), closure.end()));
}

bool SimplicialComplex::contains(const Face& face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, FaceLess{});
}

bool SimplicialComplex::has_ghosts() const {
  for (Vertex v = 0; v < m_; ++v)
    if (!has_vertex(v)) return true;
  return false;
}

int SimplicialComplex::dimension() const { return static_cast<int>(faces_.back().size()) - 1; }

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  // A face is maximal iff no face one larger contains it.
  for (const Face& f : faces_) {
    if (f.empty() && faces_.size() > 1) continue;
    bool maximal = true;
    for (Vertex v = 0; v < m_ && maximal; ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      if (contains(g)) maximal = false;
    }
    if (maximal && !f.empty()) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SimplicialComplex::validate() const {
  require(m_ >= 0, "negative ground size");
  require(!faces_.empty() && faces_.front().empty(), "empty face missing");
  require(std::is_sorted(faces_.begin(), faces_.end(), FaceLess{}), "faces not canonically sorted");
  for (const Face& f : faces_) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      require(f[i] >= 0 && f[i] < m_, "vertex label out of range");
      require(i == 0 || f[i - 1] < f[i], "face not strictly increasing");
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      require(contains(sub), "complex not closed under taking subsets");
    }
  }
}

SimplicialComplex path_graph(int length) {
  require(length >= 1, "path length must be at least 1");
  std::vector<Face> edges;
  for (int i = 0; i < length; ++i) edges.push_back({i, i + 1});
  return SimplicialComplex::from_facets(length + 1, edges);
}

SimplicialComplex cycle_graph(int length) {
  require(length >= 3, "cycle length must be at least 3");
  std::vector<Face> edges;
  for (int i = 0; i < length; ++i) edges.push_back({i, (i + 1) % length});
  return SimplicialComplex::from_facets(length, edges);
}

SimplicialComplex disjoint_points(int count) {
  require(count >= 1, "need at least one point");
  std::vector<Face> pts;
  for (int i = 0; i < count; ++i) pts.push_back({i});
  return SimplicialComplex::from_facets(count, pts);
}

SimplicialComplex simplex(int dim) {
  require(dim >= 0, "simplex dimension must be non-negative");
  Face all(dim + 1);
  std::iota(all.begin(), all.end(), 0);
  return SimplicialComplex::from_facets(dim + 1, {all});
}

SimplicialComplex book_graph(int n, int l, int p) {
  require(l >= 3, "book graph cycle length must be at least 3");
  require(n >= 1 && n <= l - 2, "book graph path length must satisfy 1 <= n <= l-2");
  require(p >= 2, "book graph needs at least two pages");
  const int free_per_page = l - n - 1;
  const int m = n + 1 + p * free_per_page;
  std::vector<Face> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, i + 1});
  int next = n + 1;
  for (int page = 0; page < p; ++page) {
    int prev = n;
    for (int k = 0; k < free_per_page; ++k) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 0});
  }
  return SimplicialComplex::from_facets(m, edges);
}

SimplicialComplex planar_book(int l, int p) {
  require(l >= 2, "planar book path length must be at least 2");
  require(p >= 2, "planar book needs at least two pages");
  const int m = 2 + (p + 1) * (l - 1);
  std::vector<Face> edges;
  int next = 2;
  for (int path = 0; path <= p; ++path) {
    int prev = 0;
    for (int k = 0; k < l - 1; ++k) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return SimplicialComplex::from_facets(m, edges);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, std::vector<Vertex> subset) {
  subset = sorted_unique(std::move(subset));
  std::vector<int> index(K.ground_size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    require(subset[i] >= 0 && subset[i] < K.ground_size(), "subset label out of range");
    index[subset[i]] = static_cast<int>(i);
  }
  std::vector<Face> kept;
  for (const Face& f : K.faces()) {
    Face g;
    g.reserve(f.size());
    bool inside = true;
    for (Vertex v : f) {
      if (index[v] < 0) {
        inside = false;
        break;
      }
      g.push_back(index[v]);
    }
    if (inside) kept.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(static_cast<int>(subset.size()), kept);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, std::uint64_t mask) {
  require(K.ground_size() < 64, "bitmask subsets need ground size below 64");
  std::vector<Vertex> subset;
  for (Vertex v = 0; v < K.ground_size(); ++v)
    if (mask >> v & 1u) subset.push_back(v);
  require(K.ground_size() == 63 || (mask >> K.ground_size()) == 0, "subset label out of range");
  return full_subcomplex(K, std::move(subset));
}

SimplicialComplex relabel(const SimplicialComplex& K, const Permutation& perm) {
  require(is_permutation_of(perm, K.ground_size()), "relabelling is not a bijection of the ground set");
  std::vector<Face> image;
  image.reserve(K.faces().size());
  for (const Face& f : K.faces()) {
    Face g;
    for (Vertex v : f) g.push_back(perm[v]);
    image.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(K.ground_size(), image);
}

bool is_automorphism(const SimplicialComplex& K, const Permutation& perm) {
  if (!is_permutation_of(perm, K.ground_size())) return false;
  for (const Face& f : K.faces()) {
    Face g;
    for (Vertex v : f) g.push_back(perm[v]);
    std::sort(g.begin(), g.end());
    if (!K.contains(g)) return false;
  }
  return true;
}

void GluingSpec::validate() const {
  base.validate();
  const int m = base.ground_size();
  require(copies >= 2, "gluing needs at least two copies");
  const Permutation p = psi.empty() ? identity(m) : psi;
  require(is_permutation_of(p, m), "psi is not a bijection of the base vertices");
  require(is_automorphism(base, p), "psi is not a simplicial automorphism of the base complex");
  const auto a = sorted_unique(sub_a);
  const auto b = sorted_unique(sub_b);
  for (Vertex v : a) require(v >= 0 && v < m, "L_1 vertex out of range");
  for (Vertex v : b) require(v >= 0 && v < m, "L_2 vertex out of range");
  std::vector<Vertex> pa, pb;
  for (Vertex v : a) pa.push_back(p[v]);
  for (Vertex v : b) pb.push_back(p[v]);
  require(sorted_unique(pa) == b, "psi does not map L_1 onto L_2");
  require(sorted_unique(pb) == a, "psi does not map L_2 onto L_1");
  require(phi.empty() || static_cast<int>(phi.size()) == copies - 1, "phi must list one map per copy after the first");
  for (const Permutation& f : phi)
    require(is_permutation_of(f, m), "phi is not a simplicial isomorphism (not a bijection)");
}

SimplicialComplex glue(const GluingSpec& spec) {
  spec.validate();
  const int m = spec.base.ground_size();
  const Permutation psi = spec.psi.empty() ? identity(m) : spec.psi;
  const Permutation psi_inv = inverse(psi);
  auto phi_of = [&](int copy) -> Permutation {
    // copy is 1-based; copy 1 is the base itself
    if (copy == 1 || spec.phi.empty()) return identity(m);
    return spec.phi[copy - 2];
  };
  std::vector<char> in_l1(m, 0);
  for (Vertex v : spec.sub_a) in_l1[v] = 1;

  // global[c][u]: global label of vertex u of copy c (in that copy's labels)
  std::vector<std::vector<Vertex>> global(spec.copies + 1);
  global[1] = identity(m);
  int next = m;
  for (int c = 2; c <= spec.copies; ++c) {
    const Permutation phi_prev = phi_of(c - 1);
    const Permutation phi_cur = phi_of(c);
    const Permutation phi_cur_inv = inverse(phi_cur);
    global[c].assign(m, -1);
    for (Vertex u = 0; u < m; ++u) {
      const Vertex v = phi_cur_inv[u];
      if (in_l1[v]) global[c][u] = global[c - 1][phi_prev[psi_inv[v]]];
    }
    for (Vertex u = 0; u < m; ++u)
      if (global[c][u] < 0) global[c][u] = next++;
  }
  std::vector<Face> faces;
  for (int c = 1; c <= spec.copies; ++c) {
    const Permutation phi = phi_of(c);
    for (const Face& f : spec.base.faces()) {
      Face g;
      for (Vertex v : f) g.push_back(global[c][phi[v]]);
      faces.push_back(std::move(g));
    }
  }
  return SimplicialComplex::from_facets(next, faces);
}

GluingSpec book_gluing(int n, int l, int p) {
  require(l >= 3, "book graph cycle length must be at least 3");
  require(n >= 1 && n <= l - 2, "book graph path length must satisfy 1 <= n <= l-2");
  require(p >= 2, "book graph needs at least two pages");
  GluingSpec s;
  s.base = cycle_graph(l);
  for (Vertex v = 0; v <= n; ++v) s.sub_a.push_back(v);
  s.sub_b = s.sub_a;
  s.copies = p;
  return s;
}

GluingSpec planar_book_gluing(int l, int p) {
  require(l >= 2, "planar book path length must be at least 2");
  require(p >= 2, "planar book needs at least two pages");
  GluingSpec s;
  s.base = path_graph(l);
  s.sub_a = {0, l};
  s.sub_b = s.sub_a;
  s.copies = p + 1;
  return s;
}

bool is_flag(const SimplicialComplex& K) {
  const int m = K.ground_size();
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (const Face& f : K.faces())
    if (f.size() == 2) adj[f[0]][f[1]] = adj[f[1]][f[0]] = 1;
  // Every clique extends a face by one adjacent vertex at a time.
  for (const Face& f : K.faces()) {
    if (f.size() < 2) continue;
    for (Vertex v = 0; v < m; ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      bool adjacent_to_all = true;
      for (Vertex w : f) adjacent_to_all = adjacent_to_all && adj[v][w];
      if (!adjacent_to_all) continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      if (!K.contains(g)) return false;
    }
  }
  return true;
}

std::vector<long long> f_vector(const SimplicialComplex& K) {
  std::vector<long long> f(K.dimension() + 2, 0);
  for (const Face& face : K.faces()) ++f[face.size()];
  return f;
}

std::optional<Permutation> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int m = a.ground_size();
  if (m != b.ground_size() || a.faces().size() != b.faces().size() || f_vector(a) != f_vector(b))
    return std::nullopt;
  // Vertex signature: number of faces of each size containing the vertex.
  auto signatures = [m](const SimplicialComplex& K) {
    std::vector<std::vector<int>> sig(m, std::vector<int>(K.dimension() + 2, 0));
    for (const Face& f : K.faces())
      for (Vertex v : f) ++sig[v][f.size()];
    return sig;
  };
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  // Faces of a grouped by their largest vertex, checked once that vertex is placed.
  std::vector<std::vector<const Face*>> closing(m);
  for (const Face& f : a.faces())
    if (!f.empty()) closing[f.back()].push_back(&f);

  Permutation perm(m, -1);
  std::vector<char> used(m, 0);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == m) return true;
    for (Vertex w = 0; w < m; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      perm[v] = w;
      bool ok = true;
      for (const Face* f : closing[v]) {
        Face g;
        for (Vertex x : *f) g.push_back(perm[x]);
        std::sort(g.begin(), g.end());
        if (!b.contains(g)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[w] = 1;
        if (extend(v + 1)) return true;
        used[w] = 0;
      }
    }
    perm[v] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return perm;
}

std::string canonical_key(const SimplicialComplex& K) {
  std::ostringstream os;
  os << K.ground_size() << '|';
  for (const Face& f : K.faces()) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ';';
  }
  return os.str();
}

}  // namespace polyprod
