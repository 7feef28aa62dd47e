#include "polyprod/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

#include "polyprod/exact.hpp"

namespace polyprod {

namespace {

std::vector<std::vector<const Face*>> faces_by_size(const SimplicialComplex& K) {
  std::vector<std::vector<const Face*>> by_size(K.dimension() + 2);
  for (const Face& f : K.faces()) by_size[f.size()].push_back(&f);
  return by_size;
}

template <typename Scalar>
DenseMatrix<Scalar> boundary_from(const std::vector<std::vector<const Face*>>& by_size, int k) {
  const auto& rows = by_size[k - 1];
  const auto& cols = by_size[k];
  DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(rows.size()),
                                                    static_cast<Eigen::Index>(cols.size()));
  // Faces of one size are lexicographically sorted, so row lookup is a binary search.
  auto less = [](const Face* a, const Face& b) { return *a < b; };
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Face& f = *cols[c];
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      auto it = std::lower_bound(rows.begin(), rows.end(), sub, less);
      d(it - rows.begin(), static_cast<Eigen::Index>(c)) = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
    }
  }
  return d;
}

template <typename Scalar>
ReducedBetti reduced_betti_with(const SimplicialComplex& K) {
  const auto by_size = faces_by_size(K);
  const int top = static_cast<int>(by_size.size()) - 1;  // largest face size
  // rank[k] = rank of the map from size-k faces to size-(k-1) faces
  std::vector<int> rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) rank[k] = exact_rank<Scalar>(boundary_from<Scalar>(by_size, k));
  ReducedBetti out;
  out.values.resize(top + 1);
  for (int k = 0; k <= top; ++k)
    out.values[k] = static_cast<long long>(by_size[k].size()) - rank[k] - rank[k + 1];
  while (out.values.size() > 1 && out.values.back() == 0) out.values.pop_back();
  return out;
}

}  // namespace

template <typename Scalar>
DenseMatrix<Scalar> boundary_matrix(const SimplicialComplex& K, int k) {
  const auto by_size = faces_by_size(K);
  if (k < 1 || k >= static_cast<int>(by_size.size())) return DenseMatrix<Scalar>(0, 0);
  return boundary_from<Scalar>(by_size, k);
}

template DenseMatrix<long long> boundary_matrix<long long>(const SimplicialComplex&, int);
template DenseMatrix<__int128> boundary_matrix<__int128>(const SimplicialComplex&, int);

ReducedBetti reduced_betti(const SimplicialComplex& K) {
  try {
    return reduced_betti_with<long long>(K);
  } catch (const OverflowError&) {
    return reduced_betti_with<__int128>(K);
  }
}

namespace {

class BettiMemo {
 public:
  std::optional<ReducedBetti> find(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::string& key, const ReducedBetti& value) {
    std::lock_guard lock(mutex_);
    table_.try_emplace(key, value);
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, ReducedBetti> table_;
};

void accumulate(std::map<int, long long>& into, const std::map<int, long long>& from) {
  for (const auto& [deg, r] : from) into[deg] = detail::checked_add(into[deg], r);
}

}  // namespace

BettiTable hochster_zk_betti(const SimplicialComplex& K, const HochsterOptions& opts) {
  const int m = K.ground_size();
  if (m > opts.max_ground_size)
    throw HochsterError(HochsterError::Kind::TooLarge, "ground size " + std::to_string(m) +
                                                           " exceeds the subset-enumeration ceiling " +
                                                           std::to_string(opts.max_ground_size));
  if (K.has_ghosts())
    throw HochsterError(HochsterError::Kind::GhostVertex, "Hochster enumeration requires every vertex to be a face");

  const std::uint64_t total = std::uint64_t{1} << m;
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(total)));
  BettiMemo memo;
  std::vector<std::map<int, long long>> partial(workers);

  std::vector<std::exception_ptr> failures(workers);

  auto enumerate = [&](unsigned w) {
    auto& local = partial[w];
    for (std::uint64_t mask = w; mask < total; mask += workers) {
      const SimplicialComplex sub = full_subcomplex(K, mask);
      ReducedBetti rb;
      if (opts.memoize) {
        const std::string key = canonical_key(sub);
        if (auto hit = memo.find(key)) {
          rb = *hit;
        } else {
          rb = reduced_betti(sub);
          memo.insert(key, rb);
        }
      } else {
        rb = reduced_betti(sub);
      }
      const int size = __builtin_popcountll(mask);
      for (int i = -1; i <= rb.top_degree(); ++i)
        if (rb[i] != 0) local[i + size + 1] = detail::checked_add(local[i + size + 1], rb[i]);
    }
  };

  auto run = [&](unsigned w) {
    try {
      enumerate(w);
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& e : failures)
    if (e) std::rethrow_exception(e);

  BettiTable table;
  table.ground_size = m;
  for (const auto& p : partial) accumulate(table.ranks, p);
  std::erase_if(table.ranks, [](const auto& kv) { return kv.second == 0; });
  return table;
}

SphereMultiset zk_sphere_multiset(const SimplicialComplex& K, const HochsterOptions& opts) {
  const BettiTable table = hochster_zk_betti(K, opts);
  if (table[0] != 1)
    throw HochsterError(HochsterError::Kind::Disconnected, "Z_K is not connected (b_0 != 1)");
  SphereMultiset out;
  for (const auto& [deg, r] : table.ranks)
    if (deg >= 1) out.add(deg, r);
  return out;
}

}  // namespace polyprod
