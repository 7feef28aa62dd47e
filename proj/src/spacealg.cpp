#include "polyprod/spacealg.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "polyprod/exact.hpp"

namespace polyprod {

namespace {

using Kind = SpaceKind;

// Largest number of sub-multisets a product may be split into.
constexpr long long kMaxProductSplit = 1'000'000;

std::vector<Factor> merged(std::vector<Factor> fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.term < b.term; });
  std::vector<Factor> out;
  for (auto& f : fs) {
    if (!out.empty() && out.back().term == f.term) out.back().count = detail::checked_add(out.back().count, f.count);
    else out.push_back(std::move(f));
  }
  return out;
}

std::vector<Factor> flatten(Kind k, const std::vector<Factor>& fs) {
  std::vector<Factor> flat;
  for (const auto& f : fs) {
    if (f.term.is(k)) {
      for (const auto& g : f.term.factors()) flat.push_back({g.term, detail::checked_mul(g.count, f.count)});
    } else {
      flat.push_back(f);
    }
  }
  return flat;
}

Space collect(Kind k, std::vector<Factor> fs) {
  fs = merged(std::move(fs));
  if (fs.empty()) return point();
  if (fs.size() == 1 && fs[0].count == 1) return fs[0].term;
  return Space::make_nary(k, std::move(fs));
}

Space wedge_n(const std::vector<Factor>& fs) {
  std::vector<Factor> flat = flatten(Kind::Wedge, fs);
  std::erase_if(flat, [](const Factor& f) { return f.term.is_point(); });
  return collect(Kind::Wedge, std::move(flat));
}

Space prod_n(const std::vector<Factor>& fs) {
  std::vector<Factor> flat = flatten(Kind::Prod, fs);
  std::erase_if(flat, [](const Factor& f) { return f.term.is_point(); });
  return collect(Kind::Prod, std::move(flat));
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = detail::checked_mul(r, n - k + i) / i;
  return r;
}

// Calls visit(selection, coefficient) for every nonempty sub-multiset of fs,
// where the coefficient counts the ways to pick it: ∏ C(k_i, j_i).
template <typename Visit>
void for_each_submultiset(const std::vector<Factor>& fs, Visit&& visit) {
  long long total = 1;
  for (const auto& f : fs) {
    total = detail::checked_mul(total, f.count + 1);
    if (total > kMaxProductSplit) throw ReductionError("product has too many factors to split under suspension");
  }
  std::vector<long long> pick(fs.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < fs.size() && pick[i] == fs[i].count) pick[i++] = 0;
    if (i == fs.size()) break;
    ++pick[i];
    std::vector<Factor> sel;
    long long coef = 1;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (pick[j] == 0) continue;
      sel.push_back({fs[j].term, pick[j]});
      coef = detail::checked_mul(coef, binomial(fs[j].count, pick[j]));
    }
    visit(sel, coef);
  }
}

Space smash_n(const std::vector<Factor>& fs);

Space susp_n(const Space& x) {
  switch (x.kind()) {
    case Kind::Point:
      return x;
    case Kind::Sphere:
      return sphere(x.dim() + 1);
    case Kind::Wedge: {
      std::vector<Factor> out;
      for (const auto& f : x.factors()) out.push_back({susp_n(f.term), f.count});
      return wedge_n(out);
    }
    case Kind::Prod: {
      std::vector<Factor> out;
      for_each_submultiset(x.factors(), [&](const std::vector<Factor>& sel, long long coef) {
        out.push_back({susp_n(smash_n(sel)), coef});
      });
      return wedge_n(out);
    }
    default:
      return susp(x);
  }
}

Space susp_times(Space x, long long times) {
  for (long long i = 0; i < times; ++i) x = susp_n(x);
  return x;
}

Space smash_n(const std::vector<Factor>& fs) {
  std::vector<Factor> flat = flatten(Kind::Smash, fs);
  if (flat.empty()) throw ReductionError("empty smash product");
  for (const auto& f : flat)
    if (f.term.is_point()) return point();

  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (!flat[i].term.is(Kind::Wedge)) continue;
    std::vector<Factor> rest = flat;
    const Space w = rest[i].term;
    if (--rest[i].count == 0) rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<Factor> summands;
    for (const auto& g : w.factors()) {
      std::vector<Factor> parts = rest;
      parts.push_back({g.term, 1});
      summands.push_back({smash_n(parts), g.count});
    }
    return wedge_n(summands);
  }

  long long shift = 0;
  bool unwrapped = false;
  std::vector<Factor> others;
  for (const auto& f : flat) {
    if (f.term.is(Kind::Sphere)) {
      shift = detail::checked_add(shift, detail::checked_mul<long long>(f.term.dim(), f.count));
    } else if (f.term.is(Kind::Susp)) {
      others.push_back({f.term.arg(), f.count});
      shift = detail::checked_add(shift, f.count);
      unwrapped = true;
    } else {
      others.push_back(f);
    }
  }
  if (others.empty()) return sphere(static_cast<int>(shift));
  Space core = unwrapped ? smash_n(others) : collect(Kind::Smash, others);
  return susp_times(std::move(core), shift);
}

Space loop_n(const Space& x) {
  if (x.is_point()) return x;
  if (x.is(Kind::Prod)) {
    std::vector<Factor> out;
    for (const auto& f : x.factors()) out.push_back({loop_n(f.term), f.count});
    return prod_n(out);
  }
  return loop(x);
}

Space half_smash_n(const Space& a, const Space& b) {
  if (a.is_point()) return a;
  if (b.is_point()) return a;
  if (auto c = desuspend(a)) return wedge_n({{a, 1}, {smash_n({{*c, 1}, {susp_n(b), 1}}), 1}});
  return rhalf_smash(a, b);
}

Space norm(const Space& e) {
  switch (e.kind()) {
    case Kind::Point:
    case Kind::Sphere:
    case Kind::Atom:
      return e;
    case Kind::Cone:
      return point();
    case Kind::Susp:
      return susp_n(norm(e.arg()));
    case Kind::Loop:
      return loop_n(norm(e.arg()));
    case Kind::Join:
      return susp_n(smash_n({{norm(e.arg(0)), 1}, {norm(e.arg(1)), 1}}));
    case Kind::RHalfSmash:
      return half_smash_n(norm(e.arg(0)), norm(e.arg(1)));
    case Kind::Wedge:
    case Kind::Prod:
    case Kind::Smash: {
      std::vector<Factor> fs;
      for (const auto& f : e.factors()) fs.push_back({norm(f.term), f.count});
      if (e.is(Kind::Wedge)) return wedge_n(fs);
      if (e.is(Kind::Prod)) return prod_n(fs);
      return smash_n(fs);
    }
  }
  return e;
}

// ---------------------------------------------------------------- series

Series series_rec(const Space& e, int N);

Series reduced_rec(const Space& e, int N) { return series_rec(e, N).reduced(); }

Series loop_of_normal(const Space& n, int N) {
  switch (n.kind()) {
    case Kind::Point:
      return Series::one(N);
    case Kind::Prod: {
      Series out = Series::one(N);
      for (const auto& f : n.factors()) out *= loop_of_normal(f.term, N).pow(static_cast<unsigned long long>(f.count));
      return out;
    }
    case Kind::Atom:
      if (!n.atom().loop_series) throw ReductionError("atom '" + n.atom().name + "' has no declared loop series");
      if (n.atom().loop_series->empty() || n.atom().loop_series->front() != 1)
        throw ReductionError("atom '" + n.atom().name + "' loop series must start with 1");
      return Series(N, *n.atom().loop_series);
    default:
      break;
  }
  if (!is_suspension(n)) throw ReductionError("cannot compute the loop homology of " + to_sexpr(n));
  const Series r = reduced_rec(n, N + 1);
  if (r[1] != 0) throw ReductionError("loop of a term that is not simply connected: " + to_sexpr(n));
  // Bott-Samelson: H_*(ΩΣY) is the tensor algebra on H̃_*(Y).
  return (Series::one(N) - r.divided_by_t(1)).inverse();
}

Series series_rec(const Space& e, int N) {
  const Series one = Series::one(N);
  switch (e.kind()) {
    case Kind::Point:
    case Kind::Cone:
      return one;
    case Kind::Sphere:
      return one + Series::monomial(N, e.dim());
    case Kind::Atom: {
      const auto& a = e.atom();
      if (!a.reduced_series) throw ReductionError("atom '" + a.name + "' has no declared series");
      Series r(N, *a.reduced_series);
      r[0] = 0;
      return one + r;
    }
    case Kind::Wedge: {
      Series out = one;
      for (const auto& f : e.factors()) out += reduced_rec(f.term, N).scaled(f.count);
      return out;
    }
    case Kind::Prod: {
      Series out = one;
      for (const auto& f : e.factors()) out *= series_rec(f.term, N).pow(static_cast<unsigned long long>(f.count));
      return out;
    }
    case Kind::Smash: {
      Series out = one;
      for (const auto& f : e.factors()) out *= reduced_rec(f.term, N).pow(static_cast<unsigned long long>(f.count));
      return one + out;
    }
    case Kind::Susp:
      return one + reduced_rec(e.arg(), N).shifted(1);
    case Kind::Join:
      return one + (reduced_rec(e.arg(0), N) * reduced_rec(e.arg(1), N)).shifted(1);
    case Kind::RHalfSmash:
      return one + reduced_rec(e.arg(0), N) * series_rec(e.arg(1), N);
    case Kind::Loop:
      return loop_of_normal(normalize(e.arg()), N);
  }
  return one;
}

// ---------------------------------------------------------------- spheres

void absorb(SphereMultiset& acc, const SphereMultiset& part, long long mult, int ceil) {
  for (const auto& [d, c] : part.counts) acc.add(d, detail::checked_mul(c, mult));
  if (part.truncated()) acc.ceiling = ceil;
}

SphereMultiset stable(const Space& e, int s, int ceil);

std::optional<SphereMultiset> try_genuine(const Space& e, int ceil) {
  try {
    return stable(e, 0, ceil);
  } catch (const ReductionError&) {
    return std::nullopt;
  }
}

SphereMultiset smash_rest(const SphereMultiset& genuine, const std::vector<Space>& rest, std::size_t idx, int s,
                          int ceil) {
  SphereMultiset acc;
  if (idx == rest.size()) {
    for (const auto& [d, c] : genuine.counts) acc.add(d + s, c);
    if (genuine.truncated()) acc.ceiling = ceil;
    acc.cap(ceil);
    return acc;
  }
  if (s == 0)
    throw ReductionError("smash factor " + to_sexpr(rest[idx]) + " is not a wedge of spheres and no suspension is free");
  // Σ^s(A ∧ g) = Σ^{s-1}(A ∧ Σg) = ⋁_{S^d ⊂ Σg} Σ^{s-1+d} A
  const SphereMultiset m = stable(rest[idx], 1, ceil - s + 1);
  for (const auto& [d, c] : m.counts) absorb(acc, smash_rest(genuine, rest, idx + 1, s - 1 + d, ceil), c, ceil);
  if (m.truncated()) acc.ceiling = ceil;
  acc.cap(ceil);
  return acc;
}

SphereMultiset stable_smash(const std::vector<Factor>& fs, int s, int ceil) {
  SphereMultiset genuine;
  genuine.add(0, 1);
  std::vector<Space> rest;
  for (const auto& f : fs) {
    auto g = try_genuine(f.term, ceil);
    if (!g) {
      for (long long i = 0; i < f.count; ++i) rest.push_back(f.term);
      continue;
    }
    for (long long i = 0; i < f.count; ++i) {
      SphereMultiset next;
      for (const auto& [a, ca] : genuine.counts)
        for (const auto& [b, cb] : g->counts)
          if (a + b <= ceil) next.add(a + b, detail::checked_mul(ca, cb));
      if (genuine.truncated() || g->truncated()) next.ceiling = ceil;
      genuine = std::move(next);
      if (genuine.empty()) break;
    }
  }
  return smash_rest(genuine, rest, 0, s, ceil);
}

SphereMultiset stable(const Space& e, int s, int ceil) {
  SphereMultiset out;
  switch (e.kind()) {
    case Kind::Point:
    case Kind::Cone:
      return out;
    case Kind::Sphere:
      out.add(e.dim() + s, 1);
      out.cap(ceil);
      return out;
    case Kind::Atom:
      throw ReductionError("atom '" + e.atom().name + "' has no sphere decomposition");
    case Kind::Wedge:
      for (const auto& f : e.factors()) absorb(out, stable(f.term, s, ceil), f.count, ceil);
      out.cap(ceil);
      return out;
    case Kind::Susp:
      return stable(e.arg(), s + 1, ceil);
    case Kind::Join:
      return stable(normalize(smash({e.arg(0), e.arg(1)})), s + 1, ceil);
    case Kind::Smash:
      return stable_smash(e.factors(), s, ceil);
    case Kind::Prod: {
      if (s == 0) throw ReductionError("a product is not a wedge of spheres before suspension: " + to_sexpr(e));
      for_each_submultiset(e.factors(), [&](const std::vector<Factor>& sel, long long coef) {
        absorb(out, stable(smash_n(sel), s, ceil), coef, ceil);
      });
      out.cap(ceil);
      return out;
    }
    case Kind::RHalfSmash: {
      if (s == 0) throw ReductionError("half-smash with a non-suspension left side: " + to_sexpr(e));
      absorb(out, stable(e.arg(0), s, ceil), 1, ceil);
      absorb(out, stable(smash_n({{e.arg(0), 1}, {e.arg(1), 1}}), s, ceil), 1, ceil);
      out.cap(ceil);
      return out;
    }
    case Kind::Loop: {
      if (s == 0) throw ReductionError("a loop space is not a wedge of spheres before suspension: " + to_sexpr(e));
      const Space w = normalize(e.arg());
      if (w.is_point()) return out;
      // James: ΣΩΣY = ⋁_{n>=1} ΣY^{∧n}; Σ^s ΩW = Σ^{s-1} of that.
      const SphereMultiset m = stable(w, 0, ceil - s + 1);
      for (const auto& [d, c] : m.counts)
        if (d < 2) throw ReductionError("loop of a term that is not simply connected: " + to_sexpr(w));
      const int top = ceil - s;  // largest degree of Y^{∧n} needed
      if (top < 1) {
        if (!m.empty() || m.truncated()) out.ceiling = ceil;
        return out;
      }
      std::vector<long long> g(top + 1, 0), r(top + 1, 0);
      for (const auto& [d, c] : m.counts)
        if (d - 1 <= top) g[d - 1] = c;
      for (int k = 1; k <= top; ++k) {
        r[k] = g[k];
        for (int i = 1; i < k; ++i) r[k] = detail::checked_add(r[k], detail::checked_mul(g[i], r[k - i]));
        out.add(s + k, r[k]);
      }
      if (!m.empty() || m.truncated()) out.ceiling = ceil;
      return out;
    }
  }
  return out;
}

int lowest_degree(const Space& x, int cap) {
  try {
    const Series r = poincare_series(x, cap).reduced();
    for (int i = 1; i <= cap; ++i)
      if (r[i] != 0) return i;
    return cap;
  } catch (const ReductionError&) {
    return 1;
  }
}

}  // namespace

Space normalize(const Space& e) {
  Space cur = norm(e);
  for (int i = 0; i < 64; ++i) {
    Space next = norm(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw ReductionError("normalization did not reach a fixpoint");
}

std::optional<Space> desuspend(const Space& e) {
  switch (e.kind()) {
    case Kind::Point:
      return e;
    case Kind::Sphere:
      if (e.dim() >= 2) return sphere(e.dim() - 1);
      return std::nullopt;
    case Kind::Susp:
      return e.arg();
    case Kind::Wedge: {
      std::vector<Factor> out;
      for (const auto& f : e.factors()) {
        auto d = desuspend(f.term);
        if (!d) return std::nullopt;
        out.push_back({*d, f.count});
      }
      return wedge_n(out);
    }
    default:
      return std::nullopt;
  }
}

bool is_suspension(const Space& e) {
  switch (e.kind()) {
    case Kind::Point:
    case Kind::Sphere:
    case Kind::Susp:
      return true;
    case Kind::Wedge:
      return std::all_of(e.factors().begin(), e.factors().end(), [](const Factor& f) { return is_suspension(f.term); });
    default:
      return false;
  }
}

TruncatedSpace james_split(const Space& x, int cutoff) {
  const Space n = normalize(x);
  if (n.is_point()) return {n, std::nullopt};
  SphereMultiset m;
  try {
    m = stable(n, 0, std::max(cutoff - 1, 0));
  } catch (const ReductionError& err) {
    throw ReductionError(std::string("james_split: argument is not a wedge of spheres: ") + err.what());
  }
  const int top = cutoff - 1;
  std::vector<long long> g(std::max(top, 0) + 1, 0), r(g.size(), 0);
  for (const auto& [d, c] : m.counts) g[d] = c;
  std::vector<Factor> spheres;
  for (int k = 1; k <= top; ++k) {
    r[k] = g[k];
    for (int i = 1; i < k; ++i) r[k] = detail::checked_add(r[k], detail::checked_mul(g[i], r[k - i]));
    if (r[k] != 0) spheres.push_back({sphere(k + 1), r[k]});
  }
  return {wedge_n(spheres), cutoff};
}

void for_each_lyndon_word(int alphabet_size, int max_length,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (alphabet_size < 1 || max_length < 1) return;
  std::vector<int> w{1};
  while (!w.empty()) {
    visit(w);
    const std::size_t period = w.size();
    while (static_cast<int>(w.size()) < max_length) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == alphabet_size) w.pop_back();
    if (!w.empty()) ++w.back();
  }
}

std::vector<std::vector<int>> lyndon_words(int alphabet_size, int max_length) {
  std::vector<std::vector<int>> out;
  for_each_lyndon_word(alphabet_size, max_length, [&](const std::vector<int>& w) { out.push_back(w); });
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

TruncatedSpace hilton_milnor(const Space& wedge_of_suspensions, int cutoff) {
  const Space n = normalize(wedge_of_suspensions);
  if (n.is_point()) return {n, std::nullopt};
  std::vector<Factor> summands = n.is(Kind::Wedge) ? n.factors() : std::vector<Factor>{{n, 1}};
  std::vector<Space> letters;
  for (const auto& f : summands) {
    auto x = desuspend(f.term);
    if (!x) throw ReductionError("hilton_milnor: summand is not a suspension: " + to_sexpr(f.term));
    for (long long i = 0; i < f.count; ++i) letters.push_back(*x);
  }
  const int alphabet = static_cast<int>(letters.size());
  std::vector<int> low(alphabet);
  int min_low = cutoff;
  for (int i = 0; i < alphabet; ++i) {
    low[i] = lowest_degree(letters[i], std::max(cutoff, 1));
    min_low = std::min(min_low, low[i]);
  }
  const int max_weight = cutoff - 1;
  if (max_weight < 1) return {point(), cutoff};
  const int max_length = max_weight / std::max(min_low, 1);

  // Tally words by letter content; the factor only depends on the content.
  std::map<std::vector<long long>, long long> tally;
  std::vector<long long> content(alphabet);
  for_each_lyndon_word(alphabet, max_length, [&](const std::vector<int>& w) {
    int weight = 0;
    std::fill(content.begin(), content.end(), 0);
    for (int letter : w) {
      weight += low[letter - 1];
      ++content[letter - 1];
    }
    if (weight <= max_weight) ++tally[content];
  });

  std::vector<Factor> factors;
  for (const auto& [c, count] : tally) {
    std::vector<Factor> sel;
    for (int i = 0; i < alphabet; ++i)
      if (c[i] > 0) sel.push_back({letters[i], c[i]});
    factors.push_back({loop_n(susp_n(smash_n(sel))), count});
  }
  std::optional<int> ceiling;
  if (alphabet > 1) ceiling = cutoff;
  return {prod_n(factors), ceiling};
}

Series poincare_series(const Space& e, int degree) { return series_rec(e, degree); }

SphereMultiset sphere_multiset_of(const Space& e, int max_dim) { return stable(normalize(e), 0, max_dim); }

Space to_space(const SphereMultiset& spheres) {
  std::vector<Factor> fs;
  for (const auto& [d, c] : spheres.counts)
    if (c > 0) fs.push_back({sphere(d), c});
  return wedge_n(fs);
}

Series series_of(const SphereMultiset& spheres, int degree) {
  Series out = Series::one(degree);
  for (const auto& [d, c] : spheres.counts)
    if (d <= degree) out[d] = detail::checked_add(out[d], c);
  return out;
}

}  // namespace polyprod
