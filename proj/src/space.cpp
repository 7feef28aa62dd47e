#include "polyprod/space.hpp"

#include <stdexcept>

namespace polyprod {

namespace {

bool is_nary(Space::Kind k) {
  return k == Space::Kind::Wedge || k == Space::Kind::Prod || k == Space::Kind::Smash;
}

std::vector<Factor> singles(std::vector<Space> xs) {
  std::vector<Factor> out;
  out.reserve(xs.size());
  for (auto& x : xs) out.push_back({std::move(x), 1});
  return out;
}

}  // namespace

Space::Space() : Space(make_point()) {}

const Space& Space::arg(std::size_t i) const {
  if (i >= node_->children.size()) throw std::out_of_range("space term has no argument " + std::to_string(i));
  return node_->children[i].term;
}

Space Space::make_point() {
  static const auto node = std::make_shared<const Node>();
  return Space(node);
}

Space Space::make_sphere(int d) {
  if (d < 1) throw std::invalid_argument("sphere dimension must be at least 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sphere;
  n->dim = d;
  return Space(std::move(n));
}

Space Space::make_atom(AtomData data) {
  if (data.name.empty()) throw std::invalid_argument("atom needs a name");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = std::make_shared<const AtomData>(std::move(data));
  return Space(std::move(n));
}

Space Space::make_nary(Kind k, std::vector<Factor> children) {
  if (!is_nary(k)) throw std::invalid_argument("not an n-ary constructor");
  for (const auto& f : children)
    if (f.count < 1) throw std::invalid_argument("factor multiplicity must be positive");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->children = std::move(children);
  return Space(std::move(n));
}

Space Space::make_unary(Kind k, Space x) {
  if (k != Kind::Susp && k != Kind::Loop && k != Kind::Cone) throw std::invalid_argument("not a unary constructor");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->children.push_back({std::move(x), 1});
  return Space(std::move(n));
}

Space Space::make_binary(Kind k, Space a, Space b) {
  if (k != Kind::Join && k != Kind::RHalfSmash) throw std::invalid_argument("not a binary constructor");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->children.push_back({std::move(a), 1});
  n->children.push_back({std::move(b), 1});
  return Space(std::move(n));
}

std::strong_ordering operator<=>(const Space& a, const Space& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Space::Kind::Point:
      return std::strong_ordering::equal;
    case Space::Kind::Sphere:
      return a.dim() <=> b.dim();
    case Space::Kind::Atom:
      return a.atom() <=> b.atom();
    default:
      break;
  }
  const auto& x = a.factors();
  const auto& y = b.factors();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].term <=> y[i].term; c != 0) return c;
    if (auto c = x[i].count <=> y[i].count; c != 0) return c;
  }
  return x.size() <=> y.size();
}

Space wedge(std::vector<Space> xs) { return wedge(singles(std::move(xs))); }
Space wedge(std::vector<Factor> xs) { return Space::make_nary(SpaceKind::Wedge, std::move(xs)); }
Space prod(std::vector<Space> xs) { return prod(singles(std::move(xs))); }
Space prod(std::vector<Factor> xs) { return Space::make_nary(SpaceKind::Prod, std::move(xs)); }
Space smash(std::vector<Space> xs) { return smash(singles(std::move(xs))); }
Space smash(std::vector<Factor> xs) { return Space::make_nary(SpaceKind::Smash, std::move(xs)); }

Space wedge_power(const Space& x, long long n) { return n == 0 ? point() : wedge(std::vector<Factor>{{x, n}}); }
Space prod_power(const Space& x, long long n) { return n == 0 ? point() : prod(std::vector<Factor>{{x, n}}); }
Space smash_power(const Space& x, long long n) {
  if (n < 1) throw std::invalid_argument("smash power needs a positive exponent");
  return smash(std::vector<Factor>{{x, n}});
}

Space cp_infinity() { return atom("CP^inf", std::nullopt, std::vector<long long>{1, 1}); }

std::size_t node_count(const Space& e) {
  std::size_t n = 1;
  for (const auto& f : e.factors()) n += node_count(f.term);
  return n;
}

}  // namespace polyprod
