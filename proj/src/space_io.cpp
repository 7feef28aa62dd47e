#include <cctype>
#include <sstream>
#include <stdexcept>

#include "polyprod/space.hpp"

namespace polyprod {

namespace {

const char* head_of(SpaceKind k) {
  switch (k) {
    case SpaceKind::Point: return "point";
    case SpaceKind::Sphere: return "sphere";
    case SpaceKind::Atom: return "atom";
    case SpaceKind::Wedge: return "wedge";
    case SpaceKind::Prod: return "prod";
    case SpaceKind::Smash: return "smash";
    case SpaceKind::Susp: return "susp";
    case SpaceKind::Loop: return "loop";
    case SpaceKind::Join: return "join";
    case SpaceKind::RHalfSmash: return "rhalfsmash";
    case SpaceKind::Cone: return "cone";
  }
  return "?";
}

bool needs_quotes(const std::string& s) {
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"') return true;
  return false;
}

void print_coeffs(std::ostream& os, const char* tag, const std::vector<long long>& c) {
  os << " (" << tag;
  for (long long x : c) os << ' ' << x;
  os << ')';
}

void print(std::ostream& os, const Space& e) {
  os << '(' << head_of(e.kind());
  switch (e.kind()) {
    case SpaceKind::Point:
      break;
    case SpaceKind::Sphere:
      os << ' ' << e.dim();
      break;
    case SpaceKind::Atom: {
      const auto& a = e.atom();
      if (needs_quotes(a.name)) os << " \"" << a.name << '"';
      else os << ' ' << a.name;
      if (a.reduced_series) print_coeffs(os, "series", *a.reduced_series);
      if (a.loop_series) print_coeffs(os, "loop-series", *a.loop_series);
      break;
    }
    default:
      for (const auto& f : e.factors()) {
        os << ' ';
        if (f.count != 1) {
          os << "(rep " << f.count << ' ';
          print(os, f.term);
          os << ')';
        } else {
          print(os, f.term);
        }
      }
  }
  os << ')';
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Space parse_all() {
    Space e = term();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("term syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string token() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '"') {
      const auto end = s_.find('"', pos_ + 1);
      if (end == std::string::npos) fail("unterminated string");
      std::string out = s_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
      return out;
    }
    const auto start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected a token");
    return s_.substr(start, pos_ - start);
  }

  long long integer() {
    const std::string t = token();
    try {
      std::size_t used = 0;
      const long long v = std::stoll(t, &used);
      if (used != t.size()) fail("bad integer '" + t + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad integer '" + t + "'");
    }
  }

  std::vector<long long> coeff_list() {
    std::vector<long long> out;
    while (!peek(')')) out.push_back(integer());
    return out;
  }

  Factor factor() {
    skip_ws();
    const auto save = pos_;
    expect('(');
    if (token() == "rep") {
      const long long n = integer();
      if (n < 1) fail("rep count must be positive");
      Space t = term();
      expect(')');
      return {t, n};
    }
    pos_ = save;
    return {term(), 1};
  }

  Space term() {
    expect('(');
    const std::string head = token();
    Space out;
    if (head == "point") {
      out = point();
    } else if (head == "sphere") {
      const long long d = integer();
      if (d < 1) fail("sphere dimension must be at least 1");
      out = sphere(static_cast<int>(d));
    } else if (head == "atom") {
      Space::AtomData data;
      data.name = token();
      while (peek('(')) {
        expect('(');
        const std::string tag = token();
        if (tag == "series") data.reduced_series = coeff_list();
        else if (tag == "loop-series") data.loop_series = coeff_list();
        else fail("unknown atom attribute '" + tag + "'");
        expect(')');
      }
      out = Space::make_atom(std::move(data));
    } else if (head == "wedge" || head == "prod" || head == "smash") {
      std::vector<Factor> fs;
      while (peek('(')) fs.push_back(factor());
      const auto k = head == "wedge" ? SpaceKind::Wedge : head == "prod" ? SpaceKind::Prod : SpaceKind::Smash;
      out = Space::make_nary(k, std::move(fs));
    } else if (head == "susp" || head == "loop" || head == "cone") {
      Space x = term();
      const auto k = head == "susp" ? SpaceKind::Susp : head == "loop" ? SpaceKind::Loop : SpaceKind::Cone;
      out = Space::make_unary(k, std::move(x));
    } else if (head == "join" || head == "rhalfsmash") {
      Space a = term();
      Space b = term();
      out = Space::make_binary(head == "join" ? SpaceKind::Join : SpaceKind::RHalfSmash, std::move(a), std::move(b));
    } else {
      fail("unknown constructor '" + head + "'");
    }
    expect(')');
    return out;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_sexpr(const Space& e) {
  std::ostringstream os;
  print(os, e);
  return os.str();
}

Space parse_sexpr(const std::string& text) { return Parser(text).parse_all(); }

}  // namespace polyprod
