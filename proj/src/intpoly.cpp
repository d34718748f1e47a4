#include "dgc/intpoly.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace dgc {

std::uint64_t work_limit() {
  static const std::uint64_t limit = [] {
    const char* s = std::getenv("DGC_WORK_LIMIT");
    if (s && *s) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) return (std::uint64_t)v;
    }
    return (std::uint64_t)1000000000ULL;
  }();
  return limit;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

int exps_total(const Exps& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

bool GrlexDesc::operator()(const Exps& a, const Exps& b) const {
  int ta = exps_total(a), tb = exps_total(b);
  if (ta != tb) return ta > tb;
  return a > b;  // lexicographic on exponents, x0 biggest
}

IntPoly::IntPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw Error("IntPoly needs at least one variable");
}

IntPoly IntPoly::constant(int nvars, const Int& c) {
  IntPoly f(nvars);
  f.add_term(Exps(nvars, 0), c);
  return f;
}

IntPoly IntPoly::variable(int nvars, int var) {
  Exps e(nvars, 0);
  e.at(var) = 1;
  IntPoly f(nvars);
  f.add_term(e, 1);
  return f;
}

IntPoly IntPoly::monomial(const Exps& e, const Int& c) {
  IntPoly f((int)e.size());
  f.add_term(e, c);
  return f;
}

bool IntPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exps_total(terms_.begin()->first) == 0);
}

int IntPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return exps_total(terms_.begin()->first);  // leading term has max degree
}

int IntPoly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_)
    if (e[var] > d) d = e[var];
  return d;
}

Int IntPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void IntPoly::add_term(const Exps& e, const Int& c) {
  if ((int)e.size() != nvars_) throw Error("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator-() const {
  IntPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.nvars_ != nvars_) throw Error("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.nvars_ != nvars_) throw Error("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error("variable count mismatch");
  IntPoly r(a.nvars_);
  Exps e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

IntPoly& IntPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool IntPoly::operator==(const IntPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

IntPoly IntPoly::pow(int k) const {
  if (k < 0) throw Error("negative power");
  IntPoly r = constant(nvars_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Int IntPoly::eval(const std::vector<Int>& pt) const {
  if ((int)pt.size() != nvars_) throw Error("point length mismatch");
  // power tables keyed by variable
  std::vector<std::vector<Int>> pw(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    int d = degree_in(i);
    pw[i].assign(d + 2, 1);
    for (int k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * pt[i];
  }
  Int s = 0;
  for (const auto& [e, c] : terms_) {
    Int t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t *= pw[i][e[i]];
    s += t;
  }
  return s;
}

IntPoly IntPoly::eval_partial(int var, const Int& value) const {
  int d = degree_in(var);
  std::vector<Int> pw(d >= 0 ? d + 1 : 1, 1);
  for (int k = 1; k <= d; ++k) pw[k] = pw[k - 1] * value;
  IntPoly r(nvars_);
  Exps e2;
  for (const auto& [e, c] : terms_) {
    e2 = e;
    e2[var] = 0;
    r.add_term(e2, c * pw[e[var]]);
  }
  return r;
}

IntPoly IntPoly::derivative(int var) const {
  IntPoly r(nvars_);
  Exps e2;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    e2 = e;
    e2[var] -= 1;
    r.add_term(e2, c * e[var]);
  }
  return r;
}

IntPoly IntPoly::compose(const std::vector<IntPoly>& images) const {
  if ((int)images.size() != nvars_) throw Error("compose: image count mismatch");
  int nv = images.empty() ? 1 : images[0].nvars();
  for (const auto& g : images)
    if (g.nvars() != nv) throw Error("compose: images disagree on variable count");
  // image power caches
  std::vector<std::vector<IntPoly>> pw(nvars_);
  for (int i = 0; i < nvars_; ++i) pw[i].push_back(IntPoly::constant(nv, 1));
  auto power = [&](int i, int k) -> const IntPoly& {
    while ((int)pw[i].size() <= k) pw[i].push_back(pw[i].back() * images[i]);
    return pw[i][k];
  };
  IntPoly r(nv);
  for (const auto& [e, c] : terms_) {
    IntPoly t = IntPoly::constant(nv, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

bool IntPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  for (const auto& [e, c] : terms_)
    if (exps_total(e) != d) return false;
  return true;
}

IntPoly IntPoly::homogenize() const {
  int d = total_degree();
  IntPoly r(nvars_ + 1);
  Exps e2(nvars_ + 1);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) e2[i] = e[i];
    e2[nvars_] = d - exps_total(e);
    r.add_term(e2, c);
  }
  return r;
}

IntPoly IntPoly::dehomogenize(int var) const {
  if (nvars_ < 2) throw Error("dehomogenize needs at least two variables");
  IntPoly r(nvars_ - 1);
  Exps e2(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    int j = 0;
    for (int i = 0; i < nvars_; ++i)
      if (i != var) e2[j++] = e[i];
    r.add_term(e2, c);
  }
  return r;
}

IntPoly IntPoly::drop_var(int var) const {
  if (degree_in(var) > 0) throw Error("drop_var: variable occurs");
  return dehomogenize(var);
}

IntPoly IntPoly::insert_var(int pos) const {
  IntPoly r(nvars_ + 1);
  Exps e2(nvars_ + 1, 0);
  for (const auto& [e, c] : terms_) {
    int j = 0;
    for (int i = 0; i <= nvars_; ++i) {
      if (i == pos) {
        e2[i] = 0;
      } else {
        e2[i] = e[j++];
      }
    }
    r.add_term(e2, c);
  }
  return r;
}

Int coeff_norm(const IntPoly& f) {
  Int m = 0;
  for (const auto& [e, c] : f.terms()) {
    Int a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

std::pair<Int, IntPoly> content_and_primitive(const IntPoly& f) {
  if (f.is_zero()) throw Error("content of zero polynomial");
  Int g = 0;
  for (const auto& [e, c] : f.terms()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  if (g < 0) g = -g;
  IntPoly prim(f.nvars());
  for (const auto& [e, c] : f.terms()) prim.add_term(e, c / g);
  return {g, prim};
}

IntPoly degree_part(const IntPoly& f, int k) {
  IntPoly r(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (exps_total(e) == k) r.add_term(e, c);
  return r;
}

namespace {

struct Parser {
  const std::string& s;
  const std::vector<std::string>& vars;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  IntPoly parse_expr() {
    bool neg = false;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      if (eat('-')) neg = !neg;
      else eat('+');
    }
    IntPoly r = parse_term();
    if (neg) r = -r;
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        IntPoly t = parse_term();
        if (c == '+') r += t;
        else r -= t;
      } else {
        break;
      }
    }
    return r;
  }

  IntPoly parse_term() {
    IntPoly r = parse_factor();
    while (eat('*')) r = r * parse_factor();
    // catch implicit multiplication like "3x" or "x y"
    char c = peek();
    if (c != '\0' && c != '+' && c != '-' && c != ')' && c != '*')
      throw ParseError("expected operator", pos);
    return r;
  }

  IntPoly parse_factor() {
    IntPoly b = parse_base();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      if (pos == start) throw ParseError("expected nonnegative integer exponent", pos);
      if (pos - start > 6) throw ParseError("exponent too large", start);
      int k = std::stoi(s.substr(start, pos - start));
      b = b.pow(k);
    }
    return b;
  }

  IntPoly parse_base() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    char c = s[pos];
    int nv = (int)vars.size();
    if (c == '(') {
      ++pos;
      IntPoly r = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return r;
    }
    if (c == '-') {  // unary minus inside a factor position, e.g. "(-3)"
      ++pos;
      return -parse_base();
    }
    if (std::isdigit((unsigned char)c)) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      return IntPoly::constant(nv, Int(s.substr(start, pos - start)));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      for (int i = 0; i < nv; ++i)
        if (vars[i] == name) return IntPoly::variable(nv, i);
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace

IntPoly poly_parse(const std::string& text, const std::vector<std::string>& vars) {
  if (vars.empty()) throw Error("poly_parse needs at least one variable name");
  Parser p{text, vars};
  IntPoly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return r;
}

std::string poly_print(const IntPoly& f, const std::vector<std::string>& vars) {
  if ((int)vars.size() != f.nvars()) throw Error("poly_print: variable name count mismatch");
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Int a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_var = exps_total(e) > 0;
    if (a != 1 || !has_var) out << a.str();
    bool need_star = (a != 1 || !has_var);
    for (int i = 0; i < f.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << vars[i];
      if (e[i] > 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace dgc
