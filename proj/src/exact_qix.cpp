#include "cpo/exact_qix.hpp"

#include <cctype>
#include <sstream>

namespace cpo::qix {

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "");
  const Rational norm = b.re * b.re + b.im * b.im;
  const GaussRat p = a * b.conj();
  return {p.re / norm, p.im / norm};
}

QiPoly::QiPoly(std::vector<GaussRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QiPoly QiPoly::constant(GaussRat c) { return QiPoly({std::move(c)}); }

QiPoly QiPoly::x() { return QiPoly({{0, 0}, {1, 0}}); }

void QiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QiPoly QiPoly::conj() const {
  std::vector<GaussRat> c;
  for (const auto& a : coeffs_) c.push_back(a.conj());
  return QiPoly(std::move(c));
}

QiPoly QiPoly::monic() const {
  if (is_zero()) return *this;
  const GaussRat inv = GaussRat{1, 0} / leading();
  std::vector<GaussRat> c;
  for (const auto& a : coeffs_) c.push_back(a * inv);
  return QiPoly(std::move(c));
}

QiPoly operator+(const QiPoly& a, const QiPoly& b) {
  std::vector<GaussRat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] = c[k] + a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] = c[k] + b.coeffs_[k];
  return QiPoly(std::move(c));
}

QiPoly operator-(const QiPoly& a, const QiPoly& b) {
  std::vector<GaussRat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] = c[k] + a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] = c[k] - b.coeffs_[k];
  return QiPoly(std::move(c));
}

QiPoly operator*(const QiPoly& a, const QiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return QiPoly(std::move(c));
}

PolyDivision divide(const QiPoly& a, const QiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division");
  std::vector<GaussRat> rem = a.coeffs();
  std::vector<GaussRat> quo(std::max(0, a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const GaussRat q = rem[k + b.degree()] / b.leading();
    quo[k] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] = rem[k + j] - q * bc[j];
  }
  return {QiPoly(std::move(quo)), QiPoly(std::move(rem))};
}

QiPoly gcd(QiPoly a, QiPoly b) {
  while (!b.is_zero()) {
    QiPoly r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QiRatFunc::QiRatFunc(QiPoly num, QiPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    den_ = QiPoly::constant({1, 0});
    return;
  }
  const QiPoly g = gcd(num, den);
  num = divide(num, g).quotient;
  den = divide(den, g).quotient;
  const QiPoly scale = QiPoly::constant(GaussRat{1, 0} / den.leading());
  num_ = num * scale;
  den_ = den * scale;
}

QiRatFunc operator+(const QiRatFunc& a, const QiRatFunc& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

QiRatFunc operator-(const QiRatFunc& a, const QiRatFunc& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

QiRatFunc operator*(const QiRatFunc& a, const QiRatFunc& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

QiRatFunc operator/(const QiRatFunc& a, const QiRatFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

QiRatFunc add(const QiRatFunc& a, const QiRatFunc& b) { return a + b; }
QiRatFunc mul(const QiRatFunc& a, const QiRatFunc& b) { return a * b; }
QiRatFunc div(const QiRatFunc& a, const QiRatFunc& b) { return a / b; }
QiRatFunc conj(const QiRatFunc& a) { return a.conj(); }

namespace {

std::int64_t multiplicity(QiPoly p, const QiPoly& factor) {
  std::int64_t k = 0;
  while (true) {
    auto d = divide(p, factor);
    if (!d.remainder.is_zero()) return k;
    p = std::move(d.quotient);
    ++k;
  }
}

}  // namespace

std::int64_t val_at(const QiRatFunc& a, Label m) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "valuation of 0");
  if (m > 1) throw Error(ErrorCode::InvalidArgument, "ideal label must be 0 or 1");
  // M1 = (x+i)S vanishes at x = -i; M2 = (x-i)S at x = +i.
  const QiPoly factor({{0, m == 0 ? 1 : -1}, {1, 0}});
  return multiplicity(a.num(), factor) - multiplicity(a.den(), factor);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  QiRatFunc element() {
    QiPoly num = poly();
    QiPoly den = QiPoly::constant({1, 0});
    if (accept('/')) den = poly();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    return {std::move(num), std::move(den)};
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) +
                                      " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  QiPoly poly() {
    bool negate = accept('-');
    QiPoly p = term();
    if (negate) p = QiPoly() - p;
    while (true) {
      if (accept('+')) {
        p = p + term();
      } else if (accept('-')) {
        p = p - term();
      } else {
        return p;
      }
    }
  }

  QiPoly term() {
    if (peek() == 'x') return mono();
    const GaussRat c = coeff();
    if (accept('*')) return QiPoly::constant(c) * mono();
    return QiPoly::constant(c);
  }

  QiPoly mono() {
    expect('x');
    std::size_t e = 1;
    if (accept('^')) e = std::stoul(digits());
    std::vector<GaussRat> c(e + 1);
    c[e] = {1, 0};
    return QiPoly(std::move(c));
  }

  GaussRat coeff() {
    if (accept('(')) {
      const Rational re = rat();
      Rational im;
      if (accept('+')) {
        im = rat();
      } else if (accept('-')) {
        im = -rat();
      } else {
        fail("expected '+' or '-' in complex coefficient");
      }
      expect('i');
      expect(')');
      return {re, im};
    }
    if (accept('i')) return {0, 1};  // shorthand for "1i"
    const Rational r = rat();
    if (accept('i')) return {0, r};
    return {r, 0};
  }

  Rational rat() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    Rational r(lattice_int(digits()));
    // '/' starts a fraction only when a digit follows; otherwise it
    // separates numerator from denominator of the element.
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      std::size_t look = pos_ + 1;
      while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
      if (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) {
        pos_ = look;
        const auto d = lattice_int(digits());
        if (d == 0) fail("zero denominator in rational");
        r /= Rational(d);
      }
    }
    return neg ? Rational(-r) : r;
  }

  static boost::multiprecision::cpp_int lattice_int(const std::string& d) {
    return boost::multiprecision::cpp_int(d);
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

bool negative_like(const GaussRat& c) {
  return (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
}

std::string coeff_str(const GaussRat& c) {
  if (c.im == 0) return rat_str(c.re);
  if (c.re == 0) return rat_str(c.im) + "i";
  return "(" + rat_str(c.re) + (c.im < 0 ? "-" : "+") + rat_str(abs(c.im)) + "i)";
}

std::string poly_str(const QiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    GaussRat c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!first) {
      if (negative_like(c)) {
        out += "-";
        c = -c;
      } else {
        out += "+";
      }
    }
    const std::string mono = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
    if (k == 0) {
      out += coeff_str(c);
    } else if (c == GaussRat{1, 0}) {
      out += mono;
    } else {
      out += coeff_str(c) + "*" + mono;
    }
    first = false;
  }
  return out;
}

}  // namespace

QiRatFunc parse(std::string_view text) { return Parser(text).element(); }

std::string to_string(const QiRatFunc& a) {
  if (a.den() == QiPoly::constant({1, 0})) return poly_str(a.num());
  return poly_str(a.num()) + "/" + poly_str(a.den());
}

// ---------------------------------------------------------------------------
// Cocycles on the example setup

QiRatFunc act(Elem g, const QiRatFunc& a) { return g == 0 ? a : a.conj(); }

SetupPtr example_setup() {
  static const SetupPtr setup =
      std::make_shared<const GaloisSetup>(groups::example_setup());
  return setup;
}

ExactCocycle ExactCocycle::validate(ExactTable vals) {
  const QiRatFunc one = QiRatFunc::one();
  for (Elem s = 0; s < 2; ++s)
    for (Elem t = 0; t < 2; ++t)
      if (vals[s][t].is_zero())
        throw Error(ErrorCode::ZeroElement,
                    "at (" + std::to_string(s) + "," + std::to_string(t) + ")");
  for (Elem a = 0; a < 2; ++a) {
    if (!(vals[0][a] == one) || !(vals[a][0] == one))
      throw Error(ErrorCode::NotNormalized, "entries involving the identity must be 1");
  }
  for (Elem s = 0; s < 2; ++s)
    for (Elem t = 0; t < 2; ++t)
      for (Label m = 0; m < 2; ++m)
        if (val_at(vals[s][t], m) < 0)
          throw Error(ErrorCode::NotSValued, "at (" + std::to_string(s) + "," +
                                                 std::to_string(t) + ") component " +
                                                 std::to_string(m));
  for (Elem s = 0; s < 2; ++s)
    for (Elem t = 0; t < 2; ++t)
      for (Elem c = 0; c < 2; ++c) {
        const QiRatFunc lhs = act(s, vals[t][c]) * vals[s][(t + c) % 2];
        const QiRatFunc rhs = vals[s][t] * vals[(s + t) % 2][c];
        if (!(lhs == rhs))
          throw Error(ErrorCode::CocycleIdentityViolated,
                      "at (" + std::to_string(s) + "," + std::to_string(t) + "," +
                          std::to_string(c) + ")");
      }
  return ExactCocycle(std::move(vals));
}

ValCocycle to_valuation_model(const ExactCocycle& f) {
  ValTable vals(2, std::vector<ValVector>(2, ValVector(2)));
  for (Elem s = 0; s < 2; ++s)
    for (Elem t = 0; t < 2; ++t)
      for (Label m = 0; m < 2; ++m) vals[s][t][m] = val_at(f.at(s, t), m);
  return ValCocycle::validate(example_setup(), std::move(vals));
}

bool verify_coboundary_exact(const ExactCocycle& f, const ExactCocycle& g,
                             const std::array<QiRatFunc, 2>& c) {
  if (!(c[0] == QiRatFunc::one()) || c[1].is_zero()) return false;
  for (Elem s = 0; s < 2; ++s)
    for (Elem t = 0; t < 2; ++t) {
      const QiRatFunc rhs = c[s] * act(s, c[t]) / c[(s + t) % 2] * f.at(s, t);
      if (!(rhs == g.at(s, t))) return false;
    }
  return true;
}

ExactCocycle unit_scale(const ExactCocycle& f, const QiRatFunc& c_sigma) {
  if (c_sigma.is_zero() || val_at(c_sigma, 0) != 0 || val_at(c_sigma, 1) != 0)
    throw Error(ErrorCode::NotAUnit, to_string(c_sigma) + " is not a unit of S");
  const std::array<QiRatFunc, 2> c{QiRatFunc::one(), c_sigma};
  ExactTable out;
  for (Elem s = 0; s < 2; ++s)
    for (Elem t = 0; t < 2; ++t)
      out[s][t] = c[s] * act(s, c[t]) / c[(s + t) % 2] * f.at(s, t);
  return ExactCocycle::validate(std::move(out));
}

ExactCocycle build_example(int which) {
  if (which != 1 && which != 2)
    throw Error(ErrorCode::InvalidArgument, "example cocycle must be 1 or 2");
  const QiRatFunc one = QiRatFunc::one();
  const QiRatFunc x(QiPoly::x());
  const QiRatFunc norm = x * x + one;  // x^2 + 1 = (x+i)(x-i)
  const QiRatFunc top = which == 1 ? norm * x : norm * norm * x;
  return ExactCocycle::validate({{{one, one}, {one, top}}});
}

}  // namespace cpo::qix
