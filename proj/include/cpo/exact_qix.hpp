#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cpo/valuation.hpp"

// Exact arithmetic in K = Q(i)(x), the field of the worked example: F = Q(x),
// V = Q[x] localized at (x^2+1), and S with maximal ideals M1 = (x+i)S
// (label 0) and M2 = (x-i)S (label 1), swapped by complex conjugation.
namespace cpo::qix {

using Rational = boost::multiprecision::cpp_rational;

/// re + im*i with exact rational parts.
struct GaussRat {
  Rational re, im;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, -im}; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
  friend bool operator==(const GaussRat&, const GaussRat&) = default;
};

/// Polynomial in x over Q(i); coeffs[k] is the coefficient of x^k, with no
/// trailing zeros (the zero polynomial is empty).
class QiPoly {
 public:
  QiPoly() = default;
  explicit QiPoly(std::vector<GaussRat> coeffs);
  static QiPoly constant(GaussRat c);
  static QiPoly x();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const GaussRat& leading() const { return coeffs_.back(); }
  const std::vector<GaussRat>& coeffs() const noexcept { return coeffs_; }

  QiPoly conj() const;
  QiPoly monic() const;

  friend QiPoly operator+(const QiPoly& a, const QiPoly& b);
  friend QiPoly operator-(const QiPoly& a, const QiPoly& b);
  friend QiPoly operator*(const QiPoly& a, const QiPoly& b);
  friend bool operator==(const QiPoly&, const QiPoly&) = default;

 private:
  void trim();
  std::vector<GaussRat> coeffs_;
};

struct PolyDivision {
  QiPoly quotient, remainder;
};
PolyDivision divide(const QiPoly& a, const QiPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
QiPoly gcd(QiPoly a, QiPoly b);

/// Element of K in canonical form: gcd(num, den) = 1, den monic.
class QiRatFunc {
 public:
  QiRatFunc() : den_(QiPoly::constant({1, 0})) {}
  QiRatFunc(QiPoly num, QiPoly den);  // throws DivisionByZero
  explicit QiRatFunc(QiPoly num) : QiRatFunc(std::move(num), QiPoly::constant({1, 0})) {}
  static QiRatFunc one() { return QiRatFunc(QiPoly::constant({1, 0})); }

  const QiPoly& num() const noexcept { return num_; }
  const QiPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Applies complex conjugation to every coefficient: the Galois action of
  /// the non-trivial element.
  QiRatFunc conj() const { return {num_.conj(), den_.conj()}; }

  friend QiRatFunc operator+(const QiRatFunc& a, const QiRatFunc& b);
  friend QiRatFunc operator-(const QiRatFunc& a, const QiRatFunc& b);
  friend QiRatFunc operator*(const QiRatFunc& a, const QiRatFunc& b);
  friend QiRatFunc operator/(const QiRatFunc& a, const QiRatFunc& b);
  friend bool operator==(const QiRatFunc&, const QiRatFunc&) = default;

 private:
  QiPoly num_, den_;
};

QiRatFunc add(const QiRatFunc& a, const QiRatFunc& b);
QiRatFunc mul(const QiRatFunc& a, const QiRatFunc& b);
QiRatFunc div(const QiRatFunc& a, const QiRatFunc& b);
QiRatFunc conj(const QiRatFunc& a);

/// Order of vanishing at x = -i (label 0, M1) or x = +i (label 1, M2).
/// Throws ZeroElement.
std::int64_t val_at(const QiRatFunc& a, Label m);

/// Parses the element grammar (products must be expanded: "x^3+x").
/// Throws Parse.
QiRatFunc parse(std::string_view text);
/// Canonical text in the same grammar; parse(to_string(a)) == a.
std::string to_string(const QiRatFunc& a);

using ExactTable = std::array<std::array<QiRatFunc, 2>, 2>;

/// A normalized two-cocycle on the example setup with exact values in S^#.
class ExactCocycle {
 public:
  /// Throws NotNormalized, ZeroElement, NotSValued or
  /// CocycleIdentityViolated.
  static ExactCocycle validate(ExactTable vals);

  const QiRatFunc& at(Elem sigma, Elem tau) const { return vals_.at(sigma).at(tau); }
  const ExactTable& table() const noexcept { return vals_; }

 private:
  explicit ExactCocycle(ExactTable v) : vals_(std::move(v)) {}
  ExactTable vals_;
};

/// Galois action of element g (0 = identity, 1 = conjugation).
QiRatFunc act(Elem g, const QiRatFunc& a);

/// The shared example setup (C2 swapping the two ideals).
SetupPtr example_setup();

ValCocycle to_valuation_model(const ExactCocycle& f);

/// Checks g(s,t) = c_s s(c_t) c_{st}^-1 f(s,t) for all four pairs.
bool verify_coboundary_exact(const ExactCocycle& f, const ExactCocycle& g,
                             const std::array<QiRatFunc, 2>& c);

/// The cocycle cohomologous to f over S via c_1 = 1 and the unit c_sigma.
/// Throws NotAUnit.
ExactCocycle unit_scale(const ExactCocycle& f, const QiRatFunc& c_sigma);

/// f1 (which = 1) or f2 (which = 2) from the worked example.
ExactCocycle build_example(int which);

}  // namespace cpo::qix
