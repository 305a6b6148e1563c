#include <doctest.h>

#include <complex>
#include <random>

#include "support.hpp"

using namespace cpo;
using namespace cpo::qix;
using namespace testsupport;

namespace {

QiRatFunc P(std::string_view s) { return parse(s); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInconsistency;
}

// Evaluates a polynomial at a complex point in floating point.
std::complex<double> eval(const QiPoly& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * z + std::complex<double>(it->re.convert_to<double>(),
                                         it->im.convert_to<double>());
  return acc;
}

QiRatFunc random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), deg(0, 3);
  auto poly = [&] {
    std::vector<GaussRat> co(deg(rng) + 1);
    for (auto& a : co) a = {c(rng), c(rng)};
    if (co.back().is_zero()) co.back() = {1, 0};
    return QiPoly(co);
  };
  QiPoly num = poly(), den = poly();
  return {num, den};
}

}  // namespace

TEST_CASE("field operations") {
  CHECK(P("x+1i") * P("x-1i") == P("x^2+1"));
  CHECK(P("x^3+(1/2+3i)*x") * QiRatFunc::one() == P("x^3+(1/2+3i)*x"));
  CHECK(P("x^2+1") / P("x+1i") == P("x-1i"));
  CHECK(P("1/x") + P("1/x") == P("2/x"));
  CHECK(P("x") - P("x") == QiRatFunc());
  CHECK(code_of([] { P("x") / QiRatFunc(); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { P("x/0"); }) == ErrorCode::DivisionByZero);
  CHECK(add(P("x"), P("1")) == P("x+1"));
  CHECK(mul(P("x"), P("x")) == P("x^2"));
  CHECK(div(P("x^2"), P("x")) == P("x"));
}

TEST_CASE("canonical form") {
  const auto a = P("2*x+2") / P("4*x^2-4");
  CHECK(a.den().leading() == GaussRat{1, 0});
  CHECK(a == P("1/2/x-1"));
  CHECK(gcd(a.num(), a.den()).degree() == 0);
}

TEST_CASE("conj") {
  CHECK(conj(P("x+1i")) == P("x-1i"));
  CHECK(conj(P("x^2/3+1")) == P("x^2/3+1"));
  CHECK(conj(P("x^3+x")) == P("x^3+x"));
}

TEST_CASE("val_at") {
  CHECK(val_at(P("x^3+x"), 0) == 1);
  CHECK(val_at(P("x^3+x"), 1) == 1);
  CHECK(val_at(P("x"), 0) == 0);
  CHECK(val_at(P("x"), 1) == 0);
  const auto a = P("x+1i") * P("x+1i") * P("x+1i") / P("x-1i");
  CHECK(val_at(a, 0) == 3);
  CHECK(val_at(a, 1) == -1);
  CHECK(code_of([] { val_at(QiRatFunc(), 0); }) == ErrorCode::ZeroElement);
  CHECK(code_of([] { val_at(P("x"), 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("val_at agrees with a constructed factorization") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    // u has no zero or pole at +-i
    QiRatFunc u = random_element(rng);
    const std::complex<double> I(0, 1);
    if (std::abs(eval(u.num(), I)) < 1e-9 || std::abs(eval(u.num(), -I)) < 1e-9 ||
        std::abs(eval(u.den(), I)) < 1e-9 || std::abs(eval(u.den(), -I)) < 1e-9)
      continue;
    const int a = trial % 4 - 1, b = (trial / 4) % 5 - 2;
    QiRatFunc e = u;
    for (int k = 0; k < std::abs(a); ++k) e = a > 0 ? e * P("x+1i") : e / P("x+1i");
    for (int k = 0; k < std::abs(b); ++k) e = b > 0 ? e * P("x-1i") : e / P("x-1i");
    CHECK(val_at(e, 0) == a);
    CHECK(val_at(e, 1) == b);
  }
}

TEST_CASE("property: valuation and conjugation laws on random elements") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_element(rng), b = random_element(rng);
    if (a.is_zero() || b.is_zero()) continue;
    for (Label m = 0; m < 2; ++m) CHECK(val_at(a * b, m) == val_at(a, m) + val_at(b, m));
    CHECK(val_at(conj(a), 0) == val_at(a, 1));
    CHECK(val_at(conj(a), 1) == val_at(a, 0));
    CHECK(conj(conj(a)) == a);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(a + b) == conj(a) + conj(b));
    CHECK(parse(to_string(a)) == a);
    CHECK((a / b) * b == a);
  }
}

TEST_CASE("text form") {
  CHECK(to_string(P("x^3+x")) == "x^3+x");
  CHECK(to_string(P("x^5+2*x^3+x")) == "x^5+2*x^3+x");
  CHECK(to_string(P("0")) == "0");
  CHECK(parse(to_string(P("(1/2-3i)*x^2 - 7/3"))) == P("(1/2-3i)*x^2-7/3"));
  CHECK(P(" x ^ 2 + 1 ") == P("x^2+1"));
  CHECK(P("i*x") == P("1i*x"));
  CHECK(code_of([] { P("(x^2+1)*x"); }) == ErrorCode::Parse);
  CHECK(code_of([] { P("x^"); }) == ErrorCode::Parse);
  CHECK(code_of([] { P("x+"); }) == ErrorCode::Parse);
  CHECK(code_of([] { P("2x"); }) == ErrorCode::Parse);
  CHECK(code_of([] { P(""); }) == ErrorCode::Parse);
}

TEST_CASE("build_example and to_valuation_model") {
  const auto e1 = build_example(1), e2 = build_example(2);
  CHECK(e1.at(1, 1) == P("x^3+x"));
  CHECK(e2.at(1, 1) == P("x^5+2*x^3+x"));
  CHECK(e1.at(0, 1) == QiRatFunc::one());
  CHECK(e2.at(0, 1) == QiRatFunc::one());
  CHECK(to_valuation_model(e1).table() == f1().table());
  CHECK(to_valuation_model(e2).table() == f2().table());
  const QiRatFunc one = QiRatFunc::one();
  const auto triv = ExactCocycle::validate({{{one, one}, {one, one}}});
  CHECK(to_valuation_model(triv).table() == ValCocycle::trivial(example()).table());
  CHECK(code_of([] { build_example(3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("ExactCocycle validation") {
  const QiRatFunc one = QiRatFunc::one();
  CHECK(code_of([&] { ExactCocycle::validate({{{one, P("x")}, {one, one}}}); }) ==
        ErrorCode::NotNormalized);
  CHECK(code_of([&] { ExactCocycle::validate({{{one, one}, {one, QiRatFunc()}}}); }) ==
        ErrorCode::ZeroElement);
  CHECK(code_of([&] { ExactCocycle::validate({{{one, one}, {one, one / P("x+1i")}}}); }) ==
        ErrorCode::NotSValued);
  // sigma(f(s,s)) must equal f(s,s)
  CHECK(code_of([&] { ExactCocycle::validate({{{one, one}, {one, P("x+1i")}}}); }) ==
        ErrorCode::CocycleIdentityViolated);
}

TEST_CASE("verify_coboundary_exact") {
  const auto e1 = build_example(1), e2 = build_example(2);
  const QiRatFunc one = QiRatFunc::one();
  CHECK(verify_coboundary_exact(e1, e2, {one, P("x+i")}));
  CHECK(verify_coboundary_exact(e1, e2, {one, P("x-1i")}));
  CHECK(verify_coboundary_exact(e1, e1, {one, one}));
  CHECK_FALSE(verify_coboundary_exact(e1, e2, {one, P("x")}));
  CHECK_FALSE(verify_coboundary_exact(e1, e1, {P("x"), one}));
}

TEST_CASE("unit_scale") {
  const auto e1 = build_example(1);
  const auto s = unit_scale(e1, P("x"));
  CHECK(s.at(1, 1) == P("x^5+x^3"));
  CHECK(to_valuation_model(s).table() == to_valuation_model(e1).table());
  CHECK(unit_scale(e1, QiRatFunc::one()).table() == e1.table());
  CHECK(code_of([&] { unit_scale(e1, P("x+1i")); }) == ErrorCode::NotAUnit);
  CHECK(code_of([&] { unit_scale(e1, QiRatFunc()); }) == ErrorCode::NotAUnit);
}

TEST_CASE("property: exact validation implies valuation validation") {
  std::mt19937_64 rng(23);
  const QiRatFunc one = QiRatFunc::one();
  std::size_t built = 0;
  for (int trial = 0; trial < 60; ++trial) {
    // f(s,s) = conj-invariant element r * (x^2+1)^k * x^j
    std::uniform_int_distribution<int> k(0, 3), j(0, 2), c(1, 5);
    QiRatFunc v(QiPoly::constant({c(rng), 0}));
    const int kk = k(rng), jj = j(rng);
    for (int a = 0; a < kk; ++a) v = v * P("x^2+1");
    for (int a = 0; a < jj; ++a) v = v * P("x");
    const auto f = ExactCocycle::validate({{{one, one}, {one, v}}});
    const auto val = to_valuation_model(f);
    CHECK(val.at(1, 1) == ValVector{kk, kk});
    CHECK(brute_is_cocycle(val.table(), val.setup()));
    // unit scaling keeps the valuation table
    const auto u = unit_scale(f, P("x+2"));
    CHECK(to_valuation_model(u).table() == val.table());
    ++built;
  }
  CHECK(built == 60);
}
