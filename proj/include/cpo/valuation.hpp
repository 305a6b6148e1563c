#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "cpo/group.hpp"

namespace cpo {

/// Valuations v_{M_m}(x) of an element x of K^# at every maximal ideal of S.
/// Units of S are forgotten: x is a unit iff the vector is zero.
class ValVector {
 public:
  ValVector() = default;
  explicit ValVector(std::size_t r) : exps_(r, 0) {}
  ValVector(std::initializer_list<std::int64_t> e) : exps_(e) {}
  explicit ValVector(std::vector<std::int64_t> e) : exps_(std::move(e)) {}

  static ValVector constant(std::size_t r, std::int64_t c) {
    return ValVector(std::vector<std::int64_t>(r, c));
  }

  std::size_t size() const noexcept { return exps_.size(); }
  std::int64_t operator[](Label m) const { return exps_[m]; }
  std::int64_t& operator[](Label m) { return exps_[m]; }
  const std::vector<std::int64_t>& exps() const noexcept { return exps_; }

  bool is_unit() const;       // all zero
  bool is_integral() const;   // all >= 0, i.e. in S^#
  std::int64_t max() const;

  ValVector& operator+=(const ValVector& o);
  ValVector& operator-=(const ValVector& o);
  friend ValVector operator+(ValVector a, const ValVector& b) { return a += b; }
  friend ValVector operator-(ValVector a, const ValVector& b) { return a -= b; }
  friend bool operator==(const ValVector&, const ValVector&) = default;
  friend auto operator<=>(const ValVector&, const ValVector&) = default;

 private:
  std::vector<std::int64_t> exps_;
};

/// v(sigma(x)) from v(x): result[perm(sigma)[m]] = v[m], matching
/// v_M(sigma(x)) = v_{sigma^-1(M)}(x).
ValVector galois_act(Elem sigma, const ValVector& v, const GaloisSetup& setup);

using ValTable = std::vector<std::vector<ValVector>>;  // [sigma][tau]

/// A normalized S-valued two-cocycle, kept as the valuation vectors of its
/// values. Only constructible through `validate`.
class ValCocycle {
 public:
  /// Throws NotNormalized, NotSValued or CocycleIdentityViolated, each with
  /// the lexicographically first witness.
  static ValCocycle validate(SetupPtr setup, ValTable vals);
  static ValCocycle trivial(SetupPtr setup);

  const GaloisSetup& setup() const noexcept { return *setup_; }
  const SetupPtr& setup_ptr() const noexcept { return setup_; }
  const ValVector& at(Elem sigma, Elem tau) const {
    return vals_.at(sigma).at(tau);
  }
  const ValTable& table() const noexcept { return vals_; }
  std::size_t order() const noexcept { return vals_.size(); }
  std::size_t ideal_count() const noexcept { return setup_->ideal_count(); }

 private:
  ValCocycle(SetupPtr s, ValTable v) : setup_(std::move(s)), vals_(std::move(v)) {}

  SetupPtr setup_;
  ValTable vals_;
};

/// First (sigma, tau, gamma, m) where the additive cocycle identity fails.
struct IdentityViolation {
  Elem sigma, tau, gamma;
  Label m;
};
std::optional<IdentityViolation> first_identity_violation(
    const ValTable& vals, const GaloisSetup& setup);

/// Valuation vector of f(sigma, tau); the multiplication rule
/// x_sigma x_tau = f(sigma, tau) x_{sigma tau} at the valuation level.
const ValVector& cocycle_product_exponents(Elem sigma, Elem tau,
                                           const ValCocycle& f);

/// The ideals I_tau with J(A_f) = sum I_tau x_tau. Entry [tau][m] is 1 when
/// M_m divides I_tau, i.e. when f(tau, tau^-1) is not in M_m.
struct RadicalProfile {
  std::vector<ValVector> iexps;
  friend bool operator==(const RadicalProfile&, const RadicalProfile&) = default;
};

RadicalProfile radical_profile(const ValCocycle& f);

/// Checks tau^-1(I_tau) = I_{tau^-1} for every tau; returns the first tau
/// where it fails.
std::optional<Elem> lemma_check(const ValCocycle& f);

}  // namespace cpo
