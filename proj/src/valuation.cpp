#include "cpo/valuation.hpp"

#include <algorithm>
#include <string>

namespace cpo {

bool ValVector::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool ValVector::is_integral() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e >= 0; });
}

std::int64_t ValVector::max() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

ValVector& ValVector::operator+=(const ValVector& o) {
  for (std::size_t m = 0; m < exps_.size(); ++m) exps_[m] += o.exps_[m];
  return *this;
}

ValVector& ValVector::operator-=(const ValVector& o) {
  for (std::size_t m = 0; m < exps_.size(); ++m) exps_[m] -= o.exps_[m];
  return *this;
}

ValVector galois_act(Elem sigma, const ValVector& v, const GaloisSetup& setup) {
  ValVector out(v.size());
  const auto& p = setup.ideals().perm(sigma);
  for (Label m = 0; m < v.size(); ++m) out[p[m]] = v[m];
  return out;
}

std::optional<IdentityViolation> first_identity_violation(
    const ValTable& vals, const GaloisSetup& setup) {
  const auto& g = setup.group();
  const std::size_t n = setup.order(), r = setup.ideal_count();
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      for (Elem c = 0; c < n; ++c) {
        const ValVector lhs =
            galois_act(s, vals[t][c], setup) + vals[s][g.mul(t, c)];
        const ValVector rhs = vals[s][t] + vals[g.mul(s, t)][c];
        for (Label m = 0; m < r; ++m)
          if (lhs[m] != rhs[m]) return IdentityViolation{s, t, c, m};
      }
  return std::nullopt;
}

ValCocycle ValCocycle::validate(SetupPtr setup, ValTable vals) {
  if (!setup) throw Error(ErrorCode::InvalidArgument, "null setup");
  const std::size_t n = setup->order(), r = setup->ideal_count();
  if (vals.size() != n)
    throw Error(ErrorCode::InvalidArgument, "cocycle table must be n x n x r");
  for (const auto& row : vals) {
    if (row.size() != n)
      throw Error(ErrorCode::InvalidArgument, "cocycle table must be n x n x r");
    for (const auto& v : row)
      if (v.size() != r)
        throw Error(ErrorCode::InvalidArgument, "cocycle table must be n x n x r");
  }
  auto where = [](Elem a, Elem b, Label m) {
    return "at (" + std::to_string(a) + "," + std::to_string(b) + ") component " +
           std::to_string(m);
  };
  for (Elem a = 0; a < n; ++a)
    for (Label m = 0; m < r; ++m) {
      if (vals[0][a][m] != 0) throw Error(ErrorCode::NotNormalized, where(0, a, m));
      if (vals[a][0][m] != 0) throw Error(ErrorCode::NotNormalized, where(a, 0, m));
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Label m = 0; m < r; ++m)
        if (vals[a][b][m] < 0) throw Error(ErrorCode::NotSValued, where(a, b, m));
  if (auto bad = first_identity_violation(vals, *setup))
    throw Error(ErrorCode::CocycleIdentityViolated,
                "at (" + std::to_string(bad->sigma) + "," + std::to_string(bad->tau) +
                    "," + std::to_string(bad->gamma) + ") component " +
                    std::to_string(bad->m));
  return ValCocycle(std::move(setup), std::move(vals));
}

ValCocycle ValCocycle::trivial(SetupPtr setup) {
  const std::size_t n = setup->order(), r = setup->ideal_count();
  return ValCocycle(std::move(setup),
                    ValTable(n, std::vector<ValVector>(n, ValVector(r))));
}

const ValVector& cocycle_product_exponents(Elem sigma, Elem tau,
                                           const ValCocycle& f) {
  if (sigma >= f.order() || tau >= f.order())
    throw Error(ErrorCode::InvalidArgument, "element index out of range");
  return f.at(sigma, tau);
}

RadicalProfile radical_profile(const ValCocycle& f) {
  const auto& g = f.setup().group();
  RadicalProfile p;
  for (Elem t = 0; t < f.order(); ++t) {
    const auto& v = f.at(t, g.inverse(t));
    ValVector i(v.size());
    for (Label m = 0; m < v.size(); ++m) i[m] = v[m] == 0 ? 1 : 0;
    p.iexps.push_back(std::move(i));
  }
  return p;
}

std::optional<Elem> lemma_check(const ValCocycle& f) {
  const auto& g = f.setup().group();
  const auto prof = radical_profile(f);
  for (Elem t = 0; t < f.order(); ++t) {
    const Elem ti = g.inverse(t);
    if (galois_act(ti, prof.iexps[t], f.setup()) != prof.iexps[ti]) return t;
  }
  return std::nullopt;
}

}  // namespace cpo
