#include "cpo/classifier.hpp"

#include <algorithm>
#include <string>

namespace cpo {

Subgroup compute_H(const ValCocycle& f) {
  const auto& g = f.setup().group();
  Subgroup h;
  for (Elem s = 0; s < f.order(); ++s)
    if (f.at(s, g.inverse(s)).is_unit()) h.members.push_back(s);
  try {
    return make_subgroup(g, h.members);
  } catch (const Error& e) {
    throw Error(ErrorCode::SubgroupClosureFailure, e.what());
  }
}

GraphOfF graph_of_f(const ValCocycle& f) {
  const auto& g = f.setup().group();
  GraphOfF out;
  out.cosets = left_cosets(compute_H(f), g);
  const std::size_t k = out.cosets.size();
  auto below = [&](Elem s, Elem t) { return f.at(s, g.mul(g.inverse(s), t)).is_unit(); };

  out.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      out.leq[a][b] = below(out.representative(a), out.representative(b));
      for (auto s : out.cosets[a])
        for (auto t : out.cosets[b])
          if (below(s, t) != out.leq[a][b])
            throw Error(ErrorCode::NotWellDefined,
                        "representatives " + std::to_string(s) + "," + std::to_string(t));
    }

  for (std::size_t a = 0; a < k; ++a) {
    if (!out.leq[a][a]) throw Error(ErrorCode::NotPartialOrder, "not reflexive");
    if (!out.leq[0][a]) throw Error(ErrorCode::NotPartialOrder, "H is not least");
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && out.leq[a][b] && out.leq[b][a])
        throw Error(ErrorCode::NotPartialOrder, "not antisymmetric");
      for (std::size_t c = 0; c < k; ++c)
        if (out.leq[a][b] && out.leq[b][c] && !out.leq[a][c])
          throw Error(ErrorCode::NotPartialOrder, "not transitive");
    }
  }

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b || !out.leq[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < k && cover; ++c)
        if (c != a && c != b && out.leq[a][c] && out.leq[c][b]) cover = false;
      if (cover) out.hasse.emplace_back(a, b);
    }
  return out;
}

bool is_azumaya(const ValCocycle& f) {
  return compute_H(f).size() == f.order();
}

Verdict<HereditaryWitness> is_hereditary(const ValCocycle& f) {
  const auto& g = f.setup().group();
  for (Elem t = 0; t < f.order(); ++t) {
    const auto& v = f.at(t, g.inverse(t));
    for (Label m = 0; m < v.size(); ++m)
      if (v[m] >= 2) return {false, HereditaryWitness{t, m, v[m]}};
  }
  return {true, std::nullopt};
}

bool is_hereditary_allpairs(const ValCocycle& f) {
  for (const auto& row : f.table())
    for (const auto& v : row)
      if (v.max() > 1) return false;
  return true;
}

Verdict<MaximalWitness> is_maximal(const ValCocycle& f) {
  const auto& setup = f.setup();
  const auto& g = setup.group();
  if (auto h = is_hereditary(f); !h)
    return {false, MaximalWitness{h.witness->m, {}}};
  for (Label m = 0; m < setup.ideal_count(); ++m)
    for (const auto& coset : right_cosets(decomposition_group(m, setup), g)) {
      const bool has_rep = std::any_of(coset.begin(), coset.end(), [&](Elem x) {
        return f.at(x, g.inverse(x))[m] == 0;
      });
      if (!has_rep) return {false, MaximalWitness{m, coset}};
    }
  return {true, std::nullopt};
}

bool is_maximal_dvr(const ValCocycle& f) {
  if (f.ideal_count() != 1)
    throw Error(ErrorCode::NotDVR, "S has " + std::to_string(f.ideal_count()) +
                                       " maximal ideals");
  const auto& g = f.setup().group();
  for (Elem t = 0; t < f.order(); ++t)
    if (f.at(t, g.inverse(t))[0] > 1) return false;
  return true;
}

bool is_maximal_given_primary(const ValCocycle& f, Primarity primary) {
  if (primary != Primarity::Asserted)
    throw Error(ErrorCode::PrimaryNotAsserted, "");
  const auto& setup = f.setup();
  const auto& g = setup.group();
  for (Label m = 0; m < setup.ideal_count(); ++m) {
    const auto d = decomposition_group(m, setup);
    const bool ok = std::all_of(d.members.begin(), d.members.end(), [&](Elem t) {
      return f.at(t, g.inverse(t))[m] <= 1;
    });
    if (ok) return true;
  }
  return false;
}

ValCocycle restrict(const ValCocycle& f, const Subgroup& sub,
                    const std::vector<Label>& orbit_labels) {
  const auto& setup = f.setup();
  const auto& g = setup.group();
  const Subgroup s = make_subgroup(g, sub.members);
  if (orbit_labels.empty())
    throw Error(ErrorCode::NotAnOrbit, "empty label set");
  for (auto l : orbit_labels)
    if (l >= setup.ideal_count())
      throw Error(ErrorCode::NotAnOrbit, "label out of range");
  std::vector<Label> labels = orbit_labels;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end() ||
      orbit(labels.front(), s, setup) != labels)
    throw Error(ErrorCode::NotAnOrbit, "labels are not a single orbit of the subgroup");

  const std::size_t n = s.size(), r = labels.size();
  auto elem_index = [&](Elem e) {
    return static_cast<Elem>(std::lower_bound(s.members.begin(), s.members.end(), e) -
                             s.members.begin());
  };
  auto label_index = [&](Label l) {
    return static_cast<Label>(std::lower_bound(labels.begin(), labels.end(), l) -
                              labels.begin());
  };

  Table table(n, std::vector<Elem>(n));
  std::vector<std::string> names(n);
  std::vector<Perm> perms(n, Perm(r));
  for (Elem i = 0; i < n; ++i) {
    names[i] = g.name(s.members[i]);
    for (Elem j = 0; j < n; ++j) table[i][j] = elem_index(g.mul(s.members[i], s.members[j]));
    for (Label k = 0; k < r; ++k)
      perms[i][k] = label_index(setup.ideals().image(s.members[i], labels[k]));
  }
  auto sub_setup = std::make_shared<const GaloisSetup>(
      GaloisSetup::make(FiniteGroup::make(std::move(names), std::move(table)),
                        std::move(perms)));

  ValTable vals(n, std::vector<ValVector>(n, ValVector(r)));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      for (Label k = 0; k < r; ++k)
        vals[i][j][k] = f.at(s.members[i], s.members[j])[labels[k]];
  return ValCocycle::validate(std::move(sub_setup), std::move(vals));
}

ValCocycle localize_at_ideal(const ValCocycle& f, Label m) {
  return restrict(f, decomposition_group(m, f.setup()), {m});
}

std::vector<ValVector> left_order_exponents(const ValCocycle& f) {
  const auto& setup = f.setup();
  const auto& g = setup.group();
  const auto iexps = radical_profile(f).iexps;
  const std::size_t n = f.order(), r = f.ideal_count();
  std::vector<ValVector> bounds(n, ValVector(r));
  for (Elem t = 0; t < n; ++t) {
    const Elem ti = g.inverse(t);
    for (Label m = 0; m < r; ++m) {
      const Label pulled = setup.ideals().image(ti, m);  // t^-1(M)
      std::int64_t best = 0;
      bool first = true;
      for (Elem c = 0; c < n; ++c) {
        // k x_t * I_c x_c = k t(I_c) f(t, c) x_{tc} must land in I_{tc} x_{tc}.
        const std::int64_t need =
            iexps[g.mul(t, c)][m] - iexps[c][pulled] - f.at(t, c)[m];
        if (first || need > best) best = need;
        first = false;
      }
      bounds[t][m] = best;
    }
  }
  return bounds;
}

bool hereditary_oracle(const ValCocycle& f) {
  for (const auto& b : left_order_exponents(f))
    if (!b.is_unit()) return false;
  return true;
}

ClassificationReport classify(const ValCocycle& f) {
  auto inconsistent = [](const char* a, const char* b) {
    return Error(ErrorCode::InternalInconsistency,
                 std::string(a) + " disagrees with " + b);
  };

  ClassificationReport rep;
  rep.H = compute_H(f);
  rep.graph = graph_of_f(f);
  rep.azumaya = is_azumaya(f);
  const auto her = is_hereditary(f);
  rep.hereditary = her.holds;
  rep.hereditary_witness = her.witness;
  const auto mx = is_maximal(f);
  rep.maximal = mx.holds;
  rep.maximal_witness = mx.witness;
  rep.radical = radical_profile(f);
  rep.left_order_bounds = left_order_exponents(f);

  rep.cross_checks.corollary1 = is_hereditary_allpairs(f) == rep.hereditary;
  rep.cross_checks.oracle = hereditary_oracle(f) == rep.hereditary;
  rep.cross_checks.lemma = !lemma_check(f).has_value();
  if (!rep.cross_checks.corollary1)
    throw inconsistent("is_hereditary", "is_hereditary_allpairs");
  if (!rep.cross_checks.oracle) throw inconsistent("is_hereditary", "hereditary_oracle");
  if (!rep.cross_checks.lemma) throw inconsistent("radical_profile", "lemma_check");
  if (rep.maximal && !rep.hereditary) throw inconsistent("is_maximal", "is_hereditary");
  if (rep.azumaya && !rep.maximal) throw inconsistent("is_azumaya", "is_maximal");
  if (f.ideal_count() == 1 && rep.maximal != is_maximal_dvr(f))
    throw inconsistent("is_maximal", "is_maximal_dvr");

  for (Label m = 0; m < f.ideal_count(); ++m)
    rep.localizations.push_back(
        {m, decomposition_group(m, f.setup()), is_maximal_dvr(localize_at_ideal(f, m))});
  return rep;
}

}  // namespace cpo
