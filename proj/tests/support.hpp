#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cpo/classifier.hpp"
#include "cpo/cohomology.hpp"
#include "cpo/exact_qix.hpp"

namespace testsupport {

using namespace cpo;

inline SetupPtr share(GaloisSetup s) { return std::make_shared<const GaloisSetup>(std::move(s)); }

inline SetupPtr example() { return share(groups::example_setup()); }

// C2 acting trivially on a single ideal: S is a DVR.
inline SetupPtr c2_dvr() { return share(GaloisSetup::make(groups::cyclic(2), {{0}, {0}})); }

// S3 acting on the cosets of the stabilizer {1, (12)}; the natural action
// on three labels.
inline SetupPtr s3_natural() {
  const auto g = groups::symmetric3();
  return share(GaloisSetup::make(g, groups::coset_action(g, make_subgroup(g, {0, 2}))));
}

inline SetupPtr action_on_cosets(const FiniteGroup& g, const Subgroup& k) {
  return share(GaloisSetup::make(g, groups::coset_action(g, k)));
}

// Table that is zero except at the listed (sigma, tau) entries.
inline ValTable table_with(const GaloisSetup& s,
                           const std::map<std::pair<Elem, Elem>, ValVector>& entries) {
  ValTable t(s.order(), std::vector<ValVector>(s.order(), ValVector(s.ideal_count())));
  for (const auto& [k, v] : entries) t[k.first][k.second] = v;
  return t;
}

inline ValCocycle cocycle_with(const SetupPtr& s,
                               const std::map<std::pair<Elem, Elem>, ValVector>& entries) {
  return ValCocycle::validate(s, table_with(*s, entries));
}

// f1 and f2 of the worked example at valuation level.
inline ValCocycle f1() { return cocycle_with(example(), {{{1, 1}, {1, 1}}}); }
inline ValCocycle f2() { return cocycle_with(example(), {{{1, 1}, {2, 2}}}); }

// Independent brute-force predicates, written from the definitions.
inline bool valuation_identity_holds(const ValTable& t, const GaloisSetup& s) {
  const auto& g = s.group();
  const std::size_t n = s.order(), r = s.ideal_count();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Label m = 0; m < r; ++m) {
          // v_M(a(x)) = v_{a^-1 M}(x)
          Label pre = 0;
          while (s.ideals().image(a, pre) != m) ++pre;
          const auto lhs = t[b][c][pre] + t[a][g.mul(b, c)][m];
          const auto rhs = t[a][b][m] + t[g.mul(a, b)][c][m];
          if (lhs != rhs) return false;
        }
  return true;
}

inline bool brute_is_cocycle(const ValTable& t, const GaloisSetup& s) {
  for (Elem a = 0; a < s.order(); ++a)
    for (Label m = 0; m < s.ideal_count(); ++m)
      if (t[0][a][m] != 0 || t[a][0][m] != 0) return false;
  for (const auto& row : t)
    for (const auto& v : row)
      for (auto e : v.exps())
        if (e < 0) return false;
  return valuation_identity_holds(t, s);
}

inline std::vector<Elem> brute_H(const ValCocycle& f) {
  std::vector<Elem> h;
  const auto& g = f.setup().group();
  for (Elem s = 0; s < f.order(); ++s) {
    Elem inv = 0;
    while (g.mul(s, inv) != 0) ++inv;
    bool unit = true;
    for (auto e : f.at(s, inv).exps()) unit = unit && e == 0;
    if (unit) h.push_back(s);
  }
  return h;
}

// The setups of the property corpus: every transitive action of C2, C3, C4,
// C2xC2 and S3 obtained as an action on the cosets of a subgroup.
inline std::vector<SetupPtr> corpus_setups() {
  const std::vector<FiniteGroup> gs = {
      groups::cyclic(2), groups::cyclic(3), groups::cyclic(4),
      groups::direct_product(groups::cyclic(2), groups::cyclic(2)), groups::symmetric3()};
  std::vector<SetupPtr> out;
  for (const auto& g : gs)
    for (const auto& k : all_subgroups(g)) out.push_back(action_on_cosets(g, k));
  return out;
}

struct CorpusEntry {
  std::size_t setup_index;
  ValCocycle f;
};

// Deduplicated cocycles with exponents <= max_exp, `per_setup` samples each.
inline std::vector<CorpusEntry> build_corpus(std::size_t per_setup, std::int64_t max_exp,
                                             std::uint64_t seed) {
  const auto setups = corpus_setups();
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < setups.size(); ++i) {
    const auto lat = cocycle_lattice(setups[i]);
    std::set<ValTable> seen;
    for (auto& f : sample_cocycles(lat, max_exp, per_setup, seed + i))
      if (seen.insert(f.table()).second) out.push_back({i, std::move(f)});
    // Small lattices are exhausted by enumeration to reach every profile.
    for (auto& f : enumerate_cocycles(lat, max_exp, per_setup))
      if (seen.insert(f.table()).second) out.push_back({i, std::move(f)});
  }
  return out;
}

}  // namespace testsupport
