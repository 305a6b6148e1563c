#include "cpo/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace cpo {

namespace {

std::string at(std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << "at (";
  bool first = true;
  for (auto i : idx) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << ")";
  return os.str();
}

bool is_permutation_of_range(const std::vector<std::size_t>& v,
                             std::size_t n) {
  if (v.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto x : v) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotPermutationTable: return "NotPermutationTable";
    case ErrorCode::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case ErrorCode::ActionNotTransitive: return "ActionNotTransitive";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotSValued: return "NotSValued";
    case ErrorCode::CocycleIdentityViolated: return "CocycleIdentityViolated";
    case ErrorCode::SubgroupClosureFailure: return "SubgroupClosureFailure";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::NotPartialOrder: return "NotPartialOrder";
    case ErrorCode::NotDVR: return "NotDVR";
    case ErrorCode::PrimaryNotAsserted: return "PrimaryNotAsserted";
    case ErrorCode::NotAnOrbit: return "NotAnOrbit";
    case ErrorCode::SetupMismatch: return "SetupMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::CapExhausted: return "CapExhausted";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

FiniteGroup FiniteGroup::make(std::vector<std::string> names, Table table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::NoIdentity, "empty table");
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    names[0] = "1";
  }
  if (names.size() != n)
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(n) + " names");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw Error(ErrorCode::NotPermutationTable,
                  "row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n)
        throw Error(ErrorCode::NotPermutationTable, "entry out of range " + at({i, j}));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (table[0][j] != j) throw Error(ErrorCode::NoIdentity, at({0, j}));
    if (table[j][0] != j) throw Error(ErrorCode::NoIdentity, at({j, 0}));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_permutation_of_range(table[i], n))
      throw Error(ErrorCode::NotPermutationTable, "row " + std::to_string(i));
    std::vector<std::size_t> col(n);
    for (std::size_t j = 0; j < n; ++j) col[j] = table[j][i];
    if (!is_permutation_of_range(col, n))
      throw Error(ErrorCode::NotPermutationTable, "column " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw Error(ErrorCode::NotAssociative, at({i, j, k}));

  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.inverses_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.table_[i][j] == 0) g.inverses_[i] = j;
  return g;
}

IdealAction::IdealAction(std::vector<Perm> perms)
    : count_(perms.empty() ? 0 : perms.front().size()), perms_(std::move(perms)) {}

GaloisSetup GaloisSetup::make(FiniteGroup group, std::vector<Perm> perms) {
  const std::size_t n = group.order();
  if (perms.size() != n)
    throw Error(ErrorCode::NotPermutationTable,
                "action needs one permutation per group element");
  const std::size_t r = perms[0].size();
  if (r == 0) throw Error(ErrorCode::NotPermutationTable, "no ideals");
  for (std::size_t g = 0; g < n; ++g)
    if (!is_permutation_of_range(perms[g], r))
      throw Error(ErrorCode::NotPermutationTable,
                  "action of element " + std::to_string(g));
  for (Label m = 0; m < r; ++m)
    if (perms[0][m] != m)
      throw Error(ErrorCode::ActionNotHomomorphism, "identity moves label " + std::to_string(m));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (Label m = 0; m < r; ++m)
        if (perms[group.mul(a, b)][m] != perms[a][perms[b][m]])
          throw Error(ErrorCode::ActionNotHomomorphism, at({a, b, m}));
  std::vector<bool> reached(r, false);
  for (std::size_t g = 0; g < n; ++g) reached[perms[g][0]] = true;
  for (Label m = 0; m < r; ++m)
    if (!reached[m])
      throw Error(ErrorCode::ActionNotTransitive,
                  "label " + std::to_string(m) + " not in the orbit of 0");
  return GaloisSetup(std::move(group), IdealAction(std::move(perms)));
}

bool Subgroup::contains(Elem g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Elem inverse(Elem g, const FiniteGroup& group) { return group.inverse(g); }

Subgroup make_subgroup(const FiniteGroup& group, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s{std::move(members)};
  if (s.members.empty() || s.members.front() != 0)
    throw Error(ErrorCode::NotASubgroup, "identity missing");
  if (s.members.back() >= group.order())
    throw Error(ErrorCode::NotASubgroup, "element out of range");
  for (auto a : s.members) {
    if (!s.contains(group.inverse(a)))
      throw Error(ErrorCode::NotASubgroup, "not closed under inversion at " + std::to_string(a));
    for (auto b : s.members)
      if (!s.contains(group.mul(a, b)))
        throw Error(ErrorCode::NotASubgroup, "not closed " + at({a, b}));
  }
  return s;
}

Subgroup whole_group(const FiniteGroup& group) {
  Subgroup s;
  s.members.resize(group.order());
  std::iota(s.members.begin(), s.members.end(), Elem{0});
  return s;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup generated_subgroup(const FiniteGroup& group,
                            const std::vector<Elem>& gens) {
  std::vector<bool> in(group.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  // Closure under right multiplication by generators suffices in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto g : gens) {
      Elem p = group.mul(members[i], g);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group) {
  std::set<std::vector<Elem>> found{{0}};
  std::vector<Subgroup> frontier{trivial_subgroup()};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier)
      for (Elem g = 0; g < group.order(); ++g) {
        if (s.contains(g)) continue;
        auto gens = s.members;
        gens.push_back(g);
        auto t = generated_subgroup(group, gens);
        if (found.insert(t.members).second) next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& m : found) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

Subgroup decomposition_group(Label m, const GaloisSetup& setup) {
  if (m >= setup.ideal_count())
    throw Error(ErrorCode::InvalidArgument, "ideal label out of range");
  Subgroup s;
  for (Elem g = 0; g < setup.order(); ++g)
    if (setup.ideals().image(g, m) == m) s.members.push_back(g);
  return s;
}

namespace {

Partition cosets(const Subgroup& sub, const FiniteGroup& group, bool left) {
  std::vector<bool> used(group.order(), false);
  Partition out;
  for (Elem g = 0; g < group.order(); ++g) {
    if (used[g]) continue;
    std::vector<Elem> cls;
    for (auto h : sub.members) {
      Elem e = left ? group.mul(g, h) : group.mul(h, g);
      cls.push_back(e);
      used[e] = true;
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace

Partition right_cosets(const Subgroup& sub, const FiniteGroup& group) {
  return cosets(sub, group, false);
}

Partition left_cosets(const Subgroup& sub, const FiniteGroup& group) {
  return cosets(sub, group, true);
}

std::vector<Label> orbit(Label m, const Subgroup& sub,
                         const GaloisSetup& setup) {
  if (m >= setup.ideal_count())
    throw Error(ErrorCode::InvalidArgument, "ideal label out of range");
  std::vector<bool> in(setup.ideal_count(), false);
  std::vector<Label> out{m};
  in[m] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto g : sub.members) {
      Label l = setup.ideals().image(g, out[i]);
      if (!in[l]) {
        in[l] = true;
        out.push_back(l);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace groups {

FiniteGroup cyclic(std::size_t n) {
  Table t(n, std::vector<Elem>(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = i == 0 ? "1" : i == 1 ? "s" : "s^" + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return FiniteGroup::make(std::move(names), std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  Table t(na * nb, std::vector<Elem>(na * nb));
  std::vector<std::string> names(na * nb);
  // (i, j) -> i * nb + j keeps the identity at 0.
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t x = i * nb + j;
      names[x] = x == 0 ? "1" : "(" + a.name(i) + "," + b.name(j) + ")";
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          t[x][k * nb + l] = a.mul(i, k) * nb + b.mul(j, l);
    }
  return FiniteGroup::make(std::move(names), std::move(t));
}

FiniteGroup symmetric3() {
  // Elements as images of (0,1,2); composition (p*q)(x) = p(q(x)).
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"1", "(01)", "(12)", "(02)", "(012)", "(021)"};
  Table t(6, std::vector<Elem>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup::make(names, std::move(t));
}

std::vector<Perm> coset_action(const FiniteGroup& group,
                               const Subgroup& stabilizer) {
  const auto cls = left_cosets(stabilizer, group);
  std::vector<Label> which(group.order());
  for (Label c = 0; c < cls.size(); ++c)
    for (auto e : cls[c]) which[e] = c;
  std::vector<Perm> perms(group.order(), Perm(cls.size()));
  for (Elem g = 0; g < group.order(); ++g)
    for (Label c = 0; c < cls.size(); ++c)
      perms[g][c] = which[group.mul(g, cls[c].front())];
  return perms;
}

GaloisSetup example_setup() {
  return GaloisSetup::make(FiniteGroup::make({"1", "sigma"}, {{0, 1}, {1, 0}}),
                           {{0, 1}, {1, 0}});
}

}  // namespace groups

}  // namespace cpo
