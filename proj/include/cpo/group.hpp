#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cpo/error.hpp"

namespace cpo {

using Elem = std::size_t;   // index into a group table; the identity is 0
using Label = std::size_t;  // index of a maximal ideal of S

using Table = std::vector<std::vector<Elem>>;
using Perm = std::vector<Label>;

/// A finite group given by its full multiplication table.
///
/// Entry (i, j) of the table is the index of g_i * g_j. The identity is
/// pinned at index 0. Instances are only obtainable through `make`, which
/// checks the group axioms.
class FiniteGroup {
 public:
  /// Validates the table and builds the group. Throws `Error` with one of
  /// NoIdentity, NotPermutationTable, NotAssociative.
  static FiniteGroup make(std::vector<std::string> names, Table table);

  std::size_t order() const noexcept { return table_.size(); }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  Elem inverse(Elem g) const { return inverses_.at(g); }
  const std::string& name(Elem g) const { return names_.at(g); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Table& table() const noexcept { return table_; }

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  FiniteGroup() = default;

  std::vector<std::string> names_;
  Table table_;
  std::vector<Elem> inverses_;
};

/// Left action of a group on the labels 0..r-1 of the maximal ideals of S.
/// perm(g)[m] is the label of g(M_m).
class IdealAction {
 public:
  IdealAction() = default;
  explicit IdealAction(std::vector<Perm> perms);

  std::size_t count() const noexcept { return count_; }
  Label image(Elem g, Label m) const { return perms_[g][m]; }
  const Perm& perm(Elem g) const { return perms_.at(g); }
  const std::vector<Perm>& perms() const noexcept { return perms_; }

  friend bool operator==(const IdealAction&, const IdealAction&) = default;

 private:
  std::size_t count_ = 0;
  std::vector<Perm> perms_;
};

/// The abstract stand-in for (K/F, G, S, V): a group acting transitively
/// on the maximal ideals of S. S is unramified over V, so J(V)S has the
/// valuation vector (1, ..., 1).
class GaloisSetup {
 public:
  /// Throws NotPermutationTable, ActionNotHomomorphism or
  /// ActionNotTransitive when the action is unusable.
  static GaloisSetup make(FiniteGroup group, std::vector<Perm> perms);

  const FiniteGroup& group() const noexcept { return group_; }
  const IdealAction& ideals() const noexcept { return ideals_; }
  std::size_t order() const noexcept { return group_.order(); }
  std::size_t ideal_count() const noexcept { return ideals_.count(); }

  friend bool operator==(const GaloisSetup&, const GaloisSetup&) = default;

 private:
  GaloisSetup(FiniteGroup g, IdealAction a)
      : group_(std::move(g)), ideals_(std::move(a)) {}

  FiniteGroup group_;
  IdealAction ideals_;
};

using SetupPtr = std::shared_ptr<const GaloisSetup>;

/// A subgroup, stored as its sorted member list (always contains 0).
struct Subgroup {
  std::vector<Elem> members;

  bool contains(Elem g) const;
  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

using Partition = std::vector<std::vector<Elem>>;

Elem inverse(Elem g, const FiniteGroup& group);

/// Checks closure and sorts; throws NotASubgroup otherwise.
Subgroup make_subgroup(const FiniteGroup& group, std::vector<Elem> members);
Subgroup whole_group(const FiniteGroup& group);
Subgroup trivial_subgroup();
/// Smallest subgroup containing `gens`.
Subgroup generated_subgroup(const FiniteGroup& group,
                            const std::vector<Elem>& gens);
/// Every subgroup of `group`, ordered by (size, members).
std::vector<Subgroup> all_subgroups(const FiniteGroup& group);

/// Stabilizer of the ideal M.
Subgroup decomposition_group(Label m, const GaloisSetup& setup);

/// Classes Hg, each sorted, ordered by smallest member.
Partition right_cosets(const Subgroup& sub, const FiniteGroup& group);
/// Classes gH, each sorted, ordered by smallest member.
Partition left_cosets(const Subgroup& sub, const FiniteGroup& group);

/// Smallest sub-stable set of labels containing m, sorted.
std::vector<Label> orbit(Label m, const Subgroup& sub,
                         const GaloisSetup& setup);

// Builders for the small groups used by the sampler, the tests and the CLI.
namespace groups {

FiniteGroup cyclic(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric3();
/// Action of `group` on the left cosets of `stabilizer` by left
/// multiplication; transitive by construction.
std::vector<Perm> coset_action(const FiniteGroup& group,
                               const Subgroup& stabilizer);

/// The Example setup: C2 = {1, s} swapping M1 = (x+i)S and M2 = (x-i)S.
GaloisSetup example_setup();

}  // namespace groups

}  // namespace cpo
