#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cpo/valuation.hpp"

namespace cpo {

/// The partial order on G/H with sigma H <= tau H iff f(sigma, sigma^-1 tau)
/// is a unit of S. Cosets are ordered by their smallest member, which is
/// also their canonical representative.
struct GraphOfF {
  Partition cosets;
  std::vector<std::vector<bool>> leq;            // leq[a][b]: coset a <= coset b
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // cover edges

  Elem representative(std::size_t c) const { return cosets[c].front(); }
};

struct HereditaryWitness {
  Elem tau;
  Label m;
  std::int64_t exponent;  // v_M(f(tau, tau^-1)) >= 2
  friend bool operator==(const HereditaryWitness&, const HereditaryWitness&) = default;
};

struct MaximalWitness {
  Label m;
  std::vector<Elem> coset;  // right coset of D_M with no representative g
                            // satisfying f(g, g^-1) not in M; empty when the
                            // failure is non-heredity
  friend bool operator==(const MaximalWitness&, const MaximalWitness&) = default;
};

template <class W>
struct Verdict {
  bool holds = false;
  std::optional<W> witness;
  explicit operator bool() const noexcept { return holds; }
};

struct LocalizationVerdict {
  Label m;
  Subgroup decomposition_group;
  bool maximal;
};

struct CrossChecks {
  bool corollary1 = false;  // single-element criterion == all-pairs criterion
  bool oracle = false;      // single-element criterion == left-order computation
  bool lemma = false;
};

struct ClassificationReport {
  Subgroup H;
  GraphOfF graph;
  bool azumaya = false;
  bool hereditary = false;
  bool maximal = false;
  RadicalProfile radical;
  std::vector<ValVector> left_order_bounds;
  std::vector<LocalizationVerdict> localizations;
  std::optional<HereditaryWitness> hereditary_witness;
  std::optional<MaximalWitness> maximal_witness;
  CrossChecks cross_checks;
};

enum class Primarity { Unknown, Asserted };

/// H = { sigma : f(sigma, sigma^-1) in U(S) }.
Subgroup compute_H(const ValCocycle& f);
GraphOfF graph_of_f(const ValCocycle& f);

bool is_azumaya(const ValCocycle& f);
/// f(tau, tau^-1) not in M^2 for all tau and M.
Verdict<HereditaryWitness> is_hereditary(const ValCocycle& f);
/// Every value of f is square-free.
bool is_hereditary_allpairs(const ValCocycle& f);
/// Hereditary, and for every M each right coset of D_M contains some g
/// with f(g, g^-1) not in M.
Verdict<MaximalWitness> is_maximal(const ValCocycle& f);
/// S a DVR (r = 1): maximal iff f(tau, tau^-1) not in J(S)^2. Throws NotDVR.
bool is_maximal_dvr(const ValCocycle& f);
/// Only meaningful when A_f is known to be primary; throws
/// PrimaryNotAsserted otherwise.
bool is_maximal_given_primary(const ValCocycle& f, Primarity primary);

/// Restriction of f to sub x sub acting on the sub-orbit `orbit_labels`.
/// Throws NotASubgroup or NotAnOrbit.
ValCocycle restrict(const ValCocycle& f, const Subgroup& sub,
                    const std::vector<Label>& orbit_labels);
/// f_M on D_M x D_M; the result always has a single ideal.
ValCocycle localize_at_ideal(const ValCocycle& f, Label m);

/// Least admissible v_M(k) such that k x_tau J(A_f) is inside J(A_f), for
/// every tau and M. All entries are <= 0.
std::vector<ValVector> left_order_exponents(const ValCocycle& f);
/// O_l(J(A_f)) == A_f, i.e. every bound is 0.
bool hereditary_oracle(const ValCocycle& f);

/// Runs every procedure above and cross-checks them. Throws
/// InternalInconsistency naming the disagreeing pair.
ClassificationReport classify(const ValCocycle& f);

}  // namespace cpo
