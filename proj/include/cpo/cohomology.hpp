#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cpo/valuation.hpp"

namespace cpo {

/// Valuation vectors of a family {c_sigma}, with c_1 = 1 (cvecs[0] = 0).
struct CoboundaryWitness {
  std::vector<ValVector> cvecs;
  friend bool operator==(const CoboundaryWitness&, const CoboundaryWitness&) = default;
};

/// Integer solution space of the additive cocycle identity with the
/// normalization entries pinned to zero. Coordinates of a basis vector are
/// the entries vals[sigma][tau][m] for sigma, tau != 1, sigma-major.
struct CocycleLattice {
  SetupPtr setup;
  std::vector<std::vector<std::int64_t>> basis;  // Hermite normal form
  std::optional<CoboundaryWitness> particular;   // set when pinned

  std::size_t dimension() const noexcept { return basis.size(); }
  ValTable to_table(const std::vector<std::int64_t>& coords) const;
  std::vector<std::int64_t> to_coords(const ValTable& vals) const;
};

/// table[sigma][tau] = c_sigma + sigma(c_tau) - c_{sigma tau}.
ValTable coboundary_of(const CoboundaryWitness& w, const GaloisSetup& setup);

/// Decides f ~_K g at the valuation level: an integer witness w with
/// coboundary_of(w) = vals(g) - vals(f), or nullopt when none exists. The
/// returned witness is canonical (later coordinates reduced first) and
/// re-verified. Throws SetupMismatch.
std::optional<CoboundaryWitness> is_cohomologous_K_valuation(const ValCocycle& f,
                                                             const ValCocycle& g);

/// Necessary condition for f ~_S g visible to valuations: equal tables.
bool is_cohomologous_S_valuation(const ValCocycle& f, const ValCocycle& g);

/// Lattice of normalized valuation cocycles. With `pin`, also solves
/// coboundary_of(w) = pin and throws Infeasible when no integer w exists.
CocycleLattice cocycle_lattice(SetupPtr setup,
                               const std::optional<ValTable>& pin = std::nullopt);

/// Seeded sample of valid cocycles with every exponent in [0, max_exponent],
/// found by a randomized depth-first search over lattice points. Samples may
/// repeat.
/// Throws CapExhausted when `count` survivors are not found in time.
std::vector<ValCocycle> sample_cocycles(SetupPtr setup, std::int64_t max_exponent,
                                        std::size_t count, std::uint64_t seed);
std::vector<ValCocycle> sample_cocycles(const CocycleLattice& lattice,
                                        std::int64_t max_exponent,
                                        std::size_t count, std::uint64_t seed);

/// Every valid cocycle with exponents in [0, max_exponent], each once, in a
/// fixed deterministic order; stops after `limit` results.
std::vector<ValCocycle> enumerate_cocycles(const CocycleLattice& lattice,
                                           std::int64_t max_exponent,
                                           std::size_t limit);

}  // namespace cpo
