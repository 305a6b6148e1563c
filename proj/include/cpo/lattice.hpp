#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpo::lattice {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;  // row-major

/// Solution set {particular + Z-span(kernel)} of A x = b over the integers.
struct IntegerSolution {
  IntVector particular;
  IntMatrix kernel;  // rows form a basis of the integer kernel of A
};

/// Integer kernel of A (rows x cols) by unimodular column reduction.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols);

/// Solves A x = b over Z. Returns nullopt when no integer solution exists.
/// The particular solution is canonicalized modulo the kernel, see
/// `reduce_trailing`.
std::optional<IntegerSolution> solve(const IntMatrix& a, const IntVector& b,
                                     std::size_t cols);

/// Row Hermite normal form of the lattice spanned by `rows`: echelon with
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Index of the first nonzero entry of a row, or size() when zero.
std::size_t pivot_of(const IntVector& row);

/// Canonical representative of x modulo the lattice spanned by `basis`,
/// reducing the last coordinates first: with the basis put in Hermite form
/// on the reversed coordinates, each trailing pivot coordinate of the
/// result lands in [0, pivot). When the kernel has unit pivots this zeroes
/// the trailing free variables.
IntVector reduce_trailing(IntVector x, const IntMatrix& basis);

BigInt floor_div(const BigInt& a, const BigInt& b);

}  // namespace cpo::lattice
