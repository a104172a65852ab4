#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "factorlab/rational.hpp"

namespace factorlab::detail {

/// Thrown when a table or enumeration would exceed Budget::max_candidates.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Membership in the monoid generated by finitely many positive rationals.
///
/// Generators are scaled by the lcm of their denominators to integers
/// g_1..g_n. With m the smallest scaled generator, a shortest-path pass over
/// Z/m computes for every residue r the least element w(r) of the monoid
/// congruent to r (the Apery set of m). An integer x is then a member iff
/// x >= w(x mod m), and x = w(r) + j*m gives a representation.
class AperyTable {
 public:
  AperyTable(std::vector<Rational> generators, std::uint64_t max_modulus);

  std::optional<std::vector<mpz_class>> represent(const Rational& q) const;
  bool contains(const Rational& q) const { return represent(q).has_value(); }

  /// Least monoid element congruent to q modulo the smallest generator, when
  /// q lies in the lattice spanned by the generators and that class is hit.
  std::optional<Rational> apery_element(const Rational& q) const;

  const std::vector<Rational>& generators() const { return generators_; }
  const mpz_class& scale() const { return scale_; }

 private:
  std::optional<mpz_class> scaled(const Rational& q) const;

  std::vector<Rational> generators_;
  mpz_class scale_ = 1;
  std::vector<mpz_class> scaled_;
  std::size_t min_index_ = 0;
  std::uint64_t modulus_ = 0;
  std::vector<mpz_class> dist_;
  std::vector<bool> reached_;
  std::vector<std::uint64_t> pred_residue_;
  std::vector<std::size_t> pred_generator_;
};

}  // namespace factorlab::detail
