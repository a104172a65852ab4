#include "apery.hpp"

#include <algorithm>
#include <queue>

#include "factorlab/error.hpp"

namespace factorlab::detail {

AperyTable::AperyTable(std::vector<Rational> generators, std::uint64_t max_modulus)
    : generators_(std::move(generators)) {
  if (generators_.empty()) return;
  for (const auto& g : generators_) {
    if (g.sign() <= 0) throw invalid_argument("generators must be positive");
    scale_ = lcm(scale_, g.den());
  }
  for (const auto& g : generators_) scaled_.push_back(g.num() * (scale_ / g.den()));
  min_index_ = static_cast<std::size_t>(std::min_element(scaled_.begin(), scaled_.end()) - scaled_.begin());
  const mpz_class& m = scaled_[min_index_];
  if (m > max_modulus || !m.fits_ulong_p())
    throw BudgetExceeded("residue table of size " + m.get_str() + " exceeds the candidate budget");
  modulus_ = m.get_ui();

  std::vector<std::uint64_t> step(scaled_.size());
  for (std::size_t i = 0; i < scaled_.size(); ++i) {
    mpz_class r = scaled_[i] % m;
    step[i] = r.get_ui();
  }

  dist_.assign(modulus_, 0);
  reached_.assign(modulus_, false);
  pred_residue_.assign(modulus_, 0);
  pred_generator_.assign(modulus_, 0);
  std::vector<bool> settled(modulus_, false);

  using Entry = std::pair<mpz_class, std::uint64_t>;
  auto greater = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(greater)> queue(greater);
  dist_[0] = 0;
  reached_[0] = true;
  queue.emplace(mpz_class(0), 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (settled[r]) continue;
    settled[r] = true;
    for (std::size_t i = 0; i < scaled_.size(); ++i) {
      if (i == min_index_) continue;
      std::uint64_t next = (r + step[i]) % modulus_;
      mpz_class candidate = d + scaled_[i];
      if (!reached_[next] || candidate < dist_[next]) {
        reached_[next] = true;
        dist_[next] = candidate;
        pred_residue_[next] = r;
        pred_generator_[next] = i;
        queue.emplace(candidate, next);
      }
    }
  }
}

std::optional<mpz_class> AperyTable::scaled(const Rational& q) const {
  Rational x = q * Rational(scale_);
  if (!x.is_integer()) return std::nullopt;
  return x.num();
}

std::optional<std::vector<mpz_class>> AperyTable::represent(const Rational& q) const {
  if (q.sign() < 0) return std::nullopt;
  std::vector<mpz_class> coefficients(generators_.size(), 0);
  if (q.is_zero()) return coefficients;
  if (generators_.empty()) return std::nullopt;
  auto x = scaled(q);
  if (!x) return std::nullopt;
  mpz_class residue_z = *x % scaled_[min_index_];
  std::uint64_t residue = residue_z.get_ui();
  if (!reached_[residue] || dist_[residue] > *x) return std::nullopt;

  coefficients[min_index_] = (*x - dist_[residue]) / scaled_[min_index_];
  std::uint64_t r = residue;
  while (r != 0) {
    std::size_t g = pred_generator_[r];
    coefficients[g] += 1;
    r = pred_residue_[r];
  }
  return coefficients;
}

std::optional<Rational> AperyTable::apery_element(const Rational& q) const {
  if (generators_.empty()) return std::nullopt;
  auto x = scaled(q);
  if (!x || *x < 0) return std::nullopt;
  mpz_class residue_z = *x % scaled_[min_index_];
  std::uint64_t residue = residue_z.get_ui();
  if (!reached_[residue]) return std::nullopt;
  return Rational(dist_[residue], scale_);
}

}  // namespace factorlab::detail
