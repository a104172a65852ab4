#include "factorlab/numerical_oracle.hpp"

#include <algorithm>

#include "factorlab/error.hpp"

namespace factorlab {

Rational OracleTables::value(long long scaled) const { return Rational(mpz_class(static_cast<long>(scaled)), scale); }

std::vector<Rational> OracleTables::atom_values() const {
  std::vector<Rational> out;
  for (long long a : atoms) out.push_back(value(a));
  return out;
}

std::vector<Factorization> OracleTables::factorizations_of(long long scaled) const {
  std::vector<Factorization> out;
  for (const auto& row : factorizations.at(static_cast<std::size_t>(scaled))) {
    Factorization f;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (row[i] > 0) f.parts.push_back({value(atoms[i]), mpz_class(static_cast<long>(row[i]))});
    out.push_back(std::move(f));
  }
  return out;
}

OracleTables numerical_oracle(const MonoidSpec& spec, long long bound) {
  const auto* mixed = std::get_if<MixedSpec>(&spec);
  if (mixed == nullptr || !mixed->geometric.empty())
    throw invalid_argument("numerical oracle needs a finitely generated spec");
  validate(spec);

  OracleTables t;
  for (const auto& g : mixed->finite) t.scale = lcm(t.scale, g.den());
  for (const auto& g : mixed->finite) {
    mpz_class s = g.num() * (t.scale / g.den());
    if (!s.fits_slong_p()) throw invalid_argument("scaled generator too large for the oracle");
    t.generators.push_back(s.get_si());
  }
  std::sort(t.generators.begin(), t.generators.end());
  t.generators.erase(std::unique(t.generators.begin(), t.generators.end()), t.generators.end());
  if (!t.generators.empty() && bound < t.generators.back())
    throw invalid_argument("oracle bound must be at least the largest scaled generator");
  if (bound < 0) throw invalid_argument("oracle bound must be nonnegative");
  t.bound = bound;
  auto size = static_cast<std::size_t>(bound) + 1;

  t.member.assign(size, false);
  t.member[0] = true;
  for (std::size_t x = 1; x < size; ++x)
    for (long long g : t.generators)
      if (static_cast<std::size_t>(g) <= x && t.member[x - static_cast<std::size_t>(g)]) {
        t.member[x] = true;
        break;
      }

  // Atoms: nonzero members with no split into two nonzero members.
  for (std::size_t x = 1; x < size; ++x) {
    if (!t.member[x]) continue;
    bool splits = false;
    for (std::size_t y = 1; y < x && !splits; ++y) splits = t.member[y] && t.member[x - y];
    if (!splits) t.atoms.push_back(static_cast<long long>(x));
  }

  // Factorizations: extend each factorization of x - a_i whose largest used
  // atom index is <= i, so every multiset is built exactly once.
  std::size_t n = t.atoms.size();
  t.factorizations.assign(size, {});
  t.factorizations[0].push_back(std::vector<long long>(n, 0));
  auto last_used = [n](const std::vector<long long>& row) {
    for (std::size_t i = n; i-- > 0;)
      if (row[i] > 0) return static_cast<long>(i);
    return -1L;
  };
  for (std::size_t x = 1; x < size; ++x) {
    auto& here = t.factorizations[x];
    for (std::size_t i = 0; i < n; ++i) {
      auto a = static_cast<std::size_t>(t.atoms[i]);
      if (a > x) break;
      for (const auto& row : t.factorizations[x - a]) {
        if (last_used(row) > static_cast<long>(i)) continue;
        auto extended = row;
        extended[i] += 1;
        here.push_back(std::move(extended));
      }
    }
    // Ascending part lists compare lexicographically: more copies of the
    // smallest atom first, unless the shorter run ends the list.
    std::sort(here.begin(), here.end(), [n](const auto& a, const auto& b) {
      std::vector<long long> fa, fb;
      for (std::size_t i = 0; i < n; ++i) {
        fa.insert(fa.end(), static_cast<std::size_t>(a[i]), static_cast<long long>(i));
        fb.insert(fb.end(), static_cast<std::size_t>(b[i]), static_cast<long long>(i));
      }
      return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
    });
  }
  return t;
}

}  // namespace factorlab
