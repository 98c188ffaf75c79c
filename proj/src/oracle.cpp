#include "ramanujan/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ramanujan/errors.hpp"

namespace ramanujan::oracle {

namespace {

using Table = std::vector<std::vector<Rational>>;

Integer factorial(std::size_t k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

void check_cap(const Integer& outcomes, std::uint64_t cap) {
  if (outcomes > Integer(static_cast<unsigned long>(cap))) {
    throw TooLarge("enumeration needs " + outcomes.get_str() + " outcomes, cap is " +
                   std::to_string(cap));
  }
}

class CompletionEnumerator {
 public:
  CompletionEnumerator(const Params& params, std::vector<std::vector<unsigned>> base)
      : params_(params), m_(params.m()), counts_(std::move(base)) {}

  void run_partial(const std::vector<std::size_t>& prefix, std::size_t random_matchings) {
    std::vector<bool> used(m_, false);
    for (auto p : prefix) used[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m_; ++j)
      if (!used[j]) free_cols.push_back(j);
    do {
      for (std::size_t i = 0; i < free_cols.size(); ++i) ++counts_[prefix.size() + i][free_cols[i]];
      run_random(random_matchings);
      for (std::size_t i = 0; i < free_cols.size(); ++i) --counts_[prefix.size() + i][free_cols[i]];
    } while (std::next_permutation(free_cols.begin(), free_cols.end()));
  }

  void run_random(std::size_t remaining) {
    if (remaining == 0) {
      accumulate();
      return;
    }
    std::vector<std::size_t> perm(m_);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      for (std::size_t i = 0; i < m_; ++i) ++counts_[i][perm[i]];
      run_random(remaining - 1);
      for (std::size_t i = 0; i < m_; ++i) --counts_[i][perm[i]];
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  UniPoly<Rational> average() const {
    std::vector<Rational> coeffs = sum_;
    for (auto& c : coeffs) c /= Rational(outcomes_);
    return UniPoly<Rational>(std::move(coeffs));
  }

 private:
  void accumulate() {
    ++outcomes_;
    auto it = cache_.find(counts_);
    if (it == cache_.end()) {
      const std::size_t n = params_.n;
      Table adjacency(n, std::vector<Rational>(n, Rational(0)));
      for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < m_; ++j) {
          adjacency[i][m_ + j] = counts_[i][j];
          adjacency[m_ + j][i] = counts_[i][j];
        }
      }
      it = cache_.emplace(counts_, faddeev_leverrier(adjacency)).first;
    }
    const auto& cp = it->second;
    if (sum_.size() < cp.size()) sum_.resize(cp.size(), Rational(0));
    for (std::size_t i = 0; i < cp.size(); ++i) sum_[i] += cp[i];
  }

  Params params_;
  std::size_t m_;
  std::vector<std::vector<unsigned>> counts_;
  std::map<std::vector<std::vector<unsigned>>, UniPoly<Rational>> cache_;
  std::vector<Rational> sum_;
  unsigned long outcomes_ = 0;
};

}  // namespace

UniPoly<Rational> faddeev_leverrier(const Table& a) {
  const std::size_t n = a.size();
  // coeffs[k] multiplies x^(n-k).
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[0] = 1;
  Table mk(n, std::vector<Rational>(n, Rational(0)));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k) / k
    Table next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (sgn(a[i][l]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * mk[l][j];
      }
      next[i][i] += coeffs[k - 1];
    }
    mk = std::move(next);
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * mk[l][i];
    coeffs[k] = -trace / Rational(static_cast<unsigned long>(k));
  }
  return UniPoly<Rational>(std::vector<Rational>(coeffs.rbegin(), coeffs.rend()));
}

UniPoly<Rational> brute_expected_charpoly(const NodeState& node, const Params& params,
                                          std::uint64_t cap) {
  params.validate();
  node.validate(params);
  const std::size_t m = params.m();
  const std::size_t t = node.partial ? node.partial->size() : 0;
  const std::size_t random_matchings =
      params.d - node.complete.size() - (node.partial ? 1 : 0);

  Integer outcomes = node.partial ? factorial(m - t) : Integer(1);
  for (std::size_t i = 0; i < random_matchings; ++i) outcomes *= factorial(m);
  check_cap(outcomes, cap);

  std::vector<std::vector<unsigned>> base(m, std::vector<unsigned>(m, 0));
  for (const auto& matching : node.complete)
    for (std::size_t i = 0; i < m; ++i) ++base[i][matching[i]];
  if (node.partial)
    for (std::size_t i = 0; i < t; ++i) ++base[i][(*node.partial)[i]];

  CompletionEnumerator enumerator(params, std::move(base));
  if (node.partial) {
    enumerator.run_partial(*node.partial, random_matchings);
  } else {
    enumerator.run_random(random_matchings);
  }
  return enumerator.average();
}

UniPoly<Rational> brute_fixed_plus_permutation(const Table& a, const BlockSpec& block,
                                               std::uint64_t cap) {
  const std::size_t m = a.size();
  for (const auto& row : a)
    if (row.size() != m) throw std::invalid_argument("oracle: matrix must be square");
  block.validate(m);
  const std::size_t l = block.size();
  check_cap(factorial(l), cap);

  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Rational> sum;
  unsigned long outcomes = 0;
  do {
    Table b = a;
    for (std::size_t i = 0; i < l; ++i) b[block.rows[i]][block.cols[perm[i]]] += 1;
    Table gram(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) gram[i][j] += b[k][i] * b[k][j];
    const auto cp = faddeev_leverrier(gram);
    if (sum.size() < cp.size()) sum.resize(cp.size(), Rational(0));
    for (std::size_t i = 0; i < cp.size(); ++i) sum[i] += cp[i];
    ++outcomes;
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (auto& c : sum) c /= Rational(outcomes);
  return UniPoly<Rational>(std::move(sum));
}

}  // namespace ramanujan::oracle
