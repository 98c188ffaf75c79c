#include "ramanujan/expectation_engine.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

#include "ramanujan/errors.hpp"

namespace ramanujan {

namespace {

std::atomic<std::uint64_t> g_tensors{0};
std::atomic<std::uint64_t> g_entries{0};
std::atomic<std::uint64_t> g_violations{0};

Rational rational_of(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

// S_k from the coefficients of det(yI - Z^T Z) of an m x m matrix Z.
std::vector<Rational> minor_sums_from_charpoly(const UniPoly<Rational>& poly, std::size_t m) {
  if (poly.degree() != static_cast<int>(m)) {
    throw std::logic_error("minor sums: expected a degree " + std::to_string(m) + " polynomial");
  }
  std::vector<Rational> sums(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    sums[k] = (k % 2 == 0) ? poly[m - k] : Rational(-poly[m - k]);
  }
  return sums;
}

UniPoly<Rational> charpoly_from_minor_sums(const std::vector<Rational>& sums) {
  const std::size_t m = sums.size() - 1;
  std::vector<Rational> coeffs(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    coeffs[m - k] = (k % 2 == 0) ? sums[k] : Rational(-sums[k]);
  }
  return UniPoly<Rational>(std::move(coeffs));
}

UniPoly<Rational> gram_charpoly(const Matrix<Rational>& z) { return charpoly(z.transpose() * z); }

}  // namespace

CTensor::CTensor(std::size_t m, std::size_t lhat)
    : m_(m), lhat_(lhat), values_((m + 1) * (lhat + 1) * (lhat + 1), Rational(0)) {}

CTensorStats ctensor_stats() {
  return {g_tensors.load(), g_entries.load(), g_violations.load()};
}

void reset_ctensor_stats() {
  g_tensors = 0;
  g_entries = 0;
  g_violations = 0;
}

Rational g_weight(std::size_t lhat, std::size_t k, std::size_t k_prime, std::size_t p,
                  std::size_t q) {
  if (k_prime > k) throw std::invalid_argument("g_weight: k' must not exceed k");
  const long j = static_cast<long>(k - k_prime);
  const long l = static_cast<long>(lhat);
  const Integer denom = binomial(l, j);
  if (sgn(denom) == 0) return Rational(0);
  const Integer num =
      binomial(l - static_cast<long>(p), j) * binomial(l - static_cast<long>(q), j);
  return make_rational(num, denom);
}

CTensor extract_ctensor(const TriPoly<QuadNum>& detpoly) {
  const std::size_t m = detpoly.lambda_extent() - 1;
  const std::size_t lhat = detpoly.row_extent() - 1;
  CTensor out(m, lhat);
  g_tensors.fetch_add(1);
  for (std::size_t k = 0; k <= m; ++k) {
    for (std::size_t p = 0; p <= lhat; ++p) {
      for (std::size_t q = 0; q <= lhat; ++q) {
        const QuadNum& value = detpoly.at(m - k, p, q);
        g_entries.fetch_add(1);
        if (!value.is_rational()) {
          g_violations.fetch_add(1);
          throw RationalityViolation("C[" + std::to_string(k) + "," + std::to_string(p) + "," +
                                     std::to_string(q) + "] = " + to_string(value) +
                                     " has an irrational part");
        }
        if (sgn(value.a()) < 0) {
          g_violations.fetch_add(1);
          throw RationalityViolation("C[" + std::to_string(k) + "," + std::to_string(p) + "," +
                                     std::to_string(q) + "] = " + to_string(value) +
                                     " is negative");
        }
        out.at(k, p, q) = value.a();
      }
    }
  }
  if (out.at(0, 0, 0) != 1) {
    g_violations.fetch_add(1);
    throw RationalityViolation("C[0,0,0] must be 1");
  }
  return out;
}

BlockExpectation fixed_plus_random_block_detail(const Matrix<Rational>& a, const BlockSpec& block,
                                                const EngineOptions& options) {
  if (!a.is_square()) throw std::invalid_argument("fixed matrix must be square");
  const std::size_t m = a.rows();
  block.validate(m);
  const std::size_t l = block.size();

  if (l == 0) return {gram_charpoly(a), std::nullopt};
  if (l == 1) {
    Matrix<Rational> forced = a;
    forced(block.rows[0], block.cols[0]) += 1;
    return {gram_charpoly(forced), std::nullopt};
  }

  // Fold the block mean J/l into the fixed part; what remains of the
  // permutation lives on the (l-1)-dimensional complement of the ones vector.
  Matrix<Rational> augmented = a;
  const Rational mean = make_rational(1, static_cast<unsigned long>(l));
  for (auto r : block.rows)
    for (auto c : block.cols) augmented(r, c) += mean;

  const BlockReduction reduction = householder_block_reduce(augmented, block);
  const Matrix<QuadNum>& reduced = reduction.reduced;
  const Matrix<QuadNum> reduced_gram = reduced.transpose() * reduced;

  if (options.verify_invariants) {
    if (charpoly(reduced_gram) != lift(gram_charpoly(augmented), l)) {
      throw std::logic_error("block reduction changed the singular values");
    }
  }

  const TriPoly<QuadNum> detpoly = trivariate_detpoly(reduced, reduction.reduced_block);

  if (options.verify_invariants) {
    const UniPoly<QuadNum> unit_slice =
        detpoly.evaluate_t(Rational(1), Rational(1));
    const UniPoly<QuadNum> cp = charpoly(reduced_gram);
    std::vector<QuadNum> plus_lambda;
    for (std::size_t i = 0; i < cp.size(); ++i) {
      plus_lambda.push_back((m - i) % 2 == 0 ? cp[i] : -cp[i]);
    }
    if (unit_slice != UniPoly<QuadNum>(std::move(plus_lambda))) {
      throw std::logic_error("trivariate polynomial at t = 1 disagrees with det(A^T A + lambda I)");
    }
  }

  CTensor ctensor = extract_ctensor(detpoly);
  const std::size_t lhat = ctensor.lhat();

  std::vector<Rational> sums(m + 1, Rational(0));
  for (std::size_t k = 0; k <= m; ++k) {
    for (std::size_t kp = 0; kp <= k; ++kp) {
      for (std::size_t p = 0; p <= lhat; ++p) {
        for (std::size_t q = 0; q <= lhat; ++q) {
          const Rational& c = ctensor.at(kp, p, q);
          if (sgn(c) == 0) continue;
          sums[k] += g_weight(lhat, k, kp, p, q) * c;
        }
      }
    }
  }
  return {charpoly_from_minor_sums(sums), std::move(ctensor)};
}

UniPoly<Rational> fixed_plus_random_block_expected(const Matrix<Rational>& a,
                                                   const BlockSpec& block,
                                                   const EngineOptions& options) {
  return fixed_plus_random_block_detail(a, block, options).poly;
}

UniPoly<Rational> add_random_matching(const UniPoly<Rational>& adjacency_poly,
                                      const Params& params, unsigned c) {
  const std::size_t m = params.m();
  if (adjacency_poly.degree() != static_cast<int>(params.n)) {
    throw std::invalid_argument("add_random_matching: expected a degree n polynomial");
  }
  const UniPoly<Rational> gram = poly_even_part(adjacency_poly);

  // For a c-regular half matrix the ones vector is a singular direction with
  // value c; remove it and act on the (m-1)-dimensional complement, where the
  // new matching is a Haar-random orthogonal block covering everything.
  const Rational c_sq = rational_of(c) * rational_of(c);
  const UniPoly<Rational> complement =
      poly_div_exact(gram, UniPoly<Rational>({Rational(-c_sq), Rational(1)}));

  const std::size_t reduced_dim = m - 1;
  const std::vector<Rational> old_sums = minor_sums_from_charpoly(complement, reduced_dim);
  std::vector<Rational> new_sums(reduced_dim + 1, Rational(0));
  for (std::size_t k = 0; k <= reduced_dim; ++k)
    for (std::size_t kp = 0; kp <= k; ++kp)
      new_sums[k] += g_weight(reduced_dim, k, kp, kp, kp) * old_sums[kp];

  const Rational next_sq = rational_of(c + 1) * rational_of(c + 1);
  const UniPoly<Rational> updated =
      charpoly_from_minor_sums(new_sums) * UniPoly<Rational>({Rational(-next_sq), Rational(1)});
  return poly_substitute_square(updated);
}

UniPoly<Rational> expected_adjacency_charpoly(const NodeState& node, const Params& params,
                                              const EngineOptions& options) {
  params.validate();
  node.validate(params);
  const HalfAdjacency half = half_adjacency(node, params);

  const unsigned regular =
      static_cast<unsigned>(node.complete.size() + (half.block.empty() ? 0 : 1));
  UniPoly<Rational> poly =
      poly_substitute_square(fixed_plus_random_block_expected(half.a, half.block, options));
  for (unsigned c = regular; c < params.d; ++c) poly = add_random_matching(poly, params, c);
  return poly;
}

UniPoly<Rational> node_polynomial(const NodeState& node, const Params& params,
                                  const EngineOptions& options) {
  const Rational d(params.d);
  const UniPoly<Rational> trivial({Rational(-d * d), Rational(0), Rational(1)});
  return poly_div_exact(expected_adjacency_charpoly(node, params, options), trivial);
}

}  // namespace ramanujan
