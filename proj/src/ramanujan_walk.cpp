#include "ramanujan/ramanujan_walk.hpp"

#include <chrono>
#include <sstream>

#include "ramanujan/errors.hpp"
#include "ramanujan/matrix.hpp"
#include "ramanujan/parallel.hpp"

namespace ramanujan {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const NodeState& node) {
  std::ostringstream os;
  os << "{complete:";
  for (const auto& m : node.complete) {
    os << " [";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i] + 1;
    os << "]";
  }
  os << "; partial:";
  if (node.partial) {
    os << " [";
    for (std::size_t i = 0; i < node.partial->size(); ++i)
      os << (i ? "," : "") << (*node.partial)[i] + 1;
    os << "]";
  } else {
    os << " none";
  }
  return os.str() + "}";
}

}  // namespace

bool max_root_leq_sqrt(const UniPoly<Rational>& p, std::uint64_t q) {
  if (p.is_zero()) throw std::invalid_argument("max_root_leq_sqrt: zero polynomial");
  const UniPoly<QuadNum> shifted = poly_shift_by_sqrt(p, q);
  for (const auto& c : shifted.coefficients()) {
    if (quad_sign(c) == Sign::negative) return false;
  }
  return true;
}

Certificate certify(const Multigraph& graph) {
  const Params& params = graph.params;
  params.validate();
  const std::size_t m = params.m();
  if (graph.multiplicity.size() != m) throw NotRegular("multiplicity matrix must be m x m");
  std::vector<unsigned long> col_sums(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (graph.multiplicity[i].size() != m) throw NotRegular("multiplicity matrix must be m x m");
    unsigned long row_sum = 0;
    for (std::size_t j = 0; j < m; ++j) {
      row_sum += graph.multiplicity[i][j];
      col_sums[j] += graph.multiplicity[i][j];
    }
    if (row_sum != params.d) {
      throw NotRegular("left vertex " + std::to_string(i + 1) + " has degree " +
                       std::to_string(row_sum));
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (col_sums[j] != params.d) {
      throw NotRegular("right vertex " + std::to_string(j + 1) + " has degree " +
                       std::to_string(col_sums[j]));
    }
  }

  Matrix<Rational> adjacency(params.n, params.n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      adjacency(i, m + j) = graph.multiplicity[i][j];
      adjacency(m + j, i) = graph.multiplicity[i][j];
    }
  }

  Certificate cert;
  cert.graph = graph;
  cert.bound_q = params.bound_q();
  cert.adjacency_charpoly = charpoly(adjacency);

  const Rational d(params.d);
  try {
    cert.nontrivial_poly = poly_div_exact(
        cert.adjacency_charpoly, UniPoly<Rational>({Rational(-d * d), Rational(0), Rational(1)}));
  } catch (const NonzeroRemainder&) {
    cert.passed = false;
    cert.reason = "x^2 - d^2 does not divide the adjacency characteristic polynomial";
    return cert;
  }

  cert.shifted = poly_shift_by_sqrt(*cert.nontrivial_poly, cert.bound_q);
  cert.passed = true;
  for (const auto& c : cert.shifted.coefficients()) {
    cert.shifted_signs.push_back(quad_sign(c));
    if (cert.shifted_signs.back() == Sign::negative) cert.passed = false;
  }
  cert.reason = cert.passed ? "nontrivial eigenvalues within [-2 sqrt(d-1), 2 sqrt(d-1)]"
                            : "a nontrivial eigenvalue exceeds 2 sqrt(d-1)";
  return cert;
}

WalkResult find_leaf(const Params& params, const WalkOptions& options) {
  params.validate();
  const auto walk_start = Clock::now();
  const std::uint64_t q = params.bound_q();
  const EngineOptions engine{options.verify_invariants};

  WalkResult result;
  result.params = params;
  result.canonical_first_matching = options.canonical_first_matching;

  NodeState current = root_node();
  if (options.canonical_first_matching) current.complete.push_back(identity_matching(params.m()));

  UniPoly<Rational> current_poly = node_polynomial(current, params, engine);
  if (!max_root_leq_sqrt(current_poly, q)) {
    throw RootExceedsBound("start node polynomial has a root above 2 sqrt(d-1) for n=" +
                           std::to_string(params.n) + ", d=" + std::to_string(params.d));
  }

  while (!current.is_leaf(params)) {
    const auto stage_start = Clock::now();
    StageRecord stage;
    stage.node = current;
    stage.poly = current_poly;

    const std::vector<NodeState> kids = children(current, params);
    std::vector<UniPoly<Rational>> polys(kids.size());
    std::vector<char> passed(kids.size(), 0);
    parallel_for(kids.size(), options.jobs, [&](std::size_t i) {
      polys[i] = node_polynomial(kids[i], params, engine);
      passed[i] = max_root_leq_sqrt(polys[i], q) ? 1 : 0;
    });
    for (std::size_t i = 0; i < kids.size(); ++i) {
      stage.children.push_back({kids[i], polys[i], passed[i] != 0});
      if (!stage.chosen && passed[i]) stage.chosen = i;
    }

    if (options.verify_invariants) {
      UniPoly<Rational> sum;
      for (const auto& p : polys) sum = sum + p;
      if (sum.scaled(Rational(1, static_cast<unsigned long>(polys.size()))) != current_poly) {
        stage.seconds = seconds_since(stage_start);
        result.stages.push_back(std::move(stage));
        result.seconds = seconds_since(walk_start);
        throw AveragingViolation("parent polynomial is not the average of its children at " +
                                 describe(current),
                             std::move(result));
      }
    }

    stage.seconds = seconds_since(stage_start);
    if (!stage.chosen) {
      result.stages.push_back(std::move(stage));
      result.seconds = seconds_since(walk_start);
      throw NoPassingChild("no child passes the root bound at " + describe(current),
                           std::move(result));
    }
    current = kids[*stage.chosen];
    current_poly = polys[*stage.chosen];
    result.stages.push_back(std::move(stage));
  }

  result.leaf = current;
  result.finished = true;
  result.seconds = seconds_since(walk_start);
  return result;
}

}  // namespace ramanujan
