#include "arbor/hecke.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "arbor/errors.hpp"

namespace arbor {

OrbitalSet::OrbitalSet(int level, std::size_t points, std::size_t base,
                       std::vector<std::uint32_t> classes, std::size_t rank)
    : level_(level), points_(points), base_(base), classes_(std::move(classes)), rank_(rank) {
  valencies_.assign(rank_, 0);
  transposes_.assign(rank_, 0);
  for (std::size_t y = 0; y < points_; ++y) {
    const std::uint32_t k = orbital(base_, y);
    ++valencies_[k];
    transposes_[k] = orbital(y, base_);
  }
}

std::vector<int> OrbitalSet::matrix(std::size_t k) const {
  std::vector<int> out(points_ * points_, 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = classes_[i] == k ? 1 : 0;
  return out;
}

OrbitalSet orbitals(Quotients& q, const RaySpec& ray, int n) {
  const PermGroup& g = q.ambient(n);
  if (!is_transitive(g)) throw NotTransitive("the quotient is not transitive on the level");
  const std::size_t points = g.shape().points();
  const std::size_t base = encode_vertex(ray.prefix(n), q.group().degree());
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> classes(points * points, kUnset);
  std::uint32_t rank = 0;
  std::vector<std::size_t> queue;
  auto flood = [&](std::size_t x, std::size_t y) {
    queue.assign(1, x * points + y);
    classes[x * points + y] = rank;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const std::size_t a = queue[k] / points;
      const std::size_t b = queue[k] % points;
      for (const auto& s : g.generators()) {
        const std::size_t pair = s[a] * points + s[b];
        if (classes[pair] == kUnset) {
          classes[pair] = rank;
          queue.push_back(pair);
        }
      }
    }
    ++rank;
  };
  flood(base, base);
  for (std::size_t y = 0; y < points; ++y) {
    if (classes[base * points + y] == kUnset) flood(base, y);
  }
  return OrbitalSet(n, points, base, std::move(classes), rank);
}

bool check_gelfand(const OrbitalSet& o) {
  const std::size_t n = o.points();
  const std::size_t r = o.rank();
  // counts[(i * r + j) * n + z] = (A_i A_j)[x][z] for the current row x.
  std::vector<std::uint32_t> counts(r * r * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i = o.orbital(x, y);
      for (std::size_t z = 0; z < n; ++z) ++counts[(i * r + o.orbital(y, z)) * n + z];
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        const auto* ij = &counts[(i * r + j) * n];
        const auto* ji = &counts[(j * r + i) * n];
        if (!std::equal(ij, ij + n, ji)) return false;
      }
    }
  }
  return true;
}

DecompositionDegrees decomposition_degrees(const OrbitalSet& o, int degree, unsigned seed,
                                           double tolerance) {
  DecompositionDegrees out;
  out.rank = o.rank();
  out.commutative = check_gelfand(o);
  const int n = o.level();
  const auto d = static_cast<std::size_t>(degree);
  out.predicted.push_back(1);
  for (int i = 0; i < n; ++i) {
    for (std::size_t c = 1; c < d; ++c) out.predicted.push_back(static_cast<std::size_t>(std::pow(d, i)));
  }
  std::sort(out.predicted.begin(), out.predicted.end());
  if (degree == 2) {
    out.literal = out.predicted;
  } else if (degree == 3) {
    out.literal = {1, 1, 1};
    for (int i = 1; i < n; ++i) {
      out.literal.push_back(std::size_t{1} << i);
      out.literal.push_back(std::size_t{1} << i);
    }
    std::sort(out.literal.begin(), out.literal.end());
  }
  if (!out.commutative) return out;

  std::mt19937 rng(seed);
  std::vector<long> sym(o.rank()), anti(o.rank());
  for (std::size_t k = 0; k < o.rank(); ++k) {
    sym[k] = static_cast<long>(rng() % 97) + 1;
    anti[k] = static_cast<long>(rng() % 97) + 1;
  }
  const std::size_t points = o.points();
  Eigen::MatrixXcd h(static_cast<Eigen::Index>(points), static_cast<Eigen::Index>(points));
  long trace = 0;
  long trace_sq = 0;
  for (std::size_t x = 0; x < points; ++x) {
    for (std::size_t y = 0; y < points; ++y) {
      const std::size_t m = o.orbital(x, y);
      const std::size_t t = o.transposes()[m];
      const long re = sym[m] + sym[t];
      const long im = anti[m] - anti[t];
      h(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
          std::complex<double>(static_cast<double>(re), static_cast<double>(im));
      if (x == y) trace += re;
      trace_sq += re * re + im * im;
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd values = solver.eigenvalues();
  double scale = 1;
  for (Eigen::Index i = 0; i < values.size(); ++i) scale = std::max(scale, std::abs(values[i]));
  const double tol = tolerance * scale;
  out.smallest_gap = scale;
  std::vector<std::size_t> sizes{1};
  std::vector<double> centers{values[0]};
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    const double gap = values[i] - values[i - 1];
    if (gap > tol && gap < 10 * tol) throw ClusterAmbiguous("eigenvalue clusters too close; retry with another seed");
    if (gap <= tol) {
      ++sizes.back();
    } else {
      out.smallest_gap = std::min(out.smallest_gap, gap);
      sizes.push_back(1);
      centers.push_back(values[i]);
    }
  }
  if (sizes.size() != o.rank()) {
    throw ClusterAmbiguous("eigenvalue clusters merged; retry with another seed");
  }
  double sum = 0;
  double sum_sq = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    sum += values[i];
    sum_sq += values[i] * values[i];
  }
  out.trace_check = std::abs(sum - static_cast<double>(trace)) <= 1e-6 * scale * static_cast<double>(points) &&
                    std::abs(sum_sq - static_cast<double>(trace_sq)) <= 1e-6 * static_cast<double>(trace_sq);
  out.degrees = sizes;
  std::sort(out.degrees.begin(), out.degrees.end());
  for (auto s : out.degrees) out.degree_sum += s;
  out.matches_prediction = out.degrees == out.predicted;
  out.matches_literal = !out.literal.empty() && out.degrees == out.literal;
  return out;
}

}  // namespace arbor
