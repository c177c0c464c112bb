#include "gfactor/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "gfactor/error.hpp"
#include "gfactor/linalg.hpp"

namespace gfactor {

namespace {

double off_diagonal_mass(const DenseMatrix& m) {
  double sum = 0.0;
  for (int i = 0; i < m.order; ++i) {
    for (int j = 0; j < m.order; ++j) {
      if (i != j) sum += m(i, j) * m(i, j);
    }
  }
  return std::sqrt(sum);
}

void jacobi_sweep(DenseMatrix& a, DenseMatrix& v) {
  const int n = a.order;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double apq = a(p, q);
      if (apq == 0.0) continue;
      const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
      const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      for (int k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
      }
      for (int k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
      }
      for (int k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
      }
    }
  }
}

DenseMatrix conjugate(const DenseMatrix& basis, const DenseMatrix& m) {
  const int n = m.order;
  DenseMatrix tmp{n, std::vector<double>(static_cast<std::size_t>(n * n), 0.0)};
  DenseMatrix out = tmp;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += m(i, k) * basis(k, j);
      tmp(i, j) = s;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += basis(k, i) * tmp(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

bool is_diagonal_within(const DenseMatrix& m, double tol) {
  for (int i = 0; i < m.order; ++i) {
    for (int j = 0; j < m.order; ++j) {
      if (i != j && std::abs(m(i, j)) >= tol) return false;
    }
  }
  return true;
}

}  // namespace

DenseMatrix to_dense(const IntMatrix& m) {
  DenseMatrix out{m.order(), std::vector<double>(static_cast<std::size_t>(m.order() * m.order()))};
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) out(i, j) = m(i, j).get_d();
  }
  return out;
}

EigenDecomposition jacobi_eigen(const DenseMatrix& m, double tol) {
  if (!(tol > 0)) throw ParameterError("tolerance must be positive");
  const int n = m.order;
  DenseMatrix a = m;
  DenseMatrix v{n, std::vector<double>(static_cast<std::size_t>(n * n), 0.0)};
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  constexpr int kMaxSweeps = 100;
  int sweeps = 0;
  while (off_diagonal_mass(a) >= tol) {
    if (++sweeps > kMaxSweeps) throw Error("Jacobi iteration did not converge");
    jacobi_sweep(a, v);
  }
  jacobi_sweep(a, v);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

  EigenDecomposition out{std::vector<double>(static_cast<std::size_t>(n)),
                         DenseMatrix{n, std::vector<double>(static_cast<std::size_t>(n * n))}};
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.values[static_cast<std::size_t>(k)] = a(src, src);
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, src);
  }
  return out;
}

Spectrum eigen_sym(const IntMatrix& m, double tol) {
  if (!m.is_symmetric()) throw PreconditionError("eigen_sym requires a symmetric matrix");
  return Spectrum{jacobi_eigen(to_dense(m), tol).values, tol};
}

double lambda_max(const Graph& g, double tol) { return eigen_sym(adjacency(g), tol).max(); }

PerronData perron(const Graph& g, double tol) {
  if (!(tol > 0)) throw ParameterError("tolerance must be positive");
  if (!is_connected(g)) throw PreconditionError("Perron vector requires a connected graph");
  const int n = g.order();
  const auto size = static_cast<std::size_t>(n);
  std::vector<double> x(size, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(size);

  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (Row r = g.row(i); r; r &= r - 1) s += in[static_cast<std::size_t>(std::countr_zero(r))];
      out[static_cast<std::size_t>(i)] = s;
    }
  };

  // Stricter than the caller's tolerance so the residual lands well inside it.
  const double stop = tol * 1e-2;
  constexpr int kMaxIterations = 10'000'000;
  for (int it = 0;; ++it) {
    if (it == kMaxIterations) throw Error("power iteration did not converge");
    apply(x, next);
    double norm = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      next[i] += x[i];
      norm += next[i] * next[i];
    }
    norm = std::sqrt(norm);
    double dist = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      next[i] /= norm;
      dist += (next[i] - x[i]) * (next[i] - x[i]);
    }
    x.swap(next);
    if (std::sqrt(dist) < stop) break;
  }

  apply(x, next);
  double rayleigh = 0.0;
  for (std::size_t i = 0; i < size; ++i) rayleigh += x[i] * next[i];
  return PerronData{rayleigh, std::move(x)};
}

bool spectrum_is_symmetric(const Spectrum& s) {
  const std::size_t n = s.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(s.values[i] + s.values[n - 1 - i]) > 2 * s.tolerance) return false;
  }
  return true;
}

std::optional<Basis> common_eigenbasis(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, double tol,
                                       std::uint64_t seed) {
  for (const IntMatrix* m : {&a, &b, &c}) {
    if (!m->is_symmetric()) throw PreconditionError("common_eigenbasis requires symmetric matrices");
  }
  if (!commute(a, b) || !commute(a, c) || !commute(b, c)) {
    throw PreconditionError("common_eigenbasis requires pairwise commuting matrices");
  }
  const DenseMatrix da = to_dense(a);
  const DenseMatrix db = to_dense(b);
  const DenseMatrix dc = to_dense(c);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coefficient(0.5, 1.5);

  constexpr int kAttempts = 5;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const double r = coefficient(rng);
    const double s = coefficient(rng);
    DenseMatrix mix = db;
    for (std::size_t i = 0; i < mix.entries.size(); ++i) mix.entries[i] = r * db.entries[i] + s * dc.entries[i];
    // Drive the combination to machine precision; the acceptance test below uses tol.
    Basis basis = jacobi_eigen(mix, 1e-14).vectors;
    if (is_diagonal_within(conjugate(basis, da), tol) && is_diagonal_within(conjugate(basis, db), tol) &&
        is_diagonal_within(conjugate(basis, dc), tol)) {
      return basis;
    }
  }
  return std::nullopt;
}

ProductCheck lambda_max_product_check(const Graph& g, const Graph& h, const Graph& k, double tol) {
  const double lhs = lambda_max(g, tol);
  const double rhs = lambda_max(h, tol) * lambda_max(k, tol);
  return {lhs, rhs, std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(lhs))};
}

RadiusCheck component_radius_check(const Graph& g, const Graph& h, const Graph& k, double tol) {
  const std::pair<const Graph*, const char*> graphs[] = {{&g, "G"}, {&h, "H"}, {&k, "K"}};
  for (const auto& [graph, name] : graphs) {
    if (has_isolated_vertex(*graph)) return {false, std::string(name) + " has an isolated vertex"};
    const double parent = lambda_max(*graph, tol);
    for (const auto& block : components(*graph)) {
      const double radius = lambda_max(induced_subgraph(*graph, block), tol);
      if (std::abs(radius - parent) > tol * std::max(1.0, parent)) {
        return {false, std::string(name) + " component at vertex " + std::to_string(block.front()) +
                           " has spectral radius " + std::to_string(radius) + " vs " + std::to_string(parent)};
      }
    }
  }
  return {true, ""};
}

std::string format_values(const std::vector<double>& values) {
  std::string out = "[";
  char buf[32];
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = values[i];
    if (std::abs(v) < 5e-13) v = 0.0;  // print -0 and round-off residue as 0
    std::snprintf(buf, sizeof buf, "%.12g", v);
    if (i > 0) out += ", ";
    out += buf;
  }
  return out + "]";
}

}  // namespace gfactor
