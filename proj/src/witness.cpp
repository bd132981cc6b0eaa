#include "hq/witness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hq {

namespace {

double to_double(const Rational& q) { return q.template convert_to<double>(); }

Eigen::MatrixXcd unit_matrix(int dim, int row, int col) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(row, col) = 1;
  return m;
}

}  // namespace

double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::MatrixXcd b = m.adjoint() * m;
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(b.cols());
  v.normalize();
  double lambda = 0;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXcd w = b * v;
    double next = w.norm();
    if (next < 1e-300) return 0;
    v = w / next;
    if (std::abs(next - lambda) < 1e-12) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

Eigen::MatrixXcd evaluate_poly(const MatrixRep& rep, const NCPoly& p) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
  for (const auto& [w, c] : p.terms()) {
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
    for (const Generator& g : w) {
      auto it = rep.assign.find(g);
      if (it == rep.assign.end()) throw std::runtime_error("representation does not assign a generator");
      if (it->second.rows() != rep.dim || it->second.cols() != rep.dim) {
        throw std::runtime_error("matrix dimension mismatch in representation");
      }
      prod = prod * it->second;
    }
    out += to_double(c) * prod;
  }
  return out;
}

MatrixRep perm_rep(const Hypergraph& h, const BiPermutation& g) {
  if (!is_automorphism(h, g)) {
    for (int e = 0; e < h.num_edges(); ++e) {
      int f = g.tau[e];
      std::vector<int> src_img, rng_img;
      for (int v : h.src(e)) src_img.push_back(g.sigma[v]);
      for (int v : h.rng(e)) rng_img.push_back(g.sigma[v]);
      std::sort(src_img.begin(), src_img.end());
      std::sort(rng_img.begin(), rng_img.end());
      if (src_img != h.src(f)) {
        throw std::runtime_error("not an automorphism: source set of edge " + h.edge(e) +
                                 " does not map onto the source set of its image");
      }
      if (rng_img != h.rng(f)) {
        throw std::runtime_error("not an automorphism: range set of edge " + h.edge(e) +
                                 " does not map onto the range set of its image");
      }
    }
    throw std::runtime_error("not an automorphism");
  }
  int nv = h.num_vertices(), ne = h.num_edges();
  MatrixRep rep;
  rep.dim = std::max(1, nv * (ne + 1));
  int d = rep.dim;
  // Coordinates: block 0 holds one slot per vertex, block e+1 a copy for
  // edge e. index(b, v) = b * nv + v.
  auto idx = [&](int block, int v) { return block * nv + v; };
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      double val = g.sigma[j] == i ? 1.0 : 0.0;
      rep.assign[Generator::uV(i, j)] = val * Eigen::MatrixXcd::Identity(d, d);
    }
  }
  for (int i = 0; i < ne; ++i) {
    for (int j = 0; j < ne; ++j) {
      double val = g.tau[j] == i ? 1.0 : 0.0;
      rep.assign[Generator::uE(i, j)] = val * Eigen::MatrixXcd::Identity(d, d);
    }
  }
  for (int v = 0; v < nv; ++v) {
    rep.assign[Generator::p(v)] = unit_matrix(d, idx(0, g.sigma[v]), idx(0, g.sigma[v]));
  }
  for (int e = 0; e < ne; ++e) {
    int f = g.tau[e];
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, d);
    for (int w : h.rng(f)) s(idx(f + 1, w), idx(0, w)) = 1;
    rep.assign[Generator::s(e)] = s;
    rep.assign[Generator::sStar(e)] = s.adjoint();
  }
  return rep;
}

WitnessReport check_rep(const MatrixRep& rep, const Presentation& pres) {
  WitnessReport out;
  out.rep = rep;
  for (const Generator& g : pres.generators) {
    if (rep.assign.find(g) == rep.assign.end()) {
      throw std::runtime_error("representation does not cover generator " + pres.generator_label(g));
    }
  }
  for (int i = 0; i < pres.num_all(); ++i) {
    const NCPoly& r = pres.relation_at(i).poly;
    if (r.is_zero()) continue;
    out.max_relation_residual = std::max(out.max_relation_residual, operator_norm(evaluate_poly(rep, r)));
  }
  double best = 0;
  NoncommutativityWitness wit;
  for (size_t a = 0; a < pres.generators.size(); ++a) {
    for (size_t b = a + 1; b < pres.generators.size(); ++b) {
      const Eigen::MatrixXcd& ma = rep.assign.at(pres.generators[a]);
      const Eigen::MatrixXcd& mb = rep.assign.at(pres.generators[b]);
      double norm = operator_norm(ma * mb - mb * ma);
      if (norm > best) {
        best = norm;
        wit = {pres.generators[a], pres.generators[b], norm};
      }
    }
  }
  if (best > 10 * rep.tolerance) out.noncommutativity = wit;
  return out;
}

WitnessOutcome nonclassical_witness(const Hypergraph& h, double theta) {
  WitnessOutcome out;
  int nv = h.num_vertices(), ne = h.num_edges();
  std::vector<int> full;
  for (int v = 0; v < nv; ++v) full.push_back(v);
  for (int e = 0; e < ne; ++e) {
    if (h.src(e) != full || h.rng(e) != full) {
      out.message = "hypergraph with s(e) = r(e) = V required";
      return out;
    }
  }
  if (nv < 4 && ne < 4) {
    out.message = "an index set of size >= 4 is required; absence of a witness is not a classicality proof";
    return out;
  }
  if (!(theta > 0 && theta < std::acos(-1.0) / 2)) {
    out.message = "theta must lie in (0, pi/2)";
    return out;
  }
  bool vertex_side = nv >= 4;
  int n = vertex_side ? nv : ne;
  double c = std::cos(theta), s = std::sin(theta);
  Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd zero2 = Eigen::MatrixXcd::Zero(2, 2);
  Eigen::MatrixXcd p2 = zero2;
  p2(0, 0) = 1;
  Eigen::MatrixXcd q2 = zero2;
  q2(0, 0) = c * c;
  q2(0, 1) = q2(1, 0) = c * s;
  q2(1, 1) = s * s;

  std::vector<std::vector<Eigen::MatrixXcd>> u(n, std::vector<Eigen::MatrixXcd>(n, zero2));
  u[0][0] = p2;
  u[0][1] = id2 - p2;
  u[1][0] = id2 - p2;
  u[1][1] = p2;
  u[2][2] = q2;
  u[2][3] = id2 - q2;
  u[3][2] = id2 - q2;
  u[3][3] = q2;
  for (int i = 4; i < n; ++i) u[i][i] = id2;

  MatrixRep rep;
  rep.dim = 2;
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      rep.assign[Generator::uV(i, j)] = vertex_side ? u[i][j] : (i == j ? id2 : zero2);
    }
  }
  for (int i = 0; i < ne; ++i) {
    for (int j = 0; j < ne; ++j) {
      rep.assign[Generator::uE(i, j)] = vertex_side ? (i == j ? id2 : zero2) : u[i][j];
    }
  }
  out.available = true;
  out.report = check_rep(rep, present(h, Flavor::QautHypergraph));
  return out;
}

namespace {

// Real symmetric parametrization: d diagonal entries then the strict upper
// triangle, per generator.
int params_per_matrix(int d) { return d * (d + 1) / 2; }

Eigen::MatrixXcd unpack(const std::vector<double>& x, size_t at, int d) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  size_t k = at;
  for (int i = 0; i < d; ++i) m(i, i) = x[k++];
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      m(i, j) = m(j, i) = x[k++];
    }
  }
  return m;
}

void pack(const Eigen::MatrixXcd& m, std::vector<double>& x, size_t at) {
  int d = static_cast<int>(m.rows());
  size_t k = at;
  for (int i = 0; i < d; ++i) x[k++] = m(i, i).real();
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      x[k++] = m(i, j).real();
    }
  }
}

Eigen::MatrixXcd clamp_spectrum(const Eigen::MatrixXcd& m, bool round_to_idempotent) {
  Eigen::MatrixXcd h = (m + m.adjoint()) / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  Eigen::VectorXd ev = solver.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (round_to_idempotent) {
      ev[i] = ev[i] >= 0.5 ? 1.0 : 0.0;
    } else {
      ev[i] = std::clamp(ev[i], 0.0, 1.0);
    }
  }
  return solver.eigenvectors() * ev.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
         solver.eigenvectors().adjoint();
}

}  // namespace

WitnessOutcome search_magic_rep(const Hypergraph& h, int dim, const SearchOptions& opts) {
  WitnessOutcome out;
  if (dim < 1) {
    out.message = "dimension must be positive";
    return out;
  }
  Presentation pres = present(h, Flavor::QautHypergraph);
  int ppm = params_per_matrix(dim);
  size_t nparams = pres.generators.size() * ppm;

  auto build_rep = [&](const std::vector<double>& x, bool round_to_idempotent) {
    MatrixRep rep;
    rep.dim = dim;
    rep.tolerance = opts.tolerance;
    for (size_t gi = 0; gi < pres.generators.size(); ++gi) {
      Eigen::MatrixXcd m = unpack(x, gi * ppm, dim);
      if (round_to_idempotent) m = clamp_spectrum(m, true);
      rep.assign[pres.generators[gi]] = m;
    }
    return rep;
  };

  auto objective = [&](const std::vector<double>& x) {
    MatrixRep rep = build_rep(x, false);
    double f = 0;
    for (int i = 0; i < pres.num_all(); ++i) {
      const NCPoly& r = pres.relation_at(i).poly;
      if (r.is_zero()) continue;
      f += evaluate_poly(rep, r).squaredNorm();
    }
    return f;
  };

  double best_residual = 1e300;
  MatrixRep best_rep;

  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::mt19937_64 rng(opts.seed + static_cast<uint64_t>(restart));
    std::uniform_real_distribution<double> noise(-0.3, 0.3);
    std::vector<double> x(nparams, 0);
    for (size_t gi = 0; gi < pres.generators.size(); ++gi) {
      int family = pres.generators[gi].sort == Sort::UV ? h.num_vertices() : h.num_edges();
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) / std::max(family, 1);
      for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
          double eps = noise(rng);
          m(i, j) += eps;
          if (i != j) m(j, i) += eps;
        }
      }
      pack(m, x, gi * ppm);
    }

    double step = opts.step;
    double f = objective(x);
    for (int iter = 0; iter < opts.max_iters; ++iter) {
      std::vector<double> grad(nparams, 0);
      const double eps = 1e-5;
      for (size_t k = 0; k < nparams; ++k) {
        std::vector<double> xp = x;
        xp[k] += eps;
        grad[k] = (objective(xp) - f) / eps;
      }
      std::vector<double> xn = x;
      for (size_t k = 0; k < nparams; ++k) xn[k] -= step * grad[k];
      // Keep iterates on Hermitian contractions.
      for (size_t gi = 0; gi < pres.generators.size(); ++gi) {
        pack(clamp_spectrum(unpack(xn, gi * ppm, dim), false), xn, gi * ppm);
      }
      double fn = objective(xn);
      if (fn < f) {
        x = std::move(xn);
        f = fn;
        step *= 1.1;
      } else {
        step *= 0.5;
        if (step < 1e-12) break;
      }
      if ((iter + 1) % 20 == 0 || f < 1e-20) {
        MatrixRep cand = build_rep(x, true);
        WitnessReport wr = check_rep(cand, pres);
        if (wr.max_relation_residual < best_residual) {
          best_residual = wr.max_relation_residual;
          best_rep = cand;
        }
        if (f < 1e-20) break;
      }
    }
    MatrixRep cand = build_rep(x, true);
    WitnessReport wr = check_rep(cand, pres);
    if (wr.max_relation_residual < best_residual) {
      best_residual = wr.max_relation_residual;
      best_rep = cand;
    }
    if (best_residual <= opts.tolerance) break;
  }

  if (best_residual <= opts.tolerance) {
    out.available = true;
    out.report = check_rep(best_rep, pres);
  } else {
    out.message = "no representation within tolerance found; this carries no mathematical meaning";
  }
  return out;
}

}  // namespace hq
