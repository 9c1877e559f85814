#include "rotor/cover.hpp"

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <random>

#include "rotor/generators.hpp"
#include "rotor/walk.hpp"

namespace rotor {

CoverReport cover_times(const GraphModel& g, const ConfigProvider& config, Vertex origin, std::uint64_t budget) {
  if (!g.is_finite()) throw GraphError("cover_times needs a finite graph");
  const auto n = g.vertex_count();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.finite_out(static_cast<std::int64_t>(v)).size();
  std::vector<bool> edge_used(offset[n], false), vertex_seen(n, false);
  std::size_t edges_left = offset[n], vertices_left = n;

  CoverReport report;
  RotorWalk walk(g, config, origin);
  while ((edges_left > 0 || vertices_left > 0) && walk.time() < budget) {
    const auto from = static_cast<std::size_t>(walk.position().x);
    walk.step();
    const auto e = offset[from] + static_cast<std::size_t>(*walk.rotor(finite_vertex(static_cast<std::int64_t>(from))));
    if (!edge_used[e]) {
      edge_used[e] = true;
      if (--edges_left == 0) report.t_edge = walk.time() - 1;  // the step s = t - 1 completed E
    }
    const auto to = static_cast<std::size_t>(walk.position().x);
    if (!vertex_seen[to]) {
      vertex_seen[to] = true;
      if (--vertices_left == 0) report.t_vertex = walk.time();
    }
  }
  report.steps = walk.time();
  return report;
}

namespace {

// Rows of the Dirichlet system deg(u) H(u) - sum_w H(w) = deg(u), u != target,
// with multi-edges merged.
struct Row {
  std::vector<std::pair<std::int64_t, double>> entries;  // (w, multiplicity), w != target
  double deg = 0;
};

Row build_row(const GraphModel& g, std::int64_t u, std::int64_t target) {
  Row r;
  auto out = g.finite_out(u);
  r.deg = static_cast<double>(out.size());
  std::vector<std::int64_t> heads(out.begin(), out.end());
  std::sort(heads.begin(), heads.end());
  for (std::size_t i = 0; i < heads.size();) {
    std::size_t j = i;
    while (j < heads.size() && heads[j] == heads[i]) ++j;
    if (heads[i] != target) r.entries.emplace_back(heads[i], static_cast<double>(j - i));
    i = j;
  }
  return r;
}

double residual_of(const GraphModel& g, std::int64_t target, const std::vector<double>& h) {
  long double worst = 0;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  for (std::int64_t u = 0; u < n; ++u) {
    if (u == target) continue;
    auto out = g.finite_out(u);
    long double sum = 0;
    for (auto w : out) sum += h[static_cast<std::size_t>(w)];
    const long double r = h[static_cast<std::size_t>(u)] - 1.0L - sum / static_cast<long double>(out.size());
    worst = std::max(worst, std::abs(r));
  }
  return static_cast<double>(worst);
}

// Residual of the scaled system in extended precision (for refinement).
Eigen::VectorXd system_residual(const GraphModel& g, std::int64_t target, const std::vector<double>& h,
                                const std::vector<std::int64_t>& index) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  Eigen::VectorXd r(n - 1);
  for (std::int64_t u = 0; u < n; ++u) {
    if (u == target) continue;
    auto out = g.finite_out(u);
    long double acc = static_cast<long double>(out.size()) * (1.0L - h[static_cast<std::size_t>(u)]);
    for (auto w : out) acc += h[static_cast<std::size_t>(w)];
    r[index[static_cast<std::size_t>(u)]] = static_cast<double>(acc);
  }
  return r;
}

bool is_symmetric_graph(const GraphModel& g) { return is_bidirected(g); }

}  // namespace

HittingColumn hitting_times(const GraphModel& g, std::int64_t target, std::size_t dense_limit) {
  if (!g.is_finite()) throw GraphError("hitting_times needs a finite graph");
  g.require(finite_vertex(target));
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  HittingColumn col;
  col.target = target;
  col.h.assign(static_cast<std::size_t>(n), 0.0);
  if (n == 1) return col;

  std::vector<std::int64_t> index(static_cast<std::size_t>(n), -1);
  std::int64_t k = 0;
  for (std::int64_t u = 0; u < n; ++u) {
    if (u != target) index[static_cast<std::size_t>(u)] = k++;
  }
  Eigen::VectorXd rhs(k);
  Eigen::VectorXd x;

  auto scatter = [&](const Eigen::VectorXd& sol) {
    for (std::int64_t u = 0; u < n; ++u) {
      if (u != target) col.h[static_cast<std::size_t>(u)] = sol[index[static_cast<std::size_t>(u)]];
    }
  };

  if (static_cast<std::size_t>(n) <= dense_limit) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
    for (std::int64_t u = 0; u < n; ++u) {
      if (u == target) continue;
      const auto row = build_row(g, u, target);
      const auto i = index[static_cast<std::size_t>(u)];
      m(i, i) += row.deg;
      rhs[i] = row.deg;
      for (const auto& [w, mult] : row.entries) m(i, index[static_cast<std::size_t>(w)]) -= mult;
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    x = lu.solve(rhs);
    scatter(x);
    for (int refine = 0; refine < 3 && residual_of(g, target, col.h) > 1e-10; ++refine) {
      x += lu.solve(system_residual(g, target, col.h, index));
      scatter(x);
    }
  } else {
    using Sparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;
    Sparse m(k, k);
    Eigen::VectorXi nnz(k);
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(k));
    for (std::int64_t u = 0; u < n; ++u) {
      if (u == target) continue;
      rows.push_back(build_row(g, u, target));
      nnz[static_cast<Eigen::Index>(rows.size() - 1)] = static_cast<int>(rows.back().entries.size()) + 1;
    }
    m.reserve(nnz);
    for (std::int64_t u = 0, i = 0; u < n; ++u) {
      if (u == target) continue;
      auto& row = rows[static_cast<std::size_t>(i)];
      bool diag_done = false;
      for (const auto& [w, mult] : row.entries) {
        const auto j = index[static_cast<std::size_t>(w)];
        if (j == i) {
          m.insert(i, j) = row.deg - mult;
          diag_done = true;
        } else {
          m.insert(i, j) = -mult;
        }
      }
      if (!diag_done) m.insert(i, i) = row.deg;
      rhs[i] = row.deg;
      row = Row{};  // release memory as we go
      ++i;
    }
    m.makeCompressed();
    if (is_symmetric_graph(g)) {
      Eigen::ConjugateGradient<Sparse, Eigen::Lower | Eigen::Upper, Eigen::DiagonalPreconditioner<double>> cg;
      cg.setTolerance(1e-15);
      cg.setMaxIterations(100000);
      cg.compute(m);
      x = cg.solve(rhs);
      scatter(x);
      for (int refine = 0; refine < 5 && residual_of(g, target, col.h) > 1e-10; ++refine) {
        x += cg.solve(system_residual(g, target, col.h, index));
        scatter(x);
      }
    } else {
      Eigen::SparseMatrix<double> cm(m);
      Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
      lu.compute(cm);
      if (lu.info() != Eigen::Success) throw SolverError("hitting_times: sparse factorisation failed");
      x = lu.solve(rhs);
      scatter(x);
      for (int refine = 0; refine < 3 && residual_of(g, target, col.h) > 1e-10; ++refine) {
        x += lu.solve(system_residual(g, target, col.h, index));
        scatter(x);
      }
    }
  }
  for (double v : col.h) {
    if (!std::isfinite(v)) throw SolverError("hitting_times: singular system (is the graph strongly connected?)");
  }
  col.residual = residual_of(g, target, col.h);
  if (!(col.residual <= 1e-6)) {
    throw SolverError("hitting_times: solver did not converge (residual " + std::to_string(col.residual) + ")");
  }
  return col;
}

double k_term(const GraphModel& g, const HittingColumn& col) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  double max_h = 0;
  long double spread = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double hi = col.h[static_cast<std::size_t>(i)];
    max_h = std::max(max_h, hi);
    for (auto j : g.finite_out(i)) spread += std::abs(hi - col.h[static_cast<std::size_t>(j)] - 1.0);
  }
  return max_h + 0.5 * (static_cast<double>(g.edge_count()) + static_cast<double>(spread));
}

KReport compute_K(const GraphModel& g, const std::vector<std::int64_t>& targets) {
  std::vector<std::int64_t> vs = targets;
  if (vs.empty()) {
    vs.resize(g.vertex_count());
    for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<std::int64_t>(i);
  }
  KReport rep;
  rep.k = -1;
  for (auto v : vs) {
    const auto col = hitting_times(g, v);
    rep.max_residual = std::max(rep.max_residual, col.residual);
    const double term = k_term(g, col);
    if (term > rep.k) {
      rep.k = term;
      rep.argmax_target = v;
    }
  }
  return rep;
}

std::vector<double> thick_cycle_hitting_lumped(int length, int thickness) {
  if (length < 3 || thickness < 1) throw GraphError("thick cycle needs length >= 3, thickness >= 1");
  // State (x, z): z = 0 for level y = 0, z = 1 for the other N-1 levels.
  const int states = 2 * length;
  auto id = [&](int x, int z) { return 2 * x + z; };
  const double deg = 2.0 * thickness + length - 3;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(states, states);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(states);
  for (int x = 0; x < length; ++x) {
    for (int z = 0; z < 2; ++z) {
      const int i = id(x, z);
      if (x == 0 && z == 0) {
        m(i, i) = 1;
        continue;
      }
      if (z == 1 && thickness == 1) {
        m(i, i) = 1;  // no such vertices
        continue;
      }
      m(i, i) += deg;
      rhs[i] = deg;
      for (int dx : {1, length - 1}) {
        const int x2 = (x + dx) % length;
        m(i, id(x2, 0)) -= 1;
        m(i, id(x2, 1)) -= thickness - 1;
      }
      for (int x2 = 0; x2 < length; ++x2) {
        const int d = (x2 - x + length) % length;
        if (d != 0 && d != 1 && d != length - 1) m(i, id(x2, z)) -= 1;  // long-range, same level
      }
    }
  }
  const Eigen::VectorXd h = m.partialPivLu().solve(rhs);
  std::vector<double> out(static_cast<std::size_t>(length) * static_cast<std::size_t>(thickness));
  for (int x = 0; x < length; ++x) {
    for (int y = 0; y < thickness; ++y) {
      out[static_cast<std::size_t>(thick_cycle_index(thickness, x, y))] = h[id(x, y == 0 ? 0 : 1)];
    }
  }
  return out;
}

std::vector<BatteryInstance> cover_battery(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<BatteryInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::string name;
    GraphModel g = build_cycle(3);
    const std::uint64_t s = rng();
    switch (i % 5) {
      case 0: {
        const int n = 2 + static_cast<int>(s % 59);
        const int extra = static_cast<int>((s >> 8) % static_cast<std::uint64_t>(2 * n + 1));
        g = random_bidirected(n, extra, s);
        name = "bidirected-n" + std::to_string(n) + "-x" + std::to_string(extra);
        break;
      }
      case 1: {
        const int n = 2 + static_cast<int>(s % 59);
        const int cycles = static_cast<int>((s >> 8) % 12);
        g = random_directed_eulerian(n, cycles, 1 + static_cast<int>((s >> 16) % static_cast<std::uint64_t>(n)), s);
        name = "eulerian-n" + std::to_string(n) + "-c" + std::to_string(cycles);
        break;
      }
      case 2: {
        const int n = 3 + static_cast<int>(s % 58);
        g = shuffle_out_orders(build_cycle(n), s >> 8);
        name = "cycle-" + std::to_string(n);
        break;
      }
      case 3: {
        const int length = 3 + static_cast<int>(s % 8);
        const int thickness = 1 + static_cast<int>((s >> 8) % static_cast<std::uint64_t>(60 / length));
        g = shuffle_out_orders(build_thick_cycle(length, thickness), s >> 16);
        name = "thick-" + std::to_string(length) + "x" + std::to_string(thickness);
        break;
      }
      default: {
        const int n = 2 + static_cast<int>(s % 59);
        g = shuffle_out_orders(build_complete(n), s >> 8);
        name = "complete-" + std::to_string(n);
        break;
      }
    }
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const Vertex origin = finite_vertex(static_cast<std::int64_t>((s >> 24) % static_cast<std::uint64_t>(n)));
    const bool tree = ((s >> 40) & 1) != 0;
    ConfigProvider cfg = tree ? tree_to_origin_config(g, origin) : ConfigProvider::uniform(s ^ 0x5bd1e995ULL);
    name += tree ? "/tree" : "/uniform";
    out.push_back(BatteryInstance{std::move(name), std::move(g), std::move(cfg), origin});
  }
  return out;
}

}  // namespace rotor
