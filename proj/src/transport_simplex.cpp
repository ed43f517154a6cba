#include "transport_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "circrep/error.hpp"

namespace circrep::detail {

namespace {

struct Cell {
  std::size_t row;
  std::size_t col;
  double flow;
};

class TransportSimplex {
 public:
  TransportSimplex(const std::vector<double>& supply, const std::vector<double>& demand,
                   const std::vector<double>& cost)
      : m_(supply.size()), n_(demand.size()), cost_(cost), basic_(m_ * n_, false) {
    double scale = 1.0;
    for (double c : cost_) scale = std::max(scale, std::abs(c));
    eps_ = 1e-12 * scale;
    northwest_corner(supply, demand);
  }

  TransportSolution solve() {
    const std::size_t max_iter = 100000 + 50 * m_ * n_;
    int degenerate_run = 0;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
      compute_potentials();
      const bool bland = degenerate_run > 50;
      std::size_t enter = kNone;
      double best = -eps_;
      for (std::size_t k = 0; k < m_ * n_; ++k) {
        if (basic_[k]) continue;
        const double r = cost_[k] - u_[k / n_] - v_[k % n_];
        if (r < best) {
          best = r;
          enter = k;
          if (bland) break;
        }
      }
      if (enter == kNone) return finish();
      const double theta = pivot(enter / n_, enter % n_);
      degenerate_run = theta > 0.0 ? 0 : degenerate_run + 1;
    }
    throw Error(ErrorCode::InternalError, "transport simplex did not converge");
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  void northwest_corner(const std::vector<double>& supply, const std::vector<double>& demand) {
    std::vector<double> ra = supply, rb = demand;
    std::size_t i = 0, j = 0;
    while (true) {
      const double x = std::max(0.0, std::min(ra[i], rb[j]));
      add_basic(i, j, x);
      ra[i] -= x;
      rb[j] -= x;
      if (i == m_ - 1 && j == n_ - 1) break;
      if (i == m_ - 1) ++j;
      else if (j == n_ - 1) ++i;
      else if (ra[i] <= rb[j]) ++i;
      else ++j;
    }
  }

  void add_basic(std::size_t i, std::size_t j, double x) {
    basis_.push_back({i, j, x});
    basic_[i * n_ + j] = true;
  }

  // Tree adjacency: node ids are rows 0..m-1 and columns m..m+n-1.
  void build_adjacency() {
    adj_.assign(m_ + n_, {});
    for (std::size_t e = 0; e < basis_.size(); ++e) {
      adj_[basis_[e].row].push_back(e);
      adj_[m_ + basis_[e].col].push_back(e);
    }
  }

  std::size_t other_end(std::size_t e, std::size_t node) const {
    return node < m_ ? m_ + basis_[e].col : basis_[e].row;
  }

  void compute_potentials() {
    build_adjacency();
    u_.assign(m_, 0.0);
    v_.assign(n_, 0.0);
    std::vector<bool> seen(m_ + n_, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      for (std::size_t e : adj_[node]) {
        const std::size_t next = other_end(e, node);
        if (seen[next]) continue;
        seen[next] = true;
        const double c = cost_[basis_[e].row * n_ + basis_[e].col];
        if (next >= m_) v_[next - m_] = c - u_[node];
        else u_[next] = c - v_[node - m_];
        stack.push_back(next);
      }
    }
  }

  // Path of basis edges from row `i` to column `j` in the spanning tree.
  std::vector<std::size_t> tree_path(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> parent_edge(m_ + n_, kNone);
    std::vector<bool> seen(m_ + n_, false);
    std::vector<std::size_t> queue{i};
    seen[i] = true;
    const std::size_t target = m_ + j;
    for (std::size_t q = 0; q < queue.size() && !seen[target]; ++q) {
      const std::size_t node = queue[q];
      for (std::size_t e : adj_[node]) {
        const std::size_t next = other_end(e, node);
        if (seen[next]) continue;
        seen[next] = true;
        parent_edge[next] = e;
        queue.push_back(next);
      }
    }
    std::vector<std::size_t> path;
    for (std::size_t node = target; node != i;) {
      const std::size_t e = parent_edge[node];
      path.push_back(e);
      node = other_end(e, node);
    }
    return path;  // ordered from column j back to row i
  }

  double pivot(std::size_t i, std::size_t j) {
    const auto path = tree_path(i, j);
    // Entering cell gains flow; edges alternate -,+,- walking back from j.
    double theta = std::numeric_limits<double>::infinity();
    std::size_t leave = kNone;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const Cell& c = basis_[path[k]];
      const std::size_t idx = c.row * n_ + c.col;
      if (c.flow < theta ||
          (c.flow == theta && idx < basis_[leave].row * n_ + basis_[leave].col)) {
        theta = c.flow;
        leave = path[k];
      }
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      Cell& c = basis_[path[k]];
      c.flow += (k % 2 == 0) ? -theta : theta;
    }
    Cell& out = basis_[leave];
    basic_[out.row * n_ + out.col] = false;
    out = {i, j, theta};
    basic_[i * n_ + j] = true;
    return theta;
  }

  TransportSolution finish() const {
    TransportSolution s;
    s.flow.assign(m_ * n_, 0.0);
    for (const auto& c : basis_) {
      const double x = std::max(c.flow, 0.0);
      s.flow[c.row * n_ + c.col] = x;
      s.cost += x * cost_[c.row * n_ + c.col];
    }
    return s;
  }

  std::size_t m_, n_;
  const std::vector<double>& cost_;
  std::vector<bool> basic_;
  std::vector<Cell> basis_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<double> u_, v_;
  double eps_ = 0.0;
};

}  // namespace

TransportSolution solve_transport(const std::vector<double>& supply,
                                  const std::vector<double>& demand,
                                  const std::vector<double>& cost) {
  if (supply.empty() || demand.empty() || cost.size() != supply.size() * demand.size()) {
    throw Error(ErrorCode::InvalidInput, "transport problem: inconsistent dimensions");
  }
  return TransportSimplex(supply, demand, cost).solve();
}

}  // namespace circrep::detail
