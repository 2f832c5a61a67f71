#include "cone_runge/topology.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace cone_runge {

namespace {

constexpr int kDc8[] = {1, -1, 0, 0, 1, 1, -1, -1};
constexpr int kDr8[] = {0, 0, 1, -1, 1, -1, 1, -1};

std::vector<std::uint8_t> mask_of(const DomainGrid& grid, Region region) {
  std::vector<std::uint8_t> m = grid.cells();
  if (region == Region::kComplement) {
    for (auto& v : m) v = v ? 0 : 1;
  }
  return m;
}

int count_real_runs(const GridGeometry& g, const std::vector<int>& label, int which) {
  int runs = 0;
  bool prev = false;
  const int r = g.real_row();
  for (int c = 0; c < g.cols(); ++c) {
    const int l = label[g.index(c, r)];
    const bool on = which < 0 ? l >= 0 : l == which;
    if (on && !prev) ++runs;
    prev = on;
  }
  return runs;
}

}  // namespace

Labeling label_cells(const GridGeometry& g, std::span<const std::uint8_t> member, Connectivity conn,
                     int min_row) {
  Labeling out;
  out.label.assign(g.size(), -1);
  const int nbrs = conn == Connectivity::kFour ? 4 : 8;
  std::vector<std::size_t> queue;
  queue.reserve(g.size());
  for (std::size_t seed = 0; seed < g.size(); ++seed) {
    if (!member[seed] || out.label[seed] >= 0 || g.row_of(seed) < min_row) continue;
    const int id = out.count++;
    std::size_t size = 0;
    bool bounded = true;
    queue.clear();
    queue.push_back(seed);
    out.label[seed] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t idx = queue[head];
      ++size;
      const int c = g.col_of(idx), r = g.row_of(idx);
      if (g.on_frame(c, r)) bounded = false;
      for (int k = 0; k < nbrs; ++k) {
        const int nc = c + kDc8[k], nr = r + kDr8[k];
        if (nc < 0 || nr < min_row || nc >= g.cols() || nr >= g.rows()) continue;
        const std::size_t n = g.index(nc, nr);
        if (member[n] && out.label[n] < 0) {
          out.label[n] = id;
          queue.push_back(n);
        }
      }
    }
    out.sizes.push_back(size);
    out.bounded.push_back(bounded);
  }
  return out;
}

Labeling components(const DomainGrid& grid, Region region, Connectivity conn) {
  const auto m = mask_of(grid, region);
  return label_cells(grid.geometry(), m, conn);
}

long euler_characteristic(const GridGeometry& g, std::span<const std::uint8_t> member, int min_row) {
  long v = 0, e = 0, f = 0;
  const auto in = [&](int c, int r) {
    return c >= 0 && c < g.cols() && r >= min_row && r < g.rows() && member[g.index(c, r)] != 0;
  };
  for (int r = std::max(0, min_row); r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (!in(c, r)) continue;
      ++v;
      const bool right = in(c + 1, r), up = in(c, r + 1);
      e += right;
      e += up;
      if (right && up && in(c + 1, r + 1)) ++f;
    }
  }
  return v - e + f;
}

std::vector<long> euler_per_component(const GridGeometry& g, const Labeling& labels) {
  std::vector<long> chi(labels.count, 0);
  const auto lab = [&](int c, int r) {
    return (c < g.cols() && r < g.rows()) ? labels.label[g.index(c, r)] : -1;
  };
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      const int l = lab(c, r);
      if (l < 0) continue;
      chi[l] += 1;
      const bool right = lab(c + 1, r) == l, up = lab(c, r + 1) == l;
      chi[l] -= right;
      chi[l] -= up;
      if (right && up && lab(c + 1, r + 1) == l) chi[l] += 1;
    }
  }
  return chi;
}

PlanePoint component_representative(const GridGeometry& g, const Labeling& labels, int which,
                                    const std::vector<int>& depth) {
  const bool meets_real = count_real_runs(g, labels.label, which) > 0;
  int best = -1;
  std::size_t best_idx = 0;
  for (std::size_t idx = 0; idx < labels.label.size(); ++idx) {
    if (labels.label[idx] != which) continue;
    const int row = g.row_of(idx);
    if (meets_real && row != g.real_row()) continue;
    if (depth[idx] > best) {
      best = depth[idx];
      best_idx = idx;
    }
  }
  // Centre of the run of equally deep cells starting at best_idx.
  const int row = g.row_of(best_idx);
  const int c0 = g.col_of(best_idx);
  int c1 = c0;
  while (c1 + 1 < g.cols() && labels.label[g.index(c1 + 1, row)] == which &&
         depth[g.index(c1 + 1, row)] == best) {
    ++c1;
  }
  const double x = 0.5 * (g.x(c0) + g.x(c1));
  return {x, meets_real ? 0.0 : g.y(row)};
}

std::vector<int> depth_map(const GridGeometry& g, std::span<const std::uint8_t> member) {
  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> depth(g.size(), kUnreached);
  std::vector<std::size_t> queue;
  queue.reserve(g.size());
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const int c = g.col_of(idx), r = g.row_of(idx);
    for (int k = 0; k < 8; ++k) {
      const int nc = c + kDc8[k], nr = r + kDr8[k];
      if (nc < 0 || nr < 0 || nc >= g.cols() || nr >= g.rows()) continue;
      if ((member[g.index(nc, nr)] != 0) != (member[idx] != 0)) {
        depth[idx] = 1;
        queue.push_back(idx);
        break;
      }
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t idx = queue[head];
    const int c = g.col_of(idx), r = g.row_of(idx);
    for (int k = 0; k < 8; ++k) {
      const int nc = c + kDc8[k], nr = r + kDr8[k];
      if (nc < 0 || nr < 0 || nc >= g.cols() || nr >= g.rows()) continue;
      const std::size_t n = g.index(nc, nr);
      if (depth[n] == kUnreached && (member[n] != 0) == (member[idx] != 0)) {
        depth[n] = depth[idx] + 1;
        queue.push_back(n);
      }
    }
  }
  return depth;
}

TopoSummary summarize(const DomainGrid& grid) {
  const GridGeometry& g = grid.geometry();
  const auto& cells = grid.cells();
  TopoSummary s;

  const Labeling dom = label_cells(g, cells, Connectivity::kFour);
  s.b0_D = dom.count;

  const auto comp_mask = mask_of(grid, Region::kComplement);
  const Labeling comp = label_cells(g, comp_mask, Connectivity::kEight);
  const std::vector<int> comp_depth = depth_map(g, comp_mask);
  for (int l = 0; l < comp.count; ++l) {
    if (!comp.bounded[l]) continue;
    ComplementComponent cc;
    cc.cells = comp.sizes[l];
    cc.meets_real = count_real_runs(g, comp.label, l) > 0;
    cc.representative = component_representative(g, comp, l, comp_depth);
    s.bounded_complement_components.push_back(cc);
  }
  s.b1_D = static_cast<int>(s.bounded_complement_components.size());

  s.euler_D = euler_characteristic(g, cells);
  s.b1_D_euler = static_cast<int>(s.b0_D - s.euler_D);
  if (s.b1_D_euler != s.b1_D) {
    throw std::logic_error("summarize: Euler b1 = " + std::to_string(s.b1_D_euler) +
                           " but bounded complement count = " + std::to_string(s.b1_D));
  }

  s.b0_Dreal = count_real_runs(g, dom.label, -1);

  const std::vector<long> chi_full = euler_per_component(g, dom);
  const Labeling plus = label_cells(g, cells, Connectivity::kFour, g.real_row());
  const std::vector<long> chi_plus = euler_per_component(g, plus);
  s.b0_Dplus = plus.count;
  std::vector<int> full_label_of(plus.count, -1);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    if (plus.label[idx] >= 0 && full_label_of[plus.label[idx]] < 0) full_label_of[plus.label[idx]] = dom.label[idx];
  }
  for (int l = 0; l < plus.count; ++l) {
    UpperComponent u;
    u.real_runs = count_real_runs(g, plus.label, l);
    u.meets_real = u.real_runs > 0;
    u.b1_plus = static_cast<int>(1 - chi_plus[l]);
    u.b1_full = static_cast<int>(1 - chi_full[full_label_of[l]]);
    s.b1_Dplus += u.b1_plus;
    if (!u.meets_real) ++s.k_offreal;
    s.upper_components.push_back(u);
  }
  return s;
}

}  // namespace cone_runge
