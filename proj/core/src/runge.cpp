#include "cone_runge/runge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cone_runge/errors.hpp"

namespace cone_runge {

namespace {

std::vector<std::uint8_t> complement_mask(const DomainGrid& grid) {
  std::vector<std::uint8_t> m = grid.cells();
  for (auto& v : m) v = v ? 0 : 1;
  return m;
}

struct Holes {
  Labeling labels;
  std::vector<int> depth;
};

Holes holes_of(const DomainGrid& grid, int min_row = 0) {
  const auto mask = complement_mask(grid);
  return {label_cells(grid.geometry(), mask, Connectivity::kEight, min_row), depth_map(grid.geometry(), mask)};
}

// Rank over Q by Gaussian elimination with partial pivoting.
int matrix_rank(std::vector<std::vector<double>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < rows; ++r) {
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    }
    if (std::fabs(m[piv][c]) < 1e-9) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const double f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Bounded components of `holes` none of whose cells lies outside D1.
Verdict holes_meet_outside(const GridGeometry& g, const Holes& holes, const DomainGrid& D1, const char* what) {
  const int n = holes.labels.count;
  std::vector<bool> hit(n, false);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const int l = holes.labels.label[idx];
    if (l >= 0 && !D1.contains(idx)) hit[l] = true;
  }
  Verdict v;
  int bounded = 0;
  for (int l = 0; l < n; ++l) {
    if (!holes.labels.bounded[l]) continue;
    ++bounded;
    if (!hit[l] && v.holds) {
      v.holds = false;
      v.witness = component_representative(g, holes.labels, l, holes.depth);
    }
  }
  v.detail = std::to_string(bounded) + " bounded " + what;
  return v;
}

}  // namespace

void require_nested(const DomainGrid& D, const DomainGrid& D1) {
  if (!(D.geometry() == D1.geometry())) {
    throw Error(ErrorCode::kGridMismatch, "D and D1 are rasterized on different lattices");
  }
  for (std::size_t idx = 0; idx < D.geometry().size(); ++idx) {
    if (D.contains(idx) && !D1.contains(idx)) {
      const GridGeometry& g = D.geometry();
      throw Error(ErrorCode::kNotNested, "cell at (" + std::to_string(g.x(g.col_of(idx))) + ", " +
                                             std::to_string(g.y(g.row_of(idx))) + ") lies in D but not in D1");
    }
  }
}

Verdict check_condition5(const DomainGrid& D, const DomainGrid& D1) {
  require_nested(D, D1);
  return holes_meet_outside(D.geometry(), holes_of(D), D1, "complement components");
}

Verdict check_condition3(const DomainGrid& D, const DomainGrid& D1) {
  require_nested(D, D1);
  const GridGeometry& g = D.geometry();
  const Holes h = holes_of(D);
  const Holes h1 = holes_of(D1);

  // Column index per bounded D-hole, row index per bounded D1-hole.
  std::vector<int> col_of(h.labels.count, -1), row_of(h1.labels.count, -1);
  int ncols = 0, nrows = 0;
  for (int l = 0; l < h.labels.count; ++l) {
    if (h.labels.bounded[l]) col_of[l] = ncols++;
  }
  for (int l = 0; l < h1.labels.count; ++l) {
    if (h1.labels.bounded[l]) row_of[l] = nrows++;
  }
  std::vector<std::vector<double>> m(nrows, std::vector<double>(ncols, 0.0));
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const int l1 = h1.labels.label[idx];
    if (l1 < 0) continue;
    // Complement of D1 is contained in the complement of D.
    const int l = h.labels.label[idx];
    if (l < 0) throw std::logic_error("check_condition3: complement of D1 not inside complement of D");
    if (row_of[l1] >= 0 && col_of[l] >= 0) {
      m[row_of[l1]][col_of[l]] = 1.0;
    } else if (row_of[l1] < 0 && col_of[l] >= 0) {
      throw std::logic_error("check_condition3: unbounded component of C \\ D1 inside a hole of D");
    }
  }

  Verdict v;
  const int rank = matrix_rank(m);
  v.holds = rank == ncols;
  v.detail = "rank " + std::to_string(rank) + " of " + std::to_string(ncols) + " generators";
  if (!v.holds) {
    for (int l = 0; l < h.labels.count; ++l) {
      if (col_of[l] < 0) continue;
      bool zero = true;
      for (int r = 0; r < nrows; ++r) zero = zero && m[r][col_of[l]] == 0.0;
      if (zero) {
        v.witness = component_representative(g, h.labels, l, h.depth);
        break;
      }
    }
  }
  return v;
}

Verdict check_condition6(const DomainGrid& D, const DomainGrid& D1) {
  require_nested(D, D1);
  const Holes folded = holes_of(D, D.geometry().real_row());
  return holes_meet_outside(D.geometry(), folded, D1, "folded complement components");
}

OmegaBetti betti_omega(const TopoSummary& s) {
  OmegaBetti out;
  int meeting = 0;
  for (const UpperComponent& u : s.upper_components) {
    BettiContribution c;
    c.meets_real = u.meets_real;
    if (u.meets_real) {
      ++meeting;
      c.b1_plane = u.b1_full;
      c.r = u.real_runs - 1;
      const int lo = c.b1_plane - c.r, hi = c.b1_plane + c.r;
      if (lo % 2 != 0 || hi % 2 != 0 || lo < 0) {
        throw Error(ErrorCode::kParityViolation, "b1(D) = " + std::to_string(c.b1_plane) +
                                                     ", r = " + std::to_string(c.r) +
                                                     " gives an odd or negative rank");
      }
      c.b = {lo / 2, 0, hi, 0, hi / 2};
    } else {
      const int b = u.b1_plus;
      c.b1_plane = b;
      c.b = {b, 2, 2 * b, 1, b};
    }
    for (int k = 0; k < 5; ++k) out.b[k] += c.b[k];
    out.components.push_back(c);
  }
  out.h2_rank = 2 * s.k_offreal;
  out.h4_rank = s.k_offreal;
  out.b1_Dplus = s.b1_Dplus;
  out.reduced_h0_Dreal = s.b0_Dreal - meeting;
  out.exact_sequences_agree = out.b[4] == out.b1_Dplus + out.reduced_h0_Dreal &&
                              out.b[2] == 2 * out.b1_Dplus + 2 * out.reduced_h0_Dreal;
  return out;
}

OmegaBetti betti_omega(const DomainGrid& D) { return betti_omega(summarize(D)); }

std::vector<PlanePoint> RungeReport::witnesses() const {
  std::vector<PlanePoint> out;
  for (const Verdict* v : {&cond3, &cond5, &cond6}) {
    if (v->witness && std::find(out.begin(), out.end(), *v->witness) == out.end()) out.push_back(*v->witness);
  }
  return out;
}

RungeReport analyze_pair(const DomainGrid& D, const DomainGrid& D1) {
  require_nested(D, D1);
  RungeReport r;
  r.cond3 = check_condition3(D, D1);
  r.cond5 = check_condition5(D, D1);
  r.cond6 = check_condition6(D, D1);
  r.cond4_derived = r.cond3.holds;
  r.betti_D = betti_omega(D);
  r.betti_D1 = betti_omega(D1);
  r.consistency = r.cond3.holds == r.cond5.holds && r.cond5.holds == r.cond6.holds;
  return r;
}

RungeReport analyze_pair(const DomainSpec& D, const DomainSpec& D1) {
  if (!(D.window == D1.window) || D.resolution != D1.resolution) {
    throw Error(ErrorCode::kGridMismatch, "D and D1 must share window and resolution");
  }
  return analyze_pair(rasterize(D), rasterize(D1));
}

}  // namespace cone_runge
