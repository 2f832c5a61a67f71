#include "cone_runge/domain.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "cone_runge/errors.hpp"

namespace cone_runge {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void lint_shape(const Shape& s, double cell, std::size_t position) {
  const auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kFeatureTooThin,
                "shape " + std::to_string(position) + ": " + what + " is thinner than 3 cells");
  };
  std::visit(Overloaded{[&](const Disk& d) {
                          if (!(2.0 * d.r >= 3.0 * cell)) fail("disk diameter");
                        },
                        [&](const Rect& r) {
                          if (!(r.x1 - r.x0 >= 3.0 * cell) || !(r.y1 - r.y0 >= 3.0 * cell)) fail("rect side");
                        },
                        [&](const HalfPlane& h) {
                          if (h.nx == 0.0 && h.ny == 0.0) {
                            throw Error(ErrorCode::kInvalidWindow, "half-plane normal is zero");
                          }
                        }},
             s);
}

}  // namespace

bool shape_contains(const Shape& s, double x, double y) {
  return std::visit(Overloaded{[&](const Disk& d) {
                                 const double dx = x - d.cx, dy = y - d.cy;
                                 return dx * dx + dy * dy < d.r * d.r;
                               },
                               [&](const Rect& r) { return r.x0 < x && x < r.x1 && r.y0 < y && y < r.y1; },
                               [&](const HalfPlane& h) { return h.nx * x + h.ny * y < h.c; }},
                    s);
}

GridGeometry::GridGeometry(const Window& w, int resolution) : resolution_(resolution) {
  cell_ = 1.0 / resolution;
  const int inner_cols = std::max(1, static_cast<int>(std::ceil((w.xmax - w.xmin) / cell_ - 1e-9)));
  const double half_height = std::max(std::fabs(w.ymin), std::fabs(w.ymax));
  const int half_rows = std::max(0, static_cast<int>(std::ceil(half_height / cell_ - 0.5 - 1e-9)));
  cols_ = inner_cols + 2 * kGridMargin;
  rows_ = 2 * half_rows + 1 + 2 * kGridMargin;
  real_row_ = half_rows + kGridMargin;
  x0_ = w.xmin + (0.5 - kGridMargin) * cell_;
}

bool GridGeometry::in_padding(int col, int row) const {
  return col < kGridMargin || row < kGridMargin || col >= cols_ - kGridMargin || row >= rows_ - kGridMargin;
}

std::optional<std::size_t> GridGeometry::locate(double px, double py) const {
  const double fc = (px - x0_) / cell_ + 0.5;
  const double fr = py / cell_ + real_row_ + 0.5;
  if (!(fc >= 0.0) || !(fr >= 0.0)) return std::nullopt;
  const int c = static_cast<int>(std::floor(fc));
  const int r = static_cast<int>(std::floor(fr));
  if (c >= cols_ || r >= rows_) return std::nullopt;
  return index(c, r);
}

DomainGrid::DomainGrid(GridGeometry geometry, std::vector<std::uint8_t> cells)
    : geometry_(geometry), cells_(std::move(cells)) {
  if (cells_.size() != geometry_.size()) throw std::invalid_argument("DomainGrid: mask size mismatch");
  for (int r = 0; r < geometry_.rows(); ++r) {
    for (int c = 0; c < geometry_.cols(); ++c) {
      const bool in = contains(c, r);
      if (in && geometry_.in_padding(c, r)) throw std::invalid_argument("DomainGrid: padding ring not clear");
      if (in != contains(c, geometry_.mirror_row(r))) {
        throw std::invalid_argument("DomainGrid: mask is not symmetric about the real axis");
      }
    }
  }
}

bool DomainGrid::contains_point(double x, double y) const {
  const auto idx = geometry_.locate(x, y);
  return idx && contains(*idx);
}

std::size_t DomainGrid::count() const {
  std::size_t n = 0;
  for (std::uint8_t v : cells_) n += v != 0;
  return n;
}

DomainGrid DomainGrid::mirrored() const {
  std::vector<std::uint8_t> out(cells_.size());
  for (int r = 0; r < geometry_.rows(); ++r) {
    for (int c = 0; c < geometry_.cols(); ++c) {
      out[geometry_.index(c, geometry_.mirror_row(r))] = cells_[geometry_.index(c, r)];
    }
  }
  DomainGrid g(geometry_, std::move(out));
  g.warnings_ = warnings_;
  return g;
}

DomainGrid rasterize(const DomainSpec& spec) {
  if (spec.resolution < kMinResolution) {
    throw Error(ErrorCode::kResolutionTooLow, "resolution " + std::to_string(spec.resolution) +
                                                  " is below " + std::to_string(kMinResolution) +
                                                  " cells per unit");
  }
  const Window& w = spec.window;
  if (!std::isfinite(w.xmin) || !std::isfinite(w.xmax) || !std::isfinite(w.ymin) || !std::isfinite(w.ymax) ||
      !(w.xmin < w.xmax) || !(w.ymin < w.ymax)) {
    throw Error(ErrorCode::kInvalidWindow, "window must satisfy xmin < xmax and ymin < ymax");
  }
  const GridGeometry geom(w, spec.resolution);
  for (std::size_t k = 0; k < spec.shapes.size(); ++k) lint_shape(spec.shapes[k].shape, geom.cell(), k);

  const double half_height = std::max(std::fabs(w.ymin), std::fabs(w.ymax));
  std::vector<std::uint8_t> cells(geom.size(), 0);
  for (int r = geom.real_row(); r < geom.rows() - kGridMargin; ++r) {
    const double y = geom.y(r);
    if (y > half_height) continue;
    for (int c = kGridMargin; c < geom.cols() - kGridMargin; ++c) {
      const double x = geom.x(c);
      if (x < w.xmin || x > w.xmax) continue;
      bool in = false;
      for (const ShapeEntry& e : spec.shapes) {
        const bool hit = shape_contains(e.shape, x, y) || shape_contains(e.shape, x, -y);
        if (e.op == ShapeOp::kAdd) {
          in = in || hit;
        } else {
          in = in && !hit;
        }
      }
      cells[geom.index(c, r)] = in;
      cells[geom.index(c, geom.mirror_row(r))] = in;
    }
  }
  DomainGrid grid(geom, std::move(cells));
  if (grid.empty()) grid.add_warning("EmptyDomain: rasterization produced no cells");
  return grid;
}

void write_pgm(const DomainGrid& grid, std::ostream& os) {
  const GridGeometry& g = grid.geometry();
  os << "P5\n" << g.cols() << ' ' << g.rows() << "\n255\n";
  for (int r = g.rows() - 1; r >= 0; --r) {
    for (int c = 0; c < g.cols(); ++c) os.put(grid.contains(c, r) ? static_cast<char>(255) : static_cast<char>(0));
  }
}

}  // namespace cone_runge
