#pragma once

// Rasterized plane domains symmetric about the real axis.
//
// The lattice has one row of cells centred on the real axis (the symmetry
// row) and a two-cell padding ring that is always outside the domain, so the
// window acts as a proxy for the whole plane.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cone_runge {

inline constexpr int kMinResolution = 8;
inline constexpr int kGridMargin = 2;

struct Window {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;

  friend bool operator==(const Window&, const Window&) = default;
};

struct Disk {
  double cx = 0, cy = 0, r = 0;
};

// Open axis-aligned rectangle (x0, x1) x (y0, y1).
struct Rect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

// Open half-plane { p : nx * x + ny * y < c }.
struct HalfPlane {
  double nx = 0, ny = 0, c = 0;
};

using Shape = std::variant<Disk, Rect, HalfPlane>;

enum class ShapeOp { kAdd, kSubtract };

struct ShapeEntry {
  ShapeOp op = ShapeOp::kAdd;
  Shape shape;
};

struct DomainSpec {
  Window window;
  int resolution = 32;  // cells per unit length
  std::vector<ShapeEntry> shapes;
};

bool shape_contains(const Shape& s, double x, double y);

class GridGeometry {
 public:
  GridGeometry() = default;
  // Lattice covering `window` (y-range symmetrized to [-Y, Y]) plus the padding ring.
  GridGeometry(const Window& window, int resolution);

  int cols() const { return cols_; }
  int rows() const { return rows_; }
  std::size_t size() const { return static_cast<std::size_t>(cols_) * rows_; }
  double cell() const { return cell_; }
  int resolution() const { return resolution_; }
  int real_row() const { return real_row_; }

  double x(int col) const { return x0_ + col * cell_; }
  double y(int row) const { return (row - real_row_) * cell_; }
  int mirror_row(int row) const { return 2 * real_row_ - row; }
  std::size_t index(int col, int row) const { return static_cast<std::size_t>(row) * cols_ + col; }
  int col_of(std::size_t idx) const { return static_cast<int>(idx % cols_); }
  int row_of(std::size_t idx) const { return static_cast<int>(idx / cols_); }
  bool in_padding(int col, int row) const;
  bool on_frame(int col, int row) const {
    return col == 0 || row == 0 || col == cols_ - 1 || row == rows_ - 1;
  }

  // Cell whose square contains (x, y), if any.
  std::optional<std::size_t> locate(double x, double y) const;

  friend bool operator==(const GridGeometry&, const GridGeometry&) = default;

 private:
  int cols_ = 0;
  int rows_ = 0;
  int resolution_ = 0;
  double cell_ = 0;
  double x0_ = 0;  // centre of column 0
  int real_row_ = 0;
};

class DomainGrid {
 public:
  DomainGrid() = default;
  // Takes ownership of a cell mask; throws std::invalid_argument unless the
  // mask is mirror-symmetric and clear on the padding ring.
  DomainGrid(GridGeometry geometry, std::vector<std::uint8_t> cells);

  const GridGeometry& geometry() const { return geometry_; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }
  bool contains(int col, int row) const { return cells_[geometry_.index(col, row)] != 0; }
  bool contains(std::size_t idx) const { return cells_[idx] != 0; }
  bool contains_point(double x, double y) const;
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  DomainGrid mirrored() const;

  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  friend bool operator==(const DomainGrid& a, const DomainGrid& b) {
    return a.geometry_ == b.geometry_ && a.cells_ == b.cells_;
  }

 private:
  GridGeometry geometry_;
  std::vector<std::uint8_t> cells_;
  std::vector<std::string> warnings_;
};

// Throws Error(kResolutionTooLow | kInvalidWindow | kFeatureTooThin).
// An empty result is reported through DomainGrid::warnings().
DomainGrid rasterize(const DomainSpec& spec);

// Binary PGM (P5), top row = largest imaginary part; 255 = inside.
void write_pgm(const DomainGrid& grid, std::ostream& os);

}  // namespace cone_runge
