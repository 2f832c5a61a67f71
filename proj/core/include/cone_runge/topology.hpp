#pragma once

// Digital topology of rasterized symmetric domains. The domain uses
// 4-connectivity and its complement 8-connectivity, so that holes of the
// domain are exactly the bounded complement components and
// b1 = b0 - chi holds on the grid.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cone_runge/domain.hpp"

namespace cone_runge {

enum class Connectivity { kFour = 4, kEight = 8 };
enum class Region { kDomain, kComplement };

struct Labeling {
  std::vector<int> label;  // -1 for cells outside the labelled set
  int count = 0;
  std::vector<std::size_t> sizes;
  std::vector<bool> bounded;  // false iff the component touches the outer frame
};

// Labels the cells with member[idx] != 0 and row >= min_row.
Labeling label_cells(const GridGeometry& geom, std::span<const std::uint8_t> member, Connectivity conn,
                     int min_row = 0);

Labeling components(const DomainGrid& grid, Region region, Connectivity conn);

// Euler characteristic V - E + F of the 4-connected cubical complex spanned
// by member cells (row >= min_row): cells, 4-adjacent pairs, full 2x2 blocks.
long euler_characteristic(const GridGeometry& geom, std::span<const std::uint8_t> member, int min_row = 0);

// Euler characteristic of each labelled component separately.
std::vector<long> euler_per_component(const GridGeometry& geom, const Labeling& labels);

// Chessboard distance of each cell to the nearest cell whose membership differs.
std::vector<int> depth_map(const GridGeometry& geom, std::span<const std::uint8_t> member);

struct PlanePoint {
  double x = 0, y = 0;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// Deepest cell of component `which` (on the symmetry row if the component
// meets it), moved to the centre of its run of equally deep cells.
PlanePoint component_representative(const GridGeometry& geom, const Labeling& labels, int which,
                                    const std::vector<int>& depth);

struct ComplementComponent {
  PlanePoint representative;  // deepest cell; on the real axis when possible
  std::size_t cells = 0;
  bool meets_real = false;
};

// One connected component of D+ = { z in D : Im z >= 0 }.
struct UpperComponent {
  bool meets_real = false;
  int real_runs = 0;         // components of its trace on the real axis
  int b1_plus = 0;           // first Betti number of this D+ component
  int b1_full = 0;           // first Betti number of the D component containing it
};

struct TopoSummary {
  int b0_D = 0;
  int b1_D = 0;              // number of bounded complement components
  int b0_Dreal = 0;
  int b0_Dplus = 0;
  int k_offreal = 0;         // components of D+ disjoint from the real axis
  long euler_D = 0;
  int b1_D_euler = 0;        // b0 - chi
  int b1_Dplus = 0;
  std::vector<ComplementComponent> bounded_complement_components;
  std::vector<UpperComponent> upper_components;
};

// Throws std::logic_error if the Euler and hole-count routes to b1 disagree.
TopoSummary summarize(const DomainGrid& grid);

}  // namespace cone_runge
