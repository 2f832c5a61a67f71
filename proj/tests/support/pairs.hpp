#pragma once

// Hand-built nested pairs D in D1 with the expected Runge verdict.

#include <string>
#include <vector>

#include "fixtures.hpp"

namespace fixtures {

struct CuratedPair {
  std::string name;
  DomainSpec D, D1;
  bool runge;
};

inline std::vector<CuratedPair> curated_pairs(int res = 32) {
  const auto S = [res](std::vector<ShapeEntry> s) { return spec(std::move(s), res); };
  const DomainSpec two_holes_d = two_holes(res);
  const DomainSpec off_axis = S({add_disk(0, 0, 3.5), sub_disk(0, 2, 0.6)});
  const DomainSpec nested_ring = S({add_disk(0, 0, 2), sub_disk(0, 0, 1), add_disk(0, 0, 0.5)});
  const DomainSpec mixed = S({add_disk(0, 0, 3), sub_disk(0, 0, 1), sub_disk(0, 2.2, 0.4)});
  const DomainSpec square_hole = S({add_rect(-3, -3, 3, 3), sub_rect(-1, -1, 1, 1)});
  const DomainSpec three_holes = S({add_rect(-4, -1.5, 4, 1.5), sub_disk(-2.5, 0, 0.5), sub_disk(0, 0, 0.5),
                                    sub_disk(2.5, 0, 0.5)});
  const DomainSpec rings = S({add_disk(0, 0, 3.5), sub_disk(0, 0, 2.5), add_disk(0, 0, 2), sub_disk(0, 0, 1)});
  const DomainSpec left = S({{ShapeOp::kAdd, HalfPlane{1, 0, 0}}, sub_disk(-2, 0, 0.6)});
  const DomainSpec two_disks = S({add_disk(-2, 0, 1), add_disk(2, 0, 1)});
  const DomainSpec two_annuli = S({add_disk(-2, 0, 1.4), sub_disk(-2, 0, 0.5), add_disk(2, 0, 1.4),
                                   sub_disk(2, 0, 0.5)});
  const DomainSpec moon = S({add_disk(0, 0, 3), sub_disk(1.5, 0, 2)});
  const DomainSpec horseshoe = S({add_rect(-3, -3, 3, 3), sub_rect(-2, -2, 4, 2)});

  return {
      {"disk in bigger disk", disk(2, res), disk(3, res), true},
      {"disk in itself", disk(2, res), disk(2, res), true},
      {"annulus in disk", annulus(1, 3, res), disk(3, res), false},
      {"annulus in smaller-hole annulus", annulus(1, 3, res), annulus(0.5, 3, res), true},
      {"annulus in itself", annulus(1, 3, res), annulus(1, 3, res), true},
      {"annulus in punctured big disk", annulus(1, 3, res), S({add_disk(0, 0, 4), sub_disk(0, 0, 0.4)}), true},
      {"annulus in window", annulus(1, 3, res), S({add_rect(-5, -5, 5, 5)}), false},
      {"two holes in disk", two_holes_d, disk(3.5, res), false},
      {"two holes, left one kept", two_holes_d, S({add_disk(0, 0, 3.5), sub_disk(-1.5, 0, 0.3)}), false},
      {"two holes, both kept", two_holes_d,
       S({add_disk(0, 0, 3.5), sub_disk(-1.5, 0, 0.3), sub_disk(1.5, 0, 0.3)}), true},
      {"two holes, right one kept", two_holes_d, S({add_disk(0, 0, 3.5), sub_disk(1.5, 0, 0.2)}), false},
      {"conjugate disks in disk", conjugate_disks(res), disk(3, res), true},
      {"conjugate disks in annulus", conjugate_disks(res), annulus(0.5, 3, res), true},
      {"off-axis holes in disk", off_axis, disk(3.5, res), false},
      {"off-axis holes kept", off_axis, S({add_disk(0, 0, 3.5), sub_disk(0, 2, 0.3)}), true},
      {"off-axis and real holes, off-axis filled", S({add_disk(0, 0, 3.5), sub_disk(0, 2, 0.6), sub_disk(0, 0, 0.6)}),
       S({add_disk(0, 0, 3.5), sub_disk(0, 0, 0.3)}), false},
      {"ring hole filled", nested_ring, disk(2, res), false},
      {"ring hole kept", nested_ring, S({add_disk(0, 0, 2), sub_disk(0, 0, 0.9), add_disk(0, 0, 0.6)}), true},
      {"ring hole in itself", nested_ring, nested_ring, true},
      {"mixed holes, off-axis filled", mixed, S({add_disk(0, 0, 3), sub_disk(0, 0, 0.5)}), false},
      {"mixed holes kept", mixed, S({add_disk(0, 0, 3), sub_disk(0, 0, 0.5), sub_disk(0, 2.2, 0.2)}), true},
      {"square hole filled", square_hole, S({add_rect(-3, -3, 3, 3)}), false},
      {"square hole kept", square_hole, S({add_rect(-3.5, -3.5, 3.5, 3.5), sub_rect(-0.5, -0.5, 0.5, 0.5)}), true},
      {"three holes, middle filled", three_holes,
       S({add_rect(-4, -1.5, 4, 1.5), sub_disk(-2.5, 0, 0.3), sub_disk(2.5, 0, 0.3)}), false},
      {"three holes kept", three_holes,
       S({add_rect(-4, -1.5, 4, 1.5), sub_disk(-2.5, 0, 0.3), sub_disk(0, 0, 0.3), sub_disk(2.5, 0, 0.3)}), true},
      {"concentric rings, outer gap filled", rings, S({add_disk(0, 0, 3.5), sub_disk(0, 0, 0.5)}), false},
      {"concentric rings kept", rings,
       S({add_disk(0, 0, 3.5), sub_disk(0, 0, 2.4), add_disk(0, 0, 2.1), sub_disk(0, 0, 0.5)}), true},
      {"half-plane hole filled", left, S({{ShapeOp::kAdd, HalfPlane{1, 0, 0}}}), false},
      {"half-plane hole kept", left, S({{ShapeOp::kAdd, HalfPlane{1, 0, 0}}, sub_disk(-2, 0, 0.3)}), true},
      {"two disks in one disk", two_disks, disk(3.5, res), true},
      {"two annuli in two disks", two_annuli, S({add_disk(-2, 0, 1.4), add_disk(2, 0, 1.4)}), false},
      {"two annuli, one hole kept", two_annuli,
       S({add_disk(-2, 0, 1.4), sub_disk(-2, 0, 0.3), add_disk(2, 0, 1.4)}), false},
      {"two annuli bridged, holes kept", two_annuli,
       S({add_rect(-3.6, -1.5, 3.6, 1.5), sub_disk(-2, 0, 0.3), sub_disk(2, 0, 0.3)}), true},
      {"two annuli in bridged disk", two_annuli, S({add_rect(-3.6, -1.5, 3.6, 1.5)}), false},
      {"moon in disk", moon, disk(3, res), true},
      {"horseshoe in square", horseshoe, S({add_rect(-3, -3, 3, 3)}), true},
  };
}

}  // namespace fixtures
