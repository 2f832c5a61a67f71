#pragma once

// Runge-pair analysis for nested symmetric plane domains D in D1, and the
// homology ranks of the axially symmetric cone domain swept by D.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cone_runge/domain.hpp"
#include "cone_runge/topology.hpp"

namespace cone_runge {

struct Verdict {
  bool holds = true;
  std::optional<PlanePoint> witness;  // set when the condition fails
  std::string detail;
};

// Throws Error(kGridMismatch) if the lattices differ and Error(kNotNested)
// if some cell of D is not a cell of D1.
void require_nested(const DomainGrid& D, const DomainGrid& D1);

// Every bounded component of C \ D contains a point of C \ D1.
Verdict check_condition5(const DomainGrid& D, const DomainGrid& D1);

// Injectivity of H1(D) -> H1(D1), from the rank of the inclusion matrix of
// bounded complement components of D1 into those of D.
Verdict check_condition3(const DomainGrid& D, const DomainGrid& D1);

// Every bounded complement component of the swept cone domain meets the
// complement of the larger one, computed on the folded upper half plane.
Verdict check_condition6(const DomainGrid& D, const DomainGrid& D1);

struct BettiContribution {
  bool meets_real = false;
  int b1_plane = 0;  // b1 of the symmetric plane component (meets_real) or of its upper half
  int r = 0;         // b0(C intersect R) - 1, zero off the real axis
  std::array<int, 5> b{};
};

struct OmegaBetti {
  std::array<int, 5> b{};  // b1..b5
  int h2_rank = 0;
  int h4_rank = 0;
  std::vector<BettiContribution> components;
  int b1_Dplus = 0;
  int reduced_h0_Dreal = 0;  // rank of reduced H0 of D_R, summed over components
  // b5 = b1(D+) + rank H0~ and b3 = 2 b1(D+) + 2 rank H0~ hold.
  bool exact_sequences_agree = false;
};

// Throws Error(kParityViolation) if b1(C) +- r is odd for some component.
OmegaBetti betti_omega(const TopoSummary& summary);
OmegaBetti betti_omega(const DomainGrid& D);

struct RungeReport {
  Verdict cond3, cond5, cond6;
  bool cond4_derived = true;
  OmegaBetti betti_D, betti_D1;
  bool consistency = true;

  bool runge_pair() const { return cond5.holds; }
  std::vector<PlanePoint> witnesses() const;
};

RungeReport analyze_pair(const DomainGrid& D, const DomainGrid& D1);
// Throws Error(kGridMismatch) if the specs do not share window and resolution.
RungeReport analyze_pair(const DomainSpec& D, const DomainSpec& D1);

}  // namespace cone_runge
