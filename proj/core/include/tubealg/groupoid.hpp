#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tubealg/charges.hpp"
#include "tubealg/groups.hpp"
#include "tubealg/tube.hpp"

namespace tubealg {

// A finite group acting on a finite set, with a U(1) 2-cocycle theta on the
// action groupoid. Its tube category has basis tub[x -> g.x; g] and
//   tub[h.x -> gh.x; g] o tub[x -> h.x; h] = theta_x(g, h) tub[x -> gh.x; gh],
//   tub[x -> g.x; g]^dagger = conj(theta_x(g^-1, g)) tub[g.x -> x; g^-1].
// Pointed categories use the conjugation action with the transgressed
// 3-cocycle, 2-groups the action on the 1-form group with <lambda, .>.
struct ActionGroupoid {
  std::string name;
  FiniteGroup group;
  std::vector<std::string> points;
  std::vector<std::vector<int>> action;  // action[g][x]
  std::vector<Complex> theta_values;     // theta_x(g,h) at (x*|G| + g)*|G| + h

  int point_count() const { return static_cast<int>(points.size()); }
  Complex theta(int x, int g, int h) const;
  std::vector<int> orbit(int x) const;      // sorted
  std::vector<int> stabiliser(int x) const; // sorted
};

// tau_x(g,h) = omega(g,h,x) omega(ghx(gh)^-1, g, h) / omega(g, hxh^-1, h).
ActionGroupoid pointed_groupoid(const FiniteGroup& group, const Cocycle3& omega);

// pairing[(g*|G| + h)*|A| + a] = <lambda(g,h), a>; act[g][a] is the action.
ActionGroupoid two_group_groupoid(std::string name, const FiniteGroup& g0, const FiniteGroup& a1,
                                  const std::vector<std::vector<int>>& act,
                                  const std::vector<Complex>& pairing);

TubeCategory groupoid_tube(const ActionGroupoid& data, const Tolerance& tol = {});

// Irreducible unitary projective representations of the stabiliser of x for
// the restricted cocycle, keyed by stabiliser position.
std::vector<std::vector<ComplexMatrix>> projective_irreps(const ActionGroupoid& data, int x,
                                                          std::uint64_t seed = 42);

// Charges U_(x, rho) built with the phases
//   kappa_y(g) = theta_y(r_{g.y}, g) / theta_y(g_y, r_y),  g_y = r_{g.y} g r_y^-1,
// where r_y maps y to the orbit representative x. representative_choice picks
// among the admissible r_y (0 = smallest element, 1 = largest).
std::vector<GeneralisedCharge> groupoid_charges(const ActionGroupoid& data, const TubeCategory& t,
                                                int representative_choice = 0,
                                                std::uint64_t seed = 42);

}  // namespace tubealg
