#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tubealg/tube.hpp"

namespace tubealg {

struct GeneralisedCharge {
  std::string name;
  std::vector<int> sector_dims;       // per object of the tube category
  std::vector<ComplexMatrix> action;  // per basis morphism, dims[target] x dims[source]

  int total_dim() const;
};

// Builds a charge from sparse data. Identities are filled in, morphisms with
// a zero-dimensional end get empty matrices. Throws ShapeMismatch when a
// morphism between nonzero sectors is missing or has the wrong shape.
GeneralisedCharge make_charge(const TubeCategory& t, std::string name,
                              const std::map<std::string, int>& dims,
                              const std::vector<std::pair<std::string, ComplexMatrix>>& entries);

// Linear extension U(v) restricted to the (source, target) block.
ComplexMatrix charge_apply(const TubeCategory& t, const GeneralisedCharge& u, const TubeVector& v, int source,
                           int target);

// Functoriality, identity and (for unitary tubes with a dagger) the dagger
// condition. Throws ShapeMismatch.
ValidationReport verify_charge(const TubeCategory& t, const GeneralisedCharge& u,
                               const Tolerance& tol = {});

// Left multiplication on the spaces T(., X), orthonormalised for the form
// <a, b> = phi(a^dagger b), phi = sum of identity coefficients. Without a
// dagger the plain left-multiplication matrices are returned.
// Throws NonSemisimple if the form is not positive definite.
GeneralisedCharge regular_representation(const TubeCategory& t);

// One complex number per endomorphism basis morphism, in basis order.
std::vector<Complex> character(const TubeCategory& t, const GeneralisedCharge& u);

// Solves T_Y U(g) = V(g) T_X for all g and tests for an invertible solution.
bool isomorphic(const TubeCategory& t, const GeneralisedCharge& u, const GeneralisedCharge& v,
                const Tolerance& tol = {});

// Throws AmbiguousMatch if two catalog entries share the character of u.
std::optional<int> identify(const TubeCategory& t, const GeneralisedCharge& u,
                            const std::vector<GeneralisedCharge>& catalog,
                            const Tolerance& tol = {});

// Irreducible charges up to isomorphism, via random Hermitian elements of
// the commutant of the regular representation. The run is repeated with
// seed + 1 and the character lists compared.
// Throws NonUnitaryCategory (no dagger) and NonSemisimple.
std::vector<GeneralisedCharge> decompose_irreps(const TubeCategory& t, const Tolerance& tol = {},
                                                std::uint64_t seed = 42);

// Generic splitting of a *-closed family of operators between sectors into
// irreducible pieces. Each piece is returned as one isometry per sector
// (dims[X] x k_X, possibly k_X = 0); every irreducible summand appears once
// per copy in the input.
struct SectorOperator {
  int source;
  int target;
  ComplexMatrix matrix;
};
std::vector<std::vector<ComplexMatrix>> split_star_representation(
    const std::vector<int>& dims, const std::vector<SectorOperator>& ops, std::uint64_t seed,
    double cluster_eps = 1e-7);

}  // namespace tubealg
