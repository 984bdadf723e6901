#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tubealg/charges.hpp"
#include "tubealg/fusion.hpp"
#include "tubealg/tube.hpp"

namespace tubealg {

struct Channel {
  int target;
  int index;
  TubeVector coeffs;  // supported on raw channels (source -> target, defect)
};

struct ChannelBasis {
  std::string defect;
  int source = 0;
  std::vector<Channel> channels;  // sorted by (target, index)
};

struct RowBlock {
  int target;
  int index;
  int offset;
  int rows;
};

struct IsometryBlock {
  ComplexMatrix matrix;
  std::vector<RowBlock> row_blocks;
};

struct DensityMatrix {
  int sector;
  ComplexMatrix matrix;
};

struct ChannelProbability {
  int target;
  int index;
  double p;
};

struct ProbabilityReport {
  std::string category;
  std::string defect;
  int source = 0;
  std::string charge;
  std::vector<ChannelProbability> channels;
  std::map<int, double> marginals;
  double total = 0.0;
};

struct ChannelOutput {
  int target;
  int index;
  ComplexMatrix block;  // K rho K^dagger
};

// Which identity the Gram blocks must satisfy.
enum class ConstraintMode {
  Tube,    // sum_{S,ij} G^S_ij b_i^dagger o b_j = id_X inside the tube category
  Charges  // sum_{S,ij} G^S_ij U(b_i)^dagger U(b_j) = 1 for every supplied charge
};

// Affine system in the real parameters of the Hermitian Gram blocks, the
// least-squares point and the obstruction found there.
struct InfeasibilityCertificate {
  enum class Witness { LinearInconsistency, NegativeEigenvalue };

  std::string defect;
  int source = 0;
  ConstraintMode mode = ConstraintMode::Tube;
  std::vector<std::string> charge_names;  // Charges mode
  std::vector<int> targets;               // one Gram block per target
  std::vector<std::vector<int>> raw_channels;
  std::vector<std::string> parameter_labels;
  std::vector<std::string> constraint_labels;
  RealMatrix system;  // rows = constraints, cols = parameters
  RealVector rhs;
  RealVector least_squares;
  double residual = 0.0;
  int nullity = 0;
  Witness witness = Witness::NegativeEigenvalue;
  double min_eigenvalue = 0.0;
  std::vector<ComplexMatrix> gram_blocks;  // at the closest point found

  // Recomputes residual, nullity and the minimal eigenvalue from the stored
  // system and confirms the witness.
  bool recheck(double tol = 1e-9) const;
};

using SolveResult = std::variant<ChannelBasis, InfeasibilityCertificate>;

struct SolveOptions {
  Tolerance tol{};
  int max_iterations = 10000;
  ConstraintMode mode = ConstraintMode::Tube;
  std::vector<GeneralisedCharge> charges;  // Charges mode only
};

// Raw channel morphisms source -> target with the given defect.
std::vector<int> raw_channels(const TubeCategory& t, const std::string& defect, int source,
                              int target);

// sum e^dagger o e - id_X as a tube vector. Throws DaggerViolation.
TubeVector kraus_defect(const TubeCategory& t, const ChannelBasis& basis);
double kraus_residual(const TubeCategory& t, const ChannelBasis& basis);

// Projection/inclusion construction in the F-move calculus. Requires a
// tube derived from cat. Throws NonUnitaryCategory.
ChannelBasis canonical_channel_basis(const FusionCategoryData& cat, const TubeCategory& t,
                                     const std::string& defect, int source);

SolveResult solve_channel_basis(const TubeCategory& t, const std::string& defect, int source,
                                const SolveOptions& options = {});

IsometryBlock assemble_isometry(const GeneralisedCharge& u, const ChannelBasis& basis);

// Channels into sectors on which u vanishes are omitted. Throws ZeroState.
ProbabilityReport transition_probabilities(const GeneralisedCharge& u, const ChannelBasis& basis,
                                           const ComplexVector& state);

// Throws SectorMismatch.
std::vector<ChannelOutput> apply_channel(const GeneralisedCharge& u, const ChannelBasis& basis,
                                         const DensityMatrix& rho);

// e^S -> M e^S on the channels into S. Throws NotUnitary.
ChannelBasis gauge_rotate(const ChannelBasis& basis, int target, const ComplexMatrix& m,
                          const Tolerance& tol = {});

}  // namespace tubealg
