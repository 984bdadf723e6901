#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tubealg/fusion.hpp"
#include "tubealg/numerics.hpp"

namespace tubealg {

struct TubeBasisMorphism {
  int source = 0;
  int target = 0;
  std::string defect;
  std::string channel;  // empty when the (source, target, defect) space is 1-dim
};

struct Term {
  int index;
  Complex coeff;
};

enum class Provenance { Derived, Presented };

// Coefficient vector over the full basis of a tube category.
using TubeVector = ComplexVector;

// Tables in the exchange format: morphisms are referenced by strings
// "X>Y;A" or "X>Y;A;k" (k only needed when the channel is ambiguous).
struct TubePresentation {
  struct Basis {
    std::string src, tgt, defect, channel;
  };
  struct Entry {
    std::string g, f;  // g after f
    std::vector<std::pair<std::string, Complex>> terms;
  };
  struct DaggerEntry {
    std::string f;
    std::vector<std::pair<std::string, Complex>> terms;
  };

  std::string name;
  std::vector<std::string> objects;
  std::string unit_defect = "1";
  std::map<std::string, std::string> defect_duals;  // optional
  bool unitary = true;
  std::vector<Basis> basis;
  std::vector<Entry> compose;  // compositions with an identity may be omitted
  std::optional<std::vector<DaggerEntry>> dagger;
  std::string note;
};

class TubeCategory {
 public:
  TubeCategory() = default;

  const std::string& name() const { return name_; }
  const std::vector<std::string>& objects() const { return objects_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int object_index(const std::string& label) const;  // throws InvalidArgument
  const std::vector<TubeBasisMorphism>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  Provenance provenance() const { return provenance_; }
  bool unitary() const { return unitary_; }
  bool has_dagger() const { return dagger_.has_value(); }
  const std::string& unit_defect() const { return unit_defect_; }
  // Empty string when duals were not supplied.
  std::string defect_dual(const std::string& defect) const;

  std::string ref(int index) const;
  // Resolves "X>Y;A[;k]". Throws BasisMismatch.
  int find(const std::string& ref) const;
  int identity(int object) const { return identity_[object]; }
  std::vector<int> block(int source, int target) const;
  std::vector<int> channels(const std::string& defect, int source, int target) const;
  std::vector<std::string> defects() const;

  bool composable(int g, int f) const { return basis_[g].source == basis_[f].target; }
  const std::vector<Term>& structure(int g, int f) const { return compose_[g * dim() + f]; }
  const std::vector<Term>& dagger_terms(int f) const;  // throws DaggerViolation without dagger

  TubeVector unit(int index) const;
  TubeVector identity_vector(int object) const { return unit(identity(object)); }
  // Bilinear extension; throws NonComposable when a nonzero term of f does
  // not end where a nonzero term of g starts.
  TubeVector compose(const TubeVector& g, const TubeVector& f) const;
  // Antilinear extension.
  TubeVector dagger(const TubeVector& f) const;

  // Matrix of v -> g o v on the full algebra (zero on non-composable terms).
  ComplexMatrix left_multiplication(int g) const;

  double associativity_residual() const;
  double identity_residual() const;
  // Involution and contravariance; 0 without dagger.
  double dagger_residual() const;

  static TubeCategory assemble(std::string name, std::vector<std::string> objects,
                               std::vector<TubeBasisMorphism> basis,
                               std::vector<std::vector<Term>> compose,
                               std::optional<std::vector<std::vector<Term>>> dagger,
                               Provenance provenance, bool unitary, std::string unit_defect,
                               std::map<std::string, std::string> defect_duals);

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<TubeBasisMorphism> basis_;
  std::vector<std::vector<Term>> compose_;
  std::optional<std::vector<std::vector<Term>>> dagger_;
  std::vector<int> identity_;
  Provenance provenance_ = Provenance::Presented;
  bool unitary_ = true;
  std::string unit_defect_ = "1";
  std::map<std::string, std::string> defect_duals_;
};

// Sum_k N[A][X][k] N[Y][A][k].
int channel_space_dim(const FusionCategoryData& cat, int A, int X, int Y);

// Throws MissingFSymbols, MultiplicityNotSupported. A dagger is attached only
// for unitary categories.
TubeCategory derive_tube(const FusionCategoryData& cat);

// Throws AssociativityViolation / DaggerViolation naming the first offender.
TubeCategory presented_tube(const TubePresentation& tables, const Tolerance& tol = {});

TubePresentation to_presentation(const TubeCategory& t, double drop_below = 1e-14);

// Max coefficient deviation over the compose and dagger entries listed in
// ref. Throws BasisMismatch.
ValidationReport verify_against_reference(const TubeCategory& t, const TubePresentation& ref,
                                          const Tolerance& tol = {});

// Rank test for injectivity of a -> L(a).
bool regular_representation_faithful(const TubeCategory& t);

}  // namespace tubealg
