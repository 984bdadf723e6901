#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tubealg/groups.hpp"
#include "tubealg/numerics.hpp"

namespace tubealg {

struct ValidationReport {
  bool pass = true;
  double residual = 0.0;
  std::string detail;
};

struct FusionRing {
  int n = 0;
  std::vector<int> coefficients;  // N[i][j][k] at (i*n + j)*n + k
  std::vector<int> duals;

  int operator()(int i, int j, int k) const { return coefficients[(i * n + j) * n + k]; }
  int& at(int i, int j, int k) { return coefficients[(i * n + j) * n + k]; }
  std::vector<int> fuse(int i, int j) const;  // k with N[i][j][k] > 0
  bool multiplicity_free() const;
};

// Associator component for (a x b) x c -> a x (b x c) in the d channel,
// left intermediate e in a x b, right intermediate f in b x c.
struct FKey {
  int a, b, c, d, e, f;
  auto operator<=>(const FKey&) const = default;
};
using FSymbolTable = std::map<FKey, Complex>;

// How derive_tube scales raw tube morphisms X -> Y: by w_Y / w_X with
// w = sqrt|d| (Dimension) or w = 1 (Unit). Composition constants do not
// depend on the choice; the dagger coefficients do.
enum class TubeNormalization { Dimension, Unit };

struct FusionCategoryData {
  std::string name;
  std::vector<std::string> labels;  // labels[0] is the unit
  FusionRing ring;
  std::optional<FSymbolTable> f_symbols;
  std::vector<double> dims;
  bool unitary = true;
  TubeNormalization tube_normalization = TubeNormalization::Dimension;

  int size() const { return ring.n; }
  int label_index(const std::string& label) const;  // throws InvalidArgument
  Complex F(int a, int b, int c, int d, int e, int f) const;  // 0 when absent
  // F-matrix for fixed (a,b,c,d): rows e, columns f, both ascending.
  ComplexMatrix f_matrix(int a, int b, int c, int d, std::vector<int>* es = nullptr,
                         std::vector<int>* fs = nullptr) const;
  std::vector<double> tube_weights() const;
};

// Unit law, integer associativity, dual pairing, dual involution and the
// ring homomorphism property of dims.
ValidationReport validate_ring(const FusionCategoryData& cat, const Tolerance& tol = {});
// Throws MissingFSymbols.
ValidationReport validate_pentagon(const FusionCategoryData& cat, const Tolerance& tol = {});
// F-matrices unitary and all dims positive. Throws MissingFSymbols.
ValidationReport validate_unitarity(const FusionCategoryData& cat, const Tolerance& tol = {});

// Perron-Frobenius dimensions from the fusion matrices.
std::vector<double> perron_frobenius_dims(const FusionRing& ring);

FusionCategoryData build_pointed(const FiniteGroup& group, const Cocycle3& omega);
FusionCategoryData build_ty(const FiniteGroup& group, const Bicharacter& chi, double s);
FusionCategoryData build_rep_s3();
FusionCategoryData build_fib();
FusionCategoryData build_yang_lee();

}  // namespace tubealg
