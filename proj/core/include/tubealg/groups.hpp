#pragma once

#include <string>
#include <vector>

#include "tubealg/numerics.hpp"

namespace tubealg {

// Finite group as an explicit Cayley table, identity at index 0.
struct FiniteGroup {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b

  int order() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int power(int g, int k) const;
  bool is_abelian() const;
  int index_of(const std::string& element) const;  // -1 if absent
};

// Throws InvalidArgument if the table is not a group with identity 0.
void validate_group(const FiniteGroup& g);

FiniteGroup cyclic_group(int n);
FiniteGroup klein_group();          // Z2 x Z2, elements "00","10","01","11"
FiniteGroup symmetric_group_3();
// "z<n>" (1 <= n <= 12), "z2xz2", "s3". Throws UnknownCategory.
FiniteGroup group_by_name(const std::string& name);

// Dense U(1)-valued 3-cochain on G.
struct Cocycle3 {
  int n = 0;
  std::vector<Complex> values;  // n^3

  Complex operator()(int a, int b, int c) const { return values[(a * n + b) * n + c]; }
  Complex& at(int a, int b, int c) { return values[(a * n + b) * n + c]; }
};

Cocycle3 trivial_cocycle(const FiniteGroup& g);
// Z_n with omega(a,b,c) = exp(2 pi i p a (b + c - [b+c]_n) / n^2).
Cocycle3 cyclic_cocycle(const FiniteGroup& zn, int p);
// Product of Z2 factors (-1)^(a_i b_j c_k) on Z2 x Z2, i,j,k in {0,1}.
Cocycle3 klein_trilinear_cocycle(const FiniteGroup& v4, int i, int j, int k);

// Max deviation of omega from the cocycle identity and from normalisation.
double cocycle_residual(const FiniteGroup& g, const Cocycle3& omega);

struct Bicharacter {
  int n = 0;
  std::vector<Complex> values;  // n^2

  Complex operator()(int a, int b) const { return values[a * n + b]; }
};

// chi(a,b) = exp(2 pi i k a b / n) on Z_n.
Bicharacter cyclic_bicharacter(const FiniteGroup& zn, int k);
// (-1)^(a1 b2 + a2 b1)
Bicharacter klein_hyperbolic_bicharacter(const FiniteGroup& v4);
// (-1)^(a1 b1 + a2 b2)
Bicharacter klein_diagonal_bicharacter(const FiniteGroup& v4);

double bicharacter_residual(const FiniteGroup& g, const Bicharacter& chi);  // multiplicativity
bool is_symmetric(const Bicharacter& chi, double tol);
bool is_nondegenerate(const FiniteGroup& g, const Bicharacter& chi, double tol);

}  // namespace tubealg
