#include "tubealg/groups.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "tubealg/errors.hpp"

namespace tubealg {

int FiniteGroup::inv(int a) const {
  for (int b = 0; b < order(); ++b) {
    if (table[a][b] == 0) return b;
  }
  throw Error(ErrorCode::InvalidArgument, "element without inverse in " + name);
}

int FiniteGroup::power(int g, int k) const {
  int out = 0;
  for (int i = 0; i < k; ++i) out = mul(out, g);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) {
      if (table[a][b] != table[b][a]) return false;
    }
  }
  return true;
}

int FiniteGroup::index_of(const std::string& element) const {
  auto it = std::find(elements.begin(), elements.end(), element);
  return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

void validate_group(const FiniteGroup& g) {
  const int n = g.order();
  if (n == 0 || static_cast<int>(g.table.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "group table has wrong size");
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(g.table[a].size()) != n) throw Error(ErrorCode::InvalidArgument, "ragged group table");
    if (g.table[0][a] != a || g.table[a][0] != a) {
      throw Error(ErrorCode::InvalidArgument, "index 0 is not the identity of " + g.name);
    }
    std::vector<bool> seen(n, false);
    for (int b = 0; b < n; ++b) {
      const int c = g.table[a][b];
      if (c < 0 || c >= n || seen[c]) throw Error(ErrorCode::InvalidArgument, "group table is not a latin square");
      seen[c] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorCode::InvalidArgument, "group table of " + g.name + " is not associative");
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  FiniteGroup g;
  g.name = "z" + std::to_string(n);
  for (int a = 0; a < n; ++a) g.elements.push_back(std::to_string(a));
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

FiniteGroup klein_group() {
  FiniteGroup g;
  g.name = "z2xz2";
  g.elements = {"00", "10", "01", "11"};
  g.table.assign(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g.table[a][b] = a ^ b;
  return g;
}

FiniteGroup symmetric_group_3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  FiniteGroup g;
  g.name = "s3";
  g.elements = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  g.table.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      Perm c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return g;
}

FiniteGroup group_by_name(const std::string& name) {
  if (name == "s3") return symmetric_group_3();
  if (name == "z2xz2") return klein_group();
  if (name.size() >= 2 && name[0] == 'z' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 12) return cyclic_group(n);
  }
  throw Error(ErrorCode::UnknownCategory, "unknown group '" + name + "'");
}

Cocycle3 trivial_cocycle(const FiniteGroup& g) {
  const int n = g.order();
  return {n, std::vector<Complex>(static_cast<size_t>(n) * n * n, Complex(1.0, 0.0))};
}

Cocycle3 cyclic_cocycle(const FiniteGroup& zn, int p) {
  const int n = zn.order();
  Cocycle3 w = trivial_cocycle(zn);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int carry = b + c - (b + c) % n;
        const double phase = 2.0 * std::numbers::pi * p * a * carry / (static_cast<double>(n) * n);
        w.at(a, b, c) = std::polar(1.0, phase);
      }
  return w;
}

Cocycle3 klein_trilinear_cocycle(const FiniteGroup& v4, int i, int j, int k) {
  Cocycle3 w = trivial_cocycle(v4);
  auto bit = [](int x, int pos) { return (x >> pos) & 1; };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        if (bit(a, i) && bit(b, j) && bit(c, k)) w.at(a, b, c) = -1.0;
  return w;
}

double cocycle_residual(const FiniteGroup& g, const Cocycle3& w) {
  const int n = g.order();
  if (w.n != n || static_cast<int>(w.values.size()) != n * n * n) {
    throw Error(ErrorCode::NotACocycle, "cocycle table has wrong size");
  }
  double r = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r = std::max({r, std::abs(w(0, a, b) - 1.0), std::abs(w(a, 0, b) - 1.0), std::abs(w(a, b, 0) - 1.0)});
      for (int c = 0; c < n; ++c) {
        r = std::max(r, std::abs(std::abs(w(a, b, c)) - 1.0));
        for (int d = 0; d < n; ++d) {
          const Complex lhs = w(b, c, d) * w(a, g.mul(b, c), d) * w(a, b, c);
          const Complex rhs = w(g.mul(a, b), c, d) * w(a, b, g.mul(c, d));
          r = std::max(r, std::abs(lhs - rhs));
        }
      }
    }
  return r;
}

Bicharacter cyclic_bicharacter(const FiniteGroup& zn, int k) {
  const int n = zn.order();
  Bicharacter chi{n, std::vector<Complex>(static_cast<size_t>(n) * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      chi.values[a * n + b] = std::polar(1.0, 2.0 * std::numbers::pi * ((k * a * b) % n) / n);
  return chi;
}

namespace {

Bicharacter klein_form(bool hyperbolic) {
  Bicharacter chi{4, std::vector<Complex>(16)};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const int a1 = a & 1, a2 = (a >> 1) & 1, b1 = b & 1, b2 = (b >> 1) & 1;
      const int e = hyperbolic ? (a1 * b2 + a2 * b1) : (a1 * b1 + a2 * b2);
      chi.values[a * 4 + b] = (e % 2) ? -1.0 : 1.0;
    }
  return chi;
}

}  // namespace

Bicharacter klein_hyperbolic_bicharacter(const FiniteGroup&) { return klein_form(true); }
Bicharacter klein_diagonal_bicharacter(const FiniteGroup&) { return klein_form(false); }

double bicharacter_residual(const FiniteGroup& g, const Bicharacter& chi) {
  const int n = g.order();
  double r = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        r = std::max(r, std::abs(chi(g.mul(a, b), c) - chi(a, c) * chi(b, c)));
        r = std::max(r, std::abs(chi(a, g.mul(b, c)) - chi(a, b) * chi(a, c)));
      }
  return r;
}

bool is_symmetric(const Bicharacter& chi, double tol) {
  for (int a = 0; a < chi.n; ++a)
    for (int b = 0; b < chi.n; ++b)
      if (std::abs(chi(a, b) - chi(b, a)) > tol) return false;
  return true;
}

bool is_nondegenerate(const FiniteGroup& g, const Bicharacter& chi, double tol) {
  for (int a = 1; a < g.order(); ++a) {
    bool trivial = true;
    for (int b = 0; b < g.order(); ++b)
      if (std::abs(chi(a, b) - 1.0) > tol) trivial = false;
    if (trivial) return false;
  }
  return true;
}

}  // namespace tubealg
