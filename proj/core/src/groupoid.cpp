#include "tubealg/groupoid.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "tubealg/errors.hpp"

namespace tubealg {

Complex ActionGroupoid::theta(int x, int g, int h) const {
  const int n = group.order();
  return theta_values[(static_cast<size_t>(x) * n + g) * n + h];
}

std::vector<int> ActionGroupoid::orbit(int x) const {
  std::vector<int> out;
  for (int g = 0; g < group.order(); ++g) out.push_back(action[g][x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> ActionGroupoid::stabiliser(int x) const {
  std::vector<int> out;
  for (int g = 0; g < group.order(); ++g)
    if (action[g][x] == x) out.push_back(g);
  return out;
}

ActionGroupoid pointed_groupoid(const FiniteGroup& group, const Cocycle3& omega) {
  const int n = group.order();
  ActionGroupoid d;
  d.name = "pointed:" + group.name;
  d.group = group;
  d.points = group.elements;
  d.action.assign(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) d.action[g][x] = group.conj(g, x);
  d.theta_values.resize(static_cast<size_t>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        const int gh = group.mul(g, h);
        d.theta_values[(static_cast<size_t>(x) * n + g) * n + h] =
            omega(g, h, x) * omega(group.conj(gh, x), g, h) / omega(g, group.conj(h, x), h);
      }
  return d;
}

ActionGroupoid two_group_groupoid(std::string name, const FiniteGroup& g0, const FiniteGroup& a1,
                                  const std::vector<std::vector<int>>& act, const std::vector<Complex>& pairing) {
  const int n = g0.order(), m = a1.order();
  if (static_cast<int>(act.size()) != n || static_cast<int>(pairing.size()) != n * n * m) {
    throw Error(ErrorCode::ShapeError, "2-group data has wrong size");
  }
  ActionGroupoid d;
  d.name = std::move(name);
  d.group = g0;
  d.points = a1.elements;
  d.action = act;
  d.theta_values.resize(static_cast<size_t>(m) * n * n);
  for (int a = 0; a < m; ++a)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        const int moved = act[g0.mul(g, h)][a];
        d.theta_values[(static_cast<size_t>(a) * n + g) * n + h] = pairing[(static_cast<size_t>(g) * n + h) * m + moved];
      }
  return d;
}

TubeCategory groupoid_tube(const ActionGroupoid& data, const Tolerance& tol) {
  const FiniteGroup& G = data.group;
  const int n = G.order(), points = data.point_count();
  std::vector<TubeBasisMorphism> basis;
  std::vector<int> index(static_cast<size_t>(points) * n);
  for (int x = 0; x < points; ++x)
    for (int g = 0; g < n; ++g) {
      index[x * n + g] = static_cast<int>(basis.size());
      basis.push_back({x, data.action[g][x], G.elements[g], ""});
    }
  const int dim = static_cast<int>(basis.size());
  std::vector<std::vector<Term>> compose(static_cast<size_t>(dim) * dim);
  std::vector<std::vector<Term>> dagger(dim);
  for (int x = 0; x < points; ++x)
    for (int h = 0; h < n; ++h) {
      const int f = index[x * n + h];
      const int y = data.action[h][x];
      for (int g = 0; g < n; ++g) {
        const int gi = index[y * n + g];
        compose[gi * dim + f] = {{index[x * n + G.mul(g, h)], data.theta(x, g, h)}};
      }
      const int hinv = G.inv(h);
      dagger[f] = {{index[y * n + hinv], std::conj(data.theta(x, hinv, h))}};
    }
  std::map<std::string, std::string> duals;
  for (int g = 0; g < n; ++g) duals[G.elements[g]] = G.elements[G.inv(g)];
  TubeCategory t = TubeCategory::assemble(data.name, data.points, std::move(basis), std::move(compose),
                                          std::move(dagger), Provenance::Presented, true, G.elements[0],
                                          std::move(duals));
  const double assoc = t.associativity_residual();
  if (assoc > tol.abs_eps) {
    throw Error(ErrorCode::AssociativityViolation,
                fmt::format("theta of {} is not a groupoid 2-cocycle (residual {:.3e})", data.name, assoc));
  }
  const double dag = t.dagger_residual();
  if (dag > tol.abs_eps) {
    throw Error(ErrorCode::DaggerViolation, fmt::format("{} dagger residual {:.3e}", data.name, dag));
  }
  return t;
}

std::vector<std::vector<ComplexMatrix>> projective_irreps(const ActionGroupoid& data, int x, std::uint64_t seed) {
  const FiniteGroup& G = data.group;
  const std::vector<int> stab = data.stabiliser(x);
  const int m = static_cast<int>(stab.size());
  auto pos = [&](int g) { return static_cast<int>(std::find(stab.begin(), stab.end(), g) - stab.begin()); };
  std::vector<ComplexMatrix> regular;
  std::vector<SectorOperator> ops;
  for (int g : stab) {
    ComplexMatrix l = ComplexMatrix::Zero(m, m);
    for (int h : stab) l(pos(G.mul(g, h)), pos(h)) = data.theta(x, g, h);
    regular.push_back(l);
    ops.push_back({0, 0, l});
  }
  const auto pieces = split_star_representation({m}, ops, seed);
  std::vector<std::vector<ComplexMatrix>> out;
  std::vector<ComplexVector> characters;
  for (const auto& piece : pieces) {
    std::vector<ComplexMatrix> rho;
    ComplexVector chi(m);
    for (int i = 0; i < m; ++i) {
      rho.push_back(piece[0].adjoint() * regular[i] * piece[0]);
      chi(i) = rho.back().trace();
    }
    const bool repeat = std::any_of(characters.begin(), characters.end(),
                                    [&](const ComplexVector& c) { return (c - chi).cwiseAbs().maxCoeff() < 1e-7; });
    if (repeat) continue;
    characters.push_back(chi);
    out.push_back(std::move(rho));
  }
  // Order by dimension, then by the character on the stabiliser.
  std::vector<size_t> order(out.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto key = [&](size_t i) {
    std::vector<double> k{static_cast<double>(out[i][0].rows())};
    for (int j = 0; j < m; ++j) {
      k.push_back(std::round(characters[i](j).real() * 1e6) / 1e6);
      k.push_back(std::round(characters[i](j).imag() * 1e6) / 1e6);
    }
    return k;
  };
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return key(a) < key(b); });
  std::vector<std::vector<ComplexMatrix>> sorted;
  for (size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::vector<GeneralisedCharge> groupoid_charges(const ActionGroupoid& data, const TubeCategory& t,
                                                int representative_choice, std::uint64_t seed) {
  const FiniteGroup& G = data.group;
  const int n = G.order(), points = data.point_count();
  if (t.dim() != points * n) throw Error(ErrorCode::ShapeMismatch, "tube category does not match the groupoid");
  std::vector<bool> done(points, false);
  std::vector<GeneralisedCharge> out;
  for (int x = 0; x < points; ++x) {
    if (done[x]) continue;
    const std::vector<int> orb = data.orbit(x);
    for (int y : orb) done[y] = true;
    std::vector<int> r(points, -1);
    for (int y : orb) {
      if (y == x) {
        r[y] = 0;
        continue;
      }
      std::vector<int> cands;
      for (int g = 0; g < n; ++g)
        if (data.action[g][y] == x) cands.push_back(g);
      r[y] = representative_choice == 0 ? cands.front() : cands.back();
    }
    const std::vector<int> stab = data.stabiliser(x);
    const auto irreps = projective_irreps(data, x, seed);
    for (size_t k = 0; k < irreps.size(); ++k) {
      const auto& rho = irreps[k];
      const int d = static_cast<int>(rho[0].rows());
      GeneralisedCharge u;
      u.name = fmt::format("U_{}_{}", data.points[x], k);
      u.sector_dims.assign(points, 0);
      for (int y : orb) u.sector_dims[y] = d;
      u.action.resize(t.dim());
      for (int i = 0; i < t.dim(); ++i) {
        const int y = t.basis()[i].source, z = t.basis()[i].target;
        const int g = i % n;
        if (r[y] < 0) {
          u.action[i] = ComplexMatrix::Zero(0, 0);
          continue;
        }
        const int gy = G.mul(G.mul(r[z], g), G.inv(r[y]));
        const Complex kappa = data.theta(y, r[z], g) / data.theta(y, gy, r[y]);
        const int p = static_cast<int>(std::find(stab.begin(), stab.end(), gy) - stab.begin());
        u.action[i] = kappa * rho[p];
      }
      out.push_back(std::move(u));
    }
  }
  return out;
}

}  // namespace tubealg
