#include "tubealg/charges.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "tubealg/errors.hpp"

namespace tubealg {

namespace {

// Characters of distinct irreducibles differ by O(1); this only absorbs
// rounding in the splitting.
constexpr double kCharacterTol = 1e-7;
// Smallest admissible eigenvalue of the GNS Gram matrix.
constexpr double kPositivityFloor = 1e-10;

}  // namespace

int GeneralisedCharge::total_dim() const { return std::accumulate(sector_dims.begin(), sector_dims.end(), 0); }

GeneralisedCharge make_charge(const TubeCategory& t, std::string name, const std::map<std::string, int>& dims,
                              const std::vector<std::pair<std::string, ComplexMatrix>>& entries) {
  GeneralisedCharge u;
  u.name = std::move(name);
  u.sector_dims.assign(t.object_count(), 0);
  for (const auto& [label, d] : dims) {
    if (d < 0) throw Error(ErrorCode::ShapeMismatch, "negative sector dimension for " + label);
    u.sector_dims[t.object_index(label)] = d;
  }
  std::vector<bool> set(t.dim(), false);
  u.action.resize(t.dim());
  for (int i = 0; i < t.dim(); ++i) {
    const auto& b = t.basis()[i];
    const int rows = u.sector_dims[b.target], cols = u.sector_dims[b.source];
    u.action[i] = ComplexMatrix::Zero(rows, cols);
    if (b.source == b.target && i == t.identity(b.source)) {
      u.action[i] = ComplexMatrix::Identity(rows, cols);
      set[i] = true;
    } else if (rows == 0 || cols == 0) {
      set[i] = true;
    }
  }
  for (const auto& [r, m] : entries) {
    const int i = t.find(r);
    const auto& b = t.basis()[i];
    const int rows = u.sector_dims[b.target], cols = u.sector_dims[b.source];
    if (m.rows() != rows || m.cols() != cols) {
      throw Error(ErrorCode::ShapeMismatch, fmt::format("{}: action on {} is {}x{}, expected {}x{}", u.name, r,
                                                        m.rows(), m.cols(), rows, cols));
    }
    u.action[i] = m;
    set[i] = true;
  }
  for (int i = 0; i < t.dim(); ++i)
    if (!set[i]) throw Error(ErrorCode::ShapeMismatch, u.name + " does not specify its action on " + t.ref(i));
  return u;
}

ComplexMatrix charge_apply(const TubeCategory& t, const GeneralisedCharge& u, const TubeVector& v, int source,
                           int target) {
  ComplexMatrix out = ComplexMatrix::Zero(u.sector_dims.at(target), u.sector_dims.at(source));
  for (int i : t.block(source, target))
    if (v(i) != Complex(0.0)) out += v(i) * u.action[i];
  return out;
}

ValidationReport verify_charge(const TubeCategory& t, const GeneralisedCharge& u, const Tolerance& tol) {
  if (static_cast<int>(u.sector_dims.size()) != t.object_count() || static_cast<int>(u.action.size()) != t.dim()) {
    throw Error(ErrorCode::ShapeMismatch, u.name + " does not match the tube category " + t.name());
  }
  for (int i = 0; i < t.dim(); ++i) {
    const auto& b = t.basis()[i];
    if (u.action[i].rows() != u.sector_dims[b.target] || u.action[i].cols() != u.sector_dims[b.source]) {
      throw Error(ErrorCode::ShapeMismatch, u.name + " has a wrongly shaped action on " + t.ref(i));
    }
  }
  ValidationReport rep;
  auto note = [&](double dev, auto&& where) {
    if (std::isnan(dev)) dev = std::numeric_limits<double>::infinity();
    if (dev > rep.residual) rep.residual = dev;
    if (dev > tol.abs_eps && rep.pass) {
      rep.pass = false;
      rep.detail = fmt::format("{}: {} off by {:.3e}", u.name, where(), dev);
    }
  };
  for (int x = 0; x < t.object_count(); ++x) {
    const int d = u.sector_dims[x];
    note(max_abs(u.action[t.identity(x)] - ComplexMatrix::Identity(d, d)), [&] { return "identity on " + t.objects()[x]; });
  }
  for (int g = 0; g < t.dim(); ++g)
    for (int f = 0; f < t.dim(); ++f) {
      if (!t.composable(g, f)) continue;
      const ComplexMatrix lhs = u.action[g] * u.action[f];
      if (lhs.size() == 0) continue;
      ComplexMatrix rhs = ComplexMatrix::Zero(lhs.rows(), lhs.cols());
      for (const Term& term : t.structure(g, f)) rhs += term.coeff * u.action[term.index];
      note(max_abs(lhs - rhs), [&] { return "U(" + t.ref(g) + ")U(" + t.ref(f) + ")"; });
    }
  if (t.has_dagger()) {
    for (int f = 0; f < t.dim(); ++f) {
      const ComplexMatrix lhs = u.action[f].adjoint();
      if (lhs.size() == 0) continue;
      ComplexMatrix rhs = ComplexMatrix::Zero(lhs.rows(), lhs.cols());
      for (const Term& term : t.dagger_terms(f)) rhs += term.coeff * u.action[term.index];
      note(max_abs(lhs - rhs), [&] { return "U(" + t.ref(f) + ")^dagger"; });
    }
  }
  return rep;
}

GeneralisedCharge regular_representation(const TubeCategory& t) {
  const int n = t.dim();
  const int objects = t.object_count();
  GeneralisedCharge r;
  r.name = "regular";
  r.sector_dims.assign(objects, 0);
  std::vector<std::vector<int>> members(objects);  // basis morphisms ending at each object
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) {
    const int y = t.basis()[i].target;
    position[i] = static_cast<int>(members[y].size());
    members[y].push_back(i);
    ++r.sector_dims[y];
  }
  std::vector<bool> is_identity(n, false);
  for (int x = 0; x < objects; ++x) is_identity[t.identity(x)] = true;

  std::vector<ComplexMatrix> root(objects), inv_root(objects);
  for (int y = 0; y < objects; ++y) {
    const int d = r.sector_dims[y];
    if (!t.has_dagger()) {
      root[y] = inv_root[y] = ComplexMatrix::Identity(d, d);
      continue;
    }
    ComplexMatrix q = ComplexMatrix::Zero(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const int ia = members[y][a], ib = members[y][b];
        for (const Term& x : t.dagger_terms(ia)) {
          if (!t.composable(x.index, ib)) continue;
          for (const Term& z : t.structure(x.index, ib))
            if (is_identity[z.index]) q(a, b) += x.coeff * z.coeff;
        }
      }
    if (max_abs(q - q.adjoint()) > 1e-9) {
      throw Error(ErrorCode::NonSemisimple, "GNS form on " + t.objects()[y] + " is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (q + q.adjoint()));
    if (d > 0 && es.eigenvalues().minCoeff() < kPositivityFloor) {
      throw Error(ErrorCode::NonSemisimple,
                  fmt::format("GNS form on {} has eigenvalue {:.3e}", t.objects()[y], es.eigenvalues().minCoeff()));
    }
    root[y] = sqrt_psd(q);
    inv_root[y] = inv_sqrt_pd(q);
  }

  r.action.resize(n);
  for (int g = 0; g < n; ++g) {
    const int y = t.basis()[g].source, z = t.basis()[g].target;
    ComplexMatrix l = ComplexMatrix::Zero(r.sector_dims[z], r.sector_dims[y]);
    for (int col = 0; col < r.sector_dims[y]; ++col)
      for (const Term& term : t.structure(g, members[y][col])) l(position[term.index], col) += term.coeff;
    r.action[g] = root[z] * l * inv_root[y];
  }
  return r;
}

std::vector<Complex> character(const TubeCategory& t, const GeneralisedCharge& u) {
  std::vector<Complex> out;
  for (int i = 0; i < t.dim(); ++i)
    if (t.basis()[i].source == t.basis()[i].target) out.push_back(u.action[i].trace());
  return out;
}

bool isomorphic(const TubeCategory& t, const GeneralisedCharge& u, const GeneralisedCharge& v, const Tolerance& tol) {
  if (u.sector_dims != v.sector_dims) return false;
  const int objects = t.object_count();
  std::vector<int> offset(objects + 1, 0);
  for (int x = 0; x < objects; ++x) offset[x + 1] = offset[x] + u.sector_dims[x] * v.sector_dims[x];
  const int unknowns = offset[objects];
  if (unknowns == 0) return true;
  int rows = 0;
  for (int g = 0; g < t.dim(); ++g) rows += static_cast<int>(u.action[g].size());
  ComplexMatrix sys = ComplexMatrix::Zero(rows, unknowns);
  int row = 0;
  for (int g = 0; g < t.dim(); ++g) {
    const int x = t.basis()[g].source, y = t.basis()[g].target;
    const auto& ug = u.action[g];
    const auto& vg = v.action[g];
    if (ug.size() == 0) continue;
    // T_y U(g) - V(g) T_x = 0, column-major vec.
    const int dy = v.sector_dims[y], dx = u.sector_dims[x];
    sys.block(row, offset[y], ug.size(), dy * u.sector_dims[y]) +=
        kron(ug.transpose(), ComplexMatrix::Identity(dy, dy));
    sys.block(row, offset[x], ug.size(), v.sector_dims[x] * dx) -= kron(ComplexMatrix::Identity(dx, dx), vg);
    row += static_cast<int>(ug.size());
  }
  const ComplexMatrix ns = null_space(sys, 1e-9);
  if (ns.cols() == 0) return false;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  ComplexVector mix(ns.cols());
  for (Eigen::Index i = 0; i < mix.size(); ++i) mix(i) = Complex(gauss(rng), gauss(rng));
  const ComplexVector sol = ns * mix;
  for (int x = 0; x < objects; ++x) {
    const int d = u.sector_dims[x];
    if (d == 0) continue;
    const ComplexMatrix block = Eigen::Map<const ComplexMatrix>(sol.data() + offset[x], d, d);
    Eigen::JacobiSVD<ComplexMatrix> svd(block);
    const auto& s = svd.singularValues();
    if (s(s.size() - 1) <= std::max(tol.abs_eps, 1e-8) * std::max(1.0, s(0))) return false;
  }
  return true;
}

namespace {

bool same_character(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kCharacterTol) return false;
  return true;
}

}  // namespace

std::optional<int> identify(const TubeCategory& t, const GeneralisedCharge& u,
                            const std::vector<GeneralisedCharge>& catalog, const Tolerance&) {
  const auto chi = character(t, u);
  std::optional<int> hit;
  for (int i = 0; i < static_cast<int>(catalog.size()); ++i) {
    if (catalog[i].sector_dims != u.sector_dims || !same_character(chi, character(t, catalog[i]))) continue;
    if (hit) {
      throw Error(ErrorCode::AmbiguousMatch,
                  "catalog entries " + catalog[*hit].name + " and " + catalog[i].name + " share a character");
    }
    hit = i;
  }
  return hit;
}

namespace {

struct SplitContext {
  std::mt19937_64 rng;
  double cluster_eps;
};

// Basis of the block-diagonal commutant, one matrix per sector.
std::vector<std::vector<ComplexMatrix>> commutant(const std::vector<int>& dims, const std::vector<SectorOperator>& ops) {
  const int sectors = static_cast<int>(dims.size());
  std::vector<int> offset(sectors + 1, 0);
  for (int x = 0; x < sectors; ++x) offset[x + 1] = offset[x] + dims[x] * dims[x];
  int rows = 0;
  for (const auto& op : ops) rows += static_cast<int>(op.matrix.size());
  ComplexMatrix sys = ComplexMatrix::Zero(rows, offset[sectors]);
  int row = 0;
  for (const auto& op : ops) {
    const auto& m = op.matrix;
    if (m.size() == 0) continue;
    const int dx = dims[op.source], dy = dims[op.target];
    sys.block(row, offset[op.target], m.size(), dy * dy) += kron(m.transpose(), ComplexMatrix::Identity(dy, dy));
    sys.block(row, offset[op.source], m.size(), dx * dx) -= kron(ComplexMatrix::Identity(dx, dx), m);
    row += static_cast<int>(m.size());
  }
  const ComplexMatrix ns = null_space(sys, 1e-9);
  std::vector<std::vector<ComplexMatrix>> out;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    std::vector<ComplexMatrix> blocks(sectors);
    for (int x = 0; x < sectors; ++x)
      blocks[x] = Eigen::Map<const ComplexMatrix>(ns.col(c).data() + offset[x], dims[x], dims[x]);
    out.push_back(std::move(blocks));
  }
  return out;
}

void split_recursive(const std::vector<int>& dims, const std::vector<SectorOperator>& ops, SplitContext& ctx,
                     std::vector<std::vector<ComplexMatrix>>& out) {
  const int sectors = static_cast<int>(dims.size());
  if (std::accumulate(dims.begin(), dims.end(), 0) == 0) return;
  const auto basis = commutant(dims, ops);
  if (basis.size() <= 1) {
    std::vector<ComplexMatrix> piece(sectors);
    for (int x = 0; x < sectors; ++x) piece[x] = ComplexMatrix::Identity(dims[x], dims[x]);
    out.push_back(std::move(piece));
    return;
  }
  std::normal_distribution<double> gauss;
  std::vector<ComplexMatrix> h(sectors);
  for (int x = 0; x < sectors; ++x) h[x] = ComplexMatrix::Zero(dims[x], dims[x]);
  for (const auto& b : basis) {
    const double re = gauss(ctx.rng), im = gauss(ctx.rng);
    for (int x = 0; x < sectors; ++x)
      h[x] += re * (b[x] + b[x].adjoint()) + Complex(0.0, im) * (b[x] - b[x].adjoint());
  }
  struct Eig {
    double value;
    int sector;
    int column;
  };
  std::vector<Eig> all;
  std::vector<ComplexMatrix> vectors(sectors);
  for (int x = 0; x < sectors; ++x) {
    if (dims[x] == 0) continue;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h[x] + h[x].adjoint()));
    vectors[x] = es.eigenvectors();
    for (int c = 0; c < dims[x]; ++c) all.push_back({es.eigenvalues()(c), x, c});
  }
  std::sort(all.begin(), all.end(), [](const Eig& a, const Eig& b) { return a.value < b.value; });
  size_t i = 0;
  while (i < all.size()) {
    size_t j = i + 1;
    while (j < all.size() && all[j].value - all[j - 1].value < ctx.cluster_eps) ++j;
    std::vector<std::vector<int>> cols(sectors);
    for (size_t k = i; k < j; ++k) cols[all[k].sector].push_back(all[k].column);
    std::vector<ComplexMatrix> w(sectors);
    std::vector<int> sub_dims(sectors);
    for (int x = 0; x < sectors; ++x) {
      sub_dims[x] = static_cast<int>(cols[x].size());
      w[x] = ComplexMatrix(dims[x], sub_dims[x]);
      for (int c = 0; c < sub_dims[x]; ++c) w[x].col(c) = vectors[x].col(cols[x][c]);
    }
    std::vector<SectorOperator> sub_ops;
    for (const auto& op : ops) {
      if (sub_dims[op.source] == 0 || sub_dims[op.target] == 0) continue;
      sub_ops.push_back({op.source, op.target, w[op.target].adjoint() * op.matrix * w[op.source]});
    }
    std::vector<std::vector<ComplexMatrix>> pieces;
    split_recursive(sub_dims, sub_ops, ctx, pieces);
    for (auto& piece : pieces) {
      for (int x = 0; x < sectors; ++x) piece[x] = sub_dims[x] ? ComplexMatrix(w[x] * piece[x]) : ComplexMatrix(dims[x], piece[x].cols());
      out.push_back(std::move(piece));
    }
    i = j;
  }
}

std::vector<GeneralisedCharge> irreps_once(const TubeCategory& t, const GeneralisedCharge& reg, std::uint64_t seed) {
  std::vector<SectorOperator> ops;
  for (int g = 0; g < t.dim(); ++g) ops.push_back({t.basis()[g].source, t.basis()[g].target, reg.action[g]});
  const auto pieces = split_star_representation(reg.sector_dims, ops, seed);
  std::vector<GeneralisedCharge> out;
  std::vector<std::vector<Complex>> seen;
  for (const auto& piece : pieces) {
    GeneralisedCharge u;
    for (const auto& v : piece) u.sector_dims.push_back(static_cast<int>(v.cols()));
    for (int g = 0; g < t.dim(); ++g) {
      const int x = t.basis()[g].source, y = t.basis()[g].target;
      u.action.push_back(piece[y].adjoint() * reg.action[g] * piece[x]);
    }
    auto chi = character(t, u);
    if (std::any_of(seen.begin(), seen.end(), [&](const auto& c) { return same_character(c, chi); })) continue;
    seen.push_back(std::move(chi));
    out.push_back(std::move(u));
  }
  // Canonical order: by sector dimensions, then by character.
  std::vector<size_t> order(out.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](size_t i) {
    std::vector<double> k(out[i].sector_dims.begin(), out[i].sector_dims.end());
    for (auto& d : k) d = -d;
    for (const Complex& c : seen[i]) {
      k.push_back(std::round(c.real() * 1e6) / 1e6);
      k.push_back(std::round(c.imag() * 1e6) / 1e6);
    }
    return k;
  };
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return key(a) < key(b); });
  std::vector<GeneralisedCharge> sorted;
  for (size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

}  // namespace

std::vector<std::vector<ComplexMatrix>> split_star_representation(const std::vector<int>& dims,
                                                                  const std::vector<SectorOperator>& ops,
                                                                  std::uint64_t seed, double cluster_eps) {
  SplitContext ctx{std::mt19937_64(seed), cluster_eps};
  std::vector<std::vector<ComplexMatrix>> out;
  split_recursive(dims, ops, ctx, out);
  return out;
}

std::vector<GeneralisedCharge> decompose_irreps(const TubeCategory& t, const Tolerance& tol, std::uint64_t seed) {
  if (!t.has_dagger()) throw Error(ErrorCode::NonUnitaryCategory, t.name() + " has no dagger structure");
  const GeneralisedCharge reg = regular_representation(t);
  auto first = irreps_once(t, reg, seed);
  auto second = irreps_once(t, reg, seed + 1);
  if (first.size() != second.size()) {
    throw Error(ErrorCode::NonSemisimple, "irreducible count depends on the random element");
  }
  for (size_t i = 0; i < first.size(); ++i) {
    if (first[i].sector_dims != second[i].sector_dims || !same_character(character(t, first[i]), character(t, second[i]))) {
      throw Error(ErrorCode::NonSemisimple, "irreducible characters depend on the random element");
    }
  }
  int total = 0;
  for (const auto& u : first) total += u.total_dim() * u.total_dim();
  if (total != t.dim()) {
    throw Error(ErrorCode::NonSemisimple,
                fmt::format("sum of squared irreducible dimensions is {}, tube dimension is {}", total, t.dim()));
  }
  for (size_t i = 0; i < first.size(); ++i) {
    first[i].name = "irrep" + std::to_string(i);
    const auto rep = verify_charge(t, first[i], tol);
    if (!rep.pass) throw Error(ErrorCode::NonSemisimple, "split piece is not a charge: " + rep.detail);
  }
  return first;
}

}  // namespace tubealg
