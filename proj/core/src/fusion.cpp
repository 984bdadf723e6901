#include "tubealg/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tubealg/errors.hpp"

namespace tubealg {

std::vector<int> FusionRing::fuse(int i, int j) const {
  std::vector<int> out;
  for (int k = 0; k < n; ++k)
    if ((*this)(i, j, k) > 0) out.push_back(k);
  return out;
}

bool FusionRing::multiplicity_free() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](int c) { return c <= 1; });
}

int FusionCategoryData::label_index(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::InvalidArgument, "unknown simple object '" + label + "'");
  return static_cast<int>(it - labels.begin());
}

Complex FusionCategoryData::F(int a, int b, int c, int d, int e, int f) const {
  if (!f_symbols) return 0.0;
  auto it = f_symbols->find(FKey{a, b, c, d, e, f});
  return it == f_symbols->end() ? Complex(0.0) : it->second;
}

ComplexMatrix FusionCategoryData::f_matrix(int a, int b, int c, int d, std::vector<int>* es_out,
                                           std::vector<int>* fs_out) const {
  std::vector<int> es, fs;
  for (int e : ring.fuse(a, b))
    if (ring(e, c, d)) es.push_back(e);
  for (int f : ring.fuse(b, c))
    if (ring(a, f, d)) fs.push_back(f);
  ComplexMatrix m(es.size(), fs.size());
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = 0; j < fs.size(); ++j) m(i, j) = F(a, b, c, d, es[i], fs[j]);
  if (es_out) *es_out = es;
  if (fs_out) *fs_out = fs;
  return m;
}

std::vector<double> FusionCategoryData::tube_weights() const {
  std::vector<double> w(size(), 1.0);
  if (tube_normalization == TubeNormalization::Dimension) {
    for (int i = 0; i < size(); ++i) w[i] = std::sqrt(std::abs(dims[i]));
  }
  return w;
}

ValidationReport validate_ring(const FusionCategoryData& cat, const Tolerance& tol) {
  const FusionRing& r = cat.ring;
  const int n = r.n;
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    if (rep.pass) rep.detail = std::move(msg);
    rep.pass = false;
  };
  if (n == 0 || static_cast<int>(r.coefficients.size()) != n * n * n ||
      static_cast<int>(r.duals.size()) != n || static_cast<int>(cat.labels.size()) != n ||
      static_cast<int>(cat.dims.size()) != n) {
    throw Error(ErrorCode::ShapeError, "fusion data sizes are inconsistent");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int delta = a == b ? 1 : 0;
      if (r(0, a, b) != delta || r(a, 0, b) != delta) fail(fmt::format("unit law fails at {}", cat.labels[a]));
    }
  for (int a = 0; a < n; ++a) {
    const int ad = r.duals[a];
    if (ad < 0 || ad >= n || r.duals[ad] != a) {
      fail(fmt::format("dual of {} is not an involution", cat.labels[a]));
      continue;
    }
    for (int b = 0; b < n; ++b)
      if (r(a, b, 0) != (b == ad ? 1 : 0)) fail(fmt::format("{} x {} contains the unit wrongly", cat.labels[a], cat.labels[b]));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += r(a, b, e) * r(e, c, d);
            rhs += r(b, c, e) * r(a, e, d);
          }
          if (lhs != rhs)
            fail(fmt::format("fusion is not associative at ({},{},{};{})", cat.labels[a], cat.labels[b],
                             cat.labels[c], cat.labels[d]));
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (int c = 0; c < n; ++c) s += r(a, b, c) * cat.dims[c];
      const double dev = std::abs(cat.dims[a] * cat.dims[b] - s);
      rep.residual = std::max(rep.residual, dev);
      if (dev > tol.abs_eps + tol.rel_eps * std::abs(s))
        fail(fmt::format("dimensions are not a ring homomorphism at {} x {}", cat.labels[a], cat.labels[b]));
    }
  return rep;
}

namespace {

void require_complete_f(const FusionCategoryData& cat) {
  if (!cat.f_symbols) throw Error(ErrorCode::MissingFSymbols, cat.name + " has no F-symbols");
  const FusionRing& r = cat.ring;
  const int n = r.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e : r.fuse(a, b)) {
            if (!r(e, c, d)) continue;
            for (int f : r.fuse(b, c)) {
              if (r(a, f, d) && !cat.f_symbols->count(FKey{a, b, c, d, e, f})) {
                throw Error(ErrorCode::MissingFSymbols,
                            fmt::format("F[{},{},{};{}]({},{}) is missing", cat.labels[a], cat.labels[b],
                                        cat.labels[c], cat.labels[d], cat.labels[e], cat.labels[f]));
              }
            }
          }
}

}  // namespace

ValidationReport validate_pentagon(const FusionCategoryData& cat, const Tolerance& tol) {
  require_complete_f(cat);
  const FusionRing& r = cat.ring;
  const int n = r.n;
  ValidationReport rep;
  // F^{fcd}_e[g,l] F^{abl}_e[f,k] = sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l]
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f : r.fuse(a, b))
              for (int g : r.fuse(f, c)) {
                if (!r(g, d, e)) continue;
                for (int l : r.fuse(c, d))
                  for (int k : r.fuse(b, l)) {
                    if (!r(a, k, e)) continue;
                    const Complex lhs = cat.F(f, c, d, e, g, l) * cat.F(a, b, l, e, f, k);
                    Complex rhs = 0.0;
                    for (int h = 0; h < n; ++h)
                      rhs += cat.F(a, b, c, g, f, h) * cat.F(a, h, d, e, g, k) * cat.F(b, c, d, k, h, l);
                    const double dev = std::abs(lhs - rhs);
                    if (dev > rep.residual) {
                      rep.residual = dev;
                      if (!tol.close(lhs, rhs)) {
                        rep.pass = false;
                        rep.detail = fmt::format("pentagon fails for ({},{},{},{};{}) by {:.3e}", cat.labels[a],
                                                 cat.labels[b], cat.labels[c], cat.labels[d], cat.labels[e], dev);
                      }
                    }
                  }
              }
  return rep;
}

ValidationReport validate_unitarity(const FusionCategoryData& cat, const Tolerance& tol) {
  require_complete_f(cat);
  ValidationReport rep;
  const int n = cat.size();
  for (int a = 0; a < n; ++a) {
    if (!(cat.dims[a] > 0.0)) {
      rep.pass = false;
      rep.detail = fmt::format("dimension of {} is not positive", cat.labels[a]);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const ComplexMatrix m = cat.f_matrix(a, b, c, d);
          if (m.size() == 0) continue;
          if (m.rows() != m.cols()) {
            rep.pass = false;
            rep.detail = "non-square F-matrix";
            continue;
          }
          const double dev = max_abs(m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols()));
          rep.residual = std::max(rep.residual, dev);
          if (dev > tol.abs_eps && rep.pass) {
            rep.pass = false;
            rep.detail = fmt::format("F[{},{},{};{}] is not unitary", cat.labels[a], cat.labels[b],
                                     cat.labels[c], cat.labels[d]);
          }
        }
  return rep;
}

std::vector<double> perron_frobenius_dims(const FusionRing& ring) {
  const int n = ring.n;
  // sum_a N_a has the dimension vector as Perron eigenvector.
  RealMatrix m = RealMatrix::Identity(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) m(c, b) += ring(a, b, c);
  RealVector v = RealVector::Ones(n);
  for (int it = 0; it < 2000; ++it) {
    RealVector w = m * v;
    w /= w(0);
    const double delta = (w - v).cwiseAbs().maxCoeff();
    v = w;
    if (delta < 1e-15) break;
  }
  return {v.data(), v.data() + n};
}

namespace {

FusionRing empty_ring(int n) {
  FusionRing r;
  r.n = n;
  r.coefficients.assign(static_cast<size_t>(n) * n * n, 0);
  r.duals.assign(n, 0);
  return r;
}

FSymbolTable trivial_f(const FusionRing& r) {
  FSymbolTable f;
  const int n = r.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e : r.fuse(a, b)) {
            if (!r(e, c, d)) continue;
            for (int g : r.fuse(b, c))
              if (r(a, g, d)) f[FKey{a, b, c, d, e, g}] = 1.0;
          }
  return f;
}

FusionCategoryData golden_category(std::string name, const ComplexMatrix& b, double d_tau, bool unitary) {
  FusionCategoryData cat;
  cat.name = std::move(name);
  cat.labels = {"1", "tau"};
  cat.ring = empty_ring(2);
  cat.ring.at(0, 0, 0) = cat.ring.at(0, 1, 1) = cat.ring.at(1, 0, 1) = 1;
  cat.ring.at(1, 1, 0) = cat.ring.at(1, 1, 1) = 1;
  cat.ring.duals = {0, 1};
  FSymbolTable f = trivial_f(cat.ring);
  for (int e = 0; e < 2; ++e)
    for (int g = 0; g < 2; ++g) f[FKey{1, 1, 1, 1, e, g}] = b(e, g);
  cat.f_symbols = std::move(f);
  cat.dims = {1.0, d_tau};
  cat.unitary = unitary;
  cat.tube_normalization = TubeNormalization::Dimension;
  return cat;
}

}  // namespace

FusionCategoryData build_pointed(const FiniteGroup& group, const Cocycle3& omega) {
  validate_group(group);
  if (cocycle_residual(group, omega) > 1e-9) {
    throw Error(ErrorCode::NotACocycle, "omega is not a normalised U(1) 3-cocycle on " + group.name);
  }
  const int n = group.order();
  FusionCategoryData cat;
  cat.name = "pointed:" + group.name;
  cat.labels = group.elements;
  cat.ring = empty_ring(n);
  FSymbolTable f;
  for (int a = 0; a < n; ++a) {
    cat.ring.duals[a] = group.inv(a);
    for (int b = 0; b < n; ++b) cat.ring.at(a, b, group.mul(a, b)) = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        f[FKey{a, b, c, group.mul(group.mul(a, b), c), group.mul(a, b), group.mul(b, c)}] = omega(a, b, c);
  cat.f_symbols = std::move(f);
  cat.dims.assign(n, 1.0);
  cat.tube_normalization = TubeNormalization::Unit;
  return cat;
}

FusionCategoryData build_ty(const FiniteGroup& group, const Bicharacter& chi, double s) {
  validate_group(group);
  const int n = group.order();
  if (!group.is_abelian()) throw Error(ErrorCode::InvalidArgument, "Tambara-Yamagami data needs an abelian group");
  if (chi.n != n || bicharacter_residual(group, chi) > 1e-9 || !is_symmetric(chi, 1e-9) ||
      !is_nondegenerate(group, chi, 1e-9)) {
    throw Error(ErrorCode::DegenerateBicharacter, "chi is not a symmetric nondegenerate bicharacter");
  }
  if (std::abs(s * s * n - 1.0) > 1e-9) {
    throw Error(ErrorCode::BadSquareRoot, fmt::format("s = {} is not +-1/sqrt({})", s, n));
  }
  const int m = n;
  FusionCategoryData cat;
  cat.name = fmt::format("ty:{}:{}", group.name, s > 0 ? "+" : "-");
  cat.labels = group.elements;
  cat.labels.push_back("m");
  cat.ring = empty_ring(n + 1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) cat.ring.at(a, b, group.mul(a, b)) = 1;
    cat.ring.at(a, m, m) = cat.ring.at(m, a, m) = cat.ring.at(m, m, a) = 1;
    cat.ring.duals[a] = group.inv(a);
  }
  cat.ring.duals[m] = m;
  FSymbolTable f = trivial_f(cat.ring);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      f[FKey{a, m, b, m, m, m}] = chi(a, b);
      f[FKey{m, a, m, b, m, m}] = chi(a, b);
      f[FKey{m, m, m, m, a, b}] = s * std::conj(chi(a, b));
    }
  cat.f_symbols = std::move(f);
  cat.dims.assign(n, 1.0);
  cat.dims.push_back(std::sqrt(static_cast<double>(n)));
  cat.tube_normalization = TubeNormalization::Dimension;
  return cat;
}

FusionCategoryData build_rep_s3() {
  FusionCategoryData cat;
  cat.name = "rep-s3";
  cat.labels = {"1", "psi", "pi"};
  cat.ring = empty_ring(3);
  for (int a = 0; a < 3; ++a) cat.ring.at(0, a, a) = cat.ring.at(a, 0, a) = 1;
  cat.ring.at(1, 1, 0) = 1;
  cat.ring.at(1, 2, 2) = cat.ring.at(2, 1, 2) = 1;
  cat.ring.at(2, 2, 0) = cat.ring.at(2, 2, 1) = cat.ring.at(2, 2, 2) = 1;
  cat.ring.duals = {0, 1, 2};
  FSymbolTable f = trivial_f(cat.ring);
  const double r2 = std::numbers::sqrt2;
  const double block[3][3] = {{0.5, 0.5, r2 / 2}, {0.5, 0.5, -r2 / 2}, {r2 / 2, -r2 / 2, 0.0}};
  for (int e = 0; e < 3; ++e)
    for (int g = 0; g < 3; ++g) f[FKey{2, 2, 2, 2, e, g}] = block[e][g];
  // Sign gauge under which the derived tube matches the reference tables.
  for (const FKey& k : {FKey{1, 2, 2, 2, 2, 2}, FKey{2, 1, 2, 2, 2, 2}, FKey{2, 2, 1, 2, 2, 2},
                        FKey{2, 2, 2, 1, 2, 2}})
    f[k] = -1.0;
  cat.f_symbols = std::move(f);
  cat.dims = {1.0, 1.0, 2.0};
  cat.tube_normalization = TubeNormalization::Unit;
  return cat;
}

FusionCategoryData build_fib() {
  const double phi = std::numbers::phi;
  ComplexMatrix b(2, 2);
  b << 1.0 / phi, std::pow(phi, -0.5), std::pow(phi, -0.5), -1.0 / phi;
  return golden_category("fib", b, phi, true);
}

FusionCategoryData build_yang_lee() {
  const double phi = std::numbers::phi;
  const Complex i(0.0, 1.0);
  ComplexMatrix b(2, 2);
  b << -phi, i * std::sqrt(phi), i * std::sqrt(phi), phi;
  return golden_category("yang-lee", b, -1.0 / phi, false);
}

}  // namespace tubealg
