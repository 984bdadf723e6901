#include "tubealg/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "tubealg/errors.hpp"

namespace tubealg {

namespace {

// Negative Gram eigenvalues above this are rounding and clipped to zero.
constexpr double kClip = 1e-9;
// Interior margin used by the first alternating-projection pass.
constexpr double kInteriorMargin = 1e-6;
constexpr double kSqrt2 = 1.4142135623730951;

std::vector<std::string> object_labels(const TubeCategory& t) { return t.objects(); }

}  // namespace

std::vector<int> raw_channels(const TubeCategory& t, const std::string& defect, int source, int target) {
  return t.channels(defect, source, target);
}

TubeVector kraus_defect(const TubeCategory& t, const ChannelBasis& basis) {
  TubeVector sum = -t.identity_vector(basis.source);
  for (const Channel& c : basis.channels) sum += t.compose(t.dagger(c.coeffs), c.coeffs);
  return sum;
}

double kraus_residual(const TubeCategory& t, const ChannelBasis& basis) {
  const TubeVector d = kraus_defect(t, basis);
  return d.size() ? d.cwiseAbs().maxCoeff() : 0.0;
}

ChannelBasis canonical_channel_basis(const FusionCategoryData& cat, const TubeCategory& t, const std::string& defect,
                                     int source) {
  if (!cat.unitary || !t.has_dagger()) {
    throw Error(ErrorCode::NonUnitaryCategory, cat.name + " has no unitary channel basis");
  }
  if (t.provenance() != Provenance::Derived || t.dim() == 0 || t.objects() != cat.labels) {
    throw Error(ErrorCode::BasisMismatch, "canonical construction needs the tube derived from " + cat.name);
  }
  const int n = cat.size();
  const int a = cat.label_index(defect);
  const int ad = cat.ring.duals[a];
  const int x = source;
  const std::vector<double> w = cat.tube_weights();
  const Complex x_a = 1.0 / (std::sqrt(cat.dims[a]) * cat.F(a, ad, a, a, 0, 0));
  ChannelBasis out{defect, source, {}};
  for (int s = 0; s < n; ++s) {
    int index = 0;
    for (int i : t.channels(defect, x, s)) {
      const std::string& label = t.basis()[i].channel;
      int k = -1;
      if (!label.empty()) {
        k = cat.label_index(label);
      } else {
        for (int c = 0; c < n; ++c)
          if (cat.ring(a, x, c) && cat.ring(s, a, c)) k = c;
      }
      std::vector<int> es, fs;
      const ComplexMatrix f = cat.f_matrix(k, ad, a, k, &es, &fs);
      const ComplexMatrix g = f.inverse();
      const auto fi = std::find(fs.begin(), fs.end(), 0) - fs.begin();
      const auto ei = std::find(es.begin(), es.end(), s) - es.begin();
      const Complex coeff = std::conj(x_a) * g(fi, ei) / std::sqrt(cat.dims[a]) / (w[s] / w[x]);
      TubeVector v = TubeVector::Zero(t.dim());
      v(i) = coeff;
      out.channels.push_back({s, index++, v});
    }
  }
  return out;
}

namespace {

struct GramLayout {
  std::vector<int> targets;
  std::vector<std::vector<int>> raw;
  std::vector<int> offset;  // first parameter of each block
  int parameters = 0;
};

GramLayout layout_for(const TubeCategory& t, const std::string& defect, int source) {
  GramLayout l;
  for (int s = 0; s < t.object_count(); ++s) {
    auto r = t.channels(defect, source, s);
    if (r.empty()) continue;
    l.targets.push_back(s);
    l.offset.push_back(l.parameters);
    const int m = static_cast<int>(r.size());
    l.parameters += m * m;
    l.raw.push_back(std::move(r));
  }
  return l;
}

// Parameters per block: m diagonal entries, then sqrt2*Re and sqrt2*Im of
// each upper entry, so that the parameter norm is the Frobenius norm.
std::vector<ComplexMatrix> blocks_from(const GramLayout& l, const RealVector& p) {
  std::vector<ComplexMatrix> out;
  for (size_t b = 0; b < l.targets.size(); ++b) {
    const int m = static_cast<int>(l.raw[b].size());
    ComplexMatrix g(m, m);
    int k = l.offset[b];
    for (int i = 0; i < m; ++i) g(i, i) = p(k++);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const Complex v(p(k) / kSqrt2, p(k + 1) / kSqrt2);
        k += 2;
        g(i, j) = v;
        g(j, i) = std::conj(v);
      }
    out.push_back(g);
  }
  return out;
}

RealVector params_from(const GramLayout& l, const std::vector<ComplexMatrix>& blocks) {
  RealVector p(l.parameters);
  for (size_t b = 0; b < l.targets.size(); ++b) {
    const auto& g = blocks[b];
    const int m = static_cast<int>(g.rows());
    int k = l.offset[b];
    for (int i = 0; i < m; ++i) p(k++) = g(i, i).real();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const Complex v = 0.5 * (g(i, j) + std::conj(g(j, i)));
        p(k++) = kSqrt2 * v.real();
        p(k++) = kSqrt2 * v.imag();
      }
  }
  return p;
}

double lowest_eigenvalue(const std::vector<ComplexMatrix>& blocks) {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& g : blocks) {
    if (g.size() == 0) continue;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
    lo = std::min(lo, es.eigenvalues().minCoeff());
  }
  return lo;
}

std::vector<ComplexMatrix> psd_floor(const std::vector<ComplexMatrix>& blocks, double floor) {
  std::vector<ComplexMatrix> out;
  for (const auto& g : blocks) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
    const RealVector w = es.eigenvalues().cwiseMax(floor);
    out.push_back(es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint());
  }
  return out;
}

}  // namespace

bool InfeasibilityCertificate::recheck(double tol) const {
  if (system.rows() != rhs.size() || system.cols() != static_cast<Eigen::Index>(parameter_labels.size())) return false;
  Eigen::JacobiSVD<RealMatrix> svd(system, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  const RealVector p = system.cols() ? RealVector(svd.solve(rhs)) : RealVector();
  const double res = system.cols() ? (system * p - rhs).cwiseAbs().maxCoeff() : rhs.cwiseAbs().maxCoeff();
  const int null = static_cast<int>(null_space(system, 1e-9).cols());
  if (null != nullity) return false;
  if (witness == Witness::LinearInconsistency) return res > 10.0 * tol;
  if (res > 10.0 * tol) return false;
  GramLayout l;
  l.targets = targets;
  l.raw = raw_channels;
  for (const auto& r : raw_channels) {
    l.offset.push_back(l.parameters);
    l.parameters += static_cast<int>(r.size() * r.size());
  }
  // With a unique solution the stored system alone proves infeasibility;
  // otherwise the stored closest blocks must carry the negative eigenvalue.
  if (nullity == 0) return lowest_eigenvalue(blocks_from(l, p)) < -tol;
  return lowest_eigenvalue(gram_blocks) < -tol && std::abs(lowest_eigenvalue(gram_blocks) - min_eigenvalue) < 1e-6;
}

SolveResult solve_channel_basis(const TubeCategory& t, const std::string& defect, int source,
                                const SolveOptions& options) {
  options.tol.validate();
  const double tol = options.tol.abs_eps;
  if (source < 0 || source >= t.object_count()) throw Error(ErrorCode::InvalidArgument, "source out of range");
  if (options.mode == ConstraintMode::Tube && !t.has_dagger()) {
    throw Error(ErrorCode::NonUnitaryCategory, t.name() + " has no dagger; use charge constraints");
  }
  const GramLayout l = layout_for(t, defect, source);
  const std::vector<std::string> labels = object_labels(t);

  // Constraint operators M_ij per block, as flattened complex vectors.
  std::vector<std::string> entry_labels;
  ComplexVector target;
  std::vector<std::vector<std::vector<ComplexVector>>> m(l.targets.size());
  if (options.mode == ConstraintMode::Tube) {
    const std::vector<int> ends = t.block(source, source);
    target = ComplexVector::Zero(ends.size());
    for (size_t e = 0; e < ends.size(); ++e) {
      entry_labels.push_back(t.ref(ends[e]));
      if (ends[e] == t.identity(source)) target(e) = 1.0;
    }
    for (size_t b = 0; b < l.targets.size(); ++b) {
      const auto& r = l.raw[b];
      m[b].assign(r.size(), std::vector<ComplexVector>(r.size()));
      for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) {
          const TubeVector v = t.compose(t.dagger(t.unit(r[i])), t.unit(r[j]));
          ComplexVector c(ends.size());
          for (size_t e = 0; e < ends.size(); ++e) c(e) = v(ends[e]);
          m[b][i][j] = c;
        }
    }
  } else {
    if (options.charges.empty()) throw Error(ErrorCode::InvalidArgument, "charge constraints need charges");
    for (size_t b = 0; b < l.targets.size(); ++b) m[b].assign(l.raw[b].size(), std::vector<ComplexVector>(l.raw[b].size()));
    std::vector<ComplexVector> pieces;
    for (const auto& u : options.charges) {
      if (static_cast<int>(u.action.size()) != t.dim()) throw Error(ErrorCode::ShapeMismatch, u.name + " does not fit");
      const int dx = u.sector_dims[source];
      if (dx == 0) continue;
      const ComplexMatrix id = ComplexMatrix::Identity(dx, dx);
      pieces.push_back(Eigen::Map<const ComplexVector>(id.data(), dx * dx));
      for (int c = 0; c < dx; ++c)
        for (int r = 0; r < dx; ++r) entry_labels.push_back(fmt::format("{}({},{})", u.name, r, c));
      for (size_t b = 0; b < l.targets.size(); ++b) {
        const auto& raw = l.raw[b];
        for (size_t i = 0; i < raw.size(); ++i)
          for (size_t j = 0; j < raw.size(); ++j) {
            const ComplexMatrix prod = u.action[raw[i]].adjoint() * u.action[raw[j]];
            const ComplexMatrix full = prod.size() ? prod : ComplexMatrix(ComplexMatrix::Zero(dx, dx));
            ComplexVector flat = Eigen::Map<const ComplexVector>(full.data(), dx * dx);
            ComplexVector& acc = m[b][i][j];
            ComplexVector grown(acc.size() + flat.size());
            grown << acc, flat;
            acc = grown;
          }
      }
    }
    int total = 0;
    for (const auto& p : pieces) total += static_cast<int>(p.size());
    target.resize(total);
    int at = 0;
    for (const auto& p : pieces) {
      target.segment(at, p.size()) = p;
      at += static_cast<int>(p.size());
    }
  }

  const int entries = static_cast<int>(target.size());
  RealMatrix a = RealMatrix::Zero(2 * entries, l.parameters);
  RealVector rhs(2 * entries);
  std::vector<std::string> row_labels, column_labels;
  for (int e = 0; e < entries; ++e) {
    rhs(2 * e) = target(e).real();
    rhs(2 * e + 1) = target(e).imag();
    row_labels.push_back("Re " + entry_labels[e]);
    row_labels.push_back("Im " + entry_labels[e]);
  }
  auto put = [&](int col, const ComplexVector& v) {
    for (int e = 0; e < entries; ++e) {
      a(2 * e, col) += v(e).real();
      a(2 * e + 1, col) += v(e).imag();
    }
  };
  for (size_t b = 0; b < l.targets.size(); ++b) {
    const int sz = static_cast<int>(l.raw[b].size());
    const std::string s = labels[l.targets[b]];
    int k = l.offset[b];
    for (int i = 0; i < sz; ++i) {
      put(k++, m[b][i][i]);
      column_labels.push_back(fmt::format("G[{}]({},{})", s, i, i));
    }
    for (int i = 0; i < sz; ++i)
      for (int j = i + 1; j < sz; ++j) {
        const Complex ii(0.0, 1.0);
        put(k++, (m[b][i][j] + m[b][j][i]) / kSqrt2);
        put(k++, ii * (m[b][i][j] - m[b][j][i]) / kSqrt2);
        column_labels.push_back(fmt::format("sqrt2*Re G[{}]({},{})", s, i, j));
        column_labels.push_back(fmt::format("sqrt2*Im G[{}]({},{})", s, i, j));
      }
  }

  InfeasibilityCertificate cert;
  cert.defect = defect;
  cert.source = source;
  cert.mode = options.mode;
  for (const auto& u : options.charges)
    if (options.mode == ConstraintMode::Charges) cert.charge_names.push_back(u.name);
  cert.targets = l.targets;
  cert.raw_channels = l.raw;
  cert.parameter_labels = column_labels;
  cert.constraint_labels = row_labels;
  cert.system = a;
  cert.rhs = rhs;

  RealVector p0 = RealVector::Zero(l.parameters);
  if (l.parameters > 0) {
    Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    p0 = svd.solve(rhs);
  }
  const double scale = std::max(1.0, rhs.size() ? rhs.cwiseAbs().maxCoeff() : 0.0);
  cert.least_squares = p0;
  cert.residual = rhs.size() ? (a * p0 - rhs).cwiseAbs().maxCoeff() : 0.0;
  const RealMatrix null = l.parameters ? null_space(a, 1e-9) : RealMatrix(0, 0);
  cert.nullity = static_cast<int>(null.cols());
  if (cert.residual > 10.0 * tol * scale) {
    cert.witness = InfeasibilityCertificate::Witness::LinearInconsistency;
    cert.gram_blocks = blocks_from(l, p0);
    cert.min_eigenvalue = l.targets.empty() ? 0.0 : lowest_eigenvalue(cert.gram_blocks);
    return cert;
  }

  // Alternating projections between the affine set and the PSD cone, first
  // towards the interior (margin), then towards the cone itself.
  auto project_affine = [&](const RealVector& q) -> RealVector {
    if (null.cols() == 0) return p0;
    return p0 + null * (null.transpose() * (q - p0));
  };
  RealVector p = p0;
  bool feasible = lowest_eigenvalue(blocks_from(l, p)) >= -kClip;
  for (double margin : {kInteriorMargin, 0.0}) {
    if (feasible || null.cols() == 0) break;
    double checkpoint = std::numeric_limits<double>::infinity();
    for (int it = 0; it < options.max_iterations; ++it) {
      const RealVector q = params_from(l, psd_floor(blocks_from(l, p), margin));
      const double dist = (q - p).norm();
      p = project_affine(q);
      if (lowest_eigenvalue(blocks_from(l, p)) >= -kClip) {
        feasible = true;
        break;
      }
      if (it % 200 == 199) {
        if (dist > 10.0 * tol && dist > 0.999 * checkpoint) break;  // stalled
        checkpoint = dist;
      }
    }
  }
  const std::vector<ComplexMatrix> blocks = blocks_from(l, p);
  if (!feasible) {
    cert.witness = InfeasibilityCertificate::Witness::NegativeEigenvalue;
    cert.gram_blocks = blocks;
    cert.min_eigenvalue = lowest_eigenvalue(blocks);
    return cert;
  }

  ChannelBasis out{defect, source, {}};
  for (size_t b = 0; b < l.targets.size(); ++b) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(blocks[b]);
    const auto& raw = l.raw[b];
    int index = 0;
    for (Eigen::Index c = es.eigenvalues().size() - 1; c >= 0; --c) {
      const double lambda = std::max(es.eigenvalues()(c), 0.0);
      if (lambda <= kClip) continue;
      // Row c of C = Lambda^1/2 V^dagger.
      TubeVector v = TubeVector::Zero(t.dim());
      for (size_t i = 0; i < raw.size(); ++i) v(raw[i]) = std::sqrt(lambda) * std::conj(es.eigenvectors()(i, c));
      out.channels.push_back({l.targets[b], index++, v});
    }
  }
  return out;
}

IsometryBlock assemble_isometry(const GeneralisedCharge& u, const ChannelBasis& basis) {
  const int dx = u.sector_dims.at(basis.source);
  IsometryBlock out;
  std::vector<ComplexMatrix> parts;
  int rows = 0;
  for (const Channel& c : basis.channels) {
    const int dy = u.sector_dims.at(c.target);
    ComplexMatrix k = ComplexMatrix::Zero(dy, dx);
    for (Eigen::Index i = 0; i < c.coeffs.size(); ++i)
      if (c.coeffs(i) != Complex(0.0) && u.action[i].size()) k += c.coeffs(i) * u.action[i];
    out.row_blocks.push_back({c.target, c.index, rows, dy});
    rows += dy;
    parts.push_back(std::move(k));
  }
  out.matrix = ComplexMatrix::Zero(rows, dx);
  for (size_t i = 0; i < parts.size(); ++i)
    out.matrix.block(out.row_blocks[i].offset, 0, out.row_blocks[i].rows, dx) = parts[i];
  return out;
}

ProbabilityReport transition_probabilities(const GeneralisedCharge& u, const ChannelBasis& basis,
                                           const ComplexVector& state) {
  const int dx = u.sector_dims.at(basis.source);
  if (state.size() != dx) {
    throw Error(ErrorCode::SectorMismatch,
                fmt::format("state has length {}, sector has dimension {}", state.size(), dx));
  }
  const double norm2 = state.squaredNorm();
  if (!(norm2 > 0.0)) throw Error(ErrorCode::ZeroState, "state vector is zero");
  const IsometryBlock v = assemble_isometry(u, basis);
  ProbabilityReport rep;
  rep.defect = basis.defect;
  rep.source = basis.source;
  rep.charge = u.name;
  for (const RowBlock& rb : v.row_blocks) {
    if (rb.rows == 0) continue;
    const double p = (v.matrix.block(rb.offset, 0, rb.rows, dx) * state).squaredNorm() / norm2;
    rep.channels.push_back({rb.target, rb.index, p});
    rep.marginals[rb.target] += p;
    rep.total += p;
  }
  return rep;
}

std::vector<ChannelOutput> apply_channel(const GeneralisedCharge& u, const ChannelBasis& basis,
                                         const DensityMatrix& rho) {
  const int dx = u.sector_dims.at(basis.source);
  if (rho.sector != basis.source || rho.matrix.rows() != dx || rho.matrix.cols() != dx) {
    throw Error(ErrorCode::SectorMismatch, "density matrix does not live on the source sector");
  }
  const IsometryBlock v = assemble_isometry(u, basis);
  std::vector<ChannelOutput> out;
  for (const RowBlock& rb : v.row_blocks) {
    if (rb.rows == 0) continue;
    const ComplexMatrix k = v.matrix.block(rb.offset, 0, rb.rows, dx);
    out.push_back({rb.target, rb.index, k * rho.matrix * k.adjoint()});
  }
  return out;
}

ChannelBasis gauge_rotate(const ChannelBasis& basis, int target, const ComplexMatrix& m, const Tolerance& tol) {
  std::vector<size_t> pos;
  for (size_t i = 0; i < basis.channels.size(); ++i)
    if (basis.channels[i].target == target) pos.push_back(i);
  if (m.rows() != static_cast<Eigen::Index>(pos.size()) || !is_unitary(m, tol)) {
    throw Error(ErrorCode::NotUnitary, fmt::format("gauge matrix must be a {0}x{0} unitary", pos.size()));
  }
  ChannelBasis out = basis;
  for (size_t a = 0; a < pos.size(); ++a) {
    TubeVector v = TubeVector::Zero(basis.channels[pos[a]].coeffs.size());
    for (size_t b = 0; b < pos.size(); ++b) v += m(a, b) * basis.channels[pos[b]].coeffs;
    out.channels[pos[a]].coeffs = v;
  }
  return out;
}

}  // namespace tubealg
