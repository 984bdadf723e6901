#include "tubealg/tube.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "tubealg/errors.hpp"

namespace tubealg {

namespace {

struct Offender {
  double residual = 0.0;
  std::string where;

  template <typename Describe>
  void note(double dev, Describe&& what) {
    if (dev > residual) {
      residual = dev;
      where = what();
    }
  }
};

// Sparse accumulator over the basis.
class Accumulator {
 public:
  explicit Accumulator(int n) : values_(n, Complex(0.0)), seen_(n, false) {}

  void add(int i, Complex c) {
    if (!seen_[i]) {
      seen_[i] = true;
      touched_.push_back(i);
    }
    values_[i] += c;
  }

  // Max deviation from another accumulator; both are cleared.
  double drain_against(Accumulator& other) {
    double dev = 0.0;
    for (int i : touched_) dev = std::max(dev, std::abs(values_[i] - other.values_[i]));
    for (int i : other.touched_) dev = std::max(dev, std::abs(values_[i] - other.values_[i]));
    clear();
    other.clear();
    return dev;
  }

  void clear() {
    for (int i : touched_) {
      values_[i] = 0.0;
      seen_[i] = false;
    }
    touched_.clear();
  }

 private:
  std::vector<Complex> values_;
  std::vector<bool> seen_;
  std::vector<int> touched_;
};

}  // namespace

int TubeCategory::object_index(const std::string& label) const {
  auto it = std::find(objects_.begin(), objects_.end(), label);
  if (it == objects_.end()) throw Error(ErrorCode::InvalidArgument, "unknown object '" + label + "' in " + name_);
  return static_cast<int>(it - objects_.begin());
}

std::string TubeCategory::defect_dual(const std::string& defect) const {
  auto it = defect_duals_.find(defect);
  return it == defect_duals_.end() ? std::string() : it->second;
}

std::string TubeCategory::ref(int index) const {
  const TubeBasisMorphism& b = basis_.at(index);
  std::string out = objects_[b.source] + ">" + objects_[b.target] + ";" + b.defect;
  if (!b.channel.empty()) out += ";" + b.channel;
  return out;
}

int TubeCategory::find(const std::string& r) const {
  const auto gt = r.find('>');
  const auto s1 = r.find(';');
  if (gt == std::string::npos || s1 == std::string::npos || gt > s1) {
    throw Error(ErrorCode::BasisMismatch, "malformed morphism reference '" + r + "'");
  }
  const auto s2 = r.find(';', s1 + 1);
  const std::string src = r.substr(0, gt);
  const std::string tgt = r.substr(gt + 1, s1 - gt - 1);
  const std::string defect = r.substr(s1 + 1, s2 == std::string::npos ? std::string::npos : s2 - s1 - 1);
  const std::string channel = s2 == std::string::npos ? std::string() : r.substr(s2 + 1);
  std::vector<int> hits;
  for (int i = 0; i < dim(); ++i) {
    const TubeBasisMorphism& b = basis_[i];
    if (objects_[b.source] != src || objects_[b.target] != tgt || b.defect != defect) continue;
    if (channel.empty() || b.channel == channel) hits.push_back(i);
  }
  if (hits.size() != 1) {
    throw Error(ErrorCode::BasisMismatch,
                fmt::format("reference '{}' matches {} basis morphisms of {}", r, hits.size(), name_));
  }
  return hits[0];
}

std::vector<int> TubeCategory::block(int source, int target) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].source == source && basis_[i].target == target) out.push_back(i);
  return out;
}

std::vector<int> TubeCategory::channels(const std::string& defect, int source, int target) const {
  std::vector<int> out;
  for (int i : block(source, target))
    if (basis_[i].defect == defect) out.push_back(i);
  return out;
}

std::vector<std::string> TubeCategory::defects() const {
  std::vector<std::string> out;
  for (const auto& b : basis_)
    if (std::find(out.begin(), out.end(), b.defect) == out.end()) out.push_back(b.defect);
  return out;
}

const std::vector<Term>& TubeCategory::dagger_terms(int f) const {
  if (!dagger_) throw Error(ErrorCode::DaggerViolation, name_ + " has no dagger structure");
  return (*dagger_)[f];
}

TubeVector TubeCategory::unit(int index) const {
  TubeVector v = TubeVector::Zero(dim());
  v(index) = 1.0;
  return v;
}

TubeVector TubeCategory::compose(const TubeVector& g, const TubeVector& f) const {
  if (g.size() != dim() || f.size() != dim()) throw Error(ErrorCode::ShapeError, "tube vector has wrong length");
  TubeVector out = TubeVector::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (g(i) == Complex(0.0)) continue;
    for (int j = 0; j < dim(); ++j) {
      if (f(j) == Complex(0.0)) continue;
      if (!composable(i, j)) {
        throw Error(ErrorCode::NonComposable, "cannot compose " + ref(i) + " after " + ref(j));
      }
      for (const Term& t : structure(i, j)) out(t.index) += g(i) * f(j) * t.coeff;
    }
  }
  return out;
}

TubeVector TubeCategory::dagger(const TubeVector& f) const {
  if (f.size() != dim()) throw Error(ErrorCode::ShapeError, "tube vector has wrong length");
  TubeVector out = TubeVector::Zero(dim());
  for (int j = 0; j < dim(); ++j) {
    if (f(j) == Complex(0.0)) continue;
    for (const Term& t : dagger_terms(j)) out(t.index) += std::conj(f(j)) * t.coeff;
  }
  return out;
}

ComplexMatrix TubeCategory::left_multiplication(int g) const {
  ComplexMatrix m = ComplexMatrix::Zero(dim(), dim());
  for (int f = 0; f < dim(); ++f) {
    if (!composable(g, f)) continue;
    for (const Term& t : structure(g, f)) m(t.index, f) += t.coeff;
  }
  return m;
}

namespace {

Offender associativity_offender(const TubeCategory& t) {
  Offender off;
  const int n = t.dim();
  Accumulator lhs(n), rhs(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!t.composable(a, b)) continue;
      const auto& ab = t.structure(a, b);
      for (int c = 0; c < n; ++c) {
        if (!t.composable(b, c)) continue;
        for (const Term& x : ab)
          for (const Term& y : t.structure(x.index, c)) lhs.add(y.index, x.coeff * y.coeff);
        for (const Term& x : t.structure(b, c))
          for (const Term& y : t.structure(a, x.index)) rhs.add(y.index, x.coeff * y.coeff);
        const double dev = lhs.drain_against(rhs);
        off.note(dev, [&] { return "(" + t.ref(a) + " o " + t.ref(b) + ") o " + t.ref(c); });
      }
    }
  return off;
}

Offender identity_offender(const TubeCategory& t) {
  Offender off;
  for (int f = 0; f < t.dim(); ++f) {
    const TubeVector e = t.unit(f);
    const int src = t.basis()[f].source, tgt = t.basis()[f].target;
    off.note((t.compose(t.identity_vector(tgt), e) - e).cwiseAbs().maxCoeff(), [&] { return "id o " + t.ref(f); });
    off.note((t.compose(e, t.identity_vector(src)) - e).cwiseAbs().maxCoeff(), [&] { return t.ref(f) + " o id"; });
  }
  return off;
}

Offender dagger_offender(const TubeCategory& t) {
  Offender off;
  if (!t.has_dagger()) return off;
  const int n = t.dim();
  for (int f = 0; f < n; ++f) {
    const TubeVector e = t.unit(f);
    off.note((t.dagger(t.dagger(e)) - e).cwiseAbs().maxCoeff(), [&] { return "double dagger of " + t.ref(f); });
  }
  Accumulator lhs(n), rhs(n);
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (!t.composable(g, f)) continue;
      for (const Term& x : t.structure(g, f))
        for (const Term& y : t.dagger_terms(x.index)) lhs.add(y.index, std::conj(x.coeff) * y.coeff);
      for (const Term& x : t.dagger_terms(f))
        for (const Term& y : t.dagger_terms(g))
          if (t.composable(x.index, y.index))
            for (const Term& z : t.structure(x.index, y.index)) rhs.add(z.index, x.coeff * y.coeff * z.coeff);
      off.note(lhs.drain_against(rhs), [&] { return "dagger of " + t.ref(g) + " o " + t.ref(f); });
    }
  return off;
}

}  // namespace

double TubeCategory::associativity_residual() const { return associativity_offender(*this).residual; }
double TubeCategory::identity_residual() const { return identity_offender(*this).residual; }
double TubeCategory::dagger_residual() const { return dagger_offender(*this).residual; }

TubeCategory TubeCategory::assemble(std::string name, std::vector<std::string> objects,
                                    std::vector<TubeBasisMorphism> basis, std::vector<std::vector<Term>> compose,
                                    std::optional<std::vector<std::vector<Term>>> dagger, Provenance provenance,
                                    bool unitary, std::string unit_defect,
                                    std::map<std::string, std::string> defect_duals) {
  TubeCategory t;
  t.name_ = std::move(name);
  t.objects_ = std::move(objects);
  t.basis_ = std::move(basis);
  t.compose_ = std::move(compose);
  t.dagger_ = std::move(dagger);
  t.provenance_ = provenance;
  t.unitary_ = unitary;
  t.unit_defect_ = std::move(unit_defect);
  t.defect_duals_ = std::move(defect_duals);
  const int n = t.dim();
  if (static_cast<int>(t.compose_.size()) != n * n) throw Error(ErrorCode::ShapeError, "composition table size");
  if (t.dagger_ && static_cast<int>(t.dagger_->size()) != n) throw Error(ErrorCode::ShapeError, "dagger table size");
  std::set<std::string> refs;
  for (int i = 0; i < n; ++i) {
    const auto& b = t.basis_[i];
    if (b.source < 0 || b.target < 0 || b.source >= t.object_count() || b.target >= t.object_count()) {
      throw Error(ErrorCode::BasisMismatch, "basis morphism with unknown end");
    }
    if (!refs.insert(t.ref(i)).second) throw Error(ErrorCode::BasisMismatch, "duplicate basis morphism " + t.ref(i));
  }
  t.identity_.assign(t.object_count(), -1);
  for (int i = 0; i < n; ++i) {
    const auto& b = t.basis_[i];
    if (b.source == b.target && b.defect == t.unit_defect_) {
      if (t.identity_[b.source] != -1) throw Error(ErrorCode::BasisMismatch, "two identities on " + t.objects_[b.source]);
      t.identity_[b.source] = i;
    }
  }
  for (int x = 0; x < t.object_count(); ++x)
    if (t.identity_[x] < 0) throw Error(ErrorCode::BasisMismatch, "no identity on object " + t.objects_[x]);
  for (auto& terms : t.compose_)
    for (const Term& term : terms)
      if (term.index < 0 || term.index >= n) throw Error(ErrorCode::BasisMismatch, "term index out of range");
  return t;
}

int channel_space_dim(const FusionCategoryData& cat, int A, int X, int Y) {
  int s = 0;
  for (int k = 0; k < cat.size(); ++k) s += cat.ring(A, X, k) * cat.ring(Y, A, k);
  return s;
}

TubeCategory derive_tube(const FusionCategoryData& cat) {
  if (!cat.f_symbols) throw Error(ErrorCode::MissingFSymbols, cat.name + " has no F-symbols");
  if (!cat.ring.multiplicity_free()) {
    throw Error(ErrorCode::MultiplicityNotSupported, cat.name + " has fusion multiplicities above one");
  }
  const int n = cat.size();
  const FusionRing& N = cat.ring;

  std::vector<TubeBasisMorphism> basis;
  std::map<std::array<int, 4>, int> index;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int a = 0; a < n; ++a) {
        const bool ambiguous = channel_space_dim(cat, a, x, y) > 1;
        for (int k = 0; k < n; ++k)
          if (N(a, x, k) && N(y, a, k)) {
            index[{x, y, a, k}] = static_cast<int>(basis.size());
            basis.push_back({x, y, cat.labels[a], ambiguous ? cat.labels[k] : std::string()});
          }
      }
  std::vector<std::array<int, 4>> keys(basis.size());
  for (const auto& [k, i] : index) keys[i] = k;

  // Inverse F-matrices, G^{abc}_d[f,e].
  std::map<std::array<int, 4>, std::tuple<ComplexMatrix, std::vector<int>, std::vector<int>>> inverses;
  auto G = [&](int a, int b, int c, int d, int f, int e) -> Complex {
    auto it = inverses.find({a, b, c, d});
    if (it == inverses.end()) {
      std::vector<int> es, fs;
      const ComplexMatrix m = cat.f_matrix(a, b, c, d, &es, &fs);
      ComplexMatrix inv = m.size() ? ComplexMatrix(m.inverse()) : m;
      if (m.size() && !all_finite(inv)) {
        throw Error(ErrorCode::MissingFSymbols, fmt::format("singular F-matrix for ({},{},{};{})", a, b, c, d));
      }
      it = inverses.emplace(std::array<int, 4>{a, b, c, d}, std::make_tuple(inv, es, fs)).first;
    }
    const auto& [inv, es, fs] = it->second;
    auto fi = std::find(fs.begin(), fs.end(), f);
    auto ei = std::find(es.begin(), es.end(), e);
    if (fi == fs.end() || ei == es.end()) return 0.0;
    return inv(fi - fs.begin(), ei - es.begin());
  };

  const int dim = static_cast<int>(basis.size());
  std::vector<std::vector<Term>> compose(static_cast<size_t>(dim) * dim);
  for (int gi = 0; gi < dim; ++gi)
    for (int fi = 0; fi < dim; ++fi) {
      const auto [y, z, a, k] = keys[gi];
      const auto [x, y2, b, l] = keys[fi];
      if (y != y2) continue;
      std::vector<Term>& out = compose[gi * dim + fi];
      for (int c : N.fuse(a, b))
        for (int m = 0; m < n; ++m) {
          auto it = index.find({x, z, c, m});
          if (it == index.end()) continue;
          const Complex v = cat.F(a, b, x, m, c, l) * G(a, y, b, m, l, k) * cat.F(z, a, b, m, k, c);
          if (std::abs(v) > 1e-14) out.push_back({it->second, v});
        }
    }

  std::optional<std::vector<std::vector<Term>>> dagger;
  if (cat.unitary) {
    const std::vector<double> w = cat.tube_weights();
    dagger.emplace(dim);
    for (int fi = 0; fi < dim; ++fi) {
      const auto [x, y, a, k] = keys[fi];
      const int ad = N.duals[a];
      const Complex norm = cat.F(a, ad, a, a, 0, 0);
      const double scale = (w[y] / w[x]) * (w[y] / w[x]);
      for (int m = 0; m < n; ++m) {
        auto it = index.find({y, x, ad, m});
        if (it == index.end()) continue;
        const Complex v = G(m, a, ad, m, 0, x) * cat.F(ad, y, a, x, m, k) * G(ad, a, x, x, k, 0) / norm * scale;
        if (std::abs(v) > 1e-14) (*dagger)[fi].push_back({it->second, v});
      }
    }
  }

  std::map<std::string, std::string> duals;
  for (int a = 0; a < n; ++a) duals[cat.labels[a]] = cat.labels[N.duals[a]];
  return TubeCategory::assemble(cat.name, cat.labels, std::move(basis), std::move(compose), std::move(dagger),
                                Provenance::Derived, cat.unitary, cat.labels[0], std::move(duals));
}

TubeCategory presented_tube(const TubePresentation& p, const Tolerance& tol) {
  std::vector<TubeBasisMorphism> basis;
  auto obj = [&](const std::string& label) {
    auto it = std::find(p.objects.begin(), p.objects.end(), label);
    if (it == p.objects.end()) throw Error(ErrorCode::BasisMismatch, "basis refers to unknown object '" + label + "'");
    return static_cast<int>(it - p.objects.begin());
  };
  for (const auto& b : p.basis) basis.push_back({obj(b.src), obj(b.tgt), b.defect, b.channel});
  const int n = static_cast<int>(basis.size());

  // Skeleton with empty tables, used to resolve references.
  TubeCategory skeleton = TubeCategory::assemble(p.name, p.objects, basis, std::vector<std::vector<Term>>(n * n),
                                                 std::nullopt, Provenance::Presented, p.unitary, p.unit_defect,
                                                 p.defect_duals);
  std::vector<std::vector<Term>> compose(static_cast<size_t>(n) * n);
  std::vector<bool> given(static_cast<size_t>(n) * n, false);
  auto to_terms = [&](const std::vector<std::pair<std::string, Complex>>& in) {
    std::vector<Term> out;
    for (const auto& [r, c] : in) out.push_back({skeleton.find(r), c});
    return out;
  };
  for (const auto& e : p.compose) {
    const int g = skeleton.find(e.g), f = skeleton.find(e.f);
    if (!skeleton.composable(g, f)) throw Error(ErrorCode::NonComposable, "table composes " + e.g + " after " + e.f);
    if (given[g * n + f]) throw Error(ErrorCode::BasisMismatch, "duplicate composition entry " + e.g + " o " + e.f);
    given[g * n + f] = true;
    compose[g * n + f] = to_terms(e.terms);
    for (const Term& t : compose[g * n + f]) {
      if (basis[t.index].source != basis[f].source || basis[t.index].target != basis[g].target) {
        throw Error(ErrorCode::BasisMismatch, "composition " + e.g + " o " + e.f + " leaves its block");
      }
    }
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (given[g * n + f] || basis[g].source != basis[f].target) continue;
      if (g == skeleton.identity(basis[f].target)) compose[g * n + f] = {{f, 1.0}};
      else if (f == skeleton.identity(basis[g].source)) compose[g * n + f] = {{g, 1.0}};
    }
  std::optional<std::vector<std::vector<Term>>> dagger;
  if (p.dagger) {
    dagger.emplace(n);
    std::vector<bool> seen(n, false);
    for (const auto& d : *p.dagger) {
      const int f = skeleton.find(d.f);
      seen[f] = true;
      (*dagger)[f] = to_terms(d.terms);
    }
    for (int x = 0; x < skeleton.object_count(); ++x) {
      const int id = skeleton.identity(x);
      if (!seen[id]) (*dagger)[id] = {{id, 1.0}};
      seen[id] = true;
    }
    for (int f = 0; f < n; ++f)
      if (!seen[f]) throw Error(ErrorCode::DaggerViolation, "dagger table has no entry for " + skeleton.ref(f));
  }
  TubeCategory t = TubeCategory::assemble(p.name, p.objects, std::move(basis), std::move(compose), std::move(dagger),
                                          Provenance::Presented, p.unitary, p.unit_defect, p.defect_duals);
  const Offender assoc = associativity_offender(t);
  if (assoc.residual > tol.abs_eps) {
    throw Error(ErrorCode::AssociativityViolation,
                fmt::format("{} fails by {:.3e} at {}", p.name, assoc.residual, assoc.where));
  }
  const Offender ident = identity_offender(t);
  if (ident.residual > tol.abs_eps) {
    throw Error(ErrorCode::AssociativityViolation,
                fmt::format("{} breaks the identity law by {:.3e} at {}", p.name, ident.residual, ident.where));
  }
  const Offender dag = dagger_offender(t);
  if (dag.residual > tol.abs_eps) {
    throw Error(ErrorCode::DaggerViolation, fmt::format("{} fails by {:.3e} at {}", p.name, dag.residual, dag.where));
  }
  return t;
}

TubePresentation to_presentation(const TubeCategory& t, double drop_below) {
  TubePresentation p;
  p.name = t.name();
  p.objects = t.objects();
  p.unit_defect = t.unit_defect();
  p.unitary = t.unitary();
  for (const auto& d : t.defects()) {
    const std::string dual = t.defect_dual(d);
    if (!dual.empty()) p.defect_duals[d] = dual;
  }
  for (const auto& b : t.basis()) p.basis.push_back({t.objects()[b.source], t.objects()[b.target], b.defect, b.channel});
  auto terms_of = [&](const std::vector<Term>& in) {
    std::vector<std::pair<std::string, Complex>> out;
    for (const Term& x : in)
      if (std::abs(x.coeff) >= drop_below) out.emplace_back(t.ref(x.index), x.coeff);
    return out;
  };
  const int n = t.dim();
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (!t.composable(g, f)) continue;
      const auto& b = t.basis();
      if (g == t.identity(b[f].target) || f == t.identity(b[g].source)) continue;
      auto terms = terms_of(t.structure(g, f));
      if (!terms.empty()) p.compose.push_back({t.ref(g), t.ref(f), std::move(terms)});
    }
  if (t.has_dagger()) {
    p.dagger.emplace();
    for (int f = 0; f < n; ++f) p.dagger->push_back({t.ref(f), terms_of(t.dagger_terms(f))});
  }
  return p;
}

ValidationReport verify_against_reference(const TubeCategory& t, const TubePresentation& ref, const Tolerance& tol) {
  ValidationReport rep;
  auto compare = [&](const std::vector<Term>& got, const std::vector<std::pair<std::string, Complex>>& want,
                     const std::string& where) {
    std::map<int, Complex> diff;
    for (const Term& x : got) diff[x.index] += x.coeff;
    for (const auto& [r, c] : want) diff[t.find(r)] -= c;
    for (const auto& [i, d] : diff) {
      const double dev = std::abs(d);
      if (dev > rep.residual) rep.residual = dev;
      if (dev > tol.abs_eps && rep.pass) {
        rep.pass = false;
        rep.detail = fmt::format("{}: coefficient of {} off by {:.6g}", where, t.ref(i), dev);
      }
    }
  };
  for (const auto& b : ref.basis) {
    std::string r = b.src + ">" + b.tgt + ";" + b.defect + (b.channel.empty() ? "" : ";" + b.channel);
    t.find(r);
  }
  for (const auto& e : ref.compose) {
    const int g = t.find(e.g), f = t.find(e.f);
    if (!t.composable(g, f)) throw Error(ErrorCode::BasisMismatch, "reference composes " + e.g + " after " + e.f);
    compare(t.structure(g, f), e.terms, e.g + " o " + e.f);
  }
  if (ref.dagger) {
    for (const auto& d : *ref.dagger) compare(t.dagger_terms(t.find(d.f)), d.terms, "dagger of " + d.f);
  }
  return rep;
}

bool regular_representation_faithful(const TubeCategory& t) {
  TubeVector one = TubeVector::Zero(t.dim());
  for (int x = 0; x < t.object_count(); ++x) one(t.identity(x)) = 1.0;
  ComplexMatrix images(t.dim(), t.dim());
  for (int g = 0; g < t.dim(); ++g) images.col(g) = t.left_multiplication(g) * one;
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(images);
  qr.setThreshold(1e-10);
  return qr.rank() == t.dim();
}

}  // namespace tubealg
