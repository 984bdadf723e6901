#include "tubealg/builtins.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "tables_internal.hpp"
#include "tubealg/errors.hpp"

namespace tubealg {

namespace {

constexpr double kPhi = std::numbers::phi;
const Complex kI(0.0, 1.0);

using Entries = std::vector<std::pair<std::string, ComplexMatrix>>;
using Terms = std::vector<std::pair<std::string, Complex>>;

ComplexMatrix scalar(Complex c) {
  ComplexMatrix m(1, 1);
  m(0, 0) = c;
  return m;
}

Entries scalars(const Terms& in) {
  Entries out;
  for (const auto& [r, c] : in) out.emplace_back(r, scalar(c));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    const size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

ChannelBasis basis_from(const TubeCategory& t, const std::string& defect, const std::string& source, const Terms& terms) {
  ChannelBasis b{defect, t.object_index(source), {}};
  std::map<int, int> counter;
  for (const auto& [r, c] : terms) {
    const int i = t.find(r);
    const int target = t.basis()[i].target;
    TubeVector v = TubeVector::Zero(t.dim());
    v(i) = c;
    b.channels.push_back({target, counter[target]++, v});
  }
  std::stable_sort(b.channels.begin(), b.channels.end(),
                   [](const Channel& x, const Channel& y) { return std::tie(x.target, x.index) < std::tie(y.target, y.index); });
  return b;
}

// Presentation with basis and duals taken from a derived tube.
TubePresentation with_basis(TubePresentation tables, const TubeCategory& derived) {
  const TubePresentation full = to_presentation(derived);
  tables.basis = full.basis;
  tables.defect_duals = full.defect_duals;
  tables.unit_defect = full.unit_defect;
  return tables;
}

// ---- golden categories -------------------------------------------------

std::vector<GeneralisedCharge> fib_charges(const TubeCategory& t) {
  const double ip = 1.0 / kPhi;
  std::vector<GeneralisedCharge> out;
  out.push_back(make_charge(t, "U_1", {{"1", 1}}, scalars({{"1>1;tau", kPhi}})));
  for (const char* sign : {"+", "-"}) {
    const double s = sign[0] == '+' ? 1.0 : -1.0;
    const Complex x = -0.5 + s * kI * std::sqrt(0.75 - 1.0 / kPhi);
    out.push_back(make_charge(t, std::string("U_tau") + sign, {{"tau", 1}},
                              scalars({{"tau>tau;tau;1", x}, {"tau>tau;tau;tau", -kPhi * (1.0 + kPhi * x)}})));
  }
  out.push_back(make_charge(t, "U_1tau", {{"1", 1}, {"tau", 1}},
                            scalars({{"1>1;tau", -ip},
                                     {"tau>tau;tau;1", ip},
                                     {"tau>tau;tau;tau", ip * ip},
                                     {"1>tau;tau", std::sqrt(kPhi) * (1.0 - kI * ip)},
                                     {"tau>1;tau", (1.0 + kI * ip) / std::sqrt(kPhi)}})));
  return out;
}

std::vector<GeneralisedCharge> yang_lee_charges(const TubeCategory& t) {
  std::vector<GeneralisedCharge> out;
  out.push_back(make_charge(t, "U_1", {{"1", 1}}, scalars({{"1>1;tau", -1.0 / kPhi}})));
  for (const char* sign : {"+", "-"}) {
    const double s = sign[0] == '+' ? 1.0 : -1.0;
    const Complex x = -0.5 + s * kI * std::sqrt(kPhi + 0.75);
    out.push_back(make_charge(t, std::string("U_tau") + sign, {{"tau", 1}},
                              scalars({{"tau>tau;tau;1", x}, {"tau>tau;tau;tau", (1.0 - x / kPhi) / kPhi}})));
  }
  out.push_back(make_charge(t, "U_1tau", {{"1", 1}, {"tau", 1}},
                            scalars({{"1>1;tau", kPhi},
                                     {"tau>tau;tau;1", -kPhi},
                                     {"tau>tau;tau;tau", kPhi * kPhi},
                                     {"1>tau;tau", std::sqrt(kPhi) * (1.0 + kI * kPhi)},
                                     {"tau>1;tau", (1.0 - kI * kPhi) / std::sqrt(kPhi)}})));
  return out;
}

std::vector<GeneralisedCharge> rep_s3_charges(const TubeCategory& t) {
  const double r2 = std::numbers::sqrt2, r3 = std::sqrt(3.0);
  std::vector<GeneralisedCharge> out;
  out.push_back(make_charge(t, "U_1", {{"1", 1}}, scalars({{"1>1;psi", 1.0}, {"1>1;pi", 2.0}})));
  out.push_back(make_charge(t, "U_psi", {{"psi", 1}}, scalars({{"psi>psi;psi", 1.0}, {"psi>psi;pi", -2.0}})));
  for (int n = 0; n < 3; ++n) {
    const Complex q = std::polar(1.0, 2.0 * std::numbers::pi * n / 3.0);
    out.push_back(make_charge(t, fmt::format("U_pi{}", n), {{"pi", 1}},
                              scalars({{"pi>pi;psi", -1.0},
                                       {"pi>pi;pi;1", q / 2.0},
                                       {"pi>pi;pi;psi", -q / 2.0},
                                       {"pi>pi;pi;pi", std::conj(q)}})));
  }
  out.push_back(make_charge(t, "U_1psi", {{"1", 1}, {"psi", 1}},
                            scalars({{"1>1;psi", 1.0},
                                     {"1>1;pi", -1.0},
                                     {"1>psi;pi", r3},
                                     {"psi>psi;psi", 1.0},
                                     {"psi>psi;pi", 1.0},
                                     {"psi>1;pi", r3}})));
  out.push_back(make_charge(t, "U_1pi", {{"1", 1}, {"pi", 1}},
                            scalars({{"1>1;psi", -1.0},
                                     {"1>1;pi", 0.0},
                                     {"1>pi;pi", r2},
                                     {"pi>1;pi", r2},
                                     {"pi>pi;psi", 1.0},
                                     {"pi>pi;pi;1", 0.5},
                                     {"pi>pi;pi;psi", 0.5},
                                     {"pi>pi;pi;pi", 0.0}})));
  out.push_back(make_charge(t, "U_psipi", {{"psi", 1}, {"pi", 1}},
                            scalars({{"psi>psi;psi", -1.0},
                                     {"psi>psi;pi", 0.0},
                                     {"psi>pi;pi", r2},
                                     {"pi>psi;pi", -r2},
                                     {"pi>pi;psi", 1.0},
                                     {"pi>pi;pi;1", -0.5},
                                     {"pi>pi;pi;psi", -0.5},
                                     {"pi>pi;pi;pi", 0.0}})));
  return out;
}

BuiltinCategory load_fib() {
  BuiltinCategory b;
  b.id = "fib";
  b.fusion = build_fib();
  b.tube = derive_tube(*b.fusion);
  b.charges = fib_charges(b.tube);
  const double ip = 1.0 / kPhi;
  b.reference_bases.push_back(basis_from(b.tube, "tau", "1", {{"1>1;tau", ip}, {"1>tau;tau", ip}}));
  b.reference_bases.push_back(basis_from(
      b.tube, "tau", "tau", {{"tau>1;tau", ip}, {"tau>tau;tau;1", std::sqrt(kPhi)}, {"tau>tau;tau;tau", ip}}));
  b.reference_tables = with_basis(detail::fib_tables(), b.tube);
  return b;
}

BuiltinCategory load_yang_lee() {
  BuiltinCategory b;
  b.id = "yang-lee";
  b.fusion = build_yang_lee();
  b.tube = derive_tube(*b.fusion);
  b.charges = yang_lee_charges(b.tube);
  b.reference_tables = with_basis(detail::yang_lee_tables(), b.tube);
  return b;
}

BuiltinCategory load_rep_s3() {
  BuiltinCategory b;
  b.id = "rep-s3";
  b.fusion = build_rep_s3();
  b.tube = derive_tube(*b.fusion);
  b.charges = rep_s3_charges(b.tube);
  const double h = 0.5, r = 1.0 / std::numbers::sqrt2;
  b.reference_bases.push_back(basis_from(b.tube, "pi", "1", {{"1>1;pi", h}, {"1>psi;pi", h}, {"1>pi;pi", r}}));
  b.reference_bases.push_back(
      basis_from(b.tube, "pi", "psi", {{"psi>1;pi", h}, {"psi>psi;pi", h}, {"psi>pi;pi", r}}));
  b.reference_bases.push_back(basis_from(
      b.tube, "pi", "pi",
      {{"pi>1;pi", h}, {"pi>psi;pi", h}, {"pi>pi;pi;1", 1.0}, {"pi>pi;pi;psi", 1.0}, {"pi>pi;pi;pi", r}}));
  b.reference_tables = with_basis(detail::rep_s3_tables(false), b.tube);
  return b;
}

// ---- 2Rep((Z2 x Z2)[1] x| Z2) ---------------------------------------------

}  // namespace

TubePresentation two_rep_skeleton() {
  TubePresentation p;
  p.name = "2rep-z2z2-z2";
  p.objects = {"1", "gamma"};
  p.unit_defect = "1";
  p.defect_duals = {{"1", "1"}, {"V", "V"}, {"D", "D"}};
  p.basis = {{"1", "1", "1", ""},         {"1", "1", "V", ""},         {"1", "1", "D", ""},
             {"1", "gamma", "D", ""},     {"gamma", "1", "D", ""},     {"gamma", "gamma", "1", ""},
             {"gamma", "gamma", "V", ""}, {"gamma", "gamma", "D", ""}};
  p.dagger.emplace();
  for (const auto& b : p.basis) {
    const std::string r = b.src + ">" + b.tgt + ";" + b.defect;
    const std::string back = b.tgt + ">" + b.src + ";" + b.defect;
    p.dagger->push_back({r, {{back, 1.0}}});
  }
  return p;
}

std::vector<GeneralisedCharge> two_rep_charges(const TubeCategory& t, bool as_printed) {
  const double r2 = std::numbers::sqrt2;
  std::vector<GeneralisedCharge> out;
  for (const char* sign : {"+", "-"}) {
    const double s = sign[0] == '+' ? 1.0 : -1.0;
    out.push_back(make_charge(t, std::string("U_1") + sign, {{"1", 1}}, scalars({{"1>1;V", 1.0}, {"1>1;D", s * r2}})));
  }
  for (const char* sign : {"+", "-"}) {
    const double s = sign[0] == '+' ? 1.0 : -1.0;
    out.push_back(make_charge(t, std::string("U_gamma") + sign, {{"gamma", 1}},
                              scalars({{"gamma>gamma;V", -1.0}, {"gamma>gamma;D", s * r2}})));
  }
  out.push_back(make_charge(t, "U_1gamma", {{"1", 1}, {"gamma", 1}},
                            scalars({{"1>1;V", -1.0},
                                     {"1>1;D", 0.0},
                                     {"gamma>gamma;V", as_printed ? -1.0 : 1.0},
                                     {"gamma>gamma;D", 0.0},
                                     {"gamma>1;D", r2},
                                     {"1>gamma;D", r2}})));
  return out;
}

namespace {

TubePresentation two_rep_tables() {
  const TubePresentation skeleton = two_rep_skeleton();
  const TubeCategory bare = presented_tube(skeleton);
  TubePresentation p = reconstruct_from_charges(skeleton, two_rep_charges(bare, false), bare);
  p.note = "structure constants reconstructed from the five irreducible charges";
  return p;
}

BuiltinCategory load_two_rep() {
  BuiltinCategory b;
  b.id = "2rep-z2z2-z2";
  b.reference_tables = two_rep_tables();
  b.tube = presented_tube(*b.reference_tables);
  b.charges = two_rep_charges(b.tube, false);
  const double r = 1.0 / std::numbers::sqrt2;
  b.reference_bases.push_back(basis_from(b.tube, "D", "1", {{"1>1;D", r}, {"1>gamma;D", r}}));
  b.reference_bases.push_back(basis_from(b.tube, "D", "gamma", {{"gamma>1;D", r}, {"gamma>gamma;D", r}}));
  return b;
}

// ---- pointed and 2-group categories ---------------------------------------

Cocycle3 parse_cocycle(const FiniteGroup& g, const std::string& spec, const std::string& id) {
  if (spec == "0") return trivial_cocycle(g);
  if (g.name == "z2xz2" && spec.size() == 3 && std::all_of(spec.begin(), spec.end(), [](char c) { return c == '0' || c == '1'; })) {
    return klein_trilinear_cocycle(g, spec[0] - '0', spec[1] - '0', spec[2] - '0');
  }
  if (g.name[0] == 'z' && g.name != "z2xz2" && !spec.empty() &&
      std::all_of(spec.begin(), spec.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const int p = std::stoi(spec);
    if (p < g.order()) return cyclic_cocycle(g, p);
  }
  throw Error(ErrorCode::UnknownCategory, "unsupported cocycle in '" + id + "'");
}

BuiltinCategory load_pointed(const std::string& id, const std::vector<std::string>& parts, std::uint64_t seed) {
  if (parts.size() != 3) throw Error(ErrorCode::UnknownCategory, "expected pointed:<group>:<cocycle>, got '" + id + "'");
  const FiniteGroup g = group_by_name(parts[1]);
  const Cocycle3 omega = parse_cocycle(g, parts[2], id);
  BuiltinCategory b;
  b.id = id;
  b.fusion = build_pointed(g, omega);
  b.fusion->name = id;
  ActionGroupoid data = pointed_groupoid(g, omega);
  data.name = id;
  b.tube = groupoid_tube(data);
  b.charges = groupoid_charges(data, b.tube, 0, seed);
  b.groupoid = std::move(data);
  return b;
}

BuiltinCategory load_two_group(const std::string& id, std::uint64_t seed) {
  std::optional<ActionGroupoid> data;
  if (id == "2group:v4-z2-mixed") {
    const FiniteGroup g = klein_group(), a = cyclic_group(2);
    std::vector<std::vector<int>> act(4, std::vector<int>{0, 1});
    std::vector<Complex> pairing(4 * 4 * 2);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int c = 0; c < 2; ++c) pairing[(x * 4 + y) * 2 + c] = ((x & 1) * ((y >> 1) & 1) * c) % 2 ? -1.0 : 1.0;
    data = two_group_groupoid(id, g, a, act, pairing);
  } else if (id == "2group:z4-v4-swap") {
    const FiniteGroup g = cyclic_group(4), a = klein_group();
    std::vector<std::vector<int>> act(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
      for (int c = 0; c < 4; ++c) act[x][c] = x % 2 ? ((c & 1) << 1) | ((c >> 1) & 1) : c;
    std::vector<Complex> pairing(4 * 4 * 4);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int c = 0; c < 4; ++c) {
          const int carry = x + y >= 4 ? 1 : 0;
          const int weight = (c & 1) + ((c >> 1) & 1);
          pairing[(x * 4 + y) * 4 + c] = (carry * weight) % 2 ? -1.0 : 1.0;
        }
    data = two_group_groupoid(id, g, a, act, pairing);
  } else {
    throw Error(ErrorCode::UnknownCategory, "unknown 2-group category '" + id + "'");
  }
  BuiltinCategory b;
  b.id = id;
  b.tube = groupoid_tube(*data);
  b.charges = groupoid_charges(*data, b.tube, 0, seed);
  b.groupoid = std::move(data);
  return b;
}

// ---- Tambara-Yamagami -------------------------------------------------------

struct TyData {
  FiniteGroup group;
  Bicharacter chi;
  double s;
};

TyData parse_ty(const std::string& id, const std::vector<std::string>& parts) {
  if (parts.size() != 4 || (parts[3] != "+" && parts[3] != "-")) {
    throw Error(ErrorCode::UnknownCategory, "expected ty:<group>:<chi>:<+|->, got '" + id + "'");
  }
  TyData d{group_by_name(parts[1]), {}, 0.0};
  const int n = d.group.order();
  if (d.group.name == "z2xz2") {
    if (parts[2] == "hyp") d.chi = klein_hyperbolic_bicharacter(d.group);
    else if (parts[2] == "diag") d.chi = klein_diagonal_bicharacter(d.group);
    else throw Error(ErrorCode::UnknownCategory, "z2xz2 bicharacter must be hyp or diag in '" + id + "'");
  } else if (d.group.name != "s3" && !parts[2].empty() &&
             std::all_of(parts[2].begin(), parts[2].end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const int k = std::stoi(parts[2]);
    if (k <= 0 || k >= std::max(n, 2) || std::gcd(k, n) != 1) {
      throw Error(ErrorCode::DegenerateBicharacter, "k must be coprime to |A| in '" + id + "'");
    }
    d.chi = cyclic_bicharacter(d.group, k);
  } else {
    throw Error(ErrorCode::UnknownCategory, "unsupported group or bicharacter in '" + id + "'");
  }
  d.s = (parts[3] == "+" ? 1.0 : -1.0) / std::sqrt(static_cast<double>(n));
  return d;
}

struct TyRefs {
  const FiniteGroup& g;
  std::string el(int a) const { return g.elements[a]; }
  std::string xa(int x, int a) const { return el(x) + ">" + el(x) + ";" + el(a); }
  std::string m(int x, int y) const { return el(x) + ">" + el(y) + ";m"; }
  std::string ma(int a) const { return "m>m;" + el(a); }
  std::string mm(int b) const { return "m>m;m;" + el(b); }
};

TubePresentation ty_presentation(const std::string& id, const TyData& d) {
  const FiniteGroup& A = d.group;
  const Bicharacter& chi = d.chi;
  const int n = A.order();
  const double s = d.s;
  auto cc = [&](int a, int b) { return std::conj(chi(a, b)); };
  const TyRefs r{A};
  TubePresentation p;
  p.name = id;
  p.objects = A.elements;
  p.objects.push_back("m");
  p.unit_defect = A.elements[0];
  for (int a = 0; a < n; ++a) p.defect_duals[r.el(a)] = r.el(A.inv(a));
  p.defect_duals["m"] = "m";
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a) p.basis.push_back({r.el(x), r.el(x), r.el(a), ""});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) p.basis.push_back({r.el(x), r.el(y), "m", ""});
  for (int a = 0; a < n; ++a) p.basis.push_back({"m", "m", r.el(a), ""});
  for (int b = 0; b < n; ++b) p.basis.push_back({"m", "m", "m", r.el(b)});

  auto add = [&](std::string g, std::string f, Terms terms) { p.compose.push_back({std::move(g), std::move(f), std::move(terms)}); };
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) add(r.xa(x, a), r.xa(x, b), {{r.xa(x, A.mul(a, b)), 1.0}});
    for (int y = 0; y < n; ++y)
      for (int a = 0; a < n; ++a) {
        add(r.m(x, y), r.xa(x, a), {{r.m(x, y), chi(a, y)}});
        add(r.xa(y, a), r.m(x, y), {{r.m(x, y), chi(a, x)}});
      }
    for (int y = 0; y < n; ++y) {
      Terms back;
      for (int a = 0; a < n; ++a) back.push_back({r.xa(x, a), cc(x, y) * cc(a, y)});
      add(r.m(y, x), r.m(x, y), back);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = A.mul(a, b);
      add(r.ma(a), r.ma(b), {{r.ma(ab), cc(a, b)}});
      add(r.ma(a), r.mm(b), {{r.mm(ab), chi(a, ab)}});
      add(r.mm(b), r.ma(a), {{r.mm(ab), chi(a, ab)}});
      Terms sum;
      for (int c = 0; c < n; ++c) sum.push_back({r.ma(c), s / n * chi(a, b) * cc(ab, c)});
      add(r.mm(a), r.mm(b), sum);
    }

  p.dagger.emplace();
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < n; ++a) p.dagger->push_back({r.xa(x, a), {{r.xa(x, A.inv(a)), 1.0}}});
    for (int y = 0; y < n; ++y) p.dagger->push_back({r.m(x, y), {{r.m(y, x), chi(x, y)}}});
  }
  for (int a = 0; a < n; ++a) {
    p.dagger->push_back({r.ma(a), {{r.ma(A.inv(a)), cc(a, a)}}});
    Terms sum;
    for (int b = 0; b < n; ++b) sum.push_back({r.mm(b), s * cc(a, b)});
    p.dagger->push_back({r.mm(a), sum});
  }
  return p;
}

// All rho with rho(a) rho(b) = chi(a,b) rho(ab), built by extending along
// cyclic subgroups one generator at a time.
std::vector<std::vector<Complex>> antiderivatives(const FiniteGroup& A, const Bicharacter& chi) {
  const int n = A.order();
  struct Partial {
    std::vector<Complex> rho;
    std::vector<bool> known;
  };
  std::vector<Partial> partials{{std::vector<Complex>(n, 1.0), std::vector<bool>(n, false)}};
  partials[0].known[0] = true;
  for (;;) {
    const auto& k0 = partials[0].known;
    const auto it = std::find(k0.begin(), k0.end(), false);
    if (it == k0.end()) break;
    const int g = static_cast<int>(it - k0.begin());
    int m = 1, gm = g;
    while (!k0[gm]) {
      gm = A.mul(gm, g);
      ++m;
    }
    std::vector<Partial> next;
    for (const auto& part : partials) {
      Complex target = part.rho[gm];
      int gk = g;
      for (int k = 1; k < m; ++k) {
        target *= chi(gk, g);
        gk = A.mul(gk, g);
      }
      const Complex root = std::polar(std::pow(std::abs(target), 1.0 / m), std::arg(target) / m);
      for (int j = 0; j < m; ++j) {
        Partial q = part;
        const Complex rg = root * std::polar(1.0, 2.0 * std::numbers::pi * j / m);
        // rho(g^k) from rho(g^(k-1)) rho(g) = chi(g^(k-1), g) rho(g^k).
        std::vector<int> powers{0};
        std::vector<Complex> values{1.0};
        for (int k = 1; k < m; ++k) {
          const int prev = powers.back();
          powers.push_back(A.mul(prev, g));
          values.push_back(k == 1 ? rg : values.back() * rg / chi(prev, g));
        }
        const std::vector<int> old = [&] {
          std::vector<int> v;
          for (int h = 0; h < n; ++h)
            if (part.known[h]) v.push_back(h);
          return v;
        }();
        for (int k = 1; k < m; ++k)
          for (int h : old) {
            const int gh = A.mul(powers[k], h);
            q.rho[gh] = values[k] * part.rho[h] / chi(powers[k], h);
            q.known[gh] = true;
          }
        next.push_back(std::move(q));
      }
    }
    partials = std::move(next);
  }
  std::vector<std::vector<Complex>> out;
  for (auto& p : partials) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (std::abs(p.rho[a] * p.rho[b] - chi(a, b) * p.rho[A.mul(a, b)]) > 1e-9) {
          throw Error(ErrorCode::DegenerateBicharacter, "no antiderivative for the bicharacter");
        }
    out.push_back(std::move(p.rho));
  }
  return out;
}

std::vector<GeneralisedCharge> ty_charges(const TubeCategory& t, const TyData& d) {
  const FiniteGroup& A = d.group;
  const Bicharacter& chi = d.chi;
  const int n = A.order();
  const double s = d.s;
  const TyRefs r{A};
  std::vector<GeneralisedCharge> out;
  for (int x = 0; x < n; ++x) {
    const Complex delta = std::sqrt(std::conj(chi(x, x)));
    for (const char* sign : {"+", "-"}) {
      const Complex dl = sign[0] == '+' ? delta : -delta;
      Terms e;
      for (int a = 0; a < n; ++a) e.push_back({r.xa(x, a), chi(a, x)});
      e.push_back({r.m(x, x), dl / s});
      out.push_back(make_charge(t, "U_" + r.el(x) + sign, {{r.el(x), 1}}, scalars(e)));
    }
  }
  const auto rhos = antiderivatives(A, chi);
  for (size_t i = 0; i < rhos.size(); ++i) {
    const auto& rho = rhos[i];
    Complex sum = 0.0;
    for (const Complex& v : rho) sum += std::conj(v);
    const Complex delta = std::sqrt(s * sum);
    for (const char* sign : {"+", "-"}) {
      const Complex dl = sign[0] == '+' ? delta : -delta;
      Terms e;
      for (int a = 0; a < n; ++a) {
        e.push_back({r.ma(a), std::conj(rho[a])});
        e.push_back({r.mm(a), s * dl * rho[A.inv(a)]});
      }
      out.push_back(make_charge(t, fmt::format("U_rho{}{}", i, sign), {{"m", 1}}, scalars(e)));
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Terms e;
      for (int a = 0; a < n; ++a) {
        e.push_back({r.xa(x, a), chi(a, y)});
        e.push_back({r.xa(y, a), chi(a, x)});
      }
      e.push_back({r.m(x, y), std::conj(chi(x, y)) / s});
      e.push_back({r.m(y, x), 1.0 / s});
      e.push_back({r.m(x, x), 0.0});
      e.push_back({r.m(y, y), 0.0});
      out.push_back(make_charge(t, "U_" + r.el(x) + r.el(y), {{r.el(x), 1}, {r.el(y), 1}}, scalars(e)));
    }
  return out;
}

BuiltinCategory load_ty(const std::string& id, const std::vector<std::string>& parts) {
  const TyData d = parse_ty(id, parts);
  BuiltinCategory b;
  b.id = id;
  b.fusion = build_ty(d.group, d.chi, d.s);
  b.fusion->name = id;
  b.tube = presented_tube(ty_presentation(id, d));
  b.charges = ty_charges(b.tube, d);
  const TyRefs r{d.group};
  const int n = d.group.order();
  for (int x = 0; x < n; ++x) {
    Terms e;
    for (int y = 0; y < n; ++y) e.push_back({r.m(x, y), d.s});
    b.reference_bases.push_back(basis_from(b.tube, "m", r.el(x), e));
  }
  Terms e;
  for (int a = 0; a < n; ++a) e.push_back({r.mm(a), 1.0});
  b.reference_bases.push_back(basis_from(b.tube, "m", "m", e));
  return b;
}

}  // namespace

std::vector<std::string> builtin_ids() {
  return {"fib",
          "yang-lee",
          "rep-s3",
          "2rep-z2z2-z2",
          "pointed:z2:0",
          "pointed:z2:1",
          "pointed:z3:1",
          "pointed:z2xz2:0",
          "pointed:z2xz2:011",
          "pointed:s3:0",
          "ty:z2:1:+",
          "ty:z2:1:-",
          "ty:z3:1:+",
          "ty:z3:2:-",
          "ty:z2xz2:hyp:+",
          "ty:z2xz2:diag:-",
          "2group:v4-z2-mixed",
          "2group:z4-v4-swap"};
}

BuiltinCategory load_builtin(const std::string& id, std::uint64_t seed) {
  if (id == "fib") return load_fib();
  if (id == "yang-lee") return load_yang_lee();
  if (id == "rep-s3") return load_rep_s3();
  if (id == "2rep-z2z2-z2") return load_two_rep();
  const auto parts = split(id, ':');
  if (parts[0] == "pointed") return load_pointed(id, parts, seed);
  if (parts[0] == "ty") return load_ty(id, parts);
  if (parts[0] == "2group") return load_two_group(id, seed);
  throw Error(ErrorCode::UnknownCategory, "unknown category '" + id + "'");
}

std::vector<GeneralisedCharge> builtin_charges(const std::string& id) { return load_builtin(id).charges; }

TubePresentation reference_tables(const std::string& id) {
  auto b = load_builtin(id);
  if (!b.reference_tables) throw Error(ErrorCode::UnknownCategory, id + " ships no reference tables");
  return *b.reference_tables;
}

TubePresentation rep_s3_tables_as_printed() {
  const TubeCategory t = derive_tube(build_rep_s3());
  return with_basis(detail::rep_s3_tables(true), t);
}

TubePresentation reconstruct_from_charges(const TubePresentation& skeleton, const std::vector<GeneralisedCharge>& charges,
                                          const TubeCategory& t) {
  TubePresentation out = skeleton;
  out.compose.clear();
  const int n = t.dim();
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (!t.composable(g, f)) continue;
      const int src = t.basis()[f].source, tgt = t.basis()[g].target;
      if (g == t.identity(t.basis()[f].target) || f == t.identity(t.basis()[g].source)) continue;
      const std::vector<int> block = t.block(src, tgt);
      int rows = 0;
      for (const auto& u : charges) rows += u.sector_dims[src] * u.sector_dims[tgt];
      ComplexMatrix phi = ComplexMatrix::Zero(rows, block.size());
      ComplexVector rhs = ComplexVector::Zero(rows);
      int at = 0;
      for (const auto& u : charges) {
        const int size = u.sector_dims[src] * u.sector_dims[tgt];
        if (size == 0) continue;
        const ComplexMatrix prod = u.action[g] * u.action[f];
        rhs.segment(at, size) = Eigen::Map<const ComplexVector>(prod.data(), size);
        for (size_t h = 0; h < block.size(); ++h)
          phi.col(h).segment(at, size) = Eigen::Map<const ComplexVector>(u.action[block[h]].data(), size);
        at += size;
      }
      Eigen::ColPivHouseholderQR<ComplexMatrix> qr(phi);
      qr.setThreshold(1e-10);
      if (qr.rank() != static_cast<Eigen::Index>(block.size())) {
        throw Error(ErrorCode::NonSemisimple,
                    fmt::format("charges do not separate the morphisms {}>{}", t.objects()[src], t.objects()[tgt]));
      }
      const ComplexVector c = qr.solve(rhs);
      if ((phi * c - rhs).cwiseAbs().maxCoeff() > 1e-9) {
        throw Error(ErrorCode::NonSemisimple, "charges are not multiplicative on " + t.ref(g) + " o " + t.ref(f));
      }
      Terms terms;
      for (size_t h = 0; h < block.size(); ++h)
        if (std::abs(c(h)) > 1e-12) terms.push_back({t.ref(block[h]), c(h)});
      if (!terms.empty()) out.compose.push_back({t.ref(g), t.ref(f), std::move(terms)});
    }
  return out;
}

}  // namespace tubealg
