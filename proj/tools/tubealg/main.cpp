#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <tubealg/errors.hpp>
#include <tubealg/io.hpp>

#include "session.hpp"

namespace {

using namespace tubealg;
using namespace tubealg::cli;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

// Probability totals and isometry checks in verify.
constexpr double kProbabilityTol = 1e-9;

struct Options {
  std::string category;
  std::string defect;
  std::string source;
  std::string charge;
  std::string format = "table";
  std::string output;
  std::string method = "auto";
  std::string state;
  double tolerance = 0.0;
  std::uint64_t seed = 42;

  Tolerance tol() const {
    Tolerance t;
    if (tolerance > 0.0) t = {tolerance, tolerance};
    t.validate();
    return t;
  }
  bool json() const { return format == "json"; }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::FileNotFound, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void json(const nlohmann::json& j) { stream() << canonical_json(j.dump()); }

 private:
  std::ofstream file_;
};

std::string complex_str(Complex c) {
  if (std::abs(c.imag()) < 1e-15) return fmt::format("{:.12g}", c.real());
  return fmt::format("{:.12g}{:+.12g}i", c.real(), c.imag());
}

int object_of(const Session& s, const std::string& label, const char* what) {
  if (label.empty()) throw Error(ErrorCode::InvalidArgument, std::string("--") + what + " is required");
  return s.tube.object_index(label);
}

void require_defect(const Session& s, const std::string& defect) {
  if (defect.empty()) throw Error(ErrorCode::InvalidArgument, "--defect is required");
  const auto all = s.tube.defects();
  if (std::find(all.begin(), all.end(), defect) == all.end()) {
    throw Error(ErrorCode::InvalidArgument, "defect '" + defect + "' does not occur in " + s.id);
  }
}

// "re[:im],re[:im],..."; defaults to the first basis vector.
ComplexVector parse_state(const std::string& text, int dim) {
  ComplexVector v = ComplexVector::Zero(dim);
  if (text.empty()) {
    if (dim > 0) v(0) = 1.0;
    return v;
  }
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= dim) throw Error(ErrorCode::SectorMismatch, fmt::format("state has more than {} entries", dim));
    const auto colon = item.find(':');
    try {
      const double re = std::stod(item.substr(0, colon));
      const double im = colon == std::string::npos ? 0.0 : std::stod(item.substr(colon + 1));
      v(i++) = Complex(re, im);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "cannot parse state entry '" + item + "'");
    }
  }
  if (i != dim) throw Error(ErrorCode::SectorMismatch, fmt::format("state needs {} entries, got {}", dim, i));
  return v;
}

json parsed(const std::string& text) { return json::parse(text); }

// ---- commands ----------------------------------------------------------

int cmd_list(const Options& o) {
  Output out(o.output);
  if (o.json()) {
    out.json(builtin_ids());
    return kExitOk;
  }
  for (const auto& id : builtin_ids()) out.stream() << id << "\n";
  return kExitOk;
}

struct Check {
  std::string name;
  bool pass;
  double residual;
  std::string detail;
};

std::vector<Check> structural_checks(const Session& s, const Tolerance& tol) {
  std::vector<Check> checks;
  if (s.fusion) {
    const auto ring = validate_ring(*s.fusion, tol);
    checks.push_back({"fusion ring", ring.pass, ring.residual, ring.detail});
    if (s.fusion->f_symbols) {
      const auto pent = validate_pentagon(*s.fusion, tol);
      checks.push_back({"pentagon", pent.pass, pent.residual, pent.detail});
      if (s.fusion->unitary) {
        const auto uni = validate_unitarity(*s.fusion, tol);
        checks.push_back({"unitarity", uni.pass, uni.residual, uni.detail});
      }
    }
  }
  const double assoc = s.tube.associativity_residual();
  checks.push_back({"tube associativity", assoc <= tol.abs_eps, assoc, ""});
  const double ident = s.tube.identity_residual();
  checks.push_back({"tube identities", ident <= tol.abs_eps, ident, ""});
  if (s.tube.has_dagger()) {
    const double dag = s.tube.dagger_residual();
    checks.push_back({"tube dagger", dag <= tol.abs_eps, dag, ""});
  }
  if (s.tables) {
    const auto ref = verify_against_reference(s.tube, *s.tables, tol);
    checks.push_back({"reference tables", ref.pass, ref.residual, ref.detail});
  }
  int squares = 0;
  for (const auto& u : s.charges) {
    const auto r = verify_charge(s.tube, u, tol);
    checks.push_back({"charge " + u.name, r.pass, r.residual, r.detail});
    squares += u.total_dim() * u.total_dim();
  }
  if (!s.charges.empty()) {
    checks.push_back({"sum of squared charge dims", squares == s.tube.dim(), static_cast<double>(std::abs(squares - s.tube.dim())),
                      fmt::format("{} vs tube dimension {}", squares, s.tube.dim())});
  }
  return checks;
}

void print_checks(std::ostream& os, const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    os << fmt::format("  {:<4} {:<30} {:.3e}", c.pass ? "ok" : "FAIL", c.name, c.residual);
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}, {"detail", c.detail}});
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

int cmd_validate(const Options& o) {
  const Tolerance tol = o.tol();
  const Session s = open_session(o.category, o.seed, tol);
  const auto checks = structural_checks(s, tol);
  Output out(o.output);
  if (o.json()) {
    out.json({{"category", s.id}, {"checks", checks_json(checks)}, {"pass", all_pass(checks)}});
  } else {
    out.stream() << s.id << "\n";
    print_checks(out.stream(), checks);
  }
  return all_pass(checks) ? kExitOk : kExitValidation;
}

int cmd_tube(const Options& o) {
  const Session s = open_session(o.category, o.seed, o.tol());
  Output out(o.output);
  const TubePresentation p = to_presentation(s.tube);
  if (o.json()) {
    out.stream() << presentation_to_json(p);
    return kExitOk;
  }
  auto& os = out.stream();
  os << fmt::format("{}: {} objects, {} basis morphisms\n", s.id, s.tube.object_count(), s.tube.dim());
  for (int i = 0; i < s.tube.dim(); ++i) os << "  " << s.tube.ref(i) << "\n";
  os << "compositions:\n";
  for (const auto& e : p.compose) {
    os << "  " << e.g << " o " << e.f << " =";
    for (const auto& [h, c] : e.terms) os << " (" << complex_str(c) << ") " << h;
    os << "\n";
  }
  if (p.dagger) {
    os << "dagger:\n";
    for (const auto& e : *p.dagger) {
      os << "  " << e.f << " ->";
      for (const auto& [h, c] : e.terms) os << " (" << complex_str(c) << ") " << h;
      os << "\n";
    }
  }
  return kExitOk;
}

int cmd_charges(const Options& o) {
  const Tolerance tol = o.tol();
  const Session s = open_session(o.category, o.seed, tol);
  std::vector<const GeneralisedCharge*> chosen;
  if (o.charge.empty()) {
    for (const auto& u : s.charges) chosen.push_back(&u);
  } else {
    chosen.push_back(&find_charge(s, o.charge));
  }
  Output out(o.output);
  if (o.json()) {
    json all = json::array();
    for (const auto* u : chosen) all.push_back(parsed(charge_to_json(s.tube, *u)));
    out.json(all);
    return kExitOk;
  }
  auto& os = out.stream();
  os << fmt::format("{}: {} charges\n", s.id, chosen.size());
  for (const auto* u : chosen) {
    std::string dims;
    for (int x = 0; x < s.tube.object_count(); ++x)
      if (u->sector_dims[x]) dims += fmt::format(" {}:{}", s.tube.objects()[x], u->sector_dims[x]);
    const auto r = verify_charge(s.tube, *u, tol);
    os << fmt::format("  {:<12} dim {} sectors{}  [{} {:.1e}]\n", u->name, u->total_dim(), dims, r.pass ? "ok" : "FAIL",
                      r.residual);
    if (!o.charge.empty()) {
      for (int i = 0; i < s.tube.dim(); ++i) {
        const auto& m = u->action[i];
        if (m.size() == 0) continue;
        os << "    " << s.tube.ref(i) << ":";
        for (int r2 = 0; r2 < m.rows(); ++r2) {
          os << (r2 ? " ;" : "");
          for (int c = 0; c < m.cols(); ++c) os << " " << complex_str(m(r2, c));
        }
        os << "\n";
      }
    }
  }
  return kExitOk;
}

int print_certificate(Output& out, const Options& o, const Session& s, const InfeasibilityCertificate& cert) {
  if (o.json()) {
    out.stream() << certificate_to_json(s.tube, cert);
  } else {
    out.stream() << fmt::format(
        "{}: no isometric channel basis for defect {} on {}\n  witness: {}\n  residual {:.3e}, nullity {}, "
        "minimal eigenvalue {:.6g}\n",
        s.id, cert.defect, s.tube.objects()[cert.source],
        cert.witness == InfeasibilityCertificate::Witness::LinearInconsistency ? "linear inconsistency"
                                                                                : "negative eigenvalue",
        cert.residual, cert.nullity, cert.min_eigenvalue);
  }
  return kExitInfeasible;
}

int cmd_basis(const Options& o) {
  const Tolerance tol = o.tol();
  const Session s = open_session(o.category, o.seed, tol);
  require_defect(s, o.defect);
  const int x = object_of(s, o.source, "source");
  const SolveResult r = channel_basis(s, o.defect, x, parse_method(o.method), tol);
  Output out(o.output);
  if (const auto* cert = std::get_if<InfeasibilityCertificate>(&r)) return print_certificate(out, o, s, *cert);
  const auto& basis = std::get<ChannelBasis>(r);
  if (o.json()) {
    out.stream() << basis_to_json(s.tube, basis);
    return kExitOk;
  }
  auto& os = out.stream();
  os << fmt::format("{}: defect {} on {}\n", s.id, o.defect, o.source);
  for (const auto& c : basis.channels) {
    os << fmt::format("  e[{}]_{} =", s.tube.objects()[c.target], c.index);
    for (int i = 0; i < c.coeffs.size(); ++i)
      if (std::abs(c.coeffs(i)) > 1e-14) os << " (" << complex_str(c.coeffs(i)) << ") " << s.tube.ref(i);
    os << "\n";
  }
  if (s.tube.has_dagger()) os << fmt::format("  Kraus residual {:.3e}\n", kraus_residual(s.tube, basis));
  return kExitOk;
}

int cmd_probs(const Options& o) {
  const Tolerance tol = o.tol();
  const Session s = open_session(o.category, o.seed, tol);
  require_defect(s, o.defect);
  const int x = object_of(s, o.source, "source");
  if (o.charge.empty()) throw Error(ErrorCode::InvalidArgument, "--charge is required");
  const GeneralisedCharge& u = find_charge(s, o.charge);
  const SolveResult r = channel_basis(s, o.defect, x, parse_method(o.method), tol);
  Output out(o.output);
  if (const auto* cert = std::get_if<InfeasibilityCertificate>(&r)) return print_certificate(out, o, s, *cert);
  ProbabilityReport report = transition_probabilities(u, std::get<ChannelBasis>(r), parse_state(o.state, u.sector_dims[x]));
  report.category = s.id;
  if (o.json()) {
    out.stream() << report_to_json(s.tube, report);
    return kExitOk;
  }
  auto& os = out.stream();
  os << fmt::format("{}: {} acting with defect {} on {}\n", s.id, u.name, o.defect, o.source);
  for (const auto& c : report.channels) os << fmt::format("  p({} #{}) = {:.12g}\n", s.tube.objects()[c.target], c.index, c.p);
  for (const auto& [target, p] : report.marginals) os << fmt::format("  sector {:<8} {:.12g}\n", s.tube.objects()[target], p);
  os << fmt::format("  total {:.12g}\n", report.total);
  return kExitOk;
}

int cmd_channel(const Options& o) {
  const Tolerance tol = o.tol();
  const Session s = open_session(o.category, o.seed, tol);
  require_defect(s, o.defect);
  const int x = object_of(s, o.source, "source");
  if (o.charge.empty()) throw Error(ErrorCode::InvalidArgument, "--charge is required");
  const GeneralisedCharge& u = find_charge(s, o.charge);
  const SolveResult r = channel_basis(s, o.defect, x, parse_method(o.method), tol);
  Output out(o.output);
  if (const auto* cert = std::get_if<InfeasibilityCertificate>(&r)) return print_certificate(out, o, s, *cert);
  const ComplexVector psi = parse_state(o.state, u.sector_dims[x]);
  const double norm = psi.norm();
  if (norm == 0.0) throw Error(ErrorCode::ZeroState, "state has zero norm");
  const DensityMatrix rho{x, (psi / norm) * (psi / norm).adjoint()};
  const auto outputs = apply_channel(u, std::get<ChannelBasis>(r), rho);
  double trace = 0.0;
  for (const auto& c : outputs) trace += c.block.trace().real();
  if (o.json()) {
    json blocks = json::array();
    for (const auto& c : outputs) {
      json re = json::array(), im = json::array();
      for (int i = 0; i < c.block.rows(); ++i) {
        json rr = json::array(), ir = json::array();
        for (int j = 0; j < c.block.cols(); ++j) {
          rr.push_back(c.block(i, j).real());
          ir.push_back(c.block(i, j).imag());
        }
        re.push_back(rr);
        im.push_back(ir);
      }
      blocks.push_back({{"target", s.tube.objects()[c.target]}, {"index", c.index}, {"re", re}, {"im", im}});
    }
    out.json({{"category", s.id}, {"charge", u.name}, {"defect", o.defect}, {"source", o.source},
              {"outputs", blocks}, {"trace", trace}});
    return kExitOk;
  }
  auto& os = out.stream();
  os << fmt::format("{}: {} channel for defect {} on {}\n", s.id, u.name, o.defect, o.source);
  for (const auto& c : outputs) {
    os << fmt::format("  K[{} #{}] rho K^dagger, trace {:.12g}\n", s.tube.objects()[c.target], c.index,
                      c.block.trace().real());
  }
  os << fmt::format("  total trace {:.12g}\n", trace);
  return kExitOk;
}

struct CategoryVerdict {
  std::string id;
  std::vector<Check> checks;
  int charges = 0;
  int bases = 0;
  int certificates = 0;
};

CategoryVerdict verify_category(const std::string& category, const Options& o, const Tolerance& tol) {
  CategoryVerdict v;
  v.id = category;
  Session s;
  try {
    s = open_session(category, o.seed, tol);
  } catch (const Error& e) {
    v.checks.push_back({"load", false, 0.0, e.what()});
    return v;
  }
  v.id = s.id;
  v.charges = static_cast<int>(s.charges.size());
  v.checks = structural_checks(s, tol);
  const BasisMethod method = parse_method(o.method);
  for (const auto& defect : s.tube.defects()) {
    if (defect == s.tube.unit_defect()) continue;
    for (int x = 0; x < s.tube.object_count(); ++x) {
      bool any = false;
      for (int y = 0; y < s.tube.object_count(); ++y) any = any || !s.tube.channels(defect, x, y).empty();
      if (!any) continue;
      const std::string where = fmt::format("{} on {}", defect, s.tube.objects()[x]);
      SolveResult r;
      try {
        r = channel_basis(s, defect, x, method, tol);
      } catch (const Error& e) {
        v.checks.push_back({"basis " + where, false, 0.0, e.what()});
        continue;
      }
      if (const auto* cert = std::get_if<InfeasibilityCertificate>(&r)) {
        ++v.certificates;
        // A certificate is the expected outcome only without a unitary dagger.
        const bool expected = !s.tube.unitary() || !s.tube.has_dagger();
        v.checks.push_back({"certificate " + where, expected && cert->recheck(), cert->residual,
                            expected ? "no isometric basis" : "unitary category reported infeasible"});
        continue;
      }
      ++v.bases;
      const auto& basis = std::get<ChannelBasis>(r);
      if (s.tube.has_dagger()) {
        const double k = kraus_residual(s.tube, basis);
        v.checks.push_back({"Kraus " + where, k <= tol.abs_eps, k, ""});
      }
      double worst = 0.0;
      for (const auto& u : s.charges) {
        if (u.sector_dims[x] == 0) continue;
        const IsometryBlock iso = assemble_isometry(u, basis);
        const ComplexMatrix gram = iso.matrix.adjoint() * iso.matrix;
        worst = std::max(worst, max_abs(gram - ComplexMatrix::Identity(gram.rows(), gram.cols())));
        const auto report = transition_probabilities(u, basis, parse_state("", u.sector_dims[x]));
        worst = std::max(worst, std::abs(report.total - 1.0));
      }
      v.checks.push_back({"isometries " + where, worst <= kProbabilityTol, worst, ""});
    }
  }
  return v;
}

int cmd_verify(const Options& o) {
  const Tolerance tol = o.tol();
  std::vector<std::string> categories;
  if (o.category.empty()) categories = builtin_ids();
  else categories.push_back(o.category);
  std::vector<CategoryVerdict> verdicts;
  for (const auto& c : categories) verdicts.push_back(verify_category(c, o, tol));
  bool pass = true;
  Output out(o.output);
  if (o.json()) {
    json all = json::array();
    for (const auto& v : verdicts) {
      pass = pass && all_pass(v.checks);
      all.push_back({{"category", v.id}, {"checks", checks_json(v.checks)}, {"charges", v.charges}, {"bases", v.bases},
                     {"certificates", v.certificates}, {"pass", all_pass(v.checks)}});
    }
    out.json({{"categories", all}, {"pass", pass}});
  } else {
    for (const auto& v : verdicts) {
      const bool ok = all_pass(v.checks);
      pass = pass && ok;
      out.stream() << fmt::format("{} {}: {} charges, {} bases, {} certificates\n", ok ? "PASS" : "FAIL", v.id,
                                  v.charges, v.bases, v.certificates);
      print_checks(out.stream(), v.checks);
    }
  }
  return pass ? kExitOk : kExitValidation;
}

int cmd_export(const Options& o) {
  const Session s = open_session(o.category, o.seed, o.tol());
  json j = parsed(s.fusion ? category_to_json(*s.fusion) : "{}");
  j["tube_presentation"] = parsed(presentation_to_json(to_presentation(s.tube)));
  json charges = json::array();
  for (const auto& u : s.charges) charges.push_back(parsed(charge_to_json(s.tube, u)));
  j["charges"] = charges;
  if (!s.fusion) j["name"] = s.id;
  Output out(o.output);
  out.json(j);
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::AssociativityViolation:
    case ErrorCode::DaggerViolation:
    case ErrorCode::NotACocycle:
    case ErrorCode::DegenerateBicharacter:
    case ErrorCode::BadSquareRoot:
      return kExitValidation;
    default:
      return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tube categories, generalised charges and isometric channel bases"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_category) {
    auto* cat = sub->add_option("--category,-c", o.category, "builtin id or JSON file");
    if (needs_category) cat->required();
    sub->add_option("--format,-f", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--output,-o", o.output, "write to a file instead of stdout");
    sub->add_option("--tolerance", o.tolerance, "override absolute and relative tolerance");
    sub->add_option("--seed", o.seed, "seed for commutant sampling")->capture_default_str();
  };
  auto selectors = [&](CLI::App* sub) {
    sub->add_option("--defect,-d", o.defect, "wrapping defect");
    sub->add_option("--source,-s", o.source, "incoming sector");
    sub->add_option("--method", o.method, "auto, reference, canonical or solve")
        ->check(CLI::IsMember({"auto", "reference", "canonical", "solve"}));
  };

  std::map<CLI::App*, int (*)(const Options&)> handlers;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = fn;
    return sub;
  };

  common(add("list", "list builtin categories", cmd_list), false);
  common(add("validate", "check fusion data, tube tables and charges", cmd_validate), true);
  common(add("tube", "print the tube category", cmd_tube), true);
  auto* charges = add("charges", "list generalised charges", cmd_charges);
  common(charges, true);
  charges->add_option("--charge", o.charge, "show one charge in full");
  auto* basis = add("basis", "isometric channel basis for a defect", cmd_basis);
  common(basis, true);
  selectors(basis);
  auto* probs = add("probs", "transition probabilities", cmd_probs);
  common(probs, true);
  selectors(probs);
  probs->add_option("--charge", o.charge, "generalised charge")->required();
  probs->add_option("--state", o.state, "re[:im],... in the source sector");
  auto* channel = add("channel", "apply the Kraus channel to a pure state", cmd_channel);
  common(channel, true);
  selectors(channel);
  channel->add_option("--charge", o.charge, "generalised charge")->required();
  channel->add_option("--state", o.state, "re[:im],... in the source sector");
  auto* verify = add("verify", "run every check (all builtins without --category)", cmd_verify);
  common(verify, false);
  verify->add_option("--method", o.method, "basis method")->check(CLI::IsMember({"auto", "reference", "canonical", "solve"}));
  common(add("export", "write the category as JSON", cmd_export), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    for (const auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn(o);
  } catch (const Error& e) {
    std::cerr << "tubealg: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "tubealg: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
