#include "session.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include <tubealg/errors.hpp>
#include <tubealg/io.hpp>

namespace tubealg::cli {

namespace {

bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos || s.ends_with(".json") || std::filesystem::exists(s);
}

}  // namespace

std::string data_directory() {
  if (const char* env = std::getenv("TUBEALG_DATA"); env && *env) return env;
  return TUBEALG_DEFAULT_DATA;
}

Session open_session(const std::string& category, std::uint64_t seed, const Tolerance& tol) {
  Session s;
  if (!looks_like_path(category)) {
    BuiltinCategory b = load_builtin(category, seed);
    s.id = b.id;
    s.fusion = std::move(b.fusion);
    s.tube = std::move(b.tube);
    s.charges = std::move(b.charges);
    s.reference_bases = std::move(b.reference_bases);
    std::string file_name = category;
    std::replace(file_name.begin(), file_name.end(), ':', '_');
    const std::string table_file = data_directory() + "/tables/" + file_name + ".json";
    if (std::filesystem::exists(table_file)) s.tables = presentation_from_json(read_text_file(table_file));
    else s.tables = std::move(b.reference_tables);
    return s;
  }
  CategoryFile file = load_category_file(category);
  s.from_file = true;
  if (file.presentation) {
    s.tube = presented_tube(*file.presentation, tol);
    s.id = file.presentation->name;
  } else {
    s.tube = derive_tube(*file.fusion);
    s.id = file.fusion->name;
  }
  s.fusion = std::move(file.fusion);
  if (s.tube.has_dagger()) s.charges = decompose_irreps(s.tube, tol, seed);
  return s;
}

BasisMethod parse_method(const std::string& name) {
  if (name == "auto") return BasisMethod::Auto;
  if (name == "reference") return BasisMethod::Reference;
  if (name == "canonical") return BasisMethod::Canonical;
  if (name == "solve") return BasisMethod::Solve;
  throw Error(ErrorCode::InvalidArgument, "unknown basis method '" + name + "'");
}

SolveResult channel_basis(const Session& s, const std::string& defect, int source, BasisMethod method,
                          const Tolerance& tol) {
  if (method == BasisMethod::Auto || method == BasisMethod::Reference) {
    for (const auto& b : s.reference_bases)
      if (b.defect == defect && b.source == source) return b;
    if (method == BasisMethod::Reference) {
      throw Error(ErrorCode::InvalidArgument,
                  "no reference basis for defect " + defect + " on " + s.tube.objects()[source]);
    }
  }
  const bool derived = s.fusion && s.tube.provenance() == Provenance::Derived;
  if (method == BasisMethod::Canonical || (method == BasisMethod::Auto && derived && s.fusion->unitary)) {
    if (!derived) throw Error(ErrorCode::InvalidArgument, "canonical bases need a tube derived from F-symbols");
    return canonical_channel_basis(*s.fusion, s.tube, defect, source);
  }
  SolveOptions options;
  options.tol = tol;
  if (!s.tube.has_dagger() || !s.tube.unitary()) {
    options.mode = ConstraintMode::Charges;
    options.charges = s.charges;
  }
  return solve_channel_basis(s.tube, defect, source, options);
}

const GeneralisedCharge& find_charge(const Session& s, const std::string& name) {
  for (const auto& u : s.charges)
    if (u.name == name) return u;
  std::string known;
  for (const auto& u : s.charges) known += (known.empty() ? "" : ", ") + u.name;
  throw Error(ErrorCode::InvalidArgument, "unknown charge '" + name + "' (known: " + known + ")");
}

}  // namespace tubealg::cli
