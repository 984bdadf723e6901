#include "tubealg/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "tubealg/errors.hpp"

namespace tubealg {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  std::string s = fmt::format("{:.17g}", v);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void emit(const json& j, std::string& out, int depth) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {  // object_t is a std::map, so keys come sorted
        if (!first) out += ",\n";
        first = false;
        out += pad + json(k).dump() + ": ";
        emit(v, out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        emit(j[i], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string dump(const json& j) {
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
}

// Wraps nlohmann type errors as SchemaError.
template <typename F>
auto schema(const std::string& what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, what + ": " + e.what());
  }
}

json terms_json(const std::vector<std::pair<std::string, Complex>>& terms) {
  json out = json::array();
  for (const auto& [h, c] : terms) out.push_back({{"h", h}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

std::vector<std::pair<std::string, Complex>> terms_from(const json& j) {
  std::vector<std::pair<std::string, Complex>> out;
  for (const auto& t : j) out.emplace_back(t.at("h").get<std::string>(), Complex(t.at("re").get<double>(), t.value("im", 0.0)));
  return out;
}

json vector_terms(const TubeCategory& t, const TubeVector& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i)
    if (v(i) != Complex(0.0)) out.push_back({{"h", t.ref(i)}, {"re", v(i).real()}, {"im", v(i).imag()}});
  return out;
}

json matrix_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ir = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return {{"re", re}, {"im", im}};
}

ComplexMatrix matrix_from(const json& j) {
  const json& re = j.at("re");
  const json im = j.value("im", json::array());
  const int rows = static_cast<int>(re.size());
  const int cols = rows ? static_cast<int>(re[0].size()) : 0;
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(re[r].size()) != cols) throw Error(ErrorCode::SchemaError, "ragged matrix");
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(re[r][c].get<double>(), im.empty() ? 0.0 : im[r][c].get<double>());
  }
  return m;
}

}  // namespace

std::string canonical_json(const std::string& json_text) { return dump(parse(json_text)); }

std::string category_to_json(const FusionCategoryData& cat) {
  const int n = cat.size();
  json j;
  j["name"] = cat.name;
  j["simples"] = cat.labels;
  json fusion = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) {
      json cell = json::array();
      for (int c = 0; c < n; ++c) cell.push_back(cat.ring(a, b, c));
      row.push_back(cell);
    }
    fusion.push_back(row);
  }
  j["fusion"] = fusion;
  json duals = json::array();
  for (int a = 0; a < n; ++a) duals.push_back(cat.labels[cat.ring.duals[a]]);
  j["duals"] = duals;
  j["dims"] = cat.dims;
  j["unitary"] = cat.unitary;
  j["tube_normalization"] = cat.tube_normalization == TubeNormalization::Dimension ? "dimension" : "unit";
  if (cat.f_symbols) {
    json fs = json::array();
    for (const auto& [k, v] : *cat.f_symbols) {
      fs.push_back({{"a", cat.labels[k.a]},
                    {"b", cat.labels[k.b]},
                    {"c", cat.labels[k.c]},
                    {"d", cat.labels[k.d]},
                    {"e", cat.labels[k.e]},
                    {"f", cat.labels[k.f]},
                    {"re", v.real()},
                    {"im", v.imag()}});
    }
    j["f_symbols"] = fs;
  }
  return dump(j);
}

namespace {

FusionCategoryData category_from(const json& j) {
  return schema("category", [&] {
    FusionCategoryData cat;
    cat.name = j.value("name", std::string("custom"));
    cat.labels = j.at("simples").get<std::vector<std::string>>();
    const int n = static_cast<int>(cat.labels.size());
    if (n == 0) throw Error(ErrorCode::SchemaError, "category has no simples");
    cat.ring.n = n;
    cat.ring.coefficients.assign(static_cast<size_t>(n) * n * n, 0);
    const json& fusion = j.at("fusion");
    if (static_cast<int>(fusion.size()) != n) throw Error(ErrorCode::SchemaError, "fusion must be n x n x n");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(fusion[a].size()) != n) throw Error(ErrorCode::SchemaError, "fusion must be n x n x n");
      for (int b = 0; b < n; ++b) {
        if (static_cast<int>(fusion[a][b].size()) != n) throw Error(ErrorCode::SchemaError, "fusion must be n x n x n");
        for (int c = 0; c < n; ++c) cat.ring.at(a, b, c) = fusion[a][b][c].get<int>();
      }
    }
    auto index = [&](const json& label) {
      const std::string s = label.get<std::string>();
      for (int i = 0; i < n; ++i)
        if (cat.labels[i] == s) return i;
      throw Error(ErrorCode::SchemaError, "unknown simple '" + s + "'");
    };
    const json& duals = j.at("duals");
    if (static_cast<int>(duals.size()) != n) throw Error(ErrorCode::SchemaError, "duals must list every simple");
    for (const auto& d : duals) cat.ring.duals.push_back(index(d));
    cat.dims = j.contains("dims") ? j.at("dims").get<std::vector<double>>() : perron_frobenius_dims(cat.ring);
    if (static_cast<int>(cat.dims.size()) != n) throw Error(ErrorCode::SchemaError, "dims must list every simple");
    cat.unitary = j.value("unitary", true);
    const std::string norm = j.value("tube_normalization", std::string("dimension"));
    if (norm == "dimension") cat.tube_normalization = TubeNormalization::Dimension;
    else if (norm == "unit") cat.tube_normalization = TubeNormalization::Unit;
    else throw Error(ErrorCode::SchemaError, "tube_normalization must be dimension or unit");
    if (j.contains("f_symbols")) {
      FSymbolTable table;
      for (const auto& f : j.at("f_symbols")) {
        const FKey key{index(f.at("a")), index(f.at("b")), index(f.at("c")),
                       index(f.at("d")), index(f.at("e")), index(f.at("f"))};
        table[key] = Complex(f.at("re").get<double>(), f.value("im", 0.0));
      }
      cat.f_symbols = std::move(table);
    }
    return cat;
  });
}

TubePresentation presentation_from(const json& j) {
  return schema("tube_presentation", [&] {
    TubePresentation p;
    p.name = j.value("name", std::string("custom"));
    p.objects = j.at("objects").get<std::vector<std::string>>();
    p.unit_defect = j.value("unit_defect", std::string("1"));
    if (j.contains("defect_duals")) p.defect_duals = j.at("defect_duals").get<std::map<std::string, std::string>>();
    p.unitary = j.value("unitary", true);
    for (const auto& b : j.at("basis")) {
      p.basis.push_back({b.at("src").get<std::string>(), b.at("tgt").get<std::string>(),
                         b.at("defect").get<std::string>(), b.value("channel", std::string())});
    }
    for (const auto& e : j.value("compose", json::array())) {
      p.compose.push_back({e.at("g").get<std::string>(), e.at("f").get<std::string>(), terms_from(e.at("terms"))});
    }
    if (j.contains("dagger")) {
      p.dagger.emplace();
      for (const auto& e : j.at("dagger")) p.dagger->push_back({e.at("f").get<std::string>(), terms_from(e.at("terms"))});
    }
    p.note = j.value("note", std::string());
    return p;
  });
}

}  // namespace

FusionCategoryData category_from_json(const std::string& text) { return category_from(parse(text)); }

std::string presentation_to_json(const TubePresentation& p) {
  json j;
  j["name"] = p.name;
  j["objects"] = p.objects;
  j["unit_defect"] = p.unit_defect;
  if (!p.defect_duals.empty()) j["defect_duals"] = p.defect_duals;
  j["unitary"] = p.unitary;
  json basis = json::array();
  for (const auto& b : p.basis) basis.push_back({{"src", b.src}, {"tgt", b.tgt}, {"defect", b.defect}, {"channel", b.channel}});
  j["basis"] = basis;
  json compose = json::array();
  for (const auto& e : p.compose) compose.push_back({{"g", e.g}, {"f", e.f}, {"terms", terms_json(e.terms)}});
  j["compose"] = compose;
  if (p.dagger) {
    json dagger = json::array();
    for (const auto& e : *p.dagger) dagger.push_back({{"f", e.f}, {"terms", terms_json(e.terms)}});
    j["dagger"] = dagger;
  }
  if (!p.note.empty()) j["note"] = p.note;
  return dump(j);
}

TubePresentation presentation_from_json(const std::string& text) {
  const json j = parse(text);
  return presentation_from(j.contains("tube_presentation") ? j.at("tube_presentation") : j);
}

std::string charge_to_json(const TubeCategory& t, const GeneralisedCharge& u) {
  json j;
  j["name"] = u.name;
  json dims = json::object();
  for (int x = 0; x < t.object_count(); ++x) dims[t.objects()[x]] = u.sector_dims[x];
  j["sector_dims"] = dims;
  json action = json::array();
  for (int i = 0; i < t.dim(); ++i) {
    if (u.action[i].size() == 0) continue;
    json entry = matrix_json(u.action[i]);
    entry["morphism"] = t.ref(i);
    action.push_back(entry);
  }
  j["action"] = action;
  return dump(j);
}

GeneralisedCharge charge_from_json(const TubeCategory& t, const std::string& text) {
  const json j = parse(text);
  return schema("charge", [&] {
    std::map<std::string, int> dims = j.at("sector_dims").get<std::map<std::string, int>>();
    std::vector<std::pair<std::string, ComplexMatrix>> entries;
    for (const auto& e : j.at("action")) entries.emplace_back(e.at("morphism").get<std::string>(), matrix_from(e));
    return make_charge(t, j.at("name").get<std::string>(), dims, entries);
  });
}

std::string basis_to_json(const TubeCategory& t, const ChannelBasis& basis) {
  json j;
  j["defect"] = basis.defect;
  j["source"] = t.objects()[basis.source];
  json channels = json::array();
  for (const auto& c : basis.channels) {
    channels.push_back({{"target", t.objects()[c.target]}, {"index", c.index}, {"terms", vector_terms(t, c.coeffs)}});
  }
  j["channels"] = channels;
  return dump(j);
}

std::string report_to_json(const TubeCategory& t, const ProbabilityReport& report) {
  json j;
  j["category"] = report.category;
  j["defect"] = report.defect;
  j["source"] = t.objects()[report.source];
  j["charge"] = report.charge;
  json channels = json::array();
  for (const auto& c : report.channels) channels.push_back({{"target", t.objects()[c.target]}, {"index", c.index}, {"p", c.p}});
  j["channels"] = channels;
  json marginals = json::object();
  for (const auto& [s, p] : report.marginals) marginals[t.objects()[s]] = p;
  j["marginals"] = marginals;
  j["total"] = report.total;
  return dump(j);
}

std::string certificate_to_json(const TubeCategory& t, const InfeasibilityCertificate& cert) {
  json j;
  j["defect"] = cert.defect;
  j["source"] = t.objects()[cert.source];
  j["mode"] = cert.mode == ConstraintMode::Tube ? "tube" : "charges";
  if (!cert.charge_names.empty()) j["charges"] = cert.charge_names;
  json targets = json::array();
  for (int s : cert.targets) targets.push_back(t.objects()[s]);
  j["targets"] = targets;
  j["parameters"] = cert.parameter_labels;
  j["constraints"] = cert.constraint_labels;
  json system = json::array();
  for (int r = 0; r < cert.system.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < cert.system.cols(); ++c) row.push_back(cert.system(r, c));
    system.push_back(row);
  }
  j["system"] = system;
  j["rhs"] = std::vector<double>(cert.rhs.data(), cert.rhs.data() + cert.rhs.size());
  j["least_squares"] = std::vector<double>(cert.least_squares.data(), cert.least_squares.data() + cert.least_squares.size());
  j["residual"] = cert.residual;
  j["nullity"] = cert.nullity;
  j["witness"] = cert.witness == InfeasibilityCertificate::Witness::LinearInconsistency ? "linear_inconsistency"
                                                                                         : "negative_eigenvalue";
  j["min_eigenvalue"] = cert.min_eigenvalue;
  return dump(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CategoryFile load_category_file(const std::string& path) {
  const json j = parse(read_text_file(path));
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, path + ": top level must be an object");
  CategoryFile out;
  if (j.contains("tube_presentation")) out.presentation = presentation_from(j.at("tube_presentation"));
  else if (j.contains("basis")) out.presentation = presentation_from(j);
  if (j.contains("simples")) out.fusion = category_from(j);
  if (!out.fusion && !out.presentation) {
    throw Error(ErrorCode::SchemaError, path + ": expected fusion data or a tube_presentation");
  }
  return out;
}

}  // namespace tubealg
