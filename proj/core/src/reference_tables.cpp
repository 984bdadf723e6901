#include "tables_internal.hpp"

#include <numbers>

// Composition and dagger tables of the golden and Rep(S3) tube categories,
// transcribed from the reference tables. Compositions with an identity are
// omitted; so are pairs the tables leave out, so these presentations are
// meant for verify_against_reference, not for presented_tube.

namespace tubealg::detail {

namespace {

constexpr double phi = std::numbers::phi;
constexpr double ip = 1.0 / std::numbers::phi;

TubePresentation golden_skeleton(const char* name, bool unitary) {
  TubePresentation p;
  p.name = name;
  p.objects = {"1", "tau"};
  p.unitary = unitary;
  return p;
}

}  // namespace

TubePresentation fib_tables() {
  TubePresentation p = golden_skeleton("fib", true);
  p.compose.push_back({"1>1;tau", "1>1;tau", {{"1>1;1", 1.0}, {"1>1;tau", 1.0}}});
  p.compose.push_back({"1>tau;tau", "1>1;tau", {{"1>tau;tau", -ip}}});
  p.compose.push_back({"tau>1;tau", "1>tau;tau", {{"1>1;1", 1.0}, {"1>1;tau", -ip}}});
  p.compose.push_back({"tau>tau;tau;1", "1>tau;tau", {{"1>tau;tau", ip}}});
  p.compose.push_back({"tau>tau;tau;tau", "1>tau;tau", {{"1>tau;tau", ip * ip}}});
  p.compose.push_back({"1>1;tau", "tau>1;tau", {{"tau>1;tau", -ip}}});
  p.compose.push_back({"1>tau;tau", "tau>1;tau", {{"tau>tau;1", ip}, {"tau>tau;tau;1", 1.0}, {"tau>tau;tau;tau", ip * ip}}});
  p.compose.push_back({"tau>1;tau", "tau>tau;tau;1", {{"tau>1;tau", ip}}});
  p.compose.push_back({"tau>1;tau", "tau>tau;tau;tau", {{"tau>1;tau", ip * ip}}});
  p.compose.push_back({"tau>tau;tau;1", "tau>tau;tau;1", {{"tau>tau;1", ip * ip * ip}, {"tau>tau;tau;tau", ip * ip}}});
  p.compose.push_back({"tau>tau;tau;tau", "tau>tau;tau;tau", {{"tau>tau;1", -ip * ip}, {"tau>tau;tau;1", 1.0}, {"tau>tau;tau;tau", -ip * ip * ip}}});
  p.compose.push_back({"tau>tau;tau;1", "tau>tau;tau;tau", {{"tau>tau;1", ip * ip}, {"tau>tau;tau;tau", -ip * ip}}});
  p.compose.push_back({"tau>tau;tau;tau", "tau>tau;tau;1", {{"tau>tau;1", ip * ip}, {"tau>tau;tau;tau", -ip * ip}}});
  p.dagger.emplace();
  p.dagger->push_back({"1>1;tau", {{"1>1;tau", 1.0}}});
  p.dagger->push_back({"1>tau;tau", {{"tau>1;tau", phi}}});
  p.dagger->push_back({"tau>1;tau", {{"1>tau;tau", ip}}});
  p.dagger->push_back({"tau>tau;tau;1", {{"tau>tau;tau;1", ip}, {"tau>tau;tau;tau", ip}}});
  p.dagger->push_back({"tau>tau;tau;tau", {{"tau>tau;tau;1", 1.0}, {"tau>tau;tau;tau", -ip}}});
  return p;
}

TubePresentation yang_lee_tables() {
  TubePresentation p = golden_skeleton("yang-lee", false);
  p.compose.push_back({"1>1;tau", "1>1;tau", {{"1>1;1", 1.0}, {"1>1;tau", 1.0}}});
  p.compose.push_back({"1>tau;tau", "1>1;tau", {{"1>tau;tau", phi}}});
  p.compose.push_back({"tau>1;tau", "1>tau;tau", {{"1>1;1", 1.0}, {"1>1;tau", phi}}});
  p.compose.push_back({"tau>tau;tau;1", "1>tau;tau", {{"1>tau;tau", -phi}}});
  p.compose.push_back({"tau>tau;tau;tau", "1>tau;tau", {{"1>tau;tau", phi * phi}}});
  p.compose.push_back({"1>1;tau", "tau>1;tau", {{"tau>1;tau", phi}}});
  p.compose.push_back({"1>tau;tau", "tau>1;tau", {{"tau>tau;1", -phi}, {"tau>tau;tau;1", 1.0}, {"tau>tau;tau;tau", phi * phi}}});
  p.compose.push_back({"tau>1;tau", "tau>tau;tau;1", {{"tau>1;tau", -phi}}});
  p.compose.push_back({"tau>1;tau", "tau>tau;tau;tau", {{"tau>1;tau", phi * phi}}});
  p.compose.push_back({"tau>tau;tau;1", "tau>tau;tau;1", {{"tau>tau;1", -phi * phi * phi}, {"tau>tau;tau;tau", phi * phi}}});
  p.compose.push_back({"tau>tau;tau;tau", "tau>tau;tau;tau", {{"tau>tau;1", -phi * phi}, {"tau>tau;tau;1", 1.0}, {"tau>tau;tau;tau", phi * phi * phi}}});
  p.compose.push_back({"tau>tau;tau;1", "tau>tau;tau;tau", {{"tau>tau;1", phi * phi}, {"tau>tau;tau;tau", -phi * phi}}});
  p.compose.push_back({"tau>tau;tau;tau", "tau>tau;tau;1", {{"tau>tau;1", phi * phi}, {"tau>tau;tau;tau", -phi * phi}}});
  return p;
}

TubePresentation rep_s3_tables(bool as_printed) {
  TubePresentation p;
  p.name = "rep-s3";
  p.objects = {"1", "psi", "pi"};
  // The last pi-sector product is printed with coefficient -1/4 on
  // pi>pi;pi;psi; only -1 is compatible with the U_pi charges.
  p.compose.push_back({"1>1;psi", "1>1;psi", {{"1>1;1", 1.0}}});
  p.compose.push_back({"1>1;pi", "1>1;psi", {{"1>1;pi", 1.0}}});
  p.compose.push_back({"1>1;psi", "1>1;pi", {{"1>1;pi", 1.0}}});
  p.compose.push_back({"1>1;pi", "1>1;pi", {{"1>1;1", 1.0}, {"1>1;psi", 1.0}, {"1>1;pi", 1.0}}});
  p.compose.push_back({"1>psi;pi", "1>1;psi", {{"1>psi;pi", 1.0}}});
  p.compose.push_back({"1>pi;pi", "1>1;psi", {{"1>pi;pi", -1.0}}});
  p.compose.push_back({"1>psi;pi", "1>1;pi", {{"1>psi;pi", -1.0}}});
  p.compose.push_back({"1>pi;pi", "1>1;pi", {}});
  p.compose.push_back({"psi>1;pi", "1>psi;pi", {{"1>1;1", 1.0}, {"1>1;psi", 1.0}, {"1>1;pi", -1.0}}});
  p.compose.push_back({"psi>psi;psi", "1>psi;pi", {{"1>psi;pi", 1.0}}});
  p.compose.push_back({"psi>psi;pi", "1>psi;pi", {{"1>psi;pi", 1.0}}});
  p.compose.push_back({"psi>pi;pi", "1>psi;pi", {}});
  p.compose.push_back({"pi>1;pi", "1>pi;pi", {{"1>1;1", 1.0}, {"1>1;psi", -1.0}}});
  p.compose.push_back({"pi>psi;pi", "1>pi;pi", {}});
  p.compose.push_back({"pi>pi;psi", "1>pi;pi", {{"1>pi;pi", 1.0}}});
  p.compose.push_back({"pi>pi;pi;1", "1>pi;pi", {{"1>pi;pi", 0.5}}});
  p.compose.push_back({"pi>pi;pi;psi", "1>pi;pi", {{"1>pi;pi", 0.5}}});
  p.compose.push_back({"pi>pi;pi;pi", "1>pi;pi", {}});
  p.compose.push_back({"1>1;psi", "psi>1;pi", {{"psi>1;pi", 1.0}}});
  p.compose.push_back({"1>1;pi", "psi>1;pi", {{"psi>1;pi", -1.0}}});
  p.compose.push_back({"1>psi;pi", "psi>1;pi", {{"psi>psi;1", 1.0}, {"psi>psi;psi", 1.0}, {"psi>psi;pi", 1.0}}});
  p.compose.push_back({"1>pi;pi", "psi>1;pi", {}});
  p.compose.push_back({"psi>1;pi", "psi>psi;psi", {{"psi>1;pi", 1.0}}});
  p.compose.push_back({"psi>psi;psi", "psi>psi;psi", {{"psi>psi;1", 1.0}}});
  p.compose.push_back({"psi>psi;pi", "psi>psi;psi", {{"psi>psi;pi", 1.0}}});
  p.compose.push_back({"psi>pi;pi", "psi>psi;psi", {{"psi>pi;pi", -1.0}}});
  p.compose.push_back({"psi>1;pi", "psi>psi;pi", {{"psi>1;pi", 1.0}}});
  p.compose.push_back({"psi>psi;psi", "psi>psi;pi", {{"psi>psi;pi", 1.0}}});
  p.compose.push_back({"psi>psi;pi", "psi>psi;pi", {{"psi>psi;1", 1.0}, {"psi>psi;psi", 1.0}, {"psi>psi;pi", -1.0}}});
  p.compose.push_back({"psi>pi;pi", "psi>psi;pi", {}});
  p.compose.push_back({"pi>1;pi", "psi>pi;pi", {}});
  p.compose.push_back({"pi>psi;pi", "psi>pi;pi", {{"psi>psi;1", -1.0}, {"psi>psi;psi", 1.0}}});
  p.compose.push_back({"pi>pi;psi", "psi>pi;pi", {{"psi>pi;pi", 1.0}}});
  p.compose.push_back({"pi>pi;pi;1", "psi>pi;pi", {{"psi>pi;pi", -0.5}}});
  p.compose.push_back({"pi>pi;pi;psi", "psi>pi;pi", {{"psi>pi;pi", -0.5}}});
  p.compose.push_back({"pi>pi;pi;pi", "psi>pi;pi", {}});
  p.compose.push_back({"1>1;psi", "pi>1;pi", {{"pi>1;pi", -1.0}}});
  p.compose.push_back({"1>1;pi", "pi>1;pi", {}});
  p.compose.push_back({"1>psi;pi", "pi>1;pi", {}});
  p.compose.push_back({"1>pi;pi", "pi>1;pi", {{"pi>pi;1", 0.5}, {"pi>pi;psi", 0.5}, {"pi>pi;pi;1", 1.0}, {"pi>pi;pi;psi", 1.0}}});
  p.compose.push_back({"psi>1;pi", "pi>psi;pi", {}});
  p.compose.push_back({"psi>psi;psi", "pi>psi;pi", {{"pi>psi;pi", -1.0}}});
  p.compose.push_back({"psi>psi;pi", "pi>psi;pi", {}});
  p.compose.push_back({"psi>pi;pi", "pi>psi;pi", {{"pi>pi;1", -0.5}, {"pi>pi;psi", -0.5}, {"pi>pi;pi;1", 1.0}, {"pi>pi;pi;psi", 1.0}}});
  p.compose.push_back({"pi>1;pi", "pi>pi;psi", {{"pi>1;pi", 1.0}}});
  p.compose.push_back({"pi>psi;pi", "pi>pi;psi", {{"pi>psi;pi", 1.0}}});
  p.compose.push_back({"pi>pi;psi", "pi>pi;psi", {{"pi>pi;1", 1.0}}});
  p.compose.push_back({"pi>pi;pi;1", "pi>pi;psi", {{"pi>pi;pi;psi", 1.0}}});
  p.compose.push_back({"pi>pi;pi;psi", "pi>pi;psi", {{"pi>pi;pi;1", 1.0}}});
  p.compose.push_back({"pi>pi;pi;pi", "pi>pi;psi", {{"pi>pi;pi;pi", -1.0}}});
  p.compose.push_back({"pi>1;pi", "pi>pi;pi;1", {{"pi>1;pi", 0.5}}});
  p.compose.push_back({"pi>psi;pi", "pi>pi;pi;1", {{"pi>psi;pi", -0.5}}});
  p.compose.push_back({"pi>pi;psi", "pi>pi;pi;1", {{"pi>pi;pi;psi", 1.0}}});
  p.compose.push_back({"pi>pi;pi;1", "pi>pi;pi;1", {{"pi>pi;1", 0.125}, {"pi>pi;psi", 0.125}, {"pi>pi;pi;pi", 0.25}}});
  p.compose.push_back({"pi>pi;pi;psi", "pi>pi;pi;1", {{"pi>pi;1", 0.125}, {"pi>pi;psi", 0.125}, {"pi>pi;pi;pi", -0.25}}});
  p.compose.push_back({"pi>pi;pi;pi", "pi>pi;pi;1", {{"pi>pi;1", 0.25}, {"pi>pi;psi", -0.25}}});
  p.compose.push_back({"pi>1;pi", "pi>pi;pi;psi", {{"pi>1;pi", 0.5}}});
  p.compose.push_back({"pi>psi;pi", "pi>pi;pi;psi", {{"pi>psi;pi", -0.5}}});
  p.compose.push_back({"pi>pi;psi", "pi>pi;pi;psi", {{"pi>pi;pi;1", 1.0}}});
  p.compose.push_back({"pi>pi;pi;1", "pi>pi;pi;psi", {{"pi>pi;1", 0.125}, {"pi>pi;psi", 0.125}, {"pi>pi;pi;pi", -0.25}}});
  p.compose.push_back({"pi>pi;pi;psi", "pi>pi;pi;psi", {{"pi>pi;1", 0.125}, {"pi>pi;psi", 0.125}, {"pi>pi;pi;pi", 0.25}}});
  p.compose.push_back({"pi>pi;pi;pi", "pi>pi;pi;psi", {{"pi>pi;1", -0.25}, {"pi>pi;psi", 0.25}}});
  p.compose.push_back({"pi>1;pi", "pi>pi;pi;pi", {}});
  p.compose.push_back({"pi>psi;pi", "pi>pi;pi;pi", {}});
  p.compose.push_back({"pi>pi;psi", "pi>pi;pi;pi", {{"pi>pi;pi;pi", -1.0}}});
  p.compose.push_back({"pi>pi;pi;1", "pi>pi;pi;pi", {{"pi>pi;1", 0.25}, {"pi>pi;psi", -0.25}}});
  p.compose.push_back({"pi>pi;pi;psi", "pi>pi;pi;pi", {{"pi>pi;1", -0.25}, {"pi>pi;psi", 0.25}}});
  p.compose.push_back({"pi>pi;pi;pi", "pi>pi;pi;pi", {{"pi>pi;pi;1", 1.0}, {"pi>pi;pi;psi", as_printed ? -0.25 : -1.0}}});
  p.dagger.emplace();
  p.dagger->push_back({"1>1;1", {{"1>1;1", 1.0}}});
  p.dagger->push_back({"1>1;psi", {{"1>1;psi", 1.0}}});
  p.dagger->push_back({"1>1;pi", {{"1>1;pi", 1.0}}});
  p.dagger->push_back({"1>psi;pi", {{"psi>1;pi", 1.0}}});
  p.dagger->push_back({"1>pi;pi", {{"pi>1;pi", 1.0}}});
  p.dagger->push_back({"psi>psi;psi", {{"psi>psi;psi", 1.0}}});
  p.dagger->push_back({"psi>psi;pi", {{"psi>psi;pi", 1.0}}});
  p.dagger->push_back({"psi>pi;pi", {{"pi>psi;pi", -1.0}}});
  p.dagger->push_back({"pi>1;pi", {{"1>pi;pi", 1.0}}});
  p.dagger->push_back({"pi>psi;pi", {{"psi>pi;pi", -1.0}}});
  p.dagger->push_back({"psi>1;pi", {{"1>psi;pi", 1.0}}});
  p.dagger->push_back({"pi>pi;1", {{"pi>pi;1", 1.0}}});
  p.dagger->push_back({"psi>psi;1", {{"psi>psi;1", 1.0}}});
  p.dagger->push_back({"pi>pi;psi", {{"pi>pi;psi", 1.0}}});
  p.dagger->push_back({"pi>pi;pi;1", {{"pi>pi;pi;1", 0.5}, {"pi>pi;pi;psi", 0.5}, {"pi>pi;pi;pi", 0.5}}});
  p.dagger->push_back({"pi>pi;pi;psi", {{"pi>pi;pi;1", 0.5}, {"pi>pi;pi;psi", 0.5}, {"pi>pi;pi;pi", -0.5}}});
  p.dagger->push_back({"pi>pi;pi;pi", {{"pi>pi;pi;1", 1.0}, {"pi>pi;pi;psi", -1.0}}});
  return p;
}

}  // namespace tubealg::detail
