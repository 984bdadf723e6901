#include "draws.hpp"

#include <memory>
#include <random>

#include "oracles.hpp"

namespace draws {

using namespace tubealg;

namespace {

Prepared prepare(const std::string& id) {
  Prepared p{load_builtin(id), {}};
  const TubeCategory& t = p.cat.tube;
  for (const auto& b : p.cat.reference_bases) p.bases[{b.defect, b.source}] = b;
  for (const auto& defect : t.defects()) {
    if (defect == t.unit_defect()) continue;
    for (int x = 0; x < t.object_count(); ++x) {
      if (p.bases.count({defect, x})) continue;
      bool any = false;
      for (int y = 0; y < t.object_count(); ++y) any = any || !t.channels(defect, x, y).empty();
      if (!any) continue;
      if (p.cat.fusion && t.provenance() == Provenance::Derived) {
        p.bases[{defect, x}] = canonical_channel_basis(*p.cat.fusion, t, defect, x);
      } else {
        const SolveResult r = solve_channel_basis(t, defect, x);
        p.bases[{defect, x}] = std::get<ChannelBasis>(r);
      }
    }
  }
  return p;
}

ComplexVector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

}  // namespace

const Prepared& prepared(const std::string& id) {
  static std::map<std::string, std::unique_ptr<Prepared>> cache;
  auto& slot = cache[id];
  if (!slot) slot = std::make_unique<Prepared>(prepare(id));
  return *slot;
}

std::vector<std::string> unitary_ids() {
  std::vector<std::string> out;
  for (const auto& id : builtin_ids())
    if (id != "yang-lee") out.push_back(id);
  return out;
}

ComplexMatrix random_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ComplexMatrix m(n, n);
  for (int c = 0; c < n; ++c) m.col(c) = random_vector(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  return q;
}

PropertyStats run_property_draws(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto ids = unitary_ids();
  PropertyStats stats;
  auto pick = [&](size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); };
  while (stats.draws < count) {
    const Prepared& p = prepared(ids[pick(ids.size())]);
    const TubeCategory& t = p.cat.tube;
    std::vector<std::pair<std::string, int>> keys;
    for (const auto& [k, b] : p.bases) keys.push_back(k);
    const auto key = keys[pick(keys.size())];
    const ChannelBasis& basis = p.bases.at(key);
    std::vector<const GeneralisedCharge*> charges;
    for (const auto& u : p.cat.charges)
      if (u.sector_dims[key.second] > 0) charges.push_back(&u);
    if (charges.empty()) continue;
    const GeneralisedCharge& u = *charges[pick(charges.size())];
    const ComplexVector psi = random_vector(u.sector_dims[key.second], rng);

    std::vector<int> targets;
    for (const auto& c : basis.channels)
      if (std::find(targets.begin(), targets.end(), c.target) == targets.end()) targets.push_back(c.target);
    const int target = targets[pick(targets.size())];
    int k = 0;
    for (const auto& c : basis.channels) k += c.target == target;
    const ChannelBasis rotated = gauge_rotate(basis, target, random_unitary(k, rng()));

    const auto before = transition_probabilities(u, basis, psi);
    const auto after = transition_probabilities(u, rotated, psi);
    stats.total_deviation = std::max({stats.total_deviation, std::abs(before.total - 1.0), std::abs(after.total - 1.0)});
    for (const auto& [s, m] : before.marginals) {
      const double other = after.marginals.count(s) ? after.marginals.at(s) : 0.0;
      stats.gauge_deviation = std::max(stats.gauge_deviation, std::abs(m - other));
    }
    for (const auto& c : before.channels) {
      for (const auto& ch : basis.channels) {
        if (ch.target != c.target || ch.index != c.index) continue;
        stats.direct_deviation =
            std::max(stats.direct_deviation, std::abs(c.p - oracle::channel_probability(u, ch, key.second, psi)));
      }
    }

    // Mixed state of rank up to two.
    const ComplexVector phi2 = random_vector(psi.size(), rng);
    ComplexMatrix rho = 0.7 * psi * psi.adjoint() / psi.squaredNorm() + 0.3 * phi2 * phi2.adjoint() / phi2.squaredNorm();
    double out_trace = 0.0;
    for (const auto& o : apply_channel(u, rotated, DensityMatrix{key.second, rho})) out_trace += o.block.trace().real();
    stats.trace_deviation = std::max(stats.trace_deviation, std::abs(out_trace - rho.trace().real()));

    stats.labels.push_back(p.cat.id + " " + key.first + "@" + t.objects()[key.second] + " " + u.name);
    ++stats.draws;
  }
  return stats;
}

}  // namespace draws
