#include "cha/selftest.hpp"

#include <cmath>
#include <functional>

#include "cha/bch.hpp"
#include "cha/json_io.hpp"
#include "cha/oracle.hpp"
#include "cha/sampling.hpp"

namespace cha {

namespace {

json pair_json(const ChaElement& x, const ChaElement& y) {
  return json{{"x", x}, {"y", y}};
}

json triple_json(const ChaElement& x, const ChaElement& y, const ChaElement& w) {
  return json{{"x", x}, {"y", y}, {"w", w}};
}

// residual <= 0 counts as pass; the driver records worst and first repro
PropertyReport run_property(const std::string& name, int cases,
                            const std::function<std::pair<double, json>(int)>& one) {
  PropertyReport rep;
  rep.name = name;
  rep.cases = cases;
  for (int i = 0; i < cases; ++i) {
    auto [excess, repro] = one(i);
    rep.worst = std::max(rep.worst, excess);
    if (excess > 0.0) {
      if (rep.failures == 0) rep.repro = repro.dump();
      ++rep.failures;
    }
  }
  return rep;
}

} // namespace

SelftestReport run_selftest(int n, int cases, std::uint64_t seed) {
  if (n < 1) throw DimensionError("run_selftest: n must be >= 1");
  if (cases < 1) throw NumericError("run_selftest: cases must be >= 1");
  SelftestReport report;
  Rng rng(seed);

  report.properties.push_back(run_property("antisymmetry", cases, [&](int) {
    const ChaElement x = rng.element(n, -3.0, 3.0);
    const ChaElement y = rng.element(n, -3.0, 3.0);
    const double r = add(commutator(x, y), commutator(y, x)).inf_norm();
    return std::make_pair(r, pair_json(x, y));
  }));

  report.properties.push_back(run_property("jacobi-identity", cases, [&](int) {
    const ChaElement x = rng.element(n, -3.0, 3.0);
    const ChaElement y = rng.element(n, -3.0, 3.0);
    const ChaElement w = rng.element(n, -3.0, 3.0);
    const ChaElement s = add(add(commutator(x, commutator(y, w)),
                                 commutator(y, commutator(w, x))),
                             commutator(w, commutator(x, y)));
    const double scalev = std::max(1.0, x.inf_norm() * y.inf_norm() * w.inf_norm());
    return std::make_pair(s.inf_norm() - 1e-12 * scalev, triple_json(x, y, w));
  }));

  report.properties.push_back(run_property("bracket-lands-in-ideal", cases, [&](int) {
    const ChaElement x = rng.element(n, -3.0, 3.0);
    const ChaElement y = rng.element(n, -3.0, 3.0);
    const ChaElement k = commutator(x, y);
    double bad = std::abs(k.c);
    for (double v : k.b) bad = std::max(bad, std::abs(v));
    return std::make_pair(bad, pair_json(x, y));  // must be exactly zero
  }));

  report.properties.push_back(run_property("ad-power-closed-form", cases, [&](int i) {
    const ChaElement x = rng.element(n, -3.0, 3.0);
    const ChaElement y = rng.element(n, -3.0, 3.0);
    const int k = 2 + (i % 11);
    ChaElement it = y;
    for (int j = 0; j < k; ++j) it = commutator(x, it);
    const ChaElement cl = ad_pow(x, y, k);
    const double scalev = std::max(1.0, it.inf_norm());
    return std::make_pair(add(cl, scale(-1.0, it)).inf_norm() - 1e-12 * scalev,
                          pair_json(x, y));
  }));

  report.properties.push_back(run_property("center-trivial", cases, [&](int) {
    ChaElement x = rng.element(n, -3.0, 3.0);
    if (x.is_zero()) x.z = 1.0;
    const bool central = is_central(x, 1e-9 * x.inf_norm());
    return std::make_pair(central ? 1.0 : 0.0, json{{"x", x}});
  }));

  report.properties.push_back(run_property("z-b-c-additivity", cases, [&](int) {
    const ChaElement x = rng.element(n, -3.0, 3.0);
    const ChaElement y = rng.element(n, -3.0, 3.0);
    const ChaElement z = bch(x, y);
    double bad = (z.c == x.c + y.c) ? 0.0 : 1.0;
    for (int i = 0; i < n; ++i)
      if (z.b[i] != x.b[i] + y.b[i]) bad = 1.0;
    return std::make_pair(bad, pair_json(x, y));
  }));

  report.properties.push_back(run_property("inverse", cases, [&](int) {
    const ChaElement x = rng.element(n, -3.0, 3.0);
    const double r = bch(x, scale(-1.0, x)).inf_norm();
    return std::make_pair(r - 1e-12, json{{"x", x}});
  }));

  report.properties.push_back(run_property("heisenberg-restriction", cases, [&](int) {
    ChaElement x = rng.element(n, -1.0, 1.0);
    ChaElement y = rng.element(n, -1.0, 1.0);
    x.c = 0.0;
    y.c = 0.0;
    const ChaElement d = add(bch(x, y), scale(-1.0, bch_heisenberg(x, y)));
    return std::make_pair(d.inf_norm() - 1e-14, pair_json(x, y));
  }));

  OracleOptions opts;
  opts.max_terms = 800;
  report.properties.push_back(run_property("oracle-equivalence", cases, [&](int) {
    const ChaElement x = rng.element_c(n, -1.0, 1.0, -0.3, 1.5);
    const ChaElement y = rng.element_c(n, -1.0, 1.0, -0.3, 1.5);
    const ChaElement zc = bch(x, y);
    const ChaElement zs = bch_series(x, y, opts).value;
    return std::make_pair(add(zc, scale(-1.0, zs)).inf_norm() - 1e-8, pair_json(x, y));
  }));

  report.properties.push_back(run_property("group-law-adjoint", cases, [&](int) {
    const ChaElement x = rng.element(n, -3.0, 3.0);
    const ChaElement y = rng.element(n, -3.0, 3.0);
    const ChaElement z = bch(x, y);
    const double tol = 1e-10 * std::max({1.0, x.inf_norm(), y.inf_norm()});
    auto [ok, residual] = verify_group_law(x, y, z, tol);
    return std::make_pair(ok ? residual - tol : residual, pair_json(x, y));
  }));

  report.properties.push_back(run_property("associativity", cases, [&](int) {
    const ChaElement x = rng.element(n, -1.0, 1.0);
    const ChaElement y = rng.element(n, -1.0, 1.0);
    const ChaElement w = rng.element(n, -1.0, 1.0);
    const ChaElement l = bch(bch(x, y), w);
    const ChaElement r = bch(x, bch(y, w));
    return std::make_pair(add(l, scale(-1.0, r)).inf_norm() - 1e-8, triple_json(x, y, w));
  }));

  return report;
}

} // namespace cha
