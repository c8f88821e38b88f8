#include "ellgen/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "ellgen/cusp.hpp"
#include "ellgen/genus.hpp"
#include "ellgen/localizer.hpp"
#include "ellgen/obstruction.hpp"

namespace ellgen {

namespace {

using GR = GaussianRational;

struct Collector {
  std::vector<SuiteCheck> out;

  // Errors raised inside a check turn it into FAIL with the message attached.
  void run(const std::string& name, const std::function<bool(Json&)>& body) {
    SuiteCheck c{name, false, Json::object()};
    try {
      c.pass = body(c.detail);
    } catch (const Error& e) {
      c.detail["error"] = e.what();
    }
    out.push_back(std::move(c));
  }
};

std::string v_name(int n, int l) { return "V(" + std::to_string(n) + "," + std::to_string(l) + ")"; }

void genus_checks(Collector& col, int qorder) {
  col.run("genus.generating_function_cp2k", [](Json& d) {
    d["kmax"] = 4;
    return cp_generating_check(4);
  });
  col.run("genus.hp2_generic_is_epsilon", [](Json& d) {
    const ModularPoly v = genus_value(generic_spec(), builtin("HP2")).value;
    d["value"] = to_json(v);
    return v == ModularPoly::epsilon();
  });
  for (int n : {4, 6, 8}) {
    col.run("genus.hypersurface_index." + v_name(n, n), [n](Json& d) {
      const HypersurfaceIndex h = hypersurface_pipelines(n);
      const Rational closed = hypersurface_index_closed(n);
      d["residue"] = to_json(h.residue);
      d["w_coefficient"] = to_json(h.w_coefficient);
      d["twisted"] = to_json(h.twisted);
      d["closed_form"] = to_json(closed);
      return h.residue == closed && h.w_coefficient == closed && h.twisted == closed;
    });
  }
  col.run("genus.euler_hypersurfaces", [](Json& d) {
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
      const Rational chi = euler_characteristic(builtin(v_name(n, n)));
      Rational power(1);
      for (int j = 0; j < n + 2; ++j) power = power * Rational(1 - n);
      const Rational closed = (power - Rational(1)) / Rational(n) + Rational(n + 2);
      d[v_name(n, n)] = to_json(chi);
      ok = ok && chi == closed;
    }
    return ok;
  });
  col.run("genus.ahat_vanishing", [](Json& d) {
    bool ok = true;
    for (const std::string name : {"CP1", "CP3", "CP5", "CP7", "HP1", "HP2", "HP3"}) {
      const Rational v = genus_value(ahat_spec(), builtin(name)).value;
      d[name] = to_json(v);
      ok = ok && v.is_zero();
    }
    const Rational cp2 = genus_value(ahat_spec(), builtin("CP2")).value;
    d["CP2"] = to_json(cp2);
    return ok && cp2 == Rational(-1, 8);
  });
  col.run("genus.expansion_coefficients", [qorder](Json& d) {
    bool ok = true;
    for (const auto& name : builtin_catalog()) {
      const ManifoldModel m = builtin(name);
      if (m.dim_real % 4 != 0) continue;
      const int k = m.dim_real / 4;
      const QSeriesQ phi = phi0_series(m, std::min(qorder, 2)).series;
      const Rational a0 = genus_value(ahat_spec(), m).value;
      const Rational a1 = -ahat_twisted_direct(m, DirectBundle::kComplexifiedTangent);
      d[name] = Json::array({to_json(phi.coeff(-k)), to_json(phi.coeff(2 - k))});
      ok = ok && phi.coeff(-k) == a0 && phi.coeff(2 - k) == a1;
    }
    const QSeriesQ hp2 = phi0_series(builtin("HP2"), 2).series;
    ok = ok && !hp2.coeff(0).is_zero();
    return ok;
  });
}

void cusp_checks(Collector& col, int qorder) {
  for (Cusp c : {Cusp::kSignature, Cusp::kAhat}) {
    col.run(std::string("cusp.epsilon_consistency.") + cusp_name(c), [c, qorder](Json& d) {
      const CuspExpansion e = generator_expansions(c, qorder);
      d["delta"] = series_to_json(e.delta);
      d["epsilon"] = series_to_json(e.epsilon);
      return true;
    });
  }
  for (const std::string name : {"CP4", "CP6", "HP2", "HP3", "V(4,4)", "CP2 x CP2"}) {
    for (Cusp c : {Cusp::kSignature, Cusp::kAhat}) {
      col.run("cusp.modularity." + name + "." + cusp_name(c), [name, c, qorder](Json& d) {
        const ModularityReport r = modularity_report(builtin(name), c, qorder);
        d["genus"] = to_json(r.genus);
        return r.holds;
      });
    }
  }
  col.run("cusp.hp2_normalized_phi_is_one", [qorder](Json& d) {
    const NormalizedPhi p = normalized_phi(builtin("HP2"), Cusp::kSignature, qorder);
    d["value"] = series_to_json(p.value);
    return !p.squared && p.value == QSeriesQ(Rational(1)).truncated(2 * qorder);
  });
  col.run("cusp.generator_rank", [qorder](Json& d) {
    bool ok = true;
    for (Cusp c : {Cusp::kSignature, Cusp::kAhat}) {
      const IndependenceReport r = generator_independence(c, qorder, 12);
      d[cusp_name(c)] = {{"weights", r.weights}, {"ranks", r.ranks}, {"monomials", r.monomials}};
      ok = ok && r.independent;
    }
    return ok;
  });
}

void localizer_checks(Collector& col, int qorder) {
  const int lq = std::min(qorder, 5);
  const std::vector<GR> samples{GR(2), GR(3), GR(5)};
  for (const std::string name : {"HP2_diagonal(1,2,4)", "HP1_diagonal(1,2)"}) {
    col.run("localizer.rigidity." + name, [&, name](Json& d) {
      const RigidityReport r = rigidity_check(builtin_action(name), samples, lq);
      d["status"] = r.status;
      d["value"] = series_to_json(r.values.front());
      return r.status == "PASS";
    });
  }
  col.run("localizer.nx_pair_at_i", [lq](Json& d) {
    const TruncPoly<QSeriesQi> nx = nx_pair_at_i(lq, 3);
    const QSeriesQi minus_one = QSeriesQi(GR(-1)).truncated(2 * lq);
    d["qorder"] = lq;
    return nx == TruncPoly<QSeriesQi>::constant(nx.vars(), minus_one);
  });
  col.run("localizer.isolated_points_at_i", [lq](Json& d) {
    bool ok = true;
    for (const std::vector<int>& w : std::vector<std::vector<int>>{{1, 5}, {1, 1, 5, -3}, {3, 7, 1, 1, -5, 9}}) {
      FixedComponent c{builtin("pt"), {}};
      for (int x : w) c.normal.push_back({{}, x});
      const QSeriesQi t = local_term<GR>(c, GR::i(), lq);
      ok = ok && t.valuation() == 0 && t.stored().size() == 1 && t.coeff(0).norm() == Rational(1);
      d[std::to_string(w.size()) + "_weights"] = series_to_json(t);
    }
    return ok;
  });
  for (const auto& name : builtin_action_catalog()) {
    col.run("localizer.euler_fixed." + name, [name](Json& d) {
      const EulerCheck e = euler_fixed_check(builtin_action(name));
      d["fixed"] = to_json(e.fixed);
      d["ambient"] = to_json(e.ambient);
      d["partial"] = e.partial;
      return e.holds;
    });
  }
}

void obstruction_checks(Collector& col, int qorder) {
  for (const auto& name : builtin_action_catalog()) {
    col.run("obstruction.cross_check." + name, [name, qorder](Json& d) {
      const CircleActionData a = builtin_action(name);
      bool ok = true;
      for (int o = 2; o <= 6; ++o) {
        const CrossCheck c = cross_check_prediction(a, o, std::min(qorder, 3));
        d[std::to_string(o)] = {{"m_o", to_json(c.m_o)}, {"codim", c.codim}, {"predicted", c.predicted}, {"status", c.status}};
        ok = ok && c.status != "FAIL";
      }
      return ok;
    });
  }
  col.run("obstruction.vanish_arithmetic", [](Json& d) {
    bool ok = true;
    int cases = 0;
    for (int c = 0; c <= 48; c += 2) {
      for (int o = 2; o <= 6; ++o) {
        int expect = 0;
        for (int r = 0; r < 64; ++r) {
          if (c > 2 * o * r) expect = r + 1;
        }
        ok = ok && vanish_prediction(VanishSource::kCyclicCodim, Rational(c), o) == expect;
        ++cases;
      }
    }
    d["cases"] = cases;
    return ok;
  });
  col.run("obstruction.code_audit_random", [](Json& d) {
    std::mt19937_64 rng(20240601);
    bool ok = true;
    for (int t = 0; t < 1000; ++t) {
      IntMatrix a(4, std::vector<long long>(12));
      for (auto& row : a) {
        for (auto& x : row) x = static_cast<long long>(rng() % 2);
      }
      ok = ok && code_audit(a, 2, 6).sublinear;
    }
    d["matrices"] = 1000;
    return ok;
  });
  col.run("obstruction.lattice_normal_form", [](Json& d) {
    const LatticeNormalForm nf = lattice_normal_form({{2, 1, 0, 1}, {1, 1, 1, 0}}, 2);
    d["matrix"] = matrix_to_json(nf.matrix);
    d["covering_degree"] = nf.covering_degree;
    return is_lattice_normal(nf.matrix, 2) && nf.covering_degree % 2 != 0;
  });
}

void io_checks(Collector& col) {
  col.run("io.model_roundtrip", [](Json& d) {
    bool ok = true;
    for (const auto& name : builtin_catalog()) {
      const ManifoldModel m = builtin(name);
      const Json j = model_to_json(m);
      ok = ok && model_from_json(parse_json_text(j.dump(), name)) == m;
    }
    d["models"] = builtin_catalog().size();
    return ok;
  });
  col.run("io.action_roundtrip", [](Json& d) {
    bool ok = true;
    for (const auto& name : builtin_action_catalog()) {
      const CircleActionData a = builtin_action(name);
      ok = ok && action_from_json(parse_json_text(action_to_json(a).dump(), name)) == a;
    }
    d["actions"] = builtin_action_catalog().size();
    return ok;
  });
}

}  // namespace

std::vector<std::string> suite_names() { return {"all", "genus", "cusp", "localizer", "obstruction", "io"}; }

std::vector<SuiteCheck> run_suite(const std::string& suite, int qorder) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) fail(ErrorCode::kUnknownName, "unknown suite: " + suite);
  if (qorder < 2) fail(ErrorCode::kDomain, "verification needs qorder >= 2");
  Collector col;
  const bool all = suite == "all";
  if (all || suite == "genus") genus_checks(col, qorder);
  if (all || suite == "cusp") cusp_checks(col, qorder);
  if (all || suite == "localizer") localizer_checks(col, qorder);
  if (all || suite == "obstruction") obstruction_checks(col, qorder);
  if (all || suite == "io") io_checks(col);
  return col.out;
}

Json suite_to_json(const std::vector<SuiteCheck>& checks) {
  Json out = Json::array();
  for (const SuiteCheck& c : checks) out.push_back({{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
  return out;
}

}  // namespace ellgen
