#include "qhopf/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "qhopf/cg.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/rmatrix.hpp"

namespace qhopf {

using nlohmann::json;

void validate(const SuiteConfig& cfg) {
  if (cfg.q_values.empty()) throw ConfigError("at least one q value is required");
  for (double q : cfg.q_values) {
    if (!(q > 0.0 && q < 1.0)) throw ConfigError("q must lie in (0, 1), got " + std::to_string(q));
  }
  if (cfg.n_max < 0) throw ConfigError("n-max must be nonnegative");
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) throw ConfigError("tol must be positive");
  if (!std::isfinite(cfg.perturb)) throw ConfigError("perturb must be finite");
  for (const auto& s : cfg.suites) {
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), s) == kSuiteNames.end()) {
      throw ConfigError("unknown suite '" + s + "'");
    }
  }
  for (const auto& f : cfg.colour_filter) {
    if (f.empty() || f.find_first_not_of("+-") != std::string::npos) {
      throw ConfigError("colour filter entries are strings over {+,-}, got '" + f + "'");
    }
  }
}

RepFactory rep_factory(const SuiteConfig& cfg) {
  const double eps = cfg.perturb;
  return [eps](const RepLabel& label, const QParams& p) {
    GeneratorRep rep = make_rep(label, p);
    if (eps != 0.0) {
      rep.j0(0) += eps;
      rep.meta.path += "+perturbed";
    }
    return rep;
  };
}

std::string colour_string(const std::vector<int>& colours) {
  std::string s;
  for (int c : colours) s += c > 0 ? '+' : '-';
  return s;
}

namespace {

struct Task {
  std::string suite;
  std::string name;
  CheckParams params;
  std::function<CheckReport()> run;
};

class TaskList {
 public:
  TaskList(const SuiteConfig& cfg) : cfg_(cfg) {}

  void add(std::string suite, std::string name, CheckParams params,
           std::function<CheckReport()> run) {
    if (!keep(params.colours)) return;
    tasks_.push_back({std::move(suite), std::move(name), std::move(params), std::move(run)});
  }

  std::vector<Task>& tasks() { return tasks_; }

 private:
  bool keep(const std::vector<int>& colours) const {
    if (cfg_.colour_filter.empty() || colours.empty()) return true;
    const std::string s = colour_string(colours);
    return std::any_of(cfg_.colour_filter.begin(), cfg_.colour_filter.end(),
                       [&](const std::string& f) { return s.rfind(f, 0) == 0; });
  }

  const SuiteConfig& cfg_;
  std::vector<Task> tasks_;
};

std::vector<int> vals(std::initializer_list<Colour> cs) {
  std::vector<int> v;
  for (Colour c : cs) v.push_back(c.value());
  return v;
}

CheckReport renamed(CheckReport r, std::string name) {
  r.name = std::move(name);
  return r;
}

struct Grid {
  const SuiteConfig& cfg;
  QParams p;
  RepFactory make;

  GeneratorRep dqa(int n, Colour c) const { return make({Algebra::DQA, n, c}, p); }
  GeneratorRep su(int n) const { return make({Algebra::SUQ2, n, std::nullopt}, p); }
};

void scalar_suite(TaskList& out, const Grid& g) {
  const QParams& p = g.p;
  const std::vector<double> samples = default_sample_grid(p);
  out.add("scalar", "fgh_consistency", {p.q(), {}, {}, {}},
          [=] { return check_consistency_FGH(p, samples); });
  for (Colour d : kBothColours) {
    out.add("scalar", "p_equation", {p.q(), {}, vals({d}), {}},
            [=] { return check_p_equation(d, p, samples); });
    out.add("scalar", "inverse_pair", {p.q(), {}, vals({d}), {}},
            [=] { return check_inverse_pair(d, p, samples); });
    for (int n = 0; n <= g.cfg.n_max; ++n) {
      out.add("scalar", "map_equivalence", {p.q(), {n}, vals({d}), {}}, [=] {
        return timed_check("map_equivalence", {p.q(), {n}, vals({d}), {}}, p.tol(),
                           [&] { return rep_distance(g.dqa(n, d), dqa_rep_via_map(n, d, p)); });
      });
    }
  }
}

void algebra_suite(TaskList& out, const Grid& g) {
  const QParams& p = g.p;
  for (int n = 0; n <= g.cfg.n_max; ++n) {
    out.add("algebra", "commutators", {p.q(), {n}, {}, "suq2"},
            [=] { return check_commutators(g.su(n), Algebra::SUQ2, p); });
    out.add("algebra", "casimir", {p.q(), {n}, {}, "suq2"}, [=] {
      return check_casimir(g.su(n), Algebra::SUQ2, q_number(0.5 * n, p) * q_number(0.5 * n + 1, p),
                           p);
    });
    for (Colour d : kBothColours) {
      out.add("algebra", "commutators", {p.q(), {n}, vals({d}), "dqa"},
              [=] { return check_commutators(g.dqa(n, d), Algebra::DQA, p); });
      out.add("algebra", "casimir", {p.q(), {n}, vals({d}), "dqa"},
              [=] { return check_casimir(g.dqa(n, d), Algebra::DQA, casimir_value(n, d, p), p); });
      out.add("algebra", "transmutation", {p.q(), {n}, vals({d}), {}},
              [=] { return check_transmutation(n, d, p); });
    }
  }
}

void hopf_suite(TaskList& out, const Grid& g) {
  const QParams& p = g.p;
  const int nm = g.cfg.n_max;
  for (Colour dl : kBothColours) {
    for (Colour z : kBothColours) {
      out.add("hopf", "sigma_counit", {p.q(), {0}, vals({dl, z}), {}},
              [=] { return check_sigma_counit(dl, z, p); });
    }
  }
  for (int n1 = 0; n1 <= nm; ++n1) {
    for (Colour z : kBothColours) for (Colour e : kBothColours) for (Colour d : kBothColours) {
      out.add("hopf", "counit_axiom", {p.q(), {n1}, vals({z, e, d}), "eta-rep"},
              [=] { return check_counit_axiom(z, e, d, g.dqa(n1, e), p); });
      if (z != e) {
        out.add("hopf", "counit_axiom", {p.q(), {n1}, vals({z, e, d}), "zeta-rep"}, [=] {
          auto r = check_counit_axiom(z, e, d, g.dqa(n1, z), p);
          r.params.tag = "zeta-rep";
          return r;
        });
      }
      for (Colour m : kBothColours) {
        out.add("hopf", "antipode_axiom", {p.q(), {n1}, vals({z, e, m, d}), {}},
                [=] { return check_antipode_axiom(z, e, m, d, g.dqa(n1, m), p); });
        out.add("hopf", "sigma_antipode", {p.q(), {n1}, vals({z, e, d, m}), {}},
                [=] { return check_sigma_antipode(z, e, d, m, g.dqa(n1, z), p); });
      }
    }
    for (int n2 = 0; n2 <= nm; ++n2) {
      for (Colour d : kBothColours) {
        out.add("hopf", "specialization", {p.q(), {n1, n2}, vals({d}), {}},
                [=] { return check_specialization(d, g.dqa(n1, d), g.dqa(n2, d), p); });
      }
      for (Colour z : kBothColours) for (Colour e : kBothColours) for (Colour d : kBothColours) {
        out.add("hopf", "homomorphism", {p.q(), {n1, n2}, vals({z, e, d}), "dqa"}, [=] {
          const GeneratorRep c = coproduct_rep(z, e, d, g.dqa(n1, z), g.dqa(n2, e), p,
                                               ColourCheck::Strict);
          auto r = renamed(check_commutators(c, Algebra::DQA, p), "homomorphism");
          r.params.colours = vals({z, e, d});
          return r;
        });
        for (Colour m : kBothColours) for (Colour nu : kBothColours) for (Colour rho : kBothColours) {
          out.add("hopf", "sigma_coproduct", {p.q(), {n1, n2}, vals({z, e, d, m, nu, rho}), {}},
                  [=] {
                    return check_sigma_coproduct(z, e, d, m, nu, rho, g.dqa(n1, m), g.dqa(n2, nu),
                                                 p);
                  });
        }
      }
      for (int n3 = 0; n3 <= nm; ++n3) {
        out.add("hopf", "suq2_hopf", {p.q(), {n1, n2, n3}, {}, "suq2"},
                [=] { return check_suq2_hopf(n1, n2, n3, p); });
        for (int mask = 0; mask < 64; ++mask) {
          CoassocColours c;
          for (int i = 0; i < 6; ++i) c[i] = (mask >> (5 - i)) & 1 ? Colour::minus() : Colour::plus();
          std::vector<int> cv;
          for (Colour x : c) cv.push_back(x.value());
          out.add("hopf", "coassociativity", {p.q(), {n1, n2, n3}, cv, {}}, [=] {
            return check_coassociativity(c, g.dqa(n1, c[0]), g.dqa(n2, c[1]), g.dqa(n3, c[3]), p);
          });
        }
      }
    }
  }
}

void rmatrix_suite(TaskList& out, const Grid& g) {
  const QParams& p = g.p;
  const int nm = g.cfg.n_max;
  for (int n1 = 0; n1 <= nm; ++n1) {
    for (Colour z : kBothColours) for (Colour e : kBothColours) {
      out.add("rmatrix", "counit_r", {p.q(), {n1}, vals({z, e}), "eta-rep"},
              [=] { return check_counit_r(z, e, g.dqa(n1, e), p); });
      if (z != e) {
        out.add("rmatrix", "counit_r", {p.q(), {n1}, vals({z, e}), "zeta-rep"}, [=] {
          auto r = check_counit_r(z, e, g.dqa(n1, z), p);
          r.params.tag = "zeta-rep";
          return r;
        });
      }
    }
    for (int n2 = 0; n2 <= nm; ++n2) {
      out.add("rmatrix", "suq2_intertwiner", {p.q(), {n1, n2}, {}, "suq2"},
              [=] { return check_suq2_intertwiner(g.su(n1), g.su(n2), p); });
      for (Colour d : kBothColours) {
        out.add("rmatrix", "r_su_equivalence", {p.q(), {n1, n2}, vals({d}), {}},
                [=] { return check_r_su_equivalence(d, n1, n2, p); });
      }
      for (Colour z : kBothColours) for (Colour e : kBothColours) {
        for (Colour d : kBothColours) {
          out.add("rmatrix", "intertwiner", {p.q(), {n1, n2}, vals({z, e, d}), {}},
                  [=] { return check_intertwiner(z, e, d, g.dqa(n1, z), g.dqa(n2, e), p); });
        }
        for (Colour m : kBothColours) for (Colour nu : kBothColours) {
          out.add("rmatrix", "colour_flip", {p.q(), {n1, n2}, vals({z, e, m, nu}), {}}, [=] {
            return check_colour_flip({z, e}, {m, nu}, g.dqa(n1, z), g.dqa(n2, e), p);
          });
          out.add("rmatrix", "antipode_r", {p.q(), {n1, n2}, vals({z, e, m, nu}), {}}, [=] {
            return check_antipode_r(z, e, m, nu, g.dqa(n1, z), g.dqa(n2, e), p);
          });
        }
      }
      for (int n3 = 0; n3 <= nm; ++n3) {
        for (int mask = 0; mask < 32; ++mask) {
          Colour c[5];
          for (int i = 0; i < 5; ++i) c[i] = (mask >> (4 - i)) & 1 ? Colour::minus() : Colour::plus();
          const Colour lambda = c[0], mu = c[1], zeta = c[2], nu = c[3], eta = c[4];
          out.add("rmatrix", "fusion", {p.q(), {n1, n2, n3}, vals({lambda, mu, zeta, nu, eta}), {}},
                  [=] {
                    return check_fusion(lambda, mu, zeta, nu, eta, g.dqa(n1, lambda),
                                        g.dqa(n2, mu), g.dqa(n3, nu), p);
                  });
        }
      }
    }
  }
}

void cybe_suite(TaskList& out, const Grid& g) {
  const QParams& p = g.p;
  const int nm = g.cfg.n_max;
  for (int n1 = 0; n1 <= nm; ++n1) for (int n2 = 0; n2 <= nm; ++n2) for (int n3 = 0; n3 <= nm; ++n3) {
    out.add("cybe", "suq2_ybe", {p.q(), {n1, n2, n3}, {}, "suq2"},
            [=] { return check_suq2_ybe(g.su(n1), g.su(n2), g.su(n3), p); });
    for (Colour z : kBothColours) for (Colour e : kBothColours) for (Colour m : kBothColours) {
      out.add("cybe", "coloured_ybe", {p.q(), {n1, n2, n3}, vals({z, e, m}), {}}, [=] {
        return check_cybe(z, e, m, g.dqa(n1, z), g.dqa(n2, e), g.dqa(n3, m), p);
      });
    }
  }
}

void cg_suite(TaskList& out, const Grid& g) {
  const QParams& p = g.p;
  const int nm = g.cfg.n_max;
  for (int n1 = 0; n1 <= nm; ++n1) for (int n2 = 0; n2 <= nm; ++n2) {
    out.add("cg", "orthonormality", {p.q(), {n1, n2}, {}, "suq2"}, [=] {
      return timed_check("orthonormality", {p.q(), {n1, n2}, {}, "suq2"}, p.tol(),
                         [&] { return orthonormality_residual(cg_suq2(n1, n2, p)); });
    });
    for (Colour z : kBothColours) for (Colour e : kBothColours) {
      auto coupled = [=](Colour d) {
        return coproduct_rep(z, e, d, g.dqa(n1, z), g.dqa(n2, e), p, ColourCheck::Strict);
      };
      out.add("cg", "delta_independence", {p.q(), {n1, n2}, vals({z, e}), {}}, [=] {
        return timed_check("delta_independence", {p.q(), {n1, n2}, vals({z, e}), {}}, p.tol(), [&] {
          return table_distance(decompose_dqa(coupled(Colour::plus()), n1, n2, Colour::plus(), p),
                                decompose_dqa(coupled(Colour::minus()), n1, n2, Colour::minus(), p));
        });
      });
      for (Colour d : kBothColours) {
        const CheckParams cp{p.q(), {n1, n2}, vals({z, e, d}), {}};
        out.add("cg", "wigner_equality", cp, [=] {
          return timed_check("wigner_equality", cp, p.tol(), [&] {
            return table_distance(decompose_dqa(coupled(d), n1, n2, d, p), cg_suq2(n1, n2, p));
          });
        });
        out.add("cg", "orthonormality", cp, [=] {
          return timed_check("orthonormality", cp, p.tol(), [&] {
            return orthonormality_residual(decompose_dqa(coupled(d), n1, n2, d, p));
          });
        });
        out.add("cg", "selection_rule", cp, [=] {
          return check_selection_rule(decompose_dqa(coupled(d), n1, n2, d, p), z, e, d, p);
        });
        const double block_threshold = p.tol() * (n1 + 1) * (n2 + 1);
        out.add("cg", "block_diagonalization", cp, [=] {
          return timed_check("block_diagonalization", cp, block_threshold, [&] {
            const GeneratorRep c = coupled(d);
            return block_diagonalization_residual(c, decompose_dqa(c, n1, n2, d, p), d, p);
          });
        });
      }
    }
  }
}

std::size_t suite_index(const std::string& s) {
  return static_cast<std::size_t>(std::find(kSuiteNames.begin(), kSuiteNames.end(), s) -
                                  kSuiteNames.begin());
}

auto sort_key(const CheckReport& r) {
  return std::tie(r.params.q, r.params.ns, r.params.colours, r.name, r.params.tag);
}

}  // namespace

std::vector<CheckReport> run_suites(const SuiteConfig& cfg) {
  validate(cfg);
  const RepFactory factory = rep_factory(cfg);
  std::vector<Grid> grids;
  grids.reserve(cfg.q_values.size());
  for (double q : cfg.q_values) grids.push_back({cfg, QParams(q, cfg.tol), factory});

  TaskList list(cfg);
  for (const auto& s : kSuiteNames) {
    if (std::find(cfg.suites.begin(), cfg.suites.end(), s) == cfg.suites.end()) continue;
    for (const Grid& g : grids) {
      if (s == "scalar") scalar_suite(list, g);
      if (s == "algebra") algebra_suite(list, g);
      if (s == "hopf") hopf_suite(list, g);
      if (s == "rmatrix") rmatrix_suite(list, g);
      if (s == "cybe") cybe_suite(list, g);
      if (s == "cg") cg_suite(list, g);
    }
  }

  std::vector<Task>& tasks = list.tasks();
  std::vector<CheckReport> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Task& t = tasks[i];
      CheckReport r;
      try {
        r = t.run();
      } catch (const std::exception& e) {
        r = make_report(t.name, t.params, std::numeric_limits<double>::quiet_NaN(), 0.0);
        r.error = e.what();
      }
      r.suite = t.suite;
      reports[i] = std::move(r);
    }
  };
  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
  }

  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    const auto sa = suite_index(a.suite), sb = suite_index(b.suite);
    if (sa != sb) return sa < sb;
    return sort_key(a) < sort_key(b);
  });
  return reports;
}

ReportSummary summarize(const std::vector<CheckReport>& reports) {
  ReportSummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    s.passed += r.pass ? 1 : 0;
    if (std::isfinite(r.residual)) s.max_residual = std::max(s.max_residual, r.residual);
  }
  return s;
}

namespace {

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> row;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j) + 0.0);
    rows.push_back(std::move(row));
  }
  return rows;
}

json config_json(const SuiteConfig& cfg) {
  return {{"qValues", cfg.q_values},
          {"nMax", cfg.n_max},
          {"colours", cfg.colour_filter},
          {"tol", cfg.tol},
          {"suites", cfg.suites},
          {"format", cfg.format == ReportFormat::Json ? "json" : "csv"},
          {"dumpMatrices", cfg.dump_matrices},
          {"perturb", cfg.perturb}};
}

json check_json(const CheckReport& r, bool canonical) {
  json j{{"suite", r.suite},
         {"name", r.name},
         {"params",
          {{"q", r.params.q}, {"ns", r.params.ns}, {"colours", r.params.colours}, {"tag", r.params.tag}}},
         {"threshold", r.threshold},
         {"pass", r.pass}};
  j["residual"] = std::isfinite(r.residual) ? json(r.residual) : json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  if (!canonical) j["elapsedMicros"] = r.elapsed_micros;
  return j;
}

json dump_json(const SuiteConfig& cfg) {
  json out = json::array();
  for (double q : cfg.q_values) {
    const QParams p(q, cfg.tol);
    const RepFactory make = rep_factory(cfg);
    for (int n = 0; n <= cfg.n_max; ++n) {
      for (Colour d : kBothColours) {
        const GeneratorRep r = make({Algebra::DQA, n, d}, p);
        std::vector<double> j0(r.j0.begin(), r.j0.end());
        out.push_back({{"kind", "irrep"},
                       {"q", q},
                       {"ns", {n}},
                       {"colours", {d.value()}},
                       {"j0", j0},
                       {"jplus", matrix_json(r.jplus)},
                       {"jminus", matrix_json(r.jminus)}});
      }
    }
    for (int n1 = 0; n1 <= cfg.n_max; ++n1) {
      for (int n2 = 0; n2 <= cfg.n_max; ++n2) {
        json basis = json::array();
        for (int a = 0; a <= n1; ++a)
          for (int b = 0; b <= n2; ++b) basis.push_back({a, b});
        for (Colour z : kBothColours) {
          for (Colour e : kBothColours) {
            const Matrix r = r_coloured({z, e}, make({Algebra::DQA, n1, z}, p),
                                        make({Algebra::DQA, n2, e}, p), p);
            out.push_back({{"kind", "rmatrix"},
                           {"q", q},
                           {"ns", {n1, n2}},
                           {"colours", {z.value(), e.value()}},
                           {"basis", basis},
                           {"matrix", matrix_json(r)}});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::string dump_matrices_json(const SuiteConfig& cfg) { return dump_json(cfg).dump(2); }

std::string emit_json(const std::vector<CheckReport>& reports, const SuiteConfig& cfg,
                      bool canonical) {
  if (reports.empty()) throw EmptyReport("no checks to report");
  json checks = json::array();
  for (const auto& r : reports) checks.push_back(check_json(r, canonical));
  const ReportSummary s = summarize(reports);
  json doc{{"version", 1},
           {"config", config_json(cfg)},
           {"checks", std::move(checks)},
           {"summary", {{"total", s.total}, {"passed", s.passed}, {"maxResidual", s.max_residual}}}};
  if (cfg.dump_matrices) doc["matrices"] = dump_json(cfg);
  return doc.dump(2) + "\n";
}

std::string emit_csv(const std::vector<CheckReport>& reports) {
  if (reports.empty()) throw EmptyReport("no checks to report");
  std::ostringstream os;
  os << "suite,name,q,ns,colours,tag,residual,threshold,pass,elapsed_micros,error\n";
  char buf[64];
  auto num = [&](double x) -> std::string {
    if (!std::isfinite(x)) return "";
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  };
  for (const auto& r : reports) {
    std::string ns;
    for (std::size_t i = 0; i < r.params.ns.size(); ++i) {
      ns += (i ? ";" : "") + std::to_string(r.params.ns[i]);
    }
    std::string err = r.error;
    std::replace(err.begin(), err.end(), '"', '\'');
    os << r.suite << ',' << r.name << ',' << num(r.params.q) << ',' << ns << ','
       << colour_string(r.params.colours) << ',' << r.params.tag << ',' << num(r.residual) << ','
       << num(r.threshold) << ',' << (r.pass ? "true" : "false") << ',' << r.elapsed_micros << ','
       << (err.empty() ? "" : "\"" + err + "\"") << '\n';
  }
  return os.str();
}

ParsedReport parse_json(const std::string& text) {
  ParsedReport out;
  try {
    const json doc = json::parse(text);
    const json& c = doc.at("config");
    out.config.q_values = c.at("qValues").get<std::vector<double>>();
    out.config.n_max = c.at("nMax").get<int>();
    out.config.colour_filter = c.at("colours").get<std::vector<std::string>>();
    out.config.tol = c.at("tol").get<double>();
    out.config.suites = c.at("suites").get<std::vector<std::string>>();
    out.config.format = c.at("format").get<std::string>() == "csv" ? ReportFormat::Csv
                                                                    : ReportFormat::Json;
    out.config.dump_matrices = c.at("dumpMatrices").get<bool>();
    out.config.perturb = c.at("perturb").get<double>();
    for (const json& j : doc.at("checks")) {
      CheckReport r;
      r.suite = j.at("suite").get<std::string>();
      r.name = j.at("name").get<std::string>();
      const json& pj = j.at("params");
      r.params.q = pj.at("q").get<double>();
      r.params.ns = pj.at("ns").get<std::vector<int>>();
      r.params.colours = pj.at("colours").get<std::vector<int>>();
      r.params.tag = pj.at("tag").get<std::string>();
      r.residual = j.at("residual").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                              : j.at("residual").get<double>();
      r.threshold = j.at("threshold").get<double>();
      r.pass = j.at("pass").get<bool>();
      r.elapsed_micros = j.value("elapsedMicros", std::int64_t{0});
      r.error = j.value("error", std::string{});
      out.checks.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
  return out;
}

void emit_report(const std::vector<CheckReport>& reports, const SuiteConfig& cfg, bool canonical) {
  const std::string text =
      cfg.format == ReportFormat::Json ? emit_json(reports, cfg, canonical) : emit_csv(reports);
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + cfg.out_path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + cfg.out_path + "'");
}

}  // namespace qhopf
