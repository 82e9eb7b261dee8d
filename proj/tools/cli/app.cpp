#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "config.hpp"
#include "output.hpp"
#include "tfp/bias.hpp"
#include "tfp/edge_list.hpp"
#include "tfp/error.hpp"
#include "tfp/graphon.hpp"
#include "tfp/mc_engine.hpp"
#include "tfp/sparse_models.hpp"
#include "tfp/star_graph.hpp"

namespace tfp::cli {

namespace {

// Exact ERRG means are skipped above this size: (1-p)^(n-1) grows too many digits.
constexpr std::int64_t max_exact_errg_n = 400;

struct Globals {
  std::string format = "csv";
  std::uint64_t seed = 1;
  std::int64_t trials = 1000;
  int workers = 0;
  int quadrature_n = default_quadrature_n;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* trials_opt = nullptr;
  CLI::Option* workers_opt = nullptr;
};

std::vector<Rational> read_attribute_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open attribute file " + path);
  std::vector<Rational> x;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      x.push_back(parse_exact_number(line.substr(first, last - first + 1)));
    } catch (const std::exception& e) {
      throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return x;
}

// ---- bias -------------------------------------------------------------------

struct BiasArgs {
  std::string path;
  std::string attribute = "triangle";
  bool summary = false;
};

void cmd_bias(const BiasArgs& a, RecordWriter& w) {
  const auto g = read_edge_list(std::filesystem::path(a.path));
  BiasReport report;
  std::vector<Rational> x;
  if (a.attribute == "triangle" || a.attribute == "degree" || a.attribute == "wedge") {
    const auto s = vertex_stats(g);
    const auto& v = a.attribute == "triangle" ? s.triangles : (a.attribute == "degree" ? s.degrees : s.wedges);
    x.assign(v.begin(), v.end());
    const auto kind = a.attribute == "triangle" ? AttributeKind::triangle
                                                : (a.attribute == "degree" ? AttributeKind::degree : AttributeKind::wedge);
    report = attribute_bias(g, x, kind);
  } else if (a.attribute.rfind("file:", 0) == 0) {
    x = read_attribute_file(a.attribute.substr(5));
    report = attribute_bias(g, x);
  } else {
    throw InputError("attribute must be degree, wedge, triangle or file:<path>");
  }
  const std::string kind(to_string(report.attribute_kind));
  if (!a.summary) {
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
      w.write(Record()
                  .add("attribute", kind)
                  .add("row", std::to_string(i))
                  .add("degree", static_cast<std::int64_t>(g.degree(i)))
                  .add("x", x[i])
                  .add("bias", report.per_vertex[i]));
    }
  }
  w.write(Record()
              .add("attribute", kind)
              .add("row", std::string("average"))
              .add("degree", std::monostate{})
              .add("x", std::monostate{})
              .add("bias", report.average));
}

// ---- pcs --------------------------------------------------------------------

struct PcsArgs {
  std::string spec;
  std::string glue;
  std::string at = "end:0,end:0";
  int catalogue = 0;
};

PcsSpec parse_spec_noting(const std::string& text, std::ostream& err) {
  int converted = 0;
  auto spec = PcsSpec::parse(text, &converted);
  if (converted > 0) {
    err << "note: " << converted << " band(s) of width 1 in '" << text << "' treated as isolated triangles\n";
  }
  return spec;
}

void cmd_pcs(const PcsArgs& a, RecordWriter& w, std::ostream& err) {
  if (a.catalogue > 0) {
    for (const auto& [spec, total] : small_bias_catalogue(a.catalogue)) {
      w.write(Record()
                  .add("spec", spec.str())
                  .add("vertices", static_cast<std::int64_t>(spec.vertex_count()))
                  .add("total", total)
                  .add("average", total / Rational(spec.vertex_count())));
    }
    return;
  }
  if (a.spec.empty()) throw InputError("pcs needs a spec or --catalogue");
  const auto s1 = parse_spec_noting(a.spec, err);
  if (a.glue.empty()) {
    const auto cf = pcs_closed_form(s1);
    const auto direct = triangle_bias(build_pcs(s1)).average;
    w.write(Record()
                .add("spec", s1.str())
                .add("vertices", static_cast<std::int64_t>(s1.vertex_count()))
                .add("triangles", static_cast<std::int64_t>(s1.triangle_count()))
                .add("closed_form_average", cf.average)
                .add("direct_average", direct)
                .add("closed_form_total", cf.total)
                .add("agree", cf.average == direct));
    return;
  }
  const auto s2 = parse_spec_noting(a.glue, err);
  const auto comma = a.at.find(',');
  if (comma == std::string::npos) throw InputError("--at expects two selectors: <v1>,<v2>");
  const auto v1 = resolve_vertex(s1, a.at.substr(0, comma));
  const auto v2 = resolve_vertex(s2, a.at.substr(comma + 1));
  const auto g = glue_pcs(s1, v1, s2, v2);
  const auto direct = triangle_bias(g);
  const auto d = nb_decomposition(s1, v1, s2, v2);
  w.write(Record()
              .add("spec_1", s1.str())
              .add("vertex_1", static_cast<std::int64_t>(v1))
              .add("spec_2", s2.str())
              .add("vertex_2", static_cast<std::int64_t>(v2))
              .add("glued_vertices", static_cast<std::int64_t>(g.vertex_count()))
              .add("glued_average", direct.average)
              .add("glued_total", direct.total())
              .add("old_total_1", d.old_total_1)
              .add("old_total_2", d.old_total_2)
              .add("center_gain", d.center_gain)
              .add("glue_vertex_loss", d.glue_vertex_loss)
              .add("neighbor_correction", d.neighbor_correction)
              .add("decomposed_total", d.new_total)
              .add("lower_bound", d.lower_bound())
              .add("ring_neighbors_1", static_cast<std::int64_t>(d.ring_neighbors_1))
              .add("ring_neighbors_2", static_cast<std::int64_t>(d.ring_neighbors_2))
              .add("identity_holds", d.new_total == direct.total()));
}

// ---- zeta-curve ---------------------------------------------------------------

struct ZetaArgs {
  double lo = 1e-3;
  double hi = 1e3;
  int points = 100;
  bool log_scale = false;
  std::optional<double> lambda;
};

void cmd_zeta(const ZetaArgs& a, RecordWriter& w) {
  std::vector<double> grid;
  if (a.lambda) {
    grid.push_back(*a.lambda);
  } else {
    if (!(a.lo > 0)) throw InputError("--min must be positive");
    if (!(a.lo < a.hi)) throw InputError("--min must be smaller than --max");
    if (a.points < 2) throw InputError("--points must be at least 2");
    for (int i = 0; i < a.points; ++i) {
      const double t = static_cast<double>(i) / (a.points - 1);
      grid.push_back(a.log_scale ? std::exp(std::log(a.lo) + t * (std::log(a.hi) - std::log(a.lo)))
                                 : a.lo + t * (a.hi - a.lo));
    }
    grid.back() = a.hi;
  }
  for (double l : grid) w.write(Record().add("lambda", l).add("zeta", zeta_errg(l)));
}

// ---- exact --------------------------------------------------------------------

struct ExactErrgArgs {
  std::int64_t n = 0;
  std::string p;
  std::string lambda;
};

Rational errg_p(const ExactErrgArgs& a) {
  if (a.p.empty() == a.lambda.empty()) throw InputError("give exactly one of --p and --lambda");
  if (a.n < 1) throw InputError("--n must be positive");
  const Rational p = a.p.empty() ? parse_exact_number(a.lambda) / Rational(a.n) : parse_exact_number(a.p);
  if (p < Rational(0) || p > Rational(1)) throw DomainError("p must lie in [0, 1]");
  return p;
}

void write_errg_row(RecordWriter& w, std::int64_t n, const Rational& p, double mean,
                    const std::optional<Rational>& exact) {
  const double pd = p.to_double();
  const double lambda = pd * static_cast<double>(n);
  Record r;
  r.add("model", std::string("errg"))
      .add("n", n)
      .add("p", pd)
      .add("mean", mean)
      .add("mean_exact", exact ? Value(*exact) : Value(std::monostate{}))
      .add("n_mean", mean * static_cast<double>(n))
      .add_optional("zeta", lambda > 0 ? std::optional<double>(zeta_errg(lambda)) : std::nullopt)
      .add("dense_limit", errg_dense_limit(pd))
      .add_optional("triangle_free_limit",
                    lambda > 0 ? std::optional<double>(triangle_free_limit_errg(lambda)) : std::nullopt);
  w.write(r);
}

void cmd_exact_errg(const ExactErrgArgs& a, bool oracle, RecordWriter& w) {
  const Rational p = errg_p(a);
  if (oracle) {
    const auto exact = errg_brute_force_mean(a.n, p);
    write_errg_row(w, a.n, p, exact.to_double(), exact);
    return;
  }
  if (a.n < 3) throw DomainError("the exact ERRG mean needs n >= 3");
  std::optional<Rational> exact;
  if (a.n <= max_exact_errg_n) exact = errg_exact_mean_tfb(a.n, p);
  const double mean = exact ? exact->to_double() : errg_exact_mean_tfb(ErrgParams::from_p(a.n, p.to_double()));
  write_errg_row(w, a.n, p, mean, exact);
}

struct ExactCmArgs {
  std::string degree_file;
  std::string distribution;
  std::int64_t n = 0;
  std::string values;
};

DegreeSequence cm_degrees(const ExactCmArgs& a) {
  const int given = !a.degree_file.empty() + !a.distribution.empty() + !a.values.empty();
  if (given != 1) throw InputError("give exactly one of --degrees, --dist and --values");
  if (!a.degree_file.empty()) return DegreeSequence::read(std::filesystem::path(a.degree_file));
  if (!a.distribution.empty()) return DegreeSequence::from_named(a.distribution, a.n);
  std::vector<std::int64_t> d;
  std::stringstream ss(a.values);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      d.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad degree '" + item + "'");
    }
  }
  return DegreeSequence(std::move(d));
}

void cmd_exact_cm(const ExactCmArgs& a, bool oracle, RecordWriter& w) {
  const auto ds = cm_degrees(a);
  const Rational exact = oracle ? cm_brute_force_mean(ds) : cm_exact_mean_tfb_exact(ds);
  const double c1 = ds.normalized_moment(1), c2 = ds.normalized_moment(2), c3 = ds.normalized_moment(3);
  const double n = static_cast<double>(ds.size());
  w.write(Record()
              .add("model", std::string("cm"))
              .add("n", static_cast<std::int64_t>(ds.size()))
              .add("m1", ds.half_edges())
              .add("c1", c1)
              .add("c2", c2)
              .add("c3", c3)
              .add("mean", exact.to_double())
              .add("mean_exact", exact)
              .add("n_mean", exact.to_double() * n)
              .add("zeta_cm", zeta_cm(c1, c2, c3))
              .add("nu", cm_triangle_rate(c1, c2))
              .add("triangle_free_limit", triangle_free_limit_cm(c1, c2)));
}

// ---- mc -------------------------------------------------------------------------

void write_estimate(RecordWriter& w, const ExperimentConfig& c, const McEstimate& e) {
  w.write(Record()
              .add("model", describe(c.model))
              .add("statistic", c.statistic.str())
              .add("mean", e.mean)
              .add("stderr", e.standard_error)
              .add("trials", e.trials)
              .add("master_seed", e.master_seed));
}

void apply_globals(ExperimentConfig& c, const Globals& g) {
  if (g.trials_opt->count() > 0) c.trials = g.trials;
  if (g.seed_opt->count() > 0) c.master_seed = g.seed;
  if (g.workers_opt->count() > 0) c.workers = g.workers;
}

void cmd_mc(const std::string& path, const Globals& g, RecordWriter& w) {
  auto c = read_experiment(path);
  apply_globals(c, g);
  write_estimate(w, c, run_mc(c));
}

// ---- graphon --------------------------------------------------------------------

struct GraphonArgs {
  std::string file;
  double p = 0, alpha = 0, beta = 0, gamma = 0;
  std::vector<double> profile;
  std::vector<double> polynomial;
  std::int64_t sample_n = 0;
  int power = 2;
};

// Real-valued option that also takes a/b.
CLI::Option* add_real(CLI::App* app, const std::string& name, double& target) {
  return app->add_option_function<std::string>(
      name, [&target](const std::string& text) { target = parse_exact_number(text).to_double(); },
      "Decimal or a/b");
}

void cmd_graphon(const Graphon& graphon, const GraphonArgs& a, const Globals& g, RecordWriter& w) {
  validate(graphon);
  const double chi = chi_t(graphon, g.quadrature_n);
  const double quad = chi_t_quadrature(graphon, g.quadrature_n);
  std::optional<ChiBreakdown> br;
  if (const auto* t = std::get_if<TwoBlockGraphon>(&graphon)) br = two_block_chi(t->alpha, t->beta, t->gamma, t->p);
  Record r;
  r.add("kind", std::string(kind_name(graphon)))
      .add("chi", chi)
      .add("chi_quadrature", quad)
      .add("quadrature_n", static_cast<std::int64_t>(g.quadrature_n))
      .add_optional("theta1", br ? std::optional<double>(br->theta1) : std::nullopt)
      .add_optional("theta2", br ? std::optional<double>(br->theta2) : std::nullopt)
      .add_optional("theta3", br ? std::optional<double>(br->theta3) : std::nullopt)
      .add_optional("product", br ? std::optional<double>(br->product) : std::nullopt);
  if (a.sample_n > 0) {
    ExperimentConfig c{GraphonModel{a.sample_n, graphon}, Statistic::scaled(a.power), g.trials, g.seed, g.workers};
    const auto e = run_mc(c);
    r.add("sample_n", a.sample_n)
        .add("statistic", c.statistic.str())
        .add("mc_mean", e.mean)
        .add("mc_stderr", e.standard_error)
        .add("trials", e.trials)
        .add("master_seed", e.master_seed);
  }
  w.write(r);
}

int report(std::ostream& err, const char* category, const std::exception& e, int code) {
  err << "tfp: " << category << ": " << e.what() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Friendship-paradox bias calculator: exact graph biases, star-graph families, "
               "random-graph expectations and graphon limits.",
               "tfp"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  g.seed_opt = app.add_option("--seed", g.seed, "Master seed for Monte Carlo runs")->capture_default_str();
  g.trials_opt = app.add_option("--trials", g.trials, "Monte Carlo trials")->capture_default_str();
  g.workers_opt = app.add_option("--workers", g.workers, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--quadrature-n", g.quadrature_n, "Quadrature cells for graphon integrals")
      ->check(CLI::Range(1, 8192))
      ->capture_default_str();

  BiasArgs bias;
  auto* bias_cmd = app.add_subcommand("bias", "Per-vertex and average bias of an attribute on an edge-list graph");
  bias_cmd->add_option("edges", bias.path, "Edge-list file")->required();
  bias_cmd->add_option("--attribute,-a", bias.attribute, "degree | wedge | triangle | file:<path>")
      ->capture_default_str();
  bias_cmd->add_flag("--summary", bias.summary, "Only print the average");

  PcsArgs pcs;
  auto* pcs_cmd = app.add_subcommand("pcs", "Partially completed star-graphs: closed form, gluing, catalogue");
  pcs_cmd->add_option("spec", pcs.spec, "pcs:t=<int>,iso=<int>,bands=<k1>+<k2>+...");
  pcs_cmd->add_option("--glue", pcs.glue, "Second spec to glue to the first");
  pcs_cmd->add_option("--at", pcs.at, "Gluing vertices <v1>,<v2>: end|mid|tadpole|iso[:i] or v:<id>")
      ->capture_default_str();
  pcs_cmd->add_option("--catalogue", pcs.catalogue, "List star-graphs with total bias < 3/2 up to N vertices")
      ->check(CLI::Range(1, 40));

  ZetaArgs zeta;
  auto* zeta_cmd = app.add_subcommand("zeta-curve", "Tabulate the sparse Erdos-Renyi limit zeta(lambda)");
  zeta_cmd->add_option("--min", zeta.lo, "Smallest lambda")->capture_default_str();
  zeta_cmd->add_option("--max", zeta.hi, "Largest lambda")->capture_default_str();
  zeta_cmd->add_option("--points", zeta.points, "Number of grid points")->capture_default_str();
  zeta_cmd->add_flag("--log", zeta.log_scale, "Logarithmic spacing");
  zeta_cmd->add_option("--lambda", zeta.lambda, "Evaluate a single point");

  auto* exact_cmd = app.add_subcommand("exact", "Exact expected bias of a random-graph model");
  exact_cmd->require_subcommand(1);
  ExactErrgArgs errg;
  auto* errg_cmd = exact_cmd->add_subcommand("errg", "Closed-form Erdos-Renyi mean");
  auto* errg_oracle_cmd = exact_cmd->add_subcommand("errg-oracle", "Erdos-Renyi mean by enumerating all graphs (n <= 5)");
  for (auto* c : {errg_cmd, errg_oracle_cmd}) {
    c->add_option("--n", errg.n, "Vertices")->required();
    c->add_option("--p", errg.p, "Edge probability (decimal or a/b, taken exactly)");
    c->add_option("--lambda", errg.lambda, "Mean degree scale; p = lambda / n");
  }
  ExactCmArgs cm;
  auto* cm_cmd = exact_cmd->add_subcommand("cm", "Closed-form configuration-model mean (m1 > 7)");
  auto* cm_oracle_cmd = exact_cmd->add_subcommand("cm-oracle", "Configuration-model mean by enumerating matchings (m1 <= 12)");
  for (auto* c : {cm_cmd, cm_oracle_cmd}) {
    c->add_option("--degrees", cm.degree_file, "File with one degree per line");
    c->add_option("--dist", cm.distribution, "regular:d or two-point:a,b,frac");
    c->add_option("--n", cm.n, "Vertices for --dist");
    c->add_option("--values", cm.values, "Comma-separated degrees");
  }

  std::string mc_path;
  auto* mc_cmd = app.add_subcommand("mc", "Run a Monte Carlo experiment from a JSON config");
  mc_cmd->add_option("config", mc_path, "Experiment JSON ('-' for stdin)")->required();

  GraphonArgs gr;
  auto* graphon_cmd = app.add_subcommand("graphon", "Dense limit chi of a graphon, optionally with sampling");
  graphon_cmd->add_option("--file", gr.file, "Graphon JSON description");
  graphon_cmd->add_option("--sample", gr.sample_n, "Also estimate n^-power * bias on n-vertex samples");
  graphon_cmd->add_option("--power", gr.power, "Scaling power for --sample")->check(CLI::Range(-1, 2))->capture_default_str();
  auto* constant_cmd = graphon_cmd->add_subcommand("constant", "kappa = p");
  add_real(constant_cmd, "--p", gr.p)->required();
  auto* two_block_cmd = graphon_cmd->add_subcommand("two-block", "alpha on [0,p)^2, beta on [p,1]^2, gamma across");
  add_real(two_block_cmd, "--alpha", gr.alpha)->required();
  add_real(two_block_cmd, "--beta", gr.beta)->required();
  add_real(two_block_cmd, "--gamma", gr.gamma)->required();
  add_real(two_block_cmd, "--p", gr.p)->required();
  auto* rank1_cmd = graphon_cmd->add_subcommand("rank1", "kappa(x,y) = nu(x) nu(y)");
  rank1_cmd->add_option("--profile", gr.profile, "Step values of nu on equal cells")->delimiter(',');
  rank1_cmd->add_option("--polynomial", gr.polynomial, "Coefficients a0,a1,... of nu")->delimiter(',');
  graphon_cmd->require_subcommand(0, 1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "tfp: " << e.what() << "\n";
    return input_error;
  } catch (const InputError& e) {
    err << "tfp: " << e.what() << "\n";
    return input_error;
  }

  RecordWriter writer(out, g.format == "json" ? Format::json : Format::csv);
  try {
    if (bias_cmd->parsed()) {
      cmd_bias(bias, writer);
    } else if (pcs_cmd->parsed()) {
      cmd_pcs(pcs, writer, err);
    } else if (zeta_cmd->parsed()) {
      cmd_zeta(zeta, writer);
    } else if (errg_cmd->parsed() || errg_oracle_cmd->parsed()) {
      cmd_exact_errg(errg, errg_oracle_cmd->parsed(), writer);
    } else if (cm_cmd->parsed() || cm_oracle_cmd->parsed()) {
      cmd_exact_cm(cm, cm_oracle_cmd->parsed(), writer);
    } else if (mc_cmd->parsed()) {
      cmd_mc(mc_path, g, writer);
    } else if (graphon_cmd->parsed()) {
      Graphon graphon;
      const int chosen = !gr.file.empty() + constant_cmd->parsed() + two_block_cmd->parsed() + rank1_cmd->parsed();
      if (chosen != 1) throw InputError("graphon needs exactly one of --file, constant, two-block, rank1");
      if (!gr.file.empty()) {
        graphon = read_graphon(gr.file);
      } else if (constant_cmd->parsed()) {
        graphon = ConstantGraphon{gr.p};
      } else if (two_block_cmd->parsed()) {
        graphon = TwoBlockGraphon{gr.alpha, gr.beta, gr.gamma, gr.p};
      } else {
        if (gr.profile.empty() == gr.polynomial.empty()) throw InputError("rank1 needs exactly one of --profile and --polynomial");
        graphon = gr.profile.empty() ? RankOneGraphon::polynomial(gr.polynomial) : RankOneGraphon::step(gr.profile);
      }
      cmd_graphon(graphon, gr, g, writer);
    }
    out.flush();
    return ok;
  } catch (const InputError& e) {
    return report(err, "input error", e, input_error);
  } catch (const DomainError& e) {
    return report(err, "domain error", e, domain_error);
  } catch (const InvariantError& e) {
    return report(err, "internal error", e, invariant_error);
  } catch (const std::exception& e) {
    return report(err, "internal error", e, invariant_error);
  }
}

}  // namespace tfp::cli
