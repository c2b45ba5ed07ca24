#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gaugelat/errors.hpp"
#include "gaugelat/fractal.hpp"
#include "gaugelat/gauge.hpp"
#include "gaugelat/harper.hpp"
#include "gaugelat/io.hpp"
#include "gaugelat/spectral.hpp"
#include "svg.hpp"

namespace gaugelat::cli {

// Generated at build time from presets/*.recipe.
const std::vector<std::pair<std::string, std::string>>& embedded_presets();

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct Context {
  const Recipe& recipe;
  RecipeReader rd;
  int threads;
  std::string name;
  json summary = json::object();

  Context(const Recipe& r, const std::string& command, const RunOptions& opt) : recipe(r), rd(r) {
    const std::string declared = rd.text("", "command", command);
    rd.require(declared == command, "command", "recipe is for '" + declared + "', not '" + command + "'");
    rd.integer("", "seed", 0);
    rd.words("output", "formats", {});
    name = rd.text("output", "name", command);
    rd.require(!name.empty() && name.find_first_of("/\\") == std::string::npos, "output.name",
               "must be a plain file stem");
    const int recipe_threads = rd.integer("", "threads", 0);
    threads = resolve_threads(opt.threads > 0 ? opt.threads : recipe_threads);
  }

  bool flag(const std::string& section, const std::string& key, bool fallback) {
    const std::string v = rd.text(section, key, fallback ? "true" : "false");
    rd.require(v == "true" || v == "false", section + "." + key, "expected true or false");
    return v == "true";
  }

  Boundary boundary(const std::string& fallback) {
    const std::string b = rd.text("lattice", "boundary", fallback);
    if (b == "open") return Boundary::open;
    if (b == "periodic") return Boundary::periodic;
    if (b == "periodic_y") return Boundary::periodic_y;
    rd.require(false, "lattice.boundary", "expected open, periodic or periodic_y");
    return Boundary::open;
  }

  std::string file(const std::string& suffix, const std::string& ext) const { return name + "_" + suffix + "." + ext; }
};

std::string csv_of(const SpectrumSweep& sweep) {
  std::ostringstream os;
  write_sweep_csv(os, sweep);
  return os.str();
}

json metadata_json(const std::vector<std::pair<std::string, std::string>>& md) {
  json j = json::object();
  for (const auto& [k, v] : md) j[k] = v;
  return j;
}

std::vector<int> p_list(Context& ctx, int N) {
  std::vector<int> all(static_cast<std::size_t>(std::max(N, 0)));
  for (int p = 0; p < N; ++p) all[static_cast<std::size_t>(p)] = p;
  std::vector<int> ps = ctx.rd.integers("sweep", "p", all);
  for (int p : ps)
    if (p < 0 || p > N - 1) {
      ctx.rd.require(false, "sweep.p", "value " + std::to_string(p) + " outside [0, N-1]");
      break;
    }
  return ps;
}

struct ChainSetup {
  FluxSweepSpec spec;
  int N = 0;
};

ChainSetup chain_setup(Context& ctx, bool allow_trimer) {
  ChainSetup cs;
  const std::string family = ctx.rd.text("lattice", "family", "dimer_chain");
  const std::string filter = ctx.rd.text("sweep", "filter", "all");
  try {
    cs.spec.filter = band_filter_from_string(filter);
  } catch (const Error&) {
    ctx.rd.require(false, "sweep.filter", "unknown filter '" + filter + "'");
  }
  cs.spec.sector = ctx.rd.integer("sweep", "sector", 3);
  ctx.rd.require(cs.spec.sector >= 1 && cs.spec.sector <= 3, "sweep.sector", "must be 1, 2 or 3");
  cs.spec.threads = ctx.threads;
  if (family == "dimer_chain") {
    DimerChainParams d;
    d.N = ctx.rd.integer("lattice", "N", d.N);
    d.L = ctx.rd.real("lattice", "L", d.L);
    d.d = ctx.rd.real("lattice", "d", d.d);
    d.lambda = ctx.rd.real("model", "lambda", d.lambda);
    d.delta0 = ctx.rd.real("model", "delta0", d.delta0);
    d.boundary = ctx.boundary("open");
    ctx.rd.require(d.N >= 2, "lattice.N", "must be >= 2");
    ctx.rd.require(cs.spec.filter != BandFilter::sector, "sweep.filter", "sector applies to trimer chains");
    cs.spec.family = d;
    cs.N = d.N;
  } else if (family == "trimer_chain" && allow_trimer) {
    TrimerChainParams t;
    t.N_cells = ctx.rd.integer("lattice", "N_cells", t.N_cells);
    t.R_cell = ctx.rd.real("lattice", "R_cell", t.R_cell);
    t.r_trimer = ctx.rd.real("lattice", "r_trimer", t.r_trimer);
    t.d = ctx.rd.real("lattice", "d", t.d);
    t.onsite = ctx.rd.real("lattice", "onsite", t.onsite);
    t.boundary = ctx.boundary("open");
    const std::vector<double> angles = ctx.rd.reals("lattice", "angles", {0.0, 0.0, 0.0});
    ctx.rd.require(angles.size() == 3, "lattice.angles", "needs three values");
    if (angles.size() == 3) t.shape.angles = {angles[0], angles[1], angles[2]};
    t.shape.deformation = ctx.rd.real("lattice", "deformation", 0.0);
    t.lambda = ctx.rd.real("model", "lambda", t.lambda);
    t.delta0 = ctx.rd.real("model", "delta0", t.delta0);
    ctx.rd.require(t.N_cells >= 2, "lattice.N_cells", "must be >= 2");
    ctx.rd.require(cs.spec.filter == BandFilter::all || cs.spec.filter == BandFilter::sector, "sweep.filter",
                   "trimer chains take all or sector");
    cs.spec.family = t;
    cs.N = t.N_cells;
  } else {
    ctx.rd.require(false, "lattice.family",
                   "unsupported family '" + family + "' (expected dimer_chain" +
                       (allow_trimer ? std::string(" or trimer_chain)") : std::string(")")));
  }
  return cs;
}

SpectrumSweep run_sweep(const FluxSweepSpec& spec, const std::vector<int>& ps) {
  if (ps.empty()) {
    SpectrumSweep empty;
    empty.metadata = describe(spec.family);
    return empty;
  }
  FluxSweepSpec s = spec;
  s.p_values = ps;
  return flux_sweep(s);
}

std::vector<Artifact> butterfly(Context& ctx) {
  ChainSetup cs = chain_setup(ctx, true);
  const std::vector<int> ps = p_list(ctx, cs.N);
  ctx.rd.finish();

  const SpectrumSweep sweep = run_sweep(cs.spec, ps);
  std::vector<ScatterPoint> pts;
  std::size_t count = 0;
  for (const auto& r : sweep.records) {
    count += r.eigenvalues.size();
    for (double e : r.eigenvalues) pts.push_back({r.param, e, false});
  }
  ctx.summary["records"] = sweep.records.size();
  ctx.summary["eigenvalues"] = count;
  ctx.summary["filter"] = to_string(cs.spec.filter);
  ctx.summary["sweep_metadata"] = metadata_json(sweep.metadata);
  return {{ctx.file("butterfly", "csv"), "csv", csv_of(sweep)},
          {ctx.file("butterfly", "svg"), "svg", svg_scatter(pts, ctx.name + " spectrum", "p", "energy")}};
}

std::vector<Artifact> confinement(Context& ctx) {
  HedgehogParams hp;
  const std::string family = ctx.rd.text("lattice", "family", "hedgehog");
  ctx.rd.require(family == "hedgehog", "lattice.family", "confinement needs the hedgehog family");
  hp.n = ctx.rd.integer("lattice", "n", hp.n);
  hp.L = ctx.rd.real("lattice", "L", hp.L);
  hp.d = ctx.rd.real("lattice", "d", hp.d);
  hp.lambda = ctx.rd.real("model", "lambda", hp.lambda);
  hp.delta0 = ctx.rd.real("model", "delta0", hp.delta0);
  std::vector<double> Ls = ctx.rd.reals("sweep", "L_values", {hp.L});
  LocalizationThresholds thr;
  thr.ipr_factor = ctx.rd.real("localization", "ipr_factor", thr.ipr_factor);
  thr.gap_fraction = ctx.rd.real("localization", "gap_fraction", thr.gap_fraction);
  ctx.rd.require(hp.n >= 4 && hp.n % 2 == 0, "lattice.n", "must be even and >= 4");
  ctx.rd.finish();

  const LatticeConstantSweep sw = lattice_constant_sweep(hp, Ls, thr, ctx.threads);

  std::ostringstream loc;
  loc << "L,eigen_index,energy,ipr,gap,bandwidth,centroid_x,centroid_y,localized\n";
  std::vector<ScatterPoint> pts;
  for (std::size_t k = 0; k < Ls.size(); ++k) {
    const LocalizationReport& r = sw.reports[k];
    loc << format_double(Ls[k]) << ',' << r.eigen_index << ',' << format_double(r.energy) << ','
        << format_double(r.ipr) << ',' << format_double(r.gap) << ',' << format_double(r.bandwidth) << ','
        << format_double(r.centroid.x()) << ',' << format_double(r.centroid.y()) << ',' << (r.localized ? 1 : 0)
        << '\n';
    for (std::size_t i = 0; i < sw.sweep.records[k].eigenvalues.size(); ++i)
      pts.push_back({Ls[k], sw.sweep.records[k].eigenvalues[i],
                     r.localized && static_cast<int>(i) == r.eigen_index});
  }

  // Top state on the base lattice, summed per dimer.
  const PolymerLattice lat = build_hedgehog_lattice(hp.n, hp.L, hp.d);
  const LocalizationReport top =
      localization_report(assemble(lat, CouplingModel{hp.delta0, hp.lambda}), lat, -1, thr);
  std::ostringstream grid;
  grid << "nx,ny,probability\n";
  HeatmapPanel panel{"|psi|^2 per dimer", hp.n, hp.n, {}};
  for (int iy = 0; iy < hp.n; ++iy)
    for (int ix = 0; ix < hp.n; ++ix) {
      const int a = lat.polymer_index(ix, iy);
      const double prob = top.probability(2 * a) + top.probability(2 * a + 1);
      panel.values.push_back(prob);
      grid << ix << ',' << iy << ',' << format_double(prob) << '\n';
    }
  ctx.summary["top_state"] = {{"L", hp.L},
                              {"energy", top.energy},
                              {"ipr", top.ipr},
                              {"gap", top.gap},
                              {"bandwidth", top.bandwidth},
                              {"centroid", {top.centroid.x(), top.centroid.y()}},
                              {"localized", top.localized}};
  return {{ctx.file("spectrum_vs_L", "csv"), "csv", csv_of(sw.sweep)},
          {ctx.file("localization", "csv"), "csv", loc.str()},
          {ctx.file("top_state", "csv"), "csv", grid.str()},
          {ctx.file("spectrum_vs_L", "svg"), "svg",
           svg_scatter(pts, ctx.name + " spectrum vs L (blue: localized top state)", "L", "energy")},
          {ctx.file("top_state", "svg"), "svg", svg_heatmaps({panel}, ctx.name + " top state")}};
}

std::string field_csv(const PauliGrid& g, int nx, int ny) {
  std::ostringstream os;
  write_field_csv(os, g, nx, ny);
  return os.str();
}

HeatmapPanel component_panel(const PauliGrid& g, int nx, int ny, int c, const std::string& title) {
  HeatmapPanel p{title, nx, ny, {}};
  for (const PauliSample& s : g) {
    if (!s.valid) {
      p.values.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const cplx v = s.c[static_cast<std::size_t>(c)];
    // Each component is either real or imaginary here; plot the dominant part.
    p.values.push_back(std::abs(v.real()) >= std::abs(v.imag()) ? v.real() : v.imag());
  }
  return p;
}

std::vector<Artifact> gauge_portrait(Context& ctx) {
  const std::string family = ctx.rd.text("lattice", "family", "hedgehog");
  ctx.rd.require(family == "hedgehog", "lattice.family", "portraits need the hedgehog family");
  const int n = ctx.rd.integer("lattice", "n", 20);
  const double L = ctx.rd.real("lattice", "L", 2.9);
  const double d = ctx.rd.real("lattice", "d", 1.3);
  const CouplingModel model{ctx.rd.real("model", "delta0", 1.0), ctx.rd.real("model", "lambda", 1.0)};
  PortraitOptions po;
  po.normalize_modulus = ctx.flag("portrait", "normalize_modulus", true);
  po.sa_basis = ctx.flag("portrait", "sa_basis", true);
  const int checks = ctx.rd.integer("portrait", "random_transforms", 0);
  const int seed = ctx.rd.integer("", "seed", 0);
  ctx.rd.require(n >= 4 && n % 2 == 0, "lattice.n", "must be even and >= 4");
  ctx.rd.require(checks >= 0, "portrait.random_transforms", "must be >= 0");
  ctx.rd.finish();

  const PolymerLattice lat = build_hedgehog_lattice(n, L, d);
  const HermitianOperator H = assemble(lat, model);
  const VectorPotentialField A = vector_potential(bond_log_field(H, lat, po));
  const FieldStrength F = field_strength_bz(A);
  const NontrivialFieldReport nt = nontrivial_field_test(H, lat);

  json comp = json::object();
  const char* names[] = {"A1", "A2", "Bz_curl", "Bz_commutator", "Bz"};
  const PauliGrid* grids[] = {&A.A[0], &A.A[1], &F.curl, &F.commutator, &F.total};
  for (int g = 0; g < 5; ++g) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) {
      double re = 0, im = 0;
      for (const PauliSample& s : *grids[g])
        if (s.valid) {
          re = std::max(re, std::abs(s.c[static_cast<std::size_t>(c)].real()));
          im = std::max(im, std::abs(s.c[static_cast<std::size_t>(c)].imag()));
        }
      row.push_back({{"max_abs_re", re}, {"max_abs_im", im}});
    }
    comp[names[g]] = row;
  }
  ctx.summary["component_maxima"] = comp;
  ctx.summary["wilson_loops"] = {{"plaquettes", nt.plaquettes},
                                 {"skipped_singular", nt.skipped_singular},
                                 {"max_deviation", nt.max_deviation},
                                 {"nontrivial", nt.nontrivial}};
  if (checks > 0) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    const Eigen::VectorXd e0 = eigenvalues(H);
    double worst = 0;
    for (int k = 0; k < checks; ++k) {
      const Eigen::VectorXd e = eigenvalues(apply_gauge_transform(H, random_su2_transform(lat.polymer_count(), rng)));
      worst = std::max(worst, (e - e0).cwiseAbs().maxCoeff());
    }
    ctx.summary["gauge_check"] = {{"transforms", checks},
                                  {"max_spectrum_deviation", worst},
                                  {"relative", worst / H.frobenius_norm()}};
  }

  std::vector<Artifact> out;
  for (int g = 0; g < 5; ++g)
    out.push_back({ctx.file(names[g], "csv"), "csv", field_csv(*grids[g], n, n)});
  for (int g : {0, 1, 3}) {
    std::vector<HeatmapPanel> panels;
    for (int c = 0; c < 4; ++c)
      panels.push_back(component_panel(*grids[g], n, n, c, std::string(names[g]) + " sigma" + std::to_string(c)));
    out.push_back({ctx.file(names[g], "svg"), "svg", svg_heatmaps(panels, ctx.name + " " + names[g])});
  }
  return out;
}

std::vector<Artifact> harper_check(Context& ctx) {
  const std::vector<int> qs = ctx.rd.integers("harper", "q", {3, 5, 8, 13});
  const int mult = ctx.rd.integer("harper", "ring_multiple", 4);
  const double Lambda = ctx.rd.real("harper", "Lambda", 1.0);
  const double chi = ctx.rd.real("harper", "chi", 0.0);
  const std::vector<double> small = ctx.rd.reals("harper", "small_lambda", {0.1, 0.05, 0.01});
  const int N = ctx.rd.integer("lattice", "N", 201);
  const double L = ctx.rd.real("lattice", "L", 2.8);
  const double d = ctx.rd.real("lattice", "d", 0.35);
  const CouplingModel model{ctx.rd.real("model", "delta0", 1.0), ctx.rd.real("model", "lambda", 1.0)};
  const std::vector<int> fit_ps = ctx.rd.integers("harper", "fit_p", {10, 20, 30, 70, 80, 90});
  for (int q : qs) ctx.rd.require(q >= 1, "harper.q", "values must be >= 1");
  ctx.rd.require(mult >= 1, "harper.ring_multiple", "must be >= 1");
  ctx.rd.require(N >= 4, "lattice.N", "must be >= 4");
  for (int p : fit_ps) ctx.rd.require(p >= 0 && p < N, "harper.fit_p", "values must lie in [0, N-1]");
  ctx.rd.finish();

  json report = json::object();
  json rings = json::array();
  for (int q : qs) {
    const int ring = std::max(3, mult * q);
    const double omega = 2.0 * std::numbers::pi / q;
    const double dist =
        isospectral_distance(variable_coupling_chain(ring, Lambda, omega, chi, ChiBranch::plus, Boundary::periodic),
                             amo_matrix({Lambda, omega, chi, ring, Boundary::periodic}));
    rings.push_back({{"q", q}, {"N", ring}, {"omega", omega}, {"isospectral_distance", dist}});
  }
  report["rings"] = rings;

  json fits = json::array();
  const double modulation = aa_modulation(L, d, model.lambda, AAReading::consistent);
  for (int p : fit_ps) {
    const double omega = 2.0 * std::numbers::pi * p / (N - 1);
    const HermitianOperator H1 = dimer_basis_transform(assemble(build_dimer_chain(N, p, L, d), model));
    std::vector<double> aa;
    for (int n = 0; n + 1 < N; ++n) aa.push_back(H1.block(n, n + 1)(0, 0).real());
    json row = {{"p", p}, {"omega", omega}, {"closed_form_lambda", modulation * std::abs(std::cos(omega))}};
    try {
      const LambdaFit f = effective_lambda_estimate(aa, 2.0 * omega);
      row["lambda_eff"] = f.lambda;
      row["chi"] = f.chi;
      row["baseline"] = f.baseline;
      row["rms_residual"] = f.rms_residual;
      row["condition"] = f.condition;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::fit_failure) throw;
      row["fit_error"] = e.what();
    }
    fits.push_back(row);
  }
  report["lambda_fits"] = {{"N", N}, {"L", L}, {"d", d}, {"lambda", model.lambda}, {"fits", fits}};

  json taylor = json::array();
  for (double lam : small) {
    double err = 0;
    for (int k = 0; k < 64; ++k)
      for (int n = 1; n <= 64; ++n) {
        const double omega = 2.0 * std::numbers::pi * k / 64.0;
        err = std::max(err, std::abs(small_lambda_coupling(n, lam, omega, chi) - coupling_magnitude(n, lam, omega, chi)));
      }
    taylor.push_back({{"Lambda", lam}, {"max_error", err}, {"bound_2Lambda2", 2.0 * lam * lam}});
  }
  report["small_lambda_coupling"] = taylor;
  ctx.summary["rings"] = qs.size();
  return {{ctx.file("report", "json"), "json", report.dump(2) + "\n"}};
}

std::vector<Artifact> fractal(Context& ctx) {
  ChainSetup cs = chain_setup(ctx, false);
  const std::vector<int> ps = p_list(ctx, cs.N);
  BoxCountingOptions bo;
  bo.k_min = ctx.rd.integer("fractal", "k_min", bo.k_min);
  bo.k_max = ctx.rd.integer("fractal", "k_max", bo.k_max);
  bo.offsets = ctx.rd.integer("fractal", "offsets", bo.offsets);
  bo.min_scale_factor = ctx.rd.real("fractal", "min_scale_factor", bo.min_scale_factor);
  ctx.rd.require(bo.k_min >= 0 && bo.k_max >= bo.k_min, "fractal.k_max", "need 0 <= k_min <= k_max");
  ctx.rd.require(bo.offsets >= 1, "fractal.offsets", "must be >= 1");
  ctx.rd.finish();

  const SpectrumSweep sweep = run_sweep(cs.spec, ps);
  std::vector<std::pair<double, DimensionFit>> rows;
  std::vector<ScatterPoint> pts;
  int degenerate = 0;
  for (const auto& r : sweep.records) {
    const DimensionFit f = box_counting_dimension(r.eigenvalues, bo);
    degenerate += f.degenerate ? 1 : 0;
    rows.emplace_back(r.param, f);
    pts.push_back({r.param, f.D, false});
  }
  std::ostringstream os;
  write_fractal_csv(os, rows);
  ctx.summary["rows"] = rows.size();
  ctx.summary["degenerate"] = degenerate;
  ctx.summary["filter"] = to_string(cs.spec.filter);
  ctx.summary["sweep_metadata"] = metadata_json(sweep.metadata);
  return {{ctx.file("fractal", "csv"), "csv", os.str()},
          {ctx.file("fractal", "svg"), "svg", svg_scatter(pts, ctx.name + " box-counting dimension", "p", "D")}};
}

std::vector<std::string> resolve_formats(const Recipe& recipe, const RunOptions& options) {
  std::vector<std::string> f = options.formats;
  if (f.empty()) {
    RecipeReader rd(recipe);
    f = rd.words("output", "formats", {"csv", "json"});
  }
  for (const std::string& x : f)
    if (x != "csv" && x != "json" && x != "svg")
      throw Error(ErrorKind::validation_error, "unknown output format '" + x + "' (expected csv, json or svg)");
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"butterfly", "confinement", "gauge-portrait", "harper-check",
                                              "fractal"};
  return names;
}

std::vector<Artifact> build_artifacts(const std::string& command, const Recipe& recipe, const RunOptions& options) {
  Context ctx(recipe, command, options);
  std::vector<Artifact> out;
  if (command == "butterfly")
    out = butterfly(ctx);
  else if (command == "confinement")
    out = confinement(ctx);
  else if (command == "gauge-portrait")
    out = gauge_portrait(ctx);
  else if (command == "harper-check")
    out = harper_check(ctx);
  else if (command == "fractal")
    out = fractal(ctx);
  else
    throw Error(ErrorKind::validation_error, "unknown command '" + command + "'");

  const std::vector<std::string> formats = resolve_formats(recipe, options);
  std::vector<Artifact> kept;
  for (Artifact& a : out)
    if (std::find(formats.begin(), formats.end(), a.format) != formats.end()) kept.push_back(std::move(a));

  if (std::find(formats.begin(), formats.end(), "json") != formats.end()) {
    json m = json::object();
    m["tool"] = "gaugelat";
    m["version"] = kVersion;
    m["command"] = command;
    m["recipe_hash"] = recipe.hash();
    json sections = json::object();
    for (const auto& [s, keys] : recipe.sections()) {
      json kv = json::object();
      for (const auto& [k, v] : keys) kv[k] = v;
      sections[s.empty() ? "_" : s] = kv;
    }
    m["recipe"] = sections;
    m["recipe_text"] = recipe.serialize();
    m["formats"] = formats;
    json files = json::array();
    for (const Artifact& a : kept) {
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(a.contents)));
      files.push_back({{"file", a.file}, {"format", a.format}, {"fnv1a64", buf}});
    }
    m["outputs"] = files;
    m["summary"] = ctx.summary;
    kept.push_back({ctx.file("manifest", "json"), "json", m.dump(2) + "\n"});
  }
  if (kept.empty())
    throw Error(ErrorKind::validation_error, "command '" + command + "' produces none of the requested formats");
  return kept;
}

RunResult run_command(const std::string& command, const Recipe& recipe, const RunOptions& options) {
  const std::vector<Artifact> artifacts = build_artifacts(command, recipe, options);
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec || !std::filesystem::is_directory(options.out_dir))
    throw Error(ErrorKind::io_error, "cannot create output directory " + options.out_dir.string());
  RunResult res;
  for (const Artifact& a : artifacts) {
    const std::filesystem::path path = options.out_dir / a.file;
    write_text_file(path, a.contents);
    res.written.push_back(path);
  }
  return res;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [n, text] : embedded_presets()) names.push_back(n);
  return names;
}

const std::string& preset_text(const std::string& name) {
  for (const auto& [n, text] : embedded_presets())
    if (n == name) return text;
  std::string known;
  for (const auto& n : preset_names()) known += " " + n;
  throw Error(ErrorKind::lookup_error, "unknown preset '" + name + "'; known:" + known);
}

}  // namespace gaugelat::cli
