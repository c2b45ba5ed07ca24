#include "gaugelat/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "gaugelat/errors.hpp"

namespace gaugelat {

namespace {

void lapack_check(lapack_int info, const char* routine) {
  if (info != 0)
    throw Error(ErrorKind::contract_violation,
                std::string(routine) + " failed with info " + std::to_string(info));
}

void fix_phases(Eigen::MatrixXcd& V) {
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    Eigen::Index best = 0;
    double mag = -1.0;
    for (Eigen::Index r = 0; r < V.rows(); ++r) {
      const double a = std::abs(V(r, c));
      if (a > mag * (1.0 + 1e-12)) {
        mag = a;
        best = r;
      }
    }
    if (mag > 0.0) V.col(c) *= std::conj(V(best, c)) / mag;
    V(best, c) = std::abs(V(best, c));
  }
}

Eigensystem solve(const Eigen::MatrixXcd& A, bool vectors, double tol) {
  const lapack_int n = static_cast<lapack_int>(A.rows());
  if (A.rows() != A.cols())
    throw Error(ErrorKind::contract_violation, "eigendecompose needs a square matrix");
  Eigensystem es;
  if (n == 0) return es;
  const double scale = A.cwiseAbs().maxCoeff();
  const double dev = (A - A.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol * std::max(scale, 1e-300))
    throw Error(ErrorKind::contract_violation, "eigendecompose input is not Hermitian");

  es.values.resize(n);
  const char jobz = vectors ? 'V' : 'N';
  if (A.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::MatrixXd R = A.real();
    lapack_check(LAPACKE_dsyevd(LAPACK_COL_MAJOR, jobz, 'L', n, R.data(), n, es.values.data()),
                 "dsyevd");
    if (vectors) es.vectors = R.cast<std::complex<double>>();
  } else {
    Eigen::MatrixXcd C = A;
    lapack_check(LAPACKE_zheevd(LAPACK_COL_MAJOR, jobz, 'L', n, C.data(), n, es.values.data()),
                 "zheevd");
    if (vectors) es.vectors = std::move(C);
  }
  if (vectors) fix_phases(es.vectors);
  return es;
}

}  // namespace

Eigensystem eigendecompose(const HermitianOperator& H, double tol) {
  return solve(H.entries, true, tol);
}

Eigen::VectorXd eigenvalues(const HermitianOperator& H, double tol) {
  return solve(H.entries, false, tol).values;
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& H, double tol) {
  return solve(H, false, tol).values;
}

double eigen_residual(const HermitianOperator& H, const Eigensystem& es) {
  const Eigen::MatrixXcd R = H.entries * es.vectors - es.vectors * es.values.asDiagonal();
  return R.colwise().norm().maxCoeff();
}

double orthonormality_error(const Eigensystem& es) {
  const Eigen::Index n = es.vectors.cols();
  return (es.vectors.adjoint() * es.vectors - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GAUGELAT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  const int workers = std::max(1, std::min(resolve_threads(threads), count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string to_string(BandFilter filter) {
  switch (filter) {
    case BandFilter::all: return "all";
    case BandFilter::symmetric: return "symmetric";
    case BandFilter::antisymmetric: return "antisymmetric";
    case BandFilter::sector: return "sector";
  }
  return "all";
}

BandFilter band_filter_from_string(const std::string& name) {
  if (name == "all") return BandFilter::all;
  if (name == "symmetric") return BandFilter::symmetric;
  if (name == "antisymmetric") return BandFilter::antisymmetric;
  if (name == "sector") return BandFilter::sector;
  throw Error(ErrorKind::invalid_filter, "unknown band filter '" + name + "'");
}

const SpectrumRecord& SpectrumSweep::at(double param) const {
  for (const SpectrumRecord& r : records)
    if (r.param == param) return r;
  throw Error(ErrorKind::lookup_error, "no record at " + parameter_name + " = " + std::to_string(param));
}

int chain_length(const ChainFamily& family) {
  if (const auto* d = std::get_if<DimerChainParams>(&family)) return d->N;
  return std::get<TrimerChainParams>(family).N_cells;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string boundary_name(Boundary b) {
  switch (b) {
    case Boundary::open: return "open";
    case Boundary::periodic: return "periodic";
    case Boundary::periodic_y: return "periodic_y";
  }
  return "open";
}

}  // namespace

std::vector<std::pair<std::string, std::string>> describe(const ChainFamily& family) {
  if (const auto* d = std::get_if<DimerChainParams>(&family))
    return {{"family", "dimer-chain"}, {"N", std::to_string(d->N)}, {"L", fmt(d->L)},
            {"d", fmt(d->d)}, {"lambda", fmt(d->lambda)}, {"delta0", fmt(d->delta0)},
            {"boundary", boundary_name(d->boundary)}};
  const auto& t = std::get<TrimerChainParams>(family);
  return {{"family", "trimer-chain"}, {"N_cells", std::to_string(t.N_cells)},
          {"R_cell", fmt(t.R_cell)}, {"r_trimer", fmt(t.r_trimer)}, {"d", fmt(t.d)},
          {"theta1", fmt(t.shape.angles[0])}, {"theta2", fmt(t.shape.angles[1])},
          {"theta3", fmt(t.shape.angles[2])}, {"deformation", fmt(t.shape.deformation)},
          {"lambda", fmt(t.lambda)}, {"delta0", fmt(t.delta0)}, {"onsite", fmt(t.onsite)},
          {"boundary", boundary_name(t.boundary)}};
}

HermitianOperator flux_operator(const FluxSweepSpec& spec, int p) {
  if (const auto* d = std::get_if<DimerChainParams>(&spec.family)) {
    if (spec.filter == BandFilter::sector)
      throw Error(ErrorKind::invalid_filter, "sector filter applies to trimer chains only");
    CouplingModel model{d->delta0, d->lambda};
    HermitianOperator H = assemble(build_dimer_chain(d->N, p, d->L, d->d), model, d->boundary);
    if (spec.filter == BandFilter::all) return H;
    BlockDecomposition blocks = reorganize_sa(dimer_basis_transform(H));
    return spec.filter == BandFilter::symmetric ? blocks.H_S : blocks.H_A;
  }
  const auto& t = std::get<TrimerChainParams>(spec.family);
  if (spec.filter == BandFilter::symmetric || spec.filter == BandFilter::antisymmetric)
    throw Error(ErrorKind::invalid_filter, "symmetric/antisymmetric filters apply to dimer chains only");
  CouplingModel model{t.delta0, t.lambda};
  HermitianOperator H = assemble(build_trimer_chain(t.N_cells, p, t.R_cell, t.r_trimer, t.d, t.shape),
                                 model, t.boundary, t.onsite);
  if (spec.filter == BandFilter::all) return H;
  TrimerSectorForm form = trimer_basis_transform(H);
  HermitianOperator out;
  out.entries = form.sector_block(spec.sector);
  out.basis = Basis::trimer_c3;
  return out;
}

SpectrumSweep flux_sweep(const FluxSweepSpec& spec) {
  const int N = chain_length(spec.family);
  std::vector<int> ps = spec.p_values;
  if (ps.empty())
    for (int p = 0; p < N; ++p) ps.push_back(p);
  for (int p : ps)
    if (p < 0 || p > N - 1)
      throw Error(ErrorKind::invalid_parameter, "p out of range: " + std::to_string(p));
  if (const auto* d = std::get_if<DimerChainParams>(&spec.family); d && spec.filter == BandFilter::sector)
    throw Error(ErrorKind::invalid_filter, "sector filter applies to trimer chains only");
  if (std::holds_alternative<TrimerChainParams>(spec.family) &&
      (spec.filter == BandFilter::symmetric || spec.filter == BandFilter::antisymmetric))
    throw Error(ErrorKind::invalid_filter, "symmetric/antisymmetric filters apply to dimer chains only");

  SpectrumSweep sweep;
  sweep.parameter_name = "p";
  sweep.metadata = describe(spec.family);
  sweep.metadata.emplace_back("filter", to_string(spec.filter));
  if (spec.filter == BandFilter::sector) sweep.metadata.emplace_back("sector", std::to_string(spec.sector));
  sweep.records.resize(ps.size());
  parallel_for(static_cast<int>(ps.size()), spec.threads, [&](int k) {
    const int p = ps[static_cast<std::size_t>(k)];
    const Eigen::VectorXd ev = eigenvalues(flux_operator(spec, p));
    SpectrumRecord& rec = sweep.records[static_cast<std::size_t>(k)];
    rec.param = p;
    rec.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  });
  return sweep;
}

LocalizationReport localization_report(const Eigensystem& es, const PolymerLattice& lattice,
                                       int index, const LocalizationThresholds& thr) {
  const int n = static_cast<int>(es.values.size());
  if (n == 0) throw Error(ErrorKind::invalid_parameter, "empty spectrum");
  if (lattice.site_count() != n)
    throw Error(ErrorKind::invalid_parameter, "lattice does not match operator dimension");
  if (index < 0) index = n - 1;
  if (index >= n) throw Error(ErrorKind::lookup_error, "eigen index out of range");

  LocalizationReport r;
  r.eigen_index = index;
  r.energy = es.values(index);
  r.probability = es.vectors.col(index).cwiseAbs2();
  r.probability /= r.probability.sum();
  r.ipr = r.probability.squaredNorm();
  for (int i = 0; i < n; ++i) r.centroid += r.probability(i) * lattice.site(i);
  double gap = std::numeric_limits<double>::infinity();
  if (index > 0) gap = std::min(gap, es.values(index) - es.values(index - 1));
  if (index + 1 < n) gap = std::min(gap, es.values(index + 1) - es.values(index));
  r.gap = std::isfinite(gap) ? gap : 0.0;
  r.bandwidth = es.values(n - 1) - es.values(0);
  r.localized = r.ipr > thr.ipr_factor / n && r.gap > thr.gap_fraction * r.bandwidth;
  return r;
}

LocalizationReport localization_report(const HermitianOperator& H, const PolymerLattice& lattice,
                                       int index, const LocalizationThresholds& thr) {
  return localization_report(eigendecompose(H), lattice, index, thr);
}

LatticeConstantSweep lattice_constant_sweep(const HedgehogParams& base, const std::vector<double>& L_values,
                                            const LocalizationThresholds& thr, int threads) {
  LatticeConstantSweep out;
  out.sweep.parameter_name = "L";
  out.sweep.metadata = {{"family", "hedgehog"}, {"n", std::to_string(base.n)}, {"d", fmt(base.d)},
                        {"lambda", fmt(base.lambda)}, {"delta0", fmt(base.delta0)}};
  out.sweep.records.resize(L_values.size());
  out.reports.resize(L_values.size());
  parallel_for(static_cast<int>(L_values.size()), threads, [&](int k) {
    const double L = L_values[static_cast<std::size_t>(k)];
    const PolymerLattice lat = build_hedgehog_lattice(base.n, L, base.d);
    const Eigensystem es = eigendecompose(assemble(lat, CouplingModel{base.delta0, base.lambda}));
    SpectrumRecord& rec = out.sweep.records[static_cast<std::size_t>(k)];
    rec.param = L;
    rec.eigenvalues.assign(es.values.data(), es.values.data() + es.values.size());
    out.reports[static_cast<std::size_t>(k)] = localization_report(es, lat, -1, thr);
  });
  return out;
}

}  // namespace gaugelat
