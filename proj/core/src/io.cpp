#include "gaugelat/io.hpp"

#include <cstdio>
#include <fstream>

#include "gaugelat/errors.hpp"

namespace gaugelat {

std::string format_double(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_sweep_csv(std::ostream& os, const SpectrumSweep& sweep) {
  os << sweep.parameter_name << ",eigen_index,energy\n";
  for (const SpectrumRecord& r : sweep.records)
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
      os << format_double(r.param) << ',' << i << ',' << format_double(r.eigenvalues[i]) << '\n';
}

void write_matrix_csv(std::ostream& os, const HermitianOperator& H) {
  os << "row,col,re,im\n";
  for (Eigen::Index c = 0; c < H.entries.cols(); ++c)
    for (Eigen::Index r = 0; r < H.entries.rows(); ++r) {
      const cplx v = H.entries(r, c);
      if (v == cplx(0.0)) continue;
      os << r << ',' << c << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
}

void write_field_csv(std::ostream& os, const PauliGrid& grid, int nx, int ny) {
  if (static_cast<int>(grid.size()) != nx * ny)
    throw Error(ErrorKind::invalid_parameter, "field grid size does not match nx*ny");
  os << "nx,ny,component,re,im\n";
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const PauliSample& s = grid[static_cast<std::size_t>(ix + nx * iy)];
      if (!s.valid) continue;
      for (int c = 0; c < 4; ++c)
        os << ix << ',' << iy << ',' << c << ',' << format_double(s.c[static_cast<std::size_t>(c)].real()) << ','
           << format_double(s.c[static_cast<std::size_t>(c)].imag()) << '\n';
    }
}

void write_fractal_csv(std::ostream& os, const std::vector<std::pair<double, DimensionFit>>& rows) {
  os << "param,D,residual\n";
  for (const auto& [p, fit] : rows)
    os << format_double(p) << ',' << format_double(fit.D) << ',' << format_double(fit.residual) << '\n';
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::io_error, "cannot open " + path.string() + " for writing");
    f << contents;
    f.flush();
    if (!f) throw Error(ErrorKind::io_error, "write failed for " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::io_error, "cannot move output into place at " + path.string());
  }
}

}  // namespace gaugelat
