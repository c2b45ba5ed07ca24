#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gaugelat/fractal.hpp"
#include "gaugelat/gauge.hpp"
#include "gaugelat/hamiltonian.hpp"
#include "gaugelat/spectral.hpp"

namespace gaugelat {

// Shortest form is not attempted; always 17 significant digits.
std::string format_double(double x);

// param,eigen_index,energy
void write_sweep_csv(std::ostream& os, const SpectrumSweep& sweep);
// row,col,re,im (nonzero entries only)
void write_matrix_csv(std::ostream& os, const HermitianOperator& H);
// nx,ny,component,re,im for the valid samples of a Pauli grid
void write_field_csv(std::ostream& os, const PauliGrid& grid, int nx, int ny);
// param,D,residual
void write_fractal_csv(std::ostream& os, const std::vector<std::pair<double, DimensionFit>>& rows);

// Writes through a temporary next to `path`; raises io_error naming the path.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace gaugelat
