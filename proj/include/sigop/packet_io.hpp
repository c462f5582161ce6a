// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sigop/minkowski_embedding.hpp"
#include "sigop/momentum_rep.hpp"
#include "sigop/oracle_harness.hpp"

namespace sigop {

PacketSpec packet_from_json(std::string_view text);
std::string packet_to_json(const PacketSpec& spec);

// 64-bit FNV-1a
std::uint64_t fnv1a(std::string_view bytes);

// Numeric table with '#'-prefixed metadata lines; values are written with 17 significant digits.
struct CsvTable {
  std::vector<std::string> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string format_csv(const CsvTable& table);
// Writes to a temporary file in the target directory, then renames over the target.
void write_atomic(const std::string& path, std::string_view content);

// ell, lambda0, lambda1, L and K entries, kernel and range eigenvectors.
CsvTable spectrum_table(double ell_min, double ell_max, std::size_t points, double mass);
// ell, weight_range, weight_kernel
CsvTable thermal_table(double beta_temp, double ell_min, double ell_max, std::size_t points);
// s, alpha, re, im
CsvTable amplitude_table(const ShellAmplitude& g);
// ell, plus_re, plus_im, minus_re, minus_im
CsvTable rapidity_spectrum_table(const RapiditySpectrum& gh);
// t, x, psi0_re, psi0_im, psi1_re, psi1_im
CsvTable reconstruction_table(const ShellAmplitude& g, const std::vector<double>& times, double x0, double dx,
                              std::size_t count);
CsvTable decay_table(const DecayReport& r);
CsvTable rayleigh_table(const std::vector<RayleighEntry>& entries);

std::string wedge_result_json(const WedgeResult& r);
std::string crosscheck_json(const CrosscheckReport& r);

}  // namespace sigop
