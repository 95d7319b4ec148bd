#pragma once

// Text serializations shared by the command-line tool and the self-test:
// exact level tables, indexed coefficient dumps and CSV emitters.

#include <string>
#include <vector>

#include "dphi/approximants.hpp"
#include "dphi/numeric.hpp"
#include "dphi/spectral.hpp"

namespace dphi::report {

/// Shortest-form-independent rendering with 17 significant digits, '.' as the
/// decimal separator regardless of locale.
std::string format_double(double v);

struct LevelTable {
  unsigned level = 0;
  /// Least common denominator D of all values.
  BigInt denominator;
  /// values[q] = phi(q / 2^level), q = 0..2^level
  std::vector<BigRational> values;

  /// D * phi(q / 2^level), an integer.
  BigInt scaled(std::size_t q) const;
};

LevelTable level_table(unsigned n);

/// One row per q: "q<TAB>D*phi<TAB>phi\n".
std::string format_table(const LevelTable& table);

/// One row per index k >= first_index: "k<TAB>values[k]\n".
std::string format_indexed(const std::vector<BigRational>& values, std::size_t first_index = 0);
std::string format_indexed(const std::vector<BigInt>& values, std::size_t first_index = 0);
/// Values separated by single spaces, newline-terminated.
std::string format_flat(const std::vector<BigRational>& values);
std::string format_flat(const std::vector<BigInt>& values);

/// "left_edge,right_edge,value" rows (with that header line).
std::string format_step_csv(const StepFunction& sf);

/// "k,coefficient,sign" rows (with that header line).
std::string format_fourier_csv(const spectral::FourierCoefficients& fc);

/// "t,phi_fourier,phi_exact_if_dyadic,abs_err" rows on the grid q/2^level,
/// t in [-1, 1].
std::string format_fourier_plot(const spectral::FourierCoefficients& fc, unsigned level);

}  // namespace dphi::report
