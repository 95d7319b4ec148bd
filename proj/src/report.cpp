#include "dphi/report.hpp"

#include <charconv>
#include <cmath>

#include "dphi/dyadic_eval.hpp"

namespace dphi::report {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

BigInt LevelTable::scaled(std::size_t q) const {
  const BigRational v = values.at(q) * BigRational(denominator);
  if (!v.is_integer()) throw InvariantViolation("level table: denominator does not clear value");
  return v.num();
}

LevelTable level_table(unsigned n) {
  if (n > 30) throw std::domain_error("level_table: level too deep");
  LevelTable t;
  t.level = n;
  t.denominator = 1;
  const std::uint64_t top = std::uint64_t{1} << n;
  t.values.reserve(top + 1);
  for (std::uint64_t q = 0; q <= top; ++q) {
    t.values.push_back(phi_exact(Dyadic(BigInt(static_cast<unsigned long>(q)), n)));
    mpz_lcm(t.denominator.get_mpz_t(), t.denominator.get_mpz_t(), t.values.back().den().get_mpz_t());
  }
  return t;
}

std::string format_table(const LevelTable& table) {
  std::string out;
  for (std::size_t q = 0; q < table.values.size(); ++q) {
    out += std::to_string(q);
    out += '\t';
    out += table.scaled(q).get_str(10);
    out += '\t';
    out += table.values[q].to_string();
    out += '\n';
  }
  return out;
}

namespace {

std::string str(const BigRational& v) { return v.to_string(); }
std::string str(const BigInt& v) { return v.get_str(10); }

template <typename T>
std::string indexed(const std::vector<T>& values, std::size_t first_index) {
  std::string out;
  for (std::size_t k = first_index; k < values.size(); ++k) {
    out += std::to_string(k) + '\t' + str(values[k]) + '\n';
  }
  return out;
}

template <typename T>
std::string flat(const std::vector<T>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ' ';
    out += str(values[k]);
  }
  out += '\n';
  return out;
}

}  // namespace

std::string format_indexed(const std::vector<BigRational>& values, std::size_t first_index) {
  return indexed(values, first_index);
}
std::string format_indexed(const std::vector<BigInt>& values, std::size_t first_index) {
  return indexed(values, first_index);
}
std::string format_flat(const std::vector<BigRational>& values) { return flat(values); }
std::string format_flat(const std::vector<BigInt>& values) { return flat(values); }

std::string format_step_csv(const StepFunction& sf) {
  std::string out = "left_edge,right_edge,value\n";
  for (std::size_t j = 0; j < sf.values.size(); ++j) {
    out += sf.plateau_left(j).to_string() + ',' + sf.plateau_left(j + 1).to_string() + ',' +
           sf.values[j].to_string() + '\n';
  }
  return out;
}

std::string format_fourier_csv(const spectral::FourierCoefficients& fc) {
  std::string out = "k,coefficient,sign\n";
  for (std::size_t k = 0; k < fc.a.size(); ++k) {
    const char* sign = std::fabs(fc.a[k]) <= fc.tolerance ? "0" : (fc.a[k] > 0 ? "+" : "-");
    out += std::to_string(k) + ',' + format_double(fc.a[k]) + ',' + sign + '\n';
  }
  return out;
}

std::string format_fourier_plot(const spectral::FourierCoefficients& fc, unsigned level) {
  if (level > 20) throw std::domain_error("format_fourier_plot: level too deep");
  std::string out = "t,phi_fourier,phi_exact_if_dyadic,abs_err\n";
  const long top = 1L << level;
  for (long q = -top; q <= top; ++q) {
    const Dyadic t(BigInt(q), level);
    const double approx = spectral::phi_fourier(t.to_double(), fc);
    const double exact = phi_exact(t).to_double();
    out += format_double(t.to_double()) + ',' + format_double(approx) + ',' + format_double(exact) + ',' +
           format_double(std::fabs(approx - exact)) + '\n';
  }
  return out;
}

}  // namespace dphi::report
