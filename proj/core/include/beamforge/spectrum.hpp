#pragma once

#include <string>
#include <vector>

namespace beamforge {

enum class SpectrumKind {
  DirichletLaplacian,  // lambda_n = n^2 pi^2
  ScaledDirichlet,     // lambda_n = n^2
  Power,               // lambda_n = (n pi)^(p+1)
  Explicit,            // user-supplied list
};

/// Eigenvalue sequence of the abstract operator A: strictly positive, strictly
/// increasing, simple. Immutable after construction.
class Spectrum {
public:
  static constexpr int kDefaultNMax = 64;

  static Spectrum dirichlet(int n_max = kDefaultNMax);
  static Spectrum scaled(int n_max = kDefaultNMax);
  static Spectrum power(int p, int n_max = kDefaultNMax);
  /// Validated once here. The cap is the list length.
  static Spectrum from_list(std::vector<double> eigenvalues);
  /// Reads one eigenvalue per line (decimal text, blank lines and '#' comments skipped).
  static Spectrum from_file(const std::string& path);
  /// Parses `dirichlet|scaled|power:p|file:<path>`.
  static Spectrum parse(const std::string& text, int n_max = kDefaultNMax);

  /// lambda_n for 1 <= n <= n_max(); throws std::out_of_range otherwise.
  double eigenvalue(int n) const;
  double operator()(int n) const { return eigenvalue(n); }

  int n_max() const { return n_max_; }
  SpectrumKind kind() const { return kind_; }
  int power_exponent() const { return power_; }
  bool contains(int n) const { return n >= 1 && n <= n_max_; }

  /// Canonical textual form, the inverse of parse() for generated spectra.
  std::string describe() const;

private:
  Spectrum(SpectrumKind kind, int power, int n_max, std::vector<double> values);

  SpectrumKind kind_;
  int power_ = 0;
  int n_max_ = 0;
  std::vector<double> values_;  // cached lambda_1..lambda_nmax
  std::string source_;
};

}  // namespace beamforge
