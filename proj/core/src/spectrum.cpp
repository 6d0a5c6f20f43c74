#include "beamforge/spectrum.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "beamforge/errors.hpp"

namespace beamforge {

namespace {

void require_cap(int n_max) {
  if (n_max < 1) throw ValidationError("spectrum: n_max must be a positive integer");
}

std::vector<double> generate(int n_max, auto&& formula) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) values.push_back(formula(static_cast<double>(n)));
  return values;
}

void validate_list(const std::vector<double>& values) {
  if (values.empty()) throw ValidationError("spectrum: explicit list is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] <= 0.0) {
      throw ValidationError("spectrum: eigenvalue #" + std::to_string(i + 1) +
                            " is not a positive finite number");
    }
    // Repeated eigenvalues are rejected as well: every result assumes simple ones.
    if (i > 0 && !(values[i] > values[i - 1])) {
      throw ValidationError("spectrum: eigenvalues must be strictly increasing (entry #" +
                            std::to_string(i + 1) + ")");
    }
  }
}

}  // namespace

Spectrum::Spectrum(SpectrumKind kind, int power, int n_max, std::vector<double> values)
    : kind_(kind), power_(power), n_max_(n_max), values_(std::move(values)) {}

Spectrum Spectrum::dirichlet(int n_max) {
  require_cap(n_max);
  constexpr double pi = std::numbers::pi;
  return {SpectrumKind::DirichletLaplacian, 0, n_max,
          generate(n_max, [](double n) { return n * n * pi * pi; })};
}

Spectrum Spectrum::scaled(int n_max) {
  require_cap(n_max);
  return {SpectrumKind::ScaledDirichlet, 0, n_max, generate(n_max, [](double n) { return n * n; })};
}

Spectrum Spectrum::power(int p, int n_max) {
  require_cap(n_max);
  if (p < 1) throw ValidationError("spectrum: power exponent must be a positive integer");
  constexpr double pi = std::numbers::pi;
  auto values = generate(n_max, [p](double n) { return std::pow(n * pi, p + 1); });
  validate_list(values);  // overflow to inf for huge caps
  return {SpectrumKind::Power, p, n_max, std::move(values)};
}

Spectrum Spectrum::from_list(std::vector<double> eigenvalues) {
  validate_list(eigenvalues);
  const int n = static_cast<int>(eigenvalues.size());
  return {SpectrumKind::Explicit, 0, n, std::move(eigenvalues)};
}

Spectrum Spectrum::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("spectrum: cannot open '" + path + "'");
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw ValidationError("spectrum: " + path + ":" + std::to_string(line_no) +
                            ": not a decimal number");
    }
    values.push_back(value);
  }
  auto spec = from_list(std::move(values));
  spec.source_ = path;
  return spec;
}

Spectrum Spectrum::parse(const std::string& text, int n_max) {
  if (text == "dirichlet") return dirichlet(n_max);
  if (text == "scaled") return scaled(n_max);
  if (text.rfind("power:", 0) == 0) {
    const std::string arg = text.substr(6);
    int p = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw ValidationError("spectrum: bad power exponent '" + arg + "'");
    }
    return power(p, n_max);
  }
  if (text.rfind("file:", 0) == 0) {
    auto spec = from_file(text.substr(5));
    if (n_max < spec.n_max_) {
      spec.values_.resize(static_cast<std::size_t>(n_max));
      spec.n_max_ = n_max;
    }
    return spec;
  }
  throw ValidationError("spectrum: unknown generator '" + text +
                        "' (expected dirichlet|scaled|power:p|file:<path>)");
}

double Spectrum::eigenvalue(int n) const {
  if (!contains(n)) {
    throw std::out_of_range("spectrum: mode index " + std::to_string(n) + " outside [1, " +
                            std::to_string(n_max_) + "]");
  }
  return values_[static_cast<std::size_t>(n - 1)];
}

std::string Spectrum::describe() const {
  switch (kind_) {
    case SpectrumKind::DirichletLaplacian: return "dirichlet";
    case SpectrumKind::ScaledDirichlet: return "scaled";
    case SpectrumKind::Power: return "power:" + std::to_string(power_);
    case SpectrumKind::Explicit: return source_.empty() ? "explicit" : "file:" + source_;
  }
  return "explicit";
}

}  // namespace beamforge
