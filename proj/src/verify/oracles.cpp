#include "metrotrade/verify/oracles.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "metrotrade/bounds.hpp"
#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/sampling.hpp"

namespace metrotrade::oracle {

double bisect_min_signal(std::uint64_t n, double alpha) {
  const auto initial = binary_stats(1.0, n);
  auto accepted = [&](double phi) {
    return distinguishable_binary(
        initial, binary_stats(0.5 * (1.0 + std::cos(phi)), n), alpha);
  };
  double lo = 0.0;
  double hi = kPi;
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (accepted(mid) ? hi : lo) = mid;
  }
  return hi;
}

double bisect_inherent_step(double phi0, std::uint64_t n) {
  const double target = 1.0 / static_cast<double>(n);
  auto rise = [&](double delta) {
    return 0.5 * (std::cos(phi0 - delta) - std::cos(phi0));
  };
  double lo = 0.0;
  double hi = phi0;
  if (rise(hi) < target) throw UnreachableError("step not reachable");
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (rise(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double curvature_fisher(const ProbePhaseState& family, double h) {
  const auto at = [&](double delta) {
    return fidelity(family.with_phase(delta), 0.0);
  };
  const double second = (at(h) - 2.0 * at(0.0) + at(-h)) / (h * h);
  return -2.0 * second;
}

double finite_difference_fisher(const MeasurementBasis& basis, double phi,
                                double h) {
  const double p = basis_probabilities(basis, phi).p_final;
  const double dp = (basis_probabilities(basis, phi + h).p_final -
                     basis_probabilities(basis, phi - h).p_final) /
                    (2.0 * h);
  return dp * dp * (1.0 / p + 1.0 / (1.0 - p));
}

double statevector_product_fidelity(int particles, double delta) {
  if (particles < 1 || particles > 12) {
    throw DomainError("statevector oracle supports 1..12 qubits");
  }
  using cd = std::complex<double>;
  const double amp = 1.0 / std::sqrt(2.0);
  const std::vector<cd> plus{amp, amp};
  const std::vector<cd> rotated{amp, amp * std::polar(1.0, delta)};
  auto tensor_power = [particles](const std::vector<cd>& q) {
    std::vector<cd> state{1.0};
    for (int m = 0; m < particles; ++m) {
      std::vector<cd> next;
      next.reserve(state.size() * 2);
      for (const auto& a : state) {
        next.push_back(a * q[0]);
        next.push_back(a * q[1]);
      }
      state = std::move(next);
    }
    return state;
  };
  const auto bra = tensor_power(plus);
  const auto ket = tensor_power(rotated);
  cd overlap = 0.0;
  for (std::size_t i = 0; i < bra.size(); ++i) {
    overlap += std::conj(bra[i]) * ket[i];
  }
  return std::norm(overlap);
}

double exact_distinguish_rate(const StrategyConfig& cfg, double phi) {
  const auto n = cfg.effective_samples();
  const double f = fidelity(cfg.probe(phi), 0.0);
  const auto initial = binary_stats(1.0, n);
  // Binomial pmf by log-space evaluation, independent of the sampler.
  const double nd = static_cast<double>(n);
  double rate = 0.0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    double log_w = std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) -
                   std::lgamma(nd - kd + 1.0);
    if (f == 0.0) {
      if (k != 0) continue;
      log_w = 0.0;
    } else if (f == 1.0) {
      if (k != n) continue;
      log_w = 0.0;
    } else {
      log_w += kd * std::log(f) + (nd - kd) * std::log1p(-f);
    }
    const auto observed = binary_stats(kd / nd, n);
    if (distinguishable_binary(initial, observed, cfg.alpha())) {
      rate += std::exp(log_w);
    }
  }
  return rate;
}

int svg_polyline_count(std::string_view svg) {
  std::vector<std::string> stack;
  int polylines = 0;
  int roots = 0;
  std::size_t pos = 0;
  if (svg.find("href") != std::string_view::npos ||
      svg.find("url(") != std::string_view::npos) {
    return -1;
  }
  while ((pos = svg.find('<', pos)) != std::string_view::npos) {
    const auto end = svg.find('>', pos);
    if (end == std::string_view::npos) return -1;
    std::string_view tag = svg.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return -1;
    if (tag.front() == '?' || tag.front() == '!') continue;
    if (tag.front() == '/') {
      std::string name(tag.substr(1));
      if (stack.empty() || stack.back() != name) return -1;
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.back() == '/';
    const auto name_end = tag.find_first_of(" \t\n/");
    std::string name(tag.substr(0, name_end));
    if (stack.empty()) {
      if (name != "svg" || ++roots > 1) return -1;
    }
    if (name == "polyline") ++polylines;
    if (!self_closing) stack.push_back(name);
  }
  if (!stack.empty() || roots != 1) return -1;
  return polylines;
}

}  // namespace metrotrade::oracle
