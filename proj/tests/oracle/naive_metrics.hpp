#pragma once

// Direct dense transcriptions of the metric, normalization, decision and CWS
// formulas. Slow on purpose: every sum is written out over full index ranges so
// the library's sparse code paths can be checked against it.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<std::uint32_t>>;

struct Metrics {
  std::vector<double> F, I, Delta, E, Psi, phi, Theta, Pi, Omega, theta;
  std::vector<double> p;
  std::vector<std::uint32_t> psi;
  std::vector<std::vector<std::uint32_t>> H;  // full square, H[m][n] for m > n
  std::uint64_t T = 0;
};

inline int xi(const Dense& g, std::size_t mu, std::size_t i) { return g[mu][i] > 0 ? 1 : 0; }

inline Metrics compute(const Dense& g, const std::vector<double>& ref) {
  Metrics r;
  const std::size_t ns = g.size();
  const std::size_t nl = ns ? g[0].size() : ref.size();
  for (std::size_t mu = 0; mu < ns; ++mu)
    for (std::size_t i = 0; i < nl; ++i) r.T += g[mu][i];

  r.p.assign(nl, 0.0);
  for (std::size_t i = 0; i < nl; ++i) {
    std::uint64_t col = 0;
    for (std::size_t mu = 0; mu < ns; ++mu) col += g[mu][i];
    r.p[i] = r.T ? static_cast<double>(col) / static_cast<double>(r.T) : 0.0;
  }

  r.psi.assign(nl, 0);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t mu = 0; mu < ns; ++mu) r.psi[i] += xi(g, mu, i);

  r.H.assign(nl, std::vector<std::uint32_t>(nl, 0));
  for (std::size_t m = 0; m < nl; ++m)
    for (std::size_t n = 0; n < m; ++n)
      for (std::size_t j = 0; j < ns; ++j) r.H[m][n] += xi(g, j, m) != xi(g, j, n) ? 1 : 0;

  double ref_norm = 0.0;
  for (double v : ref) ref_norm += v * v;
  ref_norm = std::sqrt(ref_norm);

  for (std::size_t mu = 0; mu < ns; ++mu) {
    double F = 0, Delta = 0, E = 0, I = 0, Psi = 0, phi = 0, Theta = 0, Omega = 0, dot = 0, norm = 0;
    for (std::size_t i = 0; i < nl; ++i) {
      F += g[mu][i];
      if (r.T) Delta += r.p[i] * g[mu][i];
      if (xi(g, mu, i) && r.T) E -= r.p[i] * std::log2(r.p[i]);
      if (xi(g, mu, i))
        for (std::size_t j = 0; j < ns; ++j)
          if (j != mu) I += xi(g, j, i);
      phi += xi(g, mu, i);
      if (xi(g, mu, i)) Theta += r.psi[i];
      Omega += static_cast<double>(r.psi[i]) * g[mu][i];
      dot += g[mu][i] * ref[i];
      norm += static_cast<double>(g[mu][i]) * g[mu][i];
    }
    for (std::size_t m = 0; m < nl; ++m)
      for (std::size_t n = 0; n < m; ++n)
        if (xi(g, mu, m) && xi(g, mu, n)) Psi += r.H[m][n];
    if (r.T == 0) F = Delta = E = 0;
    r.F.push_back(F);
    r.Delta.push_back(Delta);
    r.E.push_back(E);
    r.I.push_back(I);
    r.Psi.push_back(Psi);
    r.phi.push_back(phi);
    r.Theta.push_back(Theta);
    r.Pi.push_back(phi * Theta);
    r.Omega.push_back(Omega);
    r.theta.push_back(norm > 0 && ref_norm > 0 ? dot / (std::sqrt(norm) * ref_norm) : 0.0);
  }
  return r;
}

inline std::vector<double> normalize(const std::vector<double>& v) {
  if (v.empty()) return {};
  double lo = v[0], hi = v[0];
  for (double x : v) {
    lo = x < lo ? x : lo;
    hi = x > hi ? x : hi;
  }
  std::vector<double> out;
  for (double x : v) out.push_back(hi == lo ? 0.5 : (x - lo) / (hi - lo));
  return out;
}

/// The vote for one sentence, written as the printed If/then/else rule.
inline double decide(const std::vector<double>& row, std::size_t gamma) {
  double sum_alpha = 0.0, sum_beta = 0.0;
  for (double v : row) {
    const double alpha = v > 0.5 ? v - 0.5 : 0.0;
    const double beta = v < 0.5 ? 0.5 - v : 0.0;
    sum_alpha += alpha;
    sum_beta += beta;
  }
  if (sum_alpha > sum_beta) return 0.5 + sum_alpha / static_cast<double>(gamma);
  return 0.5 - sum_beta / static_cast<double>(gamma);
}

/// CWS with i_c recounted from scratch for every prefix.
inline double cws(const std::vector<bool>& correct_in_order) {
  const std::size_t q = correct_in_order.size();
  double sum = 0.0;
  for (std::size_t i = 1; i <= q; ++i) {
    std::size_t ic = 0;
    for (std::size_t k = 0; k < i; ++k) ic += correct_in_order[k] ? 1 : 0;
    sum += static_cast<double>(ic) / static_cast<double>(i);
  }
  return sum / static_cast<double>(q);
}

}  // namespace oracle
