#pragma once

// Reference computations that share no code with the library beyond the
// Eigen matrix type. They are slow and only meant for d = 2 or tiny inputs.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec3 = std::array<double, 3>;

// Index-by-index contraction. traced_a == true removes the first factor.
inline Mat partial_trace(const Mat& m, int da, int db, bool traced_a) {
  if (traced_a) {
    Mat out = Mat::Zero(db, db);
    for (int b = 0; b < db; ++b)
      for (int bp = 0; bp < db; ++bp)
        for (int a = 0; a < da; ++a) out(b, bp) += m(a * db + b, a * db + bp);
    return out;
  }
  Mat out = Mat::Zero(da, da);
  for (int a = 0; a < da; ++a)
    for (int ap = 0; ap < da; ++ap)
      for (int b = 0; b < db; ++b) out(a, ap) += m(a * db + b, ap * db + b);
  return out;
}

inline double h2(double x) {
  double s = 0.0;
  for (double q : {x, 1.0 - x})
    if (q > 0.0) s -= q * std::log(q) / std::log(2.0);
  return s;
}

inline double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
inline double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Written out by hand rather than taken from the library.
inline std::array<Eigen::Matrix2cd, 4> paulis() {
  const cd i(0, 1);
  Eigen::Matrix2cd s0, sx, sy, sz;
  s0 << 1, 0, 0, 1;
  sx << 0, 1, 1, 0;
  sy << 0, -i, i, 0;
  sz << 1, 0, 0, -1;
  return {s0, sx, sy, sz};
}

// ρ = ¼ Σ_{μν} R_{μν} σ_μ ⊗ σ_ν with R_{μν} = tr(ρ σ_μ ⊗ σ_ν).
struct TwoQubitBloch {
  Vec3 a{};                            // Alice's Bloch vector
  Vec3 b{};                            // Bob's Bloch vector
  std::array<std::array<double, 3>, 3> t{};  // correlation tensor
};

inline TwoQubitBloch bloch_of(const Mat& rho) {
  const auto s = paulis();
  double r[4][4];
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      cd acc = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += rho(i, j) * s[mu](j / 2, i / 2) * s[nu](j % 2, i % 2);
      r[mu][nu] = acc.real();
    }
  TwoQubitBloch out;
  for (int k = 0; k < 3; ++k) {
    out.a[k] = r[k + 1][0];
    out.b[k] = r[0][k + 1];
    for (int l = 0; l < 3; ++l) out.t[k][l] = r[k + 1][l + 1];
  }
  return out;
}

// Holevo quantity of Alice measuring along the axis n (unit vector):
// outcomes ± with p = (1 ± a·n)/2 leave Bob with Bloch vector (b ± Tᵀn)/(2p).
inline double chi(const TwoQubitBloch& s, const Vec3& n) {
  Vec3 tn{};
  for (int l = 0; l < 3; ++l) tn[l] = s.t[0][l] * n[0] + s.t[1][l] * n[1] + s.t[2][l] * n[2];
  const double an = dot3(s.a, n);
  double avg = 0.0;
  for (int sign : {1, -1}) {
    const double p = 0.5 * (1.0 + sign * an);
    if (p < 1e-14) continue;
    const Vec3 v{(s.b[0] + sign * tn[0]) / (2 * p), (s.b[1] + sign * tn[1]) / (2 * p),
                 (s.b[2] + sign * tn[2]) / (2 * p)};
    avg += p * h2(0.5 * (1.0 + std::min(1.0, norm3(v))));
  }
  return h2(0.5 * (1.0 + std::min(1.0, norm3(s.b)))) - avg;
}

inline Vec3 axis(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// Orthonormal frame around axis(θ, φ): tangent vectors along θ and φ.
inline std::pair<Vec3, Vec3> tangent_frame(double theta, double phi) {
  return {Vec3{std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), -std::sin(theta)},
          Vec3{-std::sin(phi), std::cos(phi), 0.0}};
}

inline Vec3 perpendicular(double theta, double phi, double psi) {
  const auto [u, v] = tangent_frame(theta, phi);
  return {std::cos(psi) * u[0] + std::sin(psi) * v[0], std::cos(psi) * u[1] + std::sin(psi) * v[1],
          std::cos(psi) * u[2] + std::sin(psi) * v[2]};
}

struct GridPoint {
  double value;
  double theta, phi, psi;
};

// Qubit MU pairs are exactly pairs of orthogonal Bloch axes, so
//   𝒞 = max_{n1 ⊥ n2} min(χ(n1), χ(n2)).
// A 1° grid over n1 (upper hemisphere) and the angle ψ of n2 in the plane
// orthogonal to n1, followed by a 0.05° refine around the best grid points.
inline double grid_C(const TwoQubitBloch& s) {
  constexpr double deg = std::numbers::pi / 180.0;
  struct Axis {
    double chi, theta, phi;
  };
  std::vector<Axis> axes;
  for (int ti = 0; ti <= 90; ++ti)
    for (int pi = 0; pi < 360; ++pi) axes.push_back({chi(s, axis(ti * deg, pi * deg)), ti * deg, pi * deg});
  std::sort(axes.begin(), axes.end(), [](const Axis& x, const Axis& y) { return x.chi > y.chi; });

  std::vector<GridPoint> top;  // best few distinct grid points
  double best = -1.0;
  for (const auto& ax : axes) {
    if (ax.chi <= best) break;
    for (int k = 0; k < 180; ++k) {
      const double v = std::min(ax.chi, chi(s, perpendicular(ax.theta, ax.phi, k * deg)));
      if (v > best - 1e-3) top.push_back({v, ax.theta, ax.phi, k * deg});
      best = std::max(best, v);
    }
  }
  std::sort(top.begin(), top.end(), [](const GridPoint& x, const GridPoint& y) { return x.value > y.value; });
  top.resize(std::min<std::size_t>(top.size(), 6));

  const double step = 0.05 * deg;
  for (const auto& g : top) {
    for (int i = -20; i <= 20; ++i)
      for (int j = -20; j <= 20; ++j) {
        const double th = g.theta + i * step;
        const double ph = g.phi + j * step;
        const double c1 = chi(s, axis(th, ph));
        if (c1 <= best) continue;
        for (int k = -20; k <= 20; ++k) best = std::max(best, std::min(c1, chi(s, perpendicular(th, ph, g.psi + k * step))));
      }
  }
  return best;
}

// max_n χ(n), located on the same 1° grid and refined.
inline GridPoint grid_C1(const TwoQubitBloch& s) {
  constexpr double deg = std::numbers::pi / 180.0;
  GridPoint best{-1.0, 0, 0, 0};
  for (int ti = 0; ti <= 90; ++ti)
    for (int pi = 0; pi < 360; ++pi) {
      const double v = chi(s, axis(ti * deg, pi * deg));
      if (v > best.value) best = {v, ti * deg, pi * deg, 0};
    }
  for (double step : {0.1 * deg, 0.005 * deg}) {
    const GridPoint c = best;
    for (int i = -15; i <= 15; ++i)
      for (int j = -15; j <= 15; ++j) {
        const double v = chi(s, axis(c.theta + i * step, c.phi + j * step));
        if (v > best.value) best = {v, c.theta + i * step, c.phi + j * step, 0};
      }
  }
  return best;
}

// Q₂ with the χ-basis taken from grid_C1: best χ over axes orthogonal to it.
inline double grid_Q2(const TwoQubitBloch& s) {
  const GridPoint c1 = grid_C1(s);
  double best = 0.0;
  for (int k = 0; k < 36000; ++k)
    best = std::max(best, chi(s, perpendicular(c1.theta, c1.phi, k * std::numbers::pi / 36000.0)));
  return best;
}

// Rotation matrix from ZYZ Euler angles; its columns are an orthonormal
// triple of Bloch axes, i.e. a full set of three qubit MUBs.
inline std::array<Vec3, 3> euler_frame(double a, double b, double c) {
  const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b), cc = std::cos(c),
               sc = std::sin(c);
  const double r[3][3] = {{ca * cb * cc - sa * sc, -ca * cb * sc - sa * cc, ca * sb},
                          {sa * cb * cc + ca * sc, -sa * cb * sc + ca * cc, sa * sb},
                          {-sb * cc, sb * sc, cb}};
  std::array<Vec3, 3> cols;
  for (int k = 0; k < 3; ++k) cols[k] = {r[0][k], r[1][k], r[2][k]};
  return cols;
}

// 𝒞₃ = max over orthonormal triples of the smallest χ, by a 3° Euler grid
// refined twice.
inline double grid_C3(const TwoQubitBloch& s) {
  constexpr double deg = std::numbers::pi / 180.0;
  auto value = [&](double a, double b, double c) {
    const auto f = euler_frame(a, b, c);
    return std::min({chi(s, f[0]), chi(s, f[1]), chi(s, f[2])});
  };
  std::array<double, 4> best{-1.0, 0, 0, 0};
  for (int i = 0; i < 120; ++i)
    for (int j = 0; j <= 60; ++j)
      for (int k = 0; k < 120; ++k) {
        const double v = value(3 * i * deg, 3 * j * deg, 3 * k * deg);
        if (v > best[0]) best = {v, 3 * i * deg, 3 * j * deg, 3 * k * deg};
      }
  for (double step : {0.3 * deg, 0.03 * deg}) {
    const auto c = best;
    for (int i = -10; i <= 10; ++i)
      for (int j = -10; j <= 10; ++j)
        for (int k = -10; k <= 10; ++k) {
          const double v = value(c[1] + i * step, c[2] + j * step, c[3] + k * step);
          if (v > best[0]) best = {v, c[1] + i * step, c[2] + j * step, c[3] + k * step};
        }
  }
  return best[0];
}

}  // namespace oracle
