#include "succmin/embedding.hpp"

#include <algorithm>
#include <cmath>

namespace succmin::lattice {

namespace {

Real pow2(long e) { return bmp::ldexp(Real(1), static_cast<int>(e)); }

Real epsilon_for(unsigned bits) { return pow2(-static_cast<long>(bits) + 2); }

struct Eval {
  Complex value;
  Complex derivative;
  Real magnitude;  // sum |c_k| |z|^k, scales the rounding error
};

Eval horner(const std::vector<Real>& c, const Complex& z) {
  Eval e;
  Real az = z.abs();
  for (std::size_t k = c.size(); k-- > 0;) {
    e.derivative = e.derivative * z + e.value;
    e.value = e.value * z + Complex(c[k]);
    e.magnitude = e.magnitude * az + bmp::abs(c[k]);
  }
  return e;
}

double log2_of(const Real& x) {
  if (x <= 0) return -1e9;
  return static_cast<double>((bmp::log(x) / bmp::log(Real(2))).convert_to<long double>());
}

/// sigma(x) at every root, with a bound on the error from the root radius and
/// from rounding.
void evaluate(const VectorQ& coeffs, const RootEnclosures& roots, std::vector<Complex>& values,
              std::vector<Real>& errors, const Real& eps) {
  const std::size_t n = roots.roots.size();
  values.assign(n, Complex());
  errors.assign(n, Real(0));
  std::vector<Real> c(static_cast<std::size_t>(coeffs.size()));
  for (Index k = 0; k < coeffs.size(); ++k) c[static_cast<std::size_t>(k)] = to_real(coeffs(k));
  for (std::size_t m = 0; m < n; ++m) {
    const Complex& z = roots.roots[m];
    Real az = z.abs();
    Real outer = az + roots.radii[m];
    Complex v;
    Real exact_mag = 0, outer_mag = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
      v = v * z + Complex(c[k]);
      exact_mag = exact_mag * az + bmp::abs(c[k]);
      outer_mag = outer_mag * outer + bmp::abs(c[k]);
    }
    values[m] = v;
    // root uncertainty moves each power by at most (|z|+r)^k - |z|^k
    errors[m] = (outer_mag - exact_mag) + eps * Real(4 * c.size() + 8) * outer_mag;
  }
}

}  // namespace

RootEnclosures isolate_roots(const poly::PolyZ& f, unsigned bits) {
  const std::size_t n = f.size() - 1;
  if (f.size() < 2) throw InvalidInput("polynomial of degree 0 has no roots");
  const unsigned work = bits + 32;
  PrecisionScope scope(work);
  std::vector<Real> c;
  for (const auto& a : f) c.push_back(Real(a) / Real(f.back()));

  Real bound = 0;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, bmp::abs(c[k]));
  bound += 1;

  std::vector<Complex> z(n);
  const Real two_pi = 2 * pi_real();
  for (std::size_t k = 0; k < n; ++k) {
    Real angle = two_pi * Real(k) / Real(n) + Real(0.4);
    z[k] = Complex(bound * bmp::cos(angle), bound * bmp::sin(angle));
  }

  const Real tol = pow2(-static_cast<long>(work) + 8);
  bool converged = false;
  for (int iter = 0; iter < 5000 && !converged; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Eval e = horner(c, z[k]);
      if (e.value.norm2() == 0) continue;
      Complex ratio = e.value / e.derivative;
      Complex sum;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum = sum + Complex(1) / (z[k] - z[j]);
      Complex step = ratio / (Complex(1) - ratio * sum);
      z[k] = z[k] - step;
      worst = std::max(worst, step.abs() / std::max(Real(1), z[k].abs()));
    }
    converged = worst < tol;
  }

  RootEnclosures out;
  out.precision = work;
  out.roots = z;
  const Real eps = epsilon_for(work);
  const Real accuracy = pow2(-static_cast<long>(bits) - 8);
  for (std::size_t k = 0; k < n; ++k) {
    Eval e = horner(c, z[k]);
    Real err = eps * Real(2 * n + 4) * e.magnitude;
    Real dmag = e.derivative.abs() - eps * Real(2 * n + 4) * e.magnitude * Real(n);
    if (dmag <= 0) throw PrecisionError("root isolation failed: derivative vanishes at working precision");
    Real r = Real(n) * (e.value.abs() + err) / dmag;
    if (r > accuracy * std::max(Real(1), z[k].abs()))
      throw PrecisionError("root isolation failed to reach the requested accuracy");
    out.radii.push_back(r);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((z[i] - z[j]).abs() <= out.radii[i] + out.radii[j])
        throw PrecisionError("root enclosures overlap; raise the precision");
  return out;
}

Certified t2_norm(const nfield::FieldElement& x, const nfield::NumberField& field, const RootEnclosures& roots) {
  if (x.coeffs.size() != field.degree()) throw InvalidInput("element does not belong to the field");
  PrecisionScope scope(roots.precision);
  const Real eps = epsilon_for(roots.precision);
  std::vector<Complex> v;
  std::vector<Real> e;
  evaluate(x.coeffs, roots, v, e, eps);
  const Real n = Real(field.degree());
  Real sq = 0, err = 0;
  for (std::size_t m = 0; m < v.size(); ++m) {
    Real a = v[m].abs();
    sq += v[m].norm2();
    err += 2 * a * e[m] + e[m] * e[m];
  }
  sq /= n;
  err = err / n + eps * Real(8) * sq;
  Certified out;
  out.mid = bmp::sqrt(sq);
  if (sq > 2 * err)
    out.rad = err / out.mid + eps * out.mid;
  else
    out.rad = bmp::sqrt(err) * 2;
  return out;
}

EmbeddingData t2_gram(std::span<const nfield::FieldElement> basis, const nfield::NumberField& field,
                      unsigned bits) {
  if (bits < 64) throw InvalidInput("precision must be at least 64 bits");
  const Index n = static_cast<Index>(basis.size());
  for (const auto& w : basis)
    if (w.coeffs.size() != field.degree()) throw InvalidInput("basis element does not belong to the field");

  // Estimate the spread of norms and the cancellation inside each sigma(w).
  double spread = 0, cancel = 0;
  {
    RootEnclosures probe = isolate_roots(field.min_poly(), 96);
    PrecisionScope scope(probe.precision);
    double lo = 1e300, hi = -1e300;
    for (const auto& w : basis) {
      std::vector<Complex> v;
      std::vector<Real> e;
      evaluate(w.coeffs, probe, v, e, epsilon_for(probe.precision));
      Real sq = 0, mag = 0;
      for (std::size_t m = 0; m < v.size(); ++m) sq += v[m].norm2();
      for (Index k = 0; k < w.coeffs.size(); ++k) {
        Real zk = 0;
        for (const auto& z : probe.roots) zk = std::max(zk, bmp::pow(std::max(Real(1), z.abs()), static_cast<int>(k)));
        mag += bmp::abs(to_real(w.coeffs(k))) * zk;
      }
      double l = 0.5 * log2_of(sq);
      lo = std::min(lo, l);
      hi = std::max(hi, l);
      cancel = std::max(cancel, log2_of(mag) - l);
    }
    spread = n > 0 ? hi - lo : 0;
  }
  const unsigned work = bits + static_cast<unsigned>(std::ceil(2 * spread + std::max(0.0, cancel))) + 64;

  EmbeddingData data{work, bits, isolate_roots(field.min_poly(), work), field,
                     std::vector<nfield::FieldElement>(basis.begin(), basis.end()), MatrixR(), MatrixR()};
  data.precision = data.roots.precision;
  PrecisionScope scope(data.precision);
  const Real eps = epsilon_for(data.precision);
  const std::size_t deg = static_cast<std::size_t>(field.degree());

  std::vector<std::vector<Complex>> sig(static_cast<std::size_t>(n));
  std::vector<std::vector<Real>> err(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i)
    evaluate(basis[static_cast<std::size_t>(i)].coeffs, data.roots, sig[static_cast<std::size_t>(i)],
             err[static_cast<std::size_t>(i)], eps);

  data.gram.resize(n, n);
  data.gram_error.resize(n, n);
  const Real nn = Real(field.degree());
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      Real g = 0, e = 0, mag = 0;
      const auto& si = sig[static_cast<std::size_t>(i)];
      const auto& sj = sig[static_cast<std::size_t>(j)];
      const auto& ei = err[static_cast<std::size_t>(i)];
      const auto& ej = err[static_cast<std::size_t>(j)];
      for (std::size_t m = 0; m < deg; ++m) {
        g += si[m].re * sj[m].re + si[m].im * sj[m].im;
        Real ai = si[m].abs(), aj = sj[m].abs();
        e += ai * ej[m] + aj * ei[m] + ei[m] * ej[m];
        mag += ai * aj;
      }
      g /= nn;
      e = e / nn + eps * Real(deg + 8) * mag / nn;
      data.gram(i, j) = data.gram(j, i) = g;
      data.gram_error(i, j) = data.gram_error(j, i) = e;
    }
  }
  return data;
}

EmbeddingData t2_gram(const nfield::Flag& basis, const nfield::NumberField& field, unsigned bits) {
  return t2_gram(std::span<const nfield::FieldElement>(basis.basis()), field, bits);
}

}  // namespace succmin::lattice
