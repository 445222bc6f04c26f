#pragma once

// Complex embeddings of Q[x]/(f) with certified root enclosures, and the
// Gram matrix of the normalized T2 form |x|^2 = (1/n) sum |sigma_i(x)|^2.

#include "succmin/core.hpp"
#include "succmin/nfield.hpp"

#include <span>

namespace succmin::lattice {

struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Real abs() const { return bmp::sqrt(re * re + im * im); }
  Real norm2() const { return re * re + im * im; }
};

/// A real number known to lie in [mid - rad, mid + rad].
struct Certified {
  Real mid;
  Real rad;

  Real lower() const { return mid - rad; }
  Real upper() const { return mid + rad; }
};

/// Roots of a squarefree integer polynomial, each inside a disk of the given
/// radius that contains exactly one root.
struct RootEnclosures {
  unsigned precision = 0;
  std::vector<Complex> roots;
  std::vector<Real> radii;
};

/// Aberth iteration followed by the inclusion test |z - root| <= n |f(z)/f'(z)|.
/// Throws PrecisionError if the disks cannot be separated at `bits`.
RootEnclosures isolate_roots(const poly::PolyZ& f, unsigned bits);

struct EmbeddingData {
  unsigned precision = 0;  // working bits
  unsigned requested = 0;  // caller's accuracy target
  RootEnclosures roots;
  nfield::NumberField field;
  std::vector<nfield::FieldElement> basis;
  MatrixR gram;        // <w_i, w_j>
  MatrixR gram_error;  // entrywise bound on |gram - exact|
};

/// |x| with a rigorous error radius at the roots' precision.
Certified t2_norm(const nfield::FieldElement& x, const nfield::NumberField& field, const RootEnclosures& roots);

/// Working precision grows with the spread of the basis so that the Gram
/// matrix keeps `bits` of relative accuracy on the smallest vectors.
EmbeddingData t2_gram(std::span<const nfield::FieldElement> basis, const nfield::NumberField& field,
                      unsigned bits = 128);
EmbeddingData t2_gram(const nfield::Flag& basis, const nfield::NumberField& field, unsigned bits = 128);

}  // namespace succmin::lattice
