#pragma once

// Fixed-size complex linear algebra for the three-state coin space, and the
// model's constant matrices.

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

namespace qwalk {

using Complex = std::complex<double>;

/// Coin state attached to one lattice site. Component 0 hops left,
/// component 2 hops right, component 1 stays.
struct Spinor3 {
  std::array<Complex, 3> c{};

  constexpr Complex& operator[](std::size_t i) { return c[i]; }
  constexpr const Complex& operator[](std::size_t i) const { return c[i]; }

  double norm_squared() const;
  double norm() const;
  bool is_finite() const;

  /// Unit-norm copy with the phase preserved. Throws DomainError for the
  /// zero vector.
  Spinor3 normalized() const;

  /// Swap of components 0 and 2 (the n -> -n reflection of the walk).
  Spinor3 mirrored() const { return {{c[2], c[1], c[0]}}; }

  Spinor3& operator+=(const Spinor3& o);
  Spinor3& operator-=(const Spinor3& o);
  Spinor3& operator*=(Complex s);

  friend Spinor3 operator+(Spinor3 a, const Spinor3& b) { return a += b; }
  friend Spinor3 operator-(Spinor3 a, const Spinor3& b) { return a -= b; }
  friend Spinor3 operator*(Complex s, Spinor3 a) { return a *= s; }
  friend Spinor3 operator*(Spinor3 a, Complex s) { return a *= s; }
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const Spinor3& a, const Spinor3& b);
double max_abs_diff(const Spinor3& a, const Spinor3& b);

/// 3x3 complex matrix, row-major.
struct Mat3 {
  std::array<Complex, 9> e{};

  static Mat3 identity();
  static Mat3 from_real(const std::array<double, 9>& rows);

  constexpr Complex& operator()(std::size_t r, std::size_t col) { return e[3 * r + col]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t col) const {
    return e[3 * r + col];
  }

  Mat3 adjoint() const;
  Mat3 conjugate() const;
  /// S M S with S the 0<->2 permutation.
  Mat3 mirrored() const;
  Complex trace() const;
  Complex determinant() const;
  bool is_finite() const;

  Mat3& operator+=(const Mat3& o);
  Mat3& operator-=(const Mat3& o);
  Mat3& operator*=(Complex s);

  friend Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
  friend Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
  friend Mat3 operator*(Complex s, Mat3 a) { return a *= s; }
  friend Mat3 operator*(Mat3 a, Complex s) { return a *= s; }
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Spinor3 operator*(const Mat3& m, const Spinor3& v);
};

double max_abs_diff(const Mat3& a, const Mat3& b);
/// max_ij |(M^dagger M - I)_ij|
double unitarity_defect(const Mat3& m);
/// Re <v|M|v>; exact for Hermitian M.
double quadratic_form(const Mat3& m, const Spinor3& v);

/// The Grover coin 2|s><s| - I, |s> = (1,1,1)/sqrt(3).
Mat3 grover_coin();

/// Row split of the coin combined with the shift:
///   psi_n(t+1) = right_hop psi_{n-1}(t) + left_hop psi_{n+1}(t) + stay psi_n(t).
/// right_hop carries only the last row of the coin, left_hop the first,
/// stay the middle one.
struct HopMatrices {
  Mat3 right_hop;
  Mat3 left_hop;
  Mat3 stay;
};

HopMatrices hop_matrices();

/// Parses "a,b,c" where each entry is a complex literal: `x`, `x+yi`, `x-yi`,
/// `yi`, `-yi`, `i`. Whitespace is ignored. With `normalize` the result is
/// scaled to unit norm.
Spinor3 parse_spinor(std::string_view text, bool normalize);

/// Inverse of parse_spinor, 17 significant digits per real number.
std::string format_spinor(const Spinor3& s);
std::string format_complex(Complex z);

}  // namespace qwalk
