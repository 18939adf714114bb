#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ipx/error.hpp"
#include "ipx/tolerance.hpp"

namespace ipx {

using Complex = std::complex<double>;

enum class Field { Real, Complex };

/// The wider of two fields; REAL only if both are REAL.
constexpr Field promote(Field a, Field b) noexcept {
  return (a == Field::Complex || b == Field::Complex) ? Field::Complex : Field::Real;
}

/// Element of the scalar field. REAL scalars always carry a zero imaginary part.
class Scalar {
 public:
  constexpr Scalar() = default;
  constexpr Scalar(double re) : z_(re, 0.0) {}  // NOLINT: implicit like std::complex
  constexpr Scalar(Field field, Complex z)
      : field_(field), z_(field == Field::Real ? Complex(z.real(), 0.0) : z) {}

  static constexpr Scalar real(double re) { return Scalar(re); }
  static constexpr Scalar complex(double re, double im) {
    return Scalar(Field::Complex, Complex(re, im));
  }

  constexpr Field field() const noexcept { return field_; }
  constexpr double re() const noexcept { return z_.real(); }
  constexpr double im() const noexcept { return z_.imag(); }
  constexpr Complex value() const noexcept { return z_; }

  Scalar conj() const { return {field_, std::conj(z_)}; }
  double abs() const { return std::abs(z_); }
  double abs_sq() const { return std::norm(z_); }

  friend Scalar operator+(Scalar a, Scalar b) { return {promote(a.field_, b.field_), a.z_ + b.z_}; }
  friend Scalar operator-(Scalar a, Scalar b) { return {promote(a.field_, b.field_), a.z_ - b.z_}; }
  friend Scalar operator*(Scalar a, Scalar b) { return {promote(a.field_, b.field_), a.z_ * b.z_}; }
  friend Scalar operator/(Scalar a, Scalar b) { return {promote(a.field_, b.field_), a.z_ / b.z_}; }
  friend Scalar operator-(Scalar a) { return {a.field_, -a.z_}; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Field field_ = Field::Real;
  Complex z_{};
};

/// Finite coordinate vector over REAL or COMPLEX, dimension >= 1.
class Vector {
 public:
  /// Throws INPUT_MISMATCH for an empty coordinate list or a REAL vector
  /// with a nonzero imaginary part.
  Vector(Field field, std::vector<Complex> coords);

  static Vector real(std::initializer_list<double> coords);
  static Vector real(std::span<const double> coords);
  static Vector complex(std::initializer_list<Complex> coords);
  static Vector zeros(Field field, std::size_t dim);
  static Vector unit(Field field, std::size_t dim, std::size_t index);

  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const Complex> coords() const noexcept { return coords_; }
  Scalar operator[](std::size_t i) const { return {field_, coords_[i]}; }

  /// The same coordinates viewed as a COMPLEX vector.
  Vector as_complex() const { return {Field::Complex, coords_}; }

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Scalar s, const Vector& v);
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  Field field_;
  std::vector<Complex> coords_;
};

/// <x, y> = sum x_i conj(y_i): linear in the first slot.
/// Throws INPUT_MISMATCH on dimension or field mismatch.
Scalar inner(const Vector& x, const Vector& y);

double norm_sq(const Vector& x);
double norm(const Vector& x);

/// ||x||^2 ||y||^2 - |<x,y>|^2 evaluated through Lagrange's identity
/// sum_{i<j} |x_i y_j - x_j y_i|^2, which has no cancellation.
double schwarz_gap(const Vector& x, const Vector& y);

/// Linear combination sum c_i v_i. All v_i must share dimension.
Vector combine(std::span<const Complex> coeffs, std::span<const Vector> vectors, Field field);

struct FamilyValidation {
  double max_deviation = 0.0;  // max_{i,j} |<e_i, e_j> - delta_ij|
  std::size_t worst_row = 0;
  std::size_t worst_col = 0;
  bool within_dimension = true;  // member count <= ambient dimension
  bool pass = false;
};

/// Finite orthonormal family. The Gram matrix is checked once, at
/// construction; a family that fails is still representable (so the failure
/// can be reported) but is refused by every Fourier/Bessel operation.
class OrthonormalFamily {
 public:
  static constexpr double kDefaultTolerance = 1e-10;

  /// Throws EMPTY_FAMILY for no members, INPUT_MISMATCH if members differ in
  /// dimension or field.
  explicit OrthonormalFamily(std::vector<Vector> members, double ortho_tol = kDefaultTolerance);

  const std::vector<Vector>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t dim() const noexcept { return members_.front().dim(); }
  Field field() const noexcept { return members_.front().field(); }
  double ortho_tol() const noexcept { return ortho_tol_; }
  const FamilyValidation& validation() const noexcept { return validation_; }
  bool valid() const noexcept { return validation_.pass; }

 private:
  std::vector<Vector> members_;
  double ortho_tol_;
  FamilyValidation validation_;
};

/// Gram-matrix check of a candidate family. Throws EMPTY_FAMILY when empty.
FamilyValidation validate_family(std::span<const Vector> members, double ortho_tol);
FamilyValidation validate_family(const OrthonormalFamily& family);

}  // namespace ipx
