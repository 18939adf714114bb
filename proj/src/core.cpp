#include "ipx/core.hpp"

#include <cmath>
#include <string>

namespace ipx {

namespace {

void require_compatible(const Vector& x, const Vector& y, const char* op) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorCode::InputMismatch, std::string(op) + ": dimension mismatch (" +
                                              std::to_string(x.dim()) + " vs " +
                                              std::to_string(y.dim()) + ")");
  }
  if (x.field() != y.field()) {
    throw Error(ErrorCode::InputMismatch, std::string(op) + ": field mismatch");
  }
}

}  // namespace

Vector::Vector(Field field, std::vector<Complex> coords)
    : field_(field), coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::InputMismatch, "vector must have dimension >= 1");
  if (field_ == Field::Real) {
    for (const Complex& c : coords_) {
      if (c.imag() != 0.0) {
        throw Error(ErrorCode::InputMismatch, "REAL vector with nonzero imaginary part");
      }
    }
  }
}

Vector Vector::real(std::initializer_list<double> coords) {
  return real(std::span<const double>(coords.begin(), coords.size()));
}

Vector Vector::real(std::span<const double> coords) {
  std::vector<Complex> z(coords.begin(), coords.end());
  return {Field::Real, std::move(z)};
}

Vector Vector::complex(std::initializer_list<Complex> coords) {
  return {Field::Complex, std::vector<Complex>(coords)};
}

Vector Vector::zeros(Field field, std::size_t dim) {
  return {field, std::vector<Complex>(dim)};
}

Vector Vector::unit(Field field, std::size_t dim, std::size_t index) {
  std::vector<Complex> z(dim);
  z.at(index) = 1.0;
  return {field, std::move(z)};
}

Vector& Vector::operator+=(const Vector& other) {
  require_compatible(*this, other, "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_compatible(*this, other, "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector operator*(Scalar s, const Vector& v) {
  std::vector<Complex> z(v.coords_.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = s.value() * v.coords_[i];
  return {promote(s.field(), v.field_), std::move(z)};
}

Scalar inner(const Vector& x, const Vector& y) {
  require_compatible(x, y, "inner");
  const auto xs = x.coords();
  const auto ys = y.coords();
  if (x.field() == Field::Real) {
    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) acc += xs[i].real() * ys[i].real();
    return Scalar::real(acc);
  }
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // x_i * conj(y_i)
    re += xs[i].real() * ys[i].real() + xs[i].imag() * ys[i].imag();
    im += xs[i].imag() * ys[i].real() - xs[i].real() * ys[i].imag();
  }
  return Scalar::complex(re, im);
}

double norm_sq(const Vector& x) {
  double acc = 0.0;
  for (const Complex& c : x.coords()) acc += std::norm(c);
  return acc;
}

double norm(const Vector& x) { return std::sqrt(norm_sq(x)); }

double schwarz_gap(const Vector& x, const Vector& y) {
  require_compatible(x, y, "schwarz_gap");
  const auto xs = x.coords();
  const auto ys = y.coords();
  double acc = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      acc += std::norm(xs[i] * ys[j] - xs[j] * ys[i]);
    }
  }
  return acc;
}

Vector combine(std::span<const Complex> coeffs, std::span<const Vector> vectors, Field field) {
  if (coeffs.size() != vectors.size() || vectors.empty()) {
    throw Error(ErrorCode::InputMismatch, "combine: coefficient count does not match vectors");
  }
  std::vector<Complex> z(vectors.front().dim());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const auto vs = vectors[k].coords();
    if (vs.size() != z.size()) throw Error(ErrorCode::InputMismatch, "combine: dimension mismatch");
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += coeffs[k] * vs[i];
  }
  return {field, std::move(z)};
}

FamilyValidation validate_family(std::span<const Vector> members, double ortho_tol) {
  if (members.empty()) throw Error(ErrorCode::EmptyFamily, "orthonormal family has no members");
  FamilyValidation result;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const Complex g = inner(members[i], members[j]).value();
      const double deviation = std::abs(g - (i == j ? 1.0 : 0.0));
      if (deviation > result.max_deviation) {
        result.max_deviation = deviation;
        result.worst_row = i;
        result.worst_col = j;
      }
    }
  }
  result.within_dimension = members.size() <= members.front().dim();
  result.pass = result.within_dimension && result.max_deviation <= ortho_tol;
  return result;
}

OrthonormalFamily::OrthonormalFamily(std::vector<Vector> members, double ortho_tol)
    : members_(std::move(members)), ortho_tol_(ortho_tol) {
  validation_ = validate_family(members_, ortho_tol_);
}

FamilyValidation validate_family(const OrthonormalFamily& family) {
  return validate_family(family.members(), family.ortho_tol());
}

}  // namespace ipx
