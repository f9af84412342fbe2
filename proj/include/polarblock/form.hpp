// Copyright 2026 The polarblock Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLARBLOCK_FORM_HPP_
#define POLARBLOCK_FORM_HPP_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "polarblock/field.hpp"
#include "polarblock/projective.hpp"

namespace polarblock {

enum class FormKind { kParabolic, kElliptic, kHyperbolic, kHermitian };

std::string ToString(FormKind kind);

// A quadratic form (upper-triangular coefficient matrix, Q(v) = sum_{i<=j}
// a_ij v_i v_j) or a hermitian form (Gram matrix G, H(u,v) = u^T G conj(v))
// on the vector space underlying PG(n, q).
class Form {
 public:
  // The canonical form of `kind` on PG(ambient_dim, q):
  //   parabolic   X0^2 + X1X2 + ... + X_{2n-1}X_{2n}
  //   elliptic    g(X0,X1) + X2X3 + ... + X_{2n}X_{2n+1}
  //   hyperbolic  X0X1 + X2X3 + ...
  //   hermitian   sum X_i^{q0+1}
  // Throws on a parity mismatch or a non-square field for hermitian.
  static Form Standard(FormKind kind, int ambient_dim, FieldPtr field);

  // Arbitrary coefficients; `matrix` is row-major (n+1)x(n+1).
  static Form FromMatrix(FormKind kind, FieldPtr field, int ambient_dim, std::vector<Elem> matrix);

  FormKind kind() const { return kind_; }
  int ambient_dim() const { return n_; }
  int length() const { return n_ + 1; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  bool is_quadratic() const { return kind_ != FormKind::kHermitian; }
  // Parabolic in characteristic 2: perp follows the tangent-hyperplane
  // intersection definition and the bilinear radical is the nucleus.
  bool is_even_parabolic() const { return kind_ == FormKind::kParabolic && field_->p() == 2; }

  Elem coeff(int i, int j) const { return matrix_[static_cast<std::size_t>(i) * length() + j]; }
  const std::vector<Elem>& matrix() const { return matrix_; }

  // Q(v), or H(v, v) for hermitian forms.
  Elem Eval(std::span<const Elem> v) const;
  bool IsSingular(std::span<const Elem> v) const { return Eval(v) == 0; }
  // B(u,v) = Q(u+v) - Q(u) - Q(v), or H(u,v).
  Elem Polarize(std::span<const Elem> u, std::span<const Elem> v) const;

  // Coefficients (g00, g01, g11) of the elliptic g(X0, X1); zero otherwise.
  std::array<Elem, 3> elliptic_g() const;

 private:
  Form() = default;
  void CheckLength(std::span<const Elem> v) const;

  FormKind kind_ = FormKind::kParabolic;
  int n_ = 0;
  FieldPtr field_;
  std::vector<Elem> matrix_;
};

// The lexicographically smallest non-square (q odd) or smallest element of
// absolute trace 1 (q even); the constant of the elliptic g.
Elem EllipticConstant(const Field& f);
Elem AbsoluteTrace(const Field& f, Elem a);

// The polarization kernel {y : B(a, y) = 0 for all a in s}.
Subspace PolarPerp(const Form& form, const Subspace& s);

// The perp operator. For even-characteristic parabolic forms this is the
// intersection of the tangent hyperplanes at the singular points of s and
// throws when s has none; otherwise it equals PolarPerp.
Subspace Perp(const Form& form, const Subspace& s);

bool IsTotallySingular(const Form& form, const Subspace& s);

// The form induced on s, in the coordinates of the RREF basis of s.
Form RestrictForm(const Form& form, const Subspace& s, FormKind kind);

// Radical of the polarization on the whole space.
Subspace BilinearRadical(const Form& form);
// Singular points of the bilinear radical; a subspace in all cases.
Subspace SingularRadical(const Form& form);

}  // namespace polarblock

#endif  // POLARBLOCK_FORM_HPP_
