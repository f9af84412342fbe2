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

#include "polarblock/form.hpp"

#include "polarblock/error.hpp"

namespace polarblock {

std::string ToString(FormKind kind) {
  switch (kind) {
    case FormKind::kParabolic: return "parabolic";
    case FormKind::kElliptic: return "elliptic";
    case FormKind::kHyperbolic: return "hyperbolic";
    case FormKind::kHermitian: return "hermitian";
  }
  return "unknown";
}

Elem AbsoluteTrace(const Field& f, Elem a) {
  Elem t = 0;
  Elem x = a;
  for (int i = 0; i < f.h(); ++i) {
    t = f.add(t, x);
    x = f.pow(x, static_cast<std::uint64_t>(f.p()));
  }
  return t;
}

Elem EllipticConstant(const Field& f) {
  for (int a = 1; a < f.q(); ++a) {
    const auto e = static_cast<Elem>(a);
    if (f.p() == 2) {
      if (AbsoluteTrace(f, e) == 1) return e;
    } else if (!f.is_square(e)) {
      return e;
    }
  }
  Fail(ErrorCode::kUnsupported, "no elliptic constant in GF(" + std::to_string(f.q()) + ")");
}

Form Form::Standard(FormKind kind, int ambient_dim, FieldPtr field) {
  Require(field != nullptr, "null field");
  Require(ambient_dim >= 0, "negative ambient dimension");
  const Field& f = *field;
  const int len = ambient_dim + 1;
  std::vector<Elem> m(static_cast<std::size_t>(len) * len, 0);
  auto at = [&](int i, int j) -> Elem& { return m[static_cast<std::size_t>(i) * len + j]; };

  switch (kind) {
    case FormKind::kParabolic:
      Require(ambient_dim % 2 == 0, "parabolic quadric needs even ambient dimension");
      at(0, 0) = 1;
      for (int i = 1; i + 1 < len; i += 2) at(i, i + 1) = 1;
      break;
    case FormKind::kElliptic: {
      Require(ambient_dim % 2 == 1, "elliptic quadric needs odd ambient dimension");
      const Elem c = EllipticConstant(f);
      at(0, 0) = 1;
      if (f.p() == 2) {
        at(0, 1) = 1;
        at(1, 1) = c;
      } else {
        at(1, 1) = f.neg(c);
      }
      // g(x, 1) must have no root in GF(q).
      for (int x = 0; x < f.q(); ++x) {
        const auto ex = static_cast<Elem>(x);
        const Elem val = f.add(f.add(f.mul(ex, ex), f.mul(at(0, 1), ex)), at(1, 1));
        Require(val != 0, "elliptic g is reducible", ErrorCode::kUnsupported);
      }
      for (int i = 2; i + 1 < len; i += 2) at(i, i + 1) = 1;
      break;
    }
    case FormKind::kHyperbolic:
      Require(ambient_dim % 2 == 1, "hyperbolic quadric needs odd ambient dimension");
      for (int i = 0; i + 1 < len; i += 2) at(i, i + 1) = 1;
      break;
    case FormKind::kHermitian:
      Require(f.has_conjugation(), "hermitian form needs a field of square order");
      for (int i = 0; i < len; ++i) at(i, i) = 1;
      break;
  }
  return FromMatrix(kind, std::move(field), ambient_dim, std::move(m));
}

Form Form::FromMatrix(FormKind kind, FieldPtr field, int ambient_dim, std::vector<Elem> matrix) {
  Require(field != nullptr, "null field");
  const int len = ambient_dim + 1;
  Require(static_cast<int>(matrix.size()) == len * len, "form matrix size mismatch");
  if (kind == FormKind::kHermitian) Require(field->has_conjugation(), "hermitian form needs a field of square order");
  Form form;
  form.kind_ = kind;
  form.n_ = ambient_dim;
  form.field_ = std::move(field);
  form.matrix_ = std::move(matrix);
  return form;
}

void Form::CheckLength(std::span<const Elem> v) const {
  Require(static_cast<int>(v.size()) == length(), "vector length mismatch: expected " + std::to_string(length()) +
                                                      ", got " + std::to_string(v.size()));
}

Elem Form::Eval(std::span<const Elem> v) const {
  CheckLength(v);
  if (kind_ == FormKind::kHermitian) return Polarize(v, v);
  const Field& f = *field_;
  Elem acc = 0;
  for (int i = 0; i < length(); ++i) {
    if (v[i] == 0) continue;
    for (int j = i; j < length(); ++j) {
      const Elem a = coeff(i, j);
      if (a == 0 || v[j] == 0) continue;
      acc = f.add(acc, f.mul(a, f.mul(v[i], v[j])));
    }
  }
  return acc;
}

Elem Form::Polarize(std::span<const Elem> u, std::span<const Elem> v) const {
  CheckLength(u);
  CheckLength(v);
  const Field& f = *field_;
  Elem acc = 0;
  if (kind_ == FormKind::kHermitian) {
    for (int i = 0; i < length(); ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < length(); ++j) {
        const Elem g = coeff(i, j);
        if (g == 0 || v[j] == 0) continue;
        acc = f.add(acc, f.mul(f.mul(u[i], g), f.conjugate(v[j])));
      }
    }
    return acc;
  }
  // B(u,v) = sum_{i<=j} a_ij (u_i v_j + u_j v_i).
  for (int i = 0; i < length(); ++i) {
    for (int j = i; j < length(); ++j) {
      const Elem a = coeff(i, j);
      if (a == 0) continue;
      const Elem t = f.add(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
      acc = f.add(acc, f.mul(a, t));
    }
  }
  return acc;
}

std::array<Elem, 3> Form::elliptic_g() const {
  if (kind_ != FormKind::kElliptic) return {0, 0, 0};
  return {coeff(0, 0), coeff(0, 1), coeff(1, 1)};
}

namespace {

// Linear functional y -> B(a, y) as a coefficient row.
Vec PolarFunctional(const Form& form, std::span<const Elem> a) {
  const Field& f = form.field();
  const int len = form.length();
  Vec c(len, 0);
  if (form.kind() == FormKind::kHermitian) {
    // H(a,y) = 0  <=>  sum_j (sum_i conj(a_i) conj(G_ij)) y_j = 0.
    for (int j = 0; j < len; ++j) {
      Elem acc = 0;
      for (int i = 0; i < len; ++i) {
        if (a[i] == 0 || form.coeff(i, j) == 0) continue;
        acc = f.add(acc, f.mul(f.conjugate(a[i]), f.conjugate(form.coeff(i, j))));
      }
      c[j] = acc;
    }
    return c;
  }
  for (int j = 0; j < len; ++j) {
    Elem acc = 0;
    for (int i = 0; i < len; ++i) {
      if (a[i] == 0) continue;
      Elem m = 0;
      if (i <= j) m = f.add(m, form.coeff(i, j));
      if (j <= i) m = f.add(m, form.coeff(j, i));
      acc = f.add(acc, f.mul(a[i], m));
    }
    c[j] = acc;
  }
  return c;
}

Subspace PerpOfRows(const Form& form, std::span<const Vec> rows) {
  std::vector<Vec> fns;
  fns.reserve(rows.size());
  for (const auto& r : rows) fns.push_back(PolarFunctional(form, r));
  return Annihilator(form.field(), Canonicalize(form.field(), fns, form.length()));
}

}  // namespace

Subspace PolarPerp(const Form& form, const Subspace& s) {
  Require(s.length() == form.length(), "ambient mismatch in perp");
  const auto rows = s.rows();
  return PerpOfRows(form, rows);
}

Subspace Perp(const Form& form, const Subspace& s) {
  Require(s.length() == form.length(), "ambient mismatch in perp");
  if (!form.is_even_parabolic()) return PolarPerp(form, s);
  if (IsTotallySingular(form, s)) {
    Require(!s.empty(), "perp of the empty subspace needs a singular point");
    return PolarPerp(form, s);
  }
  // The tangent hyperplane at a singular X is ker B(X, .), so the
  // intersection over X is the polar perp of the span of the singular points.
  std::vector<Vec> singular;
  for (auto& pt : PointsOf(form.field(), s))
    if (form.IsSingular(pt)) singular.push_back(std::move(pt));
  Require(!singular.empty(), "perp in even-characteristic parabolic space needs a singular point");
  return PerpOfRows(form, singular);
}

bool IsTotallySingular(const Form& form, const Subspace& s) {
  Require(s.length() == form.length(), "ambient mismatch");
  for (int i = 0; i < s.rank(); ++i) {
    if (!form.IsSingular(s.row(i))) return false;
    for (int j = i + 1; j < s.rank(); ++j)
      if (form.Polarize(s.row(i), s.row(j)) != 0) return false;
  }
  return true;
}

Form RestrictForm(const Form& form, const Subspace& s, FormKind kind) {
  Require(s.length() == form.length(), "ambient mismatch");
  Require(s.rank() >= 1, "cannot restrict to the empty subspace");
  const int k = s.rank();
  std::vector<Elem> m(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Elem v = 0;
      if (form.kind() == FormKind::kHermitian) {
        v = form.Polarize(s.row(i), s.row(j));
      } else if (i == j) {
        v = form.Eval(s.row(i));
      } else if (i < j) {
        v = form.Polarize(s.row(i), s.row(j));
      }
      m[static_cast<std::size_t>(i) * k + j] = v;
    }
  }
  return Form::FromMatrix(kind, form.field_ptr(), k - 1, std::move(m));
}

Subspace BilinearRadical(const Form& form) {
  std::vector<Vec> basis;
  for (int i = 0; i < form.length(); ++i) {
    Vec e(form.length(), 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return PerpOfRows(form, basis);
}

Subspace SingularRadical(const Form& form) {
  const Subspace rad = BilinearRadical(form);
  const Field& f = form.field();
  if (!form.is_quadratic() || f.p() != 2 || rad.empty()) return rad;
  // On the radical Q is additive with Q(lx) = l^2 Q(x); its zero set is the
  // kernel of l -> sum l_i sqrt(Q(r_i)).
  Vec fn(rad.rank());
  for (int i = 0; i < rad.rank(); ++i) fn[i] = f.sqrt_char2(form.Eval(rad.row(i)));
  const Vec fns[] = {fn};
  const Subspace ker = Annihilator(f, Canonicalize(f, fns, rad.rank()));
  std::vector<Vec> rows;
  for (int i = 0; i < ker.rank(); ++i) rows.push_back(FromCoordinates(f, rad, ker.row(i)));
  return Canonicalize(f, rows, form.length());
}

}  // namespace polarblock
