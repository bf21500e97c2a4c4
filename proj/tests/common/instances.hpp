#pragma once

// Seeded random separation problems: H = <P D_j P^-1> with diagonal D_j,
// h outside H (checked by the exact membership test).

#include <random>
#include <string>
#include <vector>

#include "sepcert/nfield/matrix.hpp"
#include "sepcert/separator/separate.hpp"

namespace instances {

using sepcert::exact::Integer;
using sepcert::exact::Rational;
using sepcert::nfield::FieldElement;
using sepcert::nfield::FieldPtr;
using sepcert::nfield::GroupDescription;
using sepcert::nfield::Matrix;

struct Instance {
  std::string name;
  GroupDescription gamma, H;
  Matrix h;
};

inline FieldPtr field_by_name(const std::string& name) {
  if (name == "sqrt2") return sepcert::nfield::NumberField::create({-2, 0, 1});
  if (name == "i") return sepcert::nfield::NumberField::create({1, 0, 1});
  return sepcert::nfield::NumberField::rationals();
}

inline Rational height(const FieldElement& x) {
  Integer h = 0;
  for (const auto& c : x.coords()) {
    h = std::max(h, Integer(abs(c.get_num())));
    h = std::max(h, c.get_den());
  }
  return Rational(h);
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  FieldElement element(const FieldPtr& f, long range) {
    static const long dens[] = {1, 2, 3, 5};
    while (true) {
      std::vector<Rational> c(f->degree());
      const long den = dens[uniform(0, 3)];
      for (auto& x : c) x = sepcert::exact::make_rational(uniform(-range, range), den);
      FieldElement e(f, c);
      if (!e.is_zero()) return e;
    }
  }

  /// Integer matrix with determinant +-1 built from elementary moves.
  Matrix unimodular(std::size_t n, const FieldPtr& f) {
    Matrix p = Matrix::identity(n).with_field(f);
    for (int k = 0; k < 2; ++k) {
      const std::size_t i = uniform(0, n - 1), j = uniform(0, n - 1);
      if (i == j) continue;
      Matrix e = Matrix::identity(n).with_field(f);
      e(i, j) = FieldElement(uniform(-2, 2)).with_field(f);
      p = p * e;
    }
    return p;
  }

  Matrix diag(std::size_t n, const FieldPtr& f, long range) {
    std::vector<FieldElement> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(element(f, range));
    return Matrix::diagonal(d).with_field(f);
  }

  bool small(const Matrix& m) {
    for (const auto& e : m.entries())
      if (height(e) > 50) return false;
    return true;
  }

  /// Conjugate-diagonal instance; h commutes with H unless `borel` is set.
  Instance make(const std::string& field_name, std::size_t n, bool borel) {
    const FieldPtr f = field_by_name(field_name);
    for (int attempt = 0;; ++attempt) {
      const Matrix P = unimodular(n, f), Pinv = P.inverse();
      Instance in;
      in.name = field_name + "/GL" + std::to_string(n) + (borel ? "/borel" : "");
      in.gamma.field = in.H.field = f;
      in.gamma.n = in.H.n = n;
      const long k = uniform(1, 2);
      bool ok = true;
      for (long j = 0; j < k; ++j) {
        Matrix g = P * diag(n, f, 4) * Pinv;
        ok = ok && small(g);
        in.H.generators.push_back({"s" + std::to_string(j), g});
        in.gamma.generators.push_back({"s" + std::to_string(j), g});
      }
      if (borel) {
        Matrix u = Matrix::identity(n).with_field(f);
        u(n - 1, 0) = FieldElement(uniform(1, 6)).with_field(f);
        in.h = u * in.H.generators[0].matrix;
      } else {
        in.h = P * diag(n, f, 4) * Pinv;
      }
      ok = ok && small(in.h);
      in.gamma.generators.push_back({"x", in.h});
      if (!ok) continue;
      try {
        if (sepcert::separator::in_abelian_subgroup(in.H, in.h)) continue;
      } catch (const sepcert::Error&) {
        continue;
      }
      return in;
    }
  }

 private:
  std::mt19937_64 rng_;
};

/// The criterion 2 suite: 24 instances over Q, Q(sqrt 2), Q(i), n = 2, 3.
inline std::vector<Instance> separation_suite(std::uint64_t seed = 20240601) {
  Generator g(seed);
  std::vector<Instance> out;
  for (const char* f : {"Q", "sqrt2", "i"})
    for (std::size_t n : {2u, 3u})
      for (int k = 0; k < 4; ++k) out.push_back(g.make(f, n, k == 3));
  return out;
}

}  // namespace instances
