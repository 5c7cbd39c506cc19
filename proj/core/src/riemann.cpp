#include "liegeo/riemann.hpp"

#include <cmath>

namespace liegeo {

Connection::Connection(int dim)
    : dim_(dim), gamma_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {}

Vector Connection::covariant(int i, const Vector& y) const {
  if (y.size() != dim_) throw input_error("covariant: dimension mismatch");
  Vector out = Vector::Zero(dim_);
  for (int j = 0; j < dim_; ++j) {
    if (y[j] == 0.0) continue;
    for (int l = 0; l < dim_; ++l) out[l] += y[j] * coeff(i, j, l);
  }
  return out;
}

Vector Connection::covariant(const Vector& x, const Vector& y) const {
  if (x.size() != dim_) throw input_error("covariant: dimension mismatch");
  Vector out = Vector::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    out += x[i] * covariant(i, y);
  }
  return out;
}

RiemannTensor::RiemannTensor(int dim)
    : dim_(dim),
      r_(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0) {}

Vector RiemannTensor::apply(const Vector& x, const Vector& y,
                            const Vector& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_) {
    throw input_error("RiemannTensor::apply: dimension mismatch");
  }
  Vector out = Vector::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      const double xy = x[i] * y[j];
      if (xy == 0.0) continue;
      for (int k = 0; k < dim_; ++k) {
        const double xyz = xy * z[k];
        if (xyz == 0.0) continue;
        for (int l = 0; l < dim_; ++l) out[l] += xyz * coeff(i, j, k, l);
      }
    }
  }
  return out;
}

namespace {

template <typename Solver>
Connection koszul_impl(const LieAlgebra& a, const Eigen::MatrixXd& gram,
                       Solver&& solve) {
  const int d = a.dim();
  Connection conn(d);
  Vector rhs(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        double s = 0.0;
        for (int m = 0; m < d; ++m) {
          s += a.structure_constant(i, j, m) * gram(m, k);
          s -= a.structure_constant(j, k, m) * gram(m, i);
          s += a.structure_constant(k, i, m) * gram(m, j);
        }
        rhs[k] = 0.5 * s;
      }
      const Vector x = solve(rhs);
      for (int k = 0; k < d; ++k) conn.coeff(i, j, k) = x[k];
    }
  }
  return conn;
}

}  // namespace

Connection levi_civita(const MetricAlgebra& m) {
  return koszul_impl(m.algebra(), m.gram(),
                     [&m](const Vector& rhs) { return m.solve(rhs); });
}

Connection koszul_connection(const LieAlgebra& a, const Eigen::MatrixXd& gram) {
  if (gram.rows() != a.dim() || gram.cols() != a.dim()) {
    throw input_error("koszul_connection: gram dimension mismatch");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw validation_error(
        "koszul_connection: inner product is not positive definite");
  }
  return koszul_impl(a, gram,
                     [&llt](const Vector& rhs) { return llt.solve(rhs); });
}

RiemannTensor curvature_tensor(const LieAlgebra& a, const Connection& c) {
  const int d = a.dim();
  if (c.dim() != d) throw input_error("curvature_tensor: dimension mismatch");
  RiemannTensor r(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          double s = 0.0;
          for (int m = 0; m < d; ++m) {
            s += c.coeff(j, k, m) * c.coeff(i, m, l);
            s -= c.coeff(i, k, m) * c.coeff(j, m, l);
            s -= a.structure_constant(i, j, m) * c.coeff(m, k, l);
          }
          r.coeff(i, j, k, l) = s;
        }
      }
    }
  }
  return r;
}

RiemannTensor riemann(const MetricAlgebra& m, const Connection& c) {
  return curvature_tensor(m.algebra(), c);
}

RicciTensor ricci(const MetricAlgebra& m, const RiemannTensor& r) {
  const int d = m.dim();
  const Eigen::MatrixXd& frame = m.orthonormal_frame();
  const Eigen::MatrixXd& gram = m.gram();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int a = 0; a < d; ++a) {
        // <R(e_i, f_a) f_a, e_j>
        double term = 0.0;
        for (int p = 0; p < d; ++p) {
          for (int q = 0; q < d; ++q) {
            const double fpq = frame(p, a) * frame(q, a);
            if (fpq == 0.0) continue;
            for (int l = 0; l < d; ++l) {
              term += fpq * r.coeff(i, p, q, l) * gram(l, j);
            }
          }
        }
        s += term;
      }
      ric(i, j) = s;
    }
  }
  return RicciTensor{std::move(ric)};
}

double scalar_curvature(const MetricAlgebra& m, const RicciTensor& ric) {
  const int d = m.dim();
  const Eigen::MatrixXd inv =
      m.gram().llt().solve(Eigen::MatrixXd::Identity(d, d));
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) s += inv(i, j) * ric.ric(i, j);
  }
  return s;
}

double sectional(const MetricAlgebra& m, const RiemannTensor& r,
                 const Vector& x, const Vector& y) {
  const double xx = m.inner(x, x);
  const double yy = m.inner(y, y);
  const double xy = m.inner(x, y);
  const double det = xx * yy - xy * xy;
  if (!(det > tol::plane_independence)) {
    throw input_error("sectional: plane vectors are linearly dependent");
  }
  const double num = m.inner(r.apply(x, y, y), x);
  return num / det;
}

EinsteinResult is_einstein(const MetricAlgebra& m, double tol) {
  const RicciTensor ric = ricci(m, riemann(m, levi_civita(m)));
  const Eigen::MatrixXd& gram = m.gram();
  const double gg = gram.cwiseProduct(gram).sum();
  const double rg = ric.ric.cwiseProduct(gram).sum();
  EinsteinResult out;
  out.constant = rg / gg;
  const int d = m.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double res = std::abs(ric.ric(i, j) - out.constant * gram(i, j));
      if (res > out.residual) {
        out.residual = res;
        out.witness_i = i;
        out.witness_j = j;
      }
    }
  }
  out.value = out.residual < tol;
  return out;
}

NaturallyReductiveResult is_naturally_reductive(const MetricAlgebra& m,
                                                double tol) {
  const int d = m.dim();
  const auto& a = m.algebra();
  NaturallyReductiveResult out;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const double res =
            std::abs(m.inner(a.bracket_basis(i, j), basis_vector(d, k)) +
                     m.inner(basis_vector(d, j), a.bracket_basis(i, k)));
        if (res > out.residual) {
          out.residual = res;
          out.witness = {i, j, k};
        }
      }
    }
  }
  out.value = out.residual < tol;
  return out;
}

}  // namespace liegeo
