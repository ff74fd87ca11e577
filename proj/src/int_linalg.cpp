#include "skelat/int_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skelat {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw std::overflow_error(std::string("integer overflow in ") + op);
}

// |x| as unsigned, safe for INT64_MIN.
std::uint64_t abs_u(Int x) {
  return x < 0 ? ~static_cast<std::uint64_t>(x) + 1u : static_cast<std::uint64_t>(x);
}

// Floor division for positive divisor.
Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b < 0) --q;
  return q;
}

// dst -= q * src, elementwise, checked.
void row_submul(IntVec& dst, const IntVec& src, Int q) {
  for (std::size_t k = 0; k < dst.size(); ++k)
    dst[k] = checked_sub(dst[k], checked_mul(q, src[k]));
}

void row_negate(IntVec& row) {
  for (Int& x : row) x = checked_neg(x);
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

Int checked_neg(Int a) {
  return checked_sub(0, a);
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vec_add: dimension mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vec_sub: dimension mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

IntVec vec_scale(Int c, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
  return r;
}

IntVec vec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_neg(a[i]);
  return r;
}

bool is_zero_vec(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  require_rectangular(a, "mat_mul");
  require_rectangular(b, "mat_mul");
  if (a[0].size() != b.size())
    throw std::invalid_argument("mat_mul: shape mismatch");
  IntMat r(a.size(), IntVec(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        r[i][j] = checked_add(r[i][j], checked_mul(a[i][k], b[k][j]));
    }
  return r;
}

IntVec mat_apply(const IntMat& a, const IntVec& v) {
  require_rectangular(a, "mat_apply");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

IntMat transpose(const IntMat& a) {
  require_rectangular(a, "transpose");
  IntMat r(a[0].size(), IntVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

void require_rectangular(const IntMat& a, const char* who) {
  if (a.empty())
    throw std::invalid_argument(std::string(who) + ": empty matrix");
  for (const IntVec& row : a)
    if (row.size() != a[0].size())
      throw std::invalid_argument(std::string(who) + ": ragged matrix");
  if (a[0].empty())
    throw std::invalid_argument(std::string(who) + ": zero-width matrix");
}

Int determinant(IntMat a) {
  require_rectangular(a, "determinant");
  const std::size_t n = a.size();
  if (a[0].size() != n)
    throw std::invalid_argument("determinant: matrix not square");
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: the division by the previous pivot is exact.
        const Int num = checked_sub(checked_mul(a[i][j], a[k][k]),
                                    checked_mul(a[i][k], a[k][j]));
        a[i][j] = num / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return checked_mul(sign, a[n - 1][n - 1]);
}

std::size_t matrix_rank(const IntMat& a) {
  return hnf(a).rank;
}

IntVec primitive(const IntVec& v) {
  if (is_zero_vec(v))
    throw std::invalid_argument("primitive: zero vector");
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

HermiteForm hnf(const IntMat& a) {
  require_rectangular(a, "hnf");
  const std::size_t r = a.size();
  const std::size_t c = a[0].size();
  IntMat h = a;
  IntMat u = identity_matrix(r);
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    // Gcd elimination below the pivot: repeatedly reduce against the
    // minimum-magnitude entry until only one nonzero remains.
    while (true) {
      std::size_t best = r;
      for (std::size_t i = row; i < r; ++i)
        if (h[i][col] != 0 && (best == r || abs_u(h[i][col]) < abs_u(h[best][col])))
          best = i;
      if (best == r) break;
      if (best != row) {
        std::swap(h[best], h[row]);
        std::swap(u[best], u[row]);
      }
      bool cleared = true;
      for (std::size_t i = row + 1; i < r; ++i) {
        if (h[i][col] == 0) continue;
        const Int q = h[i][col] / h[row][col];
        if (q != 0) {
          row_submul(h[i], h[row], q);
          row_submul(u[i], u[row], q);
        }
        if (h[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h[row][col] == 0) continue;
    if (h[row][col] < 0) {
      row_negate(h[row]);
      row_negate(u[row]);
    }
    const Int p = h[row][col];
    for (std::size_t i = 0; i < row; ++i) {
      const Int q = floor_div(h[i][col], p);
      if (q != 0) {
        row_submul(h[i], h[row], q);
        row_submul(u[i], u[row], q);
      }
    }
    ++row;
  }
  HermiteForm out;
  out.h = std::move(h);
  out.u = std::move(u);
  out.rank = row;
  return out;
}

SmithForm snf(const IntMat& a) {
  require_rectangular(a, "snf");
  const std::size_t r = a.size();
  const std::size_t c = a[0].size();
  IntMat d = a;
  IntMat u = identity_matrix(r);
  IntMat v = identity_matrix(c);

  auto col_submul = [&](IntMat& m, std::size_t jdst, std::size_t jsrc, Int q) {
    for (std::size_t i = 0; i < m.size(); ++i)
      m[i][jdst] = checked_sub(m[i][jdst], checked_mul(q, m[i][jsrc]));
  };
  auto col_swap = [&](IntMat& m, std::size_t j1, std::size_t j2) {
    for (std::size_t i = 0; i < m.size(); ++i) std::swap(m[i][j1], m[i][j2]);
  };

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    bool submatrix_zero = false;
    while (true) {
      // Move the minimum-magnitude nonzero entry of the trailing block
      // to position (t, t).
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (d[i][j] != 0 && (pi == r || abs_u(d[i][j]) < abs_u(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == r) {
        submatrix_zero = true;
        break;
      }
      if (pi != t) {
        std::swap(d[pi], d[t]);
        std::swap(u[pi], u[t]);
      }
      if (pj != t) {
        col_swap(d, pj, t);
        col_swap(v, pj, t);
      }
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d[i][t] == 0) continue;
        const Int q = d[i][t] / d[t][t];
        if (q != 0) {
          row_submul(d[i], d[t], q);
          row_submul(u[i], u[t], q);
        }
        if (d[i][t] != 0) dirty = true;
      }
      if (dirty) continue;
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d[t][j] == 0) continue;
        const Int q = d[t][j] / d[t][t];
        if (q != 0) {
          col_submul(d, j, t, q);
          col_submul(v, j, t, q);
        }
        if (d[t][j] != 0) dirty = true;
      }
      if (dirty) continue;
      // Divisibility: the pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (d[i][j] % d[t][t] != 0) {
            // Fold the offending row into row t and restart the reduction;
            // the pivot magnitude strictly shrinks.
            for (std::size_t k = 0; k < c; ++k)
              d[t][k] = checked_add(d[t][k], d[i][k]);
            for (std::size_t k = 0; k < r; ++k)
              u[t][k] = checked_add(u[t][k], u[i][k]);
            divides = false;
          }
      if (divides) break;
    }
    if (submatrix_zero) break;
    if (d[t][t] < 0) {
      row_negate(d[t]);
      row_negate(u[t]);
    }
  }
  SmithForm out;
  out.d = std::move(d);
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

Sublattice Sublattice::full(std::size_t n) {
  Sublattice s;
  s.ambient_dim = n;
  s.basis = identity_matrix(n);
  return s;
}

Sublattice Sublattice::zero(std::size_t n) {
  Sublattice s;
  s.ambient_dim = n;
  return s;
}

Sublattice lattice_from_generators(const std::vector<IntVec>& gens,
                                   std::size_t ambient_dim) {
  for (const IntVec& g : gens)
    if (g.size() != ambient_dim)
      throw std::invalid_argument("lattice_from_generators: dimension mismatch");
  Sublattice s;
  s.ambient_dim = ambient_dim;
  if (gens.empty() || ambient_dim == 0) return s;
  bool all_zero = true;
  for (const IntVec& g : gens)
    if (!is_zero_vec(g)) all_zero = false;
  if (all_zero) return s;
  const HermiteForm hf = hnf(gens);
  s.basis.assign(hf.h.begin(), hf.h.begin() + static_cast<std::ptrdiff_t>(hf.rank));
  return s;
}

std::optional<Int> lattice_index(const Sublattice& sub) {
  if (sub.rank() != sub.ambient_dim) return std::nullopt;
  Int p = 1;
  for (std::size_t i = 0; i < sub.basis.size(); ++i)
    p = checked_mul(p, sub.basis[i][i]);
  return p;
}

std::optional<IntVec> lattice_membership(const Sublattice& sub, const IntVec& v) {
  if (v.size() != sub.ambient_dim)
    throw std::invalid_argument("lattice_membership: dimension mismatch");
  IntVec coeff(sub.rank(), 0);
  IntVec w = v;
  // Back-substitution against the echelon basis.
  for (std::size_t i = 0; i < sub.basis.size(); ++i) {
    std::size_t piv = 0;
    while (piv < sub.ambient_dim && sub.basis[i][piv] == 0) ++piv;
    const Int p = sub.basis[i][piv];
    if (w[piv] % p != 0) return std::nullopt;
    const Int q = w[piv] / p;
    coeff[i] = q;
    if (q != 0) row_submul(w, sub.basis[i], q);
  }
  if (!is_zero_vec(w)) return std::nullopt;
  return coeff;
}

bool lattice_contains(const Sublattice& outer, const Sublattice& inner) {
  if (outer.ambient_dim != inner.ambient_dim)
    throw std::invalid_argument("lattice_contains: ambient dimension mismatch");
  for (const IntVec& row : inner.basis)
    if (!lattice_membership(outer, row)) return false;
  return true;
}

AbelianInvariants quotient_invariants(const Sublattice& sub) {
  return quotient_by_generators(sub.basis, sub.ambient_dim);
}

AbelianInvariants quotient_by_generators(const std::vector<IntVec>& gens,
                                         std::size_t ambient_dim) {
  for (const IntVec& row : gens)
    if (row.size() != ambient_dim)
      throw std::invalid_argument("quotient_by_generators: dimension mismatch");
  AbelianInvariants g;
  if (gens.empty()) {
    g.free_rank = ambient_dim;
    return g;
  }
  const SmithForm sf = snf(gens);
  const std::size_t m = std::min(sf.d.size(), sf.d[0].size());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Int di = sf.d[i][i];
    if (di == 0) continue;
    ++nonzero;
    if (di > 1) g.torsion.push_back(di);
  }
  g.free_rank = ambient_dim - nonzero;
  return g;
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += ')';
  return s;
}

std::string to_string(const AbelianInvariants& g) {
  std::string s;
  if (g.free_rank > 0) s += "Z^" + std::to_string(g.free_rank) + "+";
  s += '[';
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(g.torsion[i]);
  }
  s += ']';
  return s;
}

}  // namespace skelat
