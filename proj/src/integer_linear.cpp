#include "buffon/integer_linear.hpp"

#include "buffon/error.hpp"

namespace buffon {

namespace {

// (c_i, c_j) <- (s c_i + t c_j, u c_i + v c_j) with s v - t u = 1.
void combine(std::vector<mpz_class>& ci, std::vector<mpz_class>& cj, const mpz_class& s,
             const mpz_class& t, const mpz_class& u, const mpz_class& v) {
  mpz_class x, y;
  for (std::size_t r = 0; r < ci.size(); ++r) {
    if (sgn(ci[r]) == 0 && sgn(cj[r]) == 0) continue;
    x = s * ci[r] + t * cj[r];
    y = u * ci[r] + v * cj[r];
    ci[r].swap(x);
    cj[r].swap(y);
  }
}

}  // namespace

std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const std::vector<mpz_class>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw InvalidInput("solve_integer: dimension mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();

  // h holds A U, u holds U; column k of each is kept together.
  std::vector<std::vector<mpz_class>> h(n, std::vector<mpz_class>(m)), u(n, std::vector<mpz_class>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < m; ++r) h[j][r] = a[r][j];
    u[j][j] = 1;
  }

  std::vector<std::size_t> pivot_row;
  std::size_t c = 0;
  mpz_class g, s, t;
  for (std::size_t r = 0; r < m && c < n; ++r) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (sgn(h[j][r]) == 0) continue;
      if (sgn(h[c][r]) == 0) {
        std::swap(h[c], h[j]);
        std::swap(u[c], u[j]);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h[c][r].get_mpz_t(), h[j][r].get_mpz_t());
      mpz_class p = h[c][r] / g, q = h[j][r] / g;
      // s p + t q = 1, so [[s, t], [-q, p]] is unimodular.
      mpz_class mq = -q;
      combine(h[c], h[j], s, t, mq, p);
      combine(u[c], u[j], s, t, mq, p);
    }
    if (sgn(h[c][r]) != 0) {
      pivot_row.push_back(r);
      ++c;
    }
  }

  std::vector<mpz_class> y(n), residual = b;
  for (std::size_t k = 0; k < pivot_row.size(); ++k) {
    const std::size_t r = pivot_row[k];
    if (!mpz_divisible_p(residual[r].get_mpz_t(), h[k][r].get_mpz_t())) return std::nullopt;
    y[k] = residual[r] / h[k][r];
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(h[k][i]) != 0) residual[i] -= h[k][i] * y[k];
  }
  for (const auto& v : residual)
    if (sgn(v) != 0) return std::nullopt;

  IntegerSolution out;
  out.x.assign(n, 0);
  for (std::size_t k = 0; k < pivot_row.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(u[k][i]) != 0) out.x[i] += u[k][i] * y[k];
  for (std::size_t k = pivot_row.size(); k < n; ++k) out.kernel.push_back(u[k]);
  return out;
}

}  // namespace buffon
