#include "hyperrank/seqtools.hpp"

#include <algorithm>
#include <cmath>

#include "hyperrank/errors.hpp"

namespace hyperrank {

BigInt Recurrence::residual(std::span<const BigInt> terms, int n) const {
  if (n < order() || n >= static_cast<int>(terms.size())) throw InputError("recurrence index out of range");
  BigInt s = 0;
  for (int i = 0; i <= order(); ++i) s += coeffs[i] * terms[n - i];
  return s - constant;
}

int certification_bound(const Recurrence& rec, int P, int Q) {
  return std::max(P + rec.order() + 1, Q + rec.start);
}

bool certify_recurrence(std::span<const BigInt> terms, const Recurrence& rec, int P, int Q) {
  if (rec.coeffs.empty() || rec.coeffs[0] == 0) throw InputError("leading recurrence coefficient must be nonzero");
  if (rec.start < rec.order()) throw InputError("recurrence start must be at least its order");
  if (P < 0 || Q < 0) throw InputError("degree bounds must be nonnegative");
  int last = certification_bound(rec, P, Q);
  if (static_cast<int>(terms.size()) <= last)
    throw InputError("certification needs terms through index " + std::to_string(last) + ", got " +
                     std::to_string(terms.size()));
  for (int n = rec.start; n <= last; ++n)
    if (!rec.holds_at(terms, n)) return false;
  return true;
}

std::vector<BigInt> expand_series(const RationalSeries& gf, int m) {
  const auto& den = gf.denominator;
  if (den.empty() || (den[0] != 1 && den[0] != -1))
    throw DomainError("series expansion needs denominator constant term +-1");
  std::vector<BigInt> out(static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    BigInt s = n < static_cast<int>(gf.numerator.size()) ? gf.numerator[n] : BigInt(0);
    for (int i = 1; i < static_cast<int>(den.size()) && i <= n; ++i) s -= den[i] * out[n - i];
    out[n] = den[0] == 1 ? s : BigInt(-s);
  }
  return out;
}

namespace {

// Fraction-free row reduction; returns a basis of the integer nullspace of `rows`
// (each vector primitive), one vector per free column.
std::vector<std::vector<BigInt>> integer_nullspace(std::vector<std::vector<BigInt>> rows, int cols) {
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[r]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      BigInt f = rows[i][c], g = rows[r][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * g - rows[r][j] * f;
      BigInt h = 0;
      for (int j = 0; j < cols; ++j) h = gcd(h, rows[i][j]);
      if (h > 1)
        for (int j = 0; j < cols; ++j) rows[i][j] /= h;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<BigInt>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    // x_free = L, x_pivot(i) = −rows[i][free]·L / rows[i][pivot(i)], other free vars 0.
    BigInt l = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) l = lcm(l, rows[i][pivot_col[i]]);
    std::vector<BigInt> v(cols, BigInt(0));
    v[free] = l;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -rows[i][free] * l / rows[i][pivot_col[i]];
    BigInt h = 0;
    for (auto& x : v) h = gcd(h, x);
    for (auto& x : v) x /= h;
    basis.push_back(std::move(v));
  }
  return basis;
}

BigInt max_abs(const std::vector<BigInt>& v) {
  BigInt m = 0;
  for (auto& x : v) m = std::max(m, BigInt(abs(x)));
  return m;
}

}  // namespace

std::optional<Recurrence> guess_recurrence(std::span<const BigInt> terms, int max_order) {
  const int len = static_cast<int>(terms.size());
  for (int k = 1; k <= max_order; ++k) {
    for (bool with_constant : {false, true}) {
      int cols = k + 1 + (with_constant ? 1 : 0);
      int eqs = len - k;
      // Demand more equations than unknowns so that a fit is evidence, not interpolation.
      if (eqs < cols + 2) continue;
      std::vector<std::vector<BigInt>> rows;
      for (int n = k; n < len; ++n) {
        std::vector<BigInt> row;
        for (int i = 0; i <= k; ++i) row.push_back(terms[n - i]);
        if (with_constant) row.push_back(BigInt(-1));
        rows.push_back(std::move(row));
      }
      auto basis = integer_nullspace(std::move(rows), cols);
      std::erase_if(basis, [](const auto& v) { return v[0] == 0; });
      if (basis.empty()) continue;
      if (with_constant)
        std::erase_if(basis, [&](const auto& v) { return v.back() == 0; });
      if (basis.empty()) continue;
      for (auto& v : basis)
        if (v[0] < 0)
          for (auto& x : v) x = -x;
      std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
        BigInt ma = max_abs(a), mb = max_abs(b);
        if (ma != mb) return ma < mb;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      });
      const auto& v = basis.front();
      Recurrence rec;
      rec.coeffs.assign(v.begin(), v.begin() + k + 1);
      rec.constant = with_constant ? v.back() : BigInt(0);
      rec.start = k;
      for (int n = k; n < len; ++n)
        if (!rec.holds_at(terms, n)) throw InternalError("guessed recurrence does not fit");
      return rec;
    }
  }
  return std::nullopt;
}

double dominant_root(std::span<const BigInt> coeffs, double tol) {
  std::vector<double> c;
  for (auto& x : coeffs) c.push_back(x.get_d());
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.size() < 2) throw NumericError("polynomial has no roots");
  auto eval = [&](double z) {
    double s = 0;
    for (std::size_t i = c.size(); i-- > 0;) s = s * z + c[i];
    return s;
  };
  double bound = 1;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, 1 + std::abs(c[i] / c.back()));
  // Scan down from the Cauchy bound for the first sign change.
  const int steps = 1 << 16;
  double hi = bound, fhi = eval(hi);
  for (int i = 1; i <= steps; ++i) {
    double lo = bound - (bound - 1) * i / steps;
    double flo = eval(lo);
    if ((flo <= 0) != (fhi <= 0) || flo == 0) {
      if (flo == 0) return lo;
      while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fm = eval(mid);
        if ((fm <= 0) == (flo <= 0)) lo = mid, flo = fm;
        else hi = mid;
      }
      return 0.5 * (lo + hi);
    }
    hi = lo;
    fhi = flo;
  }
  throw NumericError("no real root above 1 found");
}

std::vector<BigInt> poly_mul(std::span<const BigInt> a, std::span<const BigInt> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

bool poly_divides(std::span<const BigInt> b, std::span<const BigInt> a) {
  std::vector<BigRational> rem(a.begin(), a.end());
  std::vector<BigInt> divisor(b.begin(), b.end());
  while (!divisor.empty() && divisor.back() == 0) divisor.pop_back();
  if (divisor.empty()) throw DomainError("division by the zero polynomial");
  auto trim = [&] {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  };
  trim();
  while (rem.size() >= divisor.size()) {
    BigRational f = rem.back() / BigRational(divisor.back());
    std::size_t shift = rem.size() - divisor.size();
    for (std::size_t i = 0; i < divisor.size(); ++i) rem[shift + i] -= f * divisor[i];
    trim();
  }
  return rem.empty();
}

std::vector<BigInt> to_bigints(std::span<const long long> v) {
  std::vector<BigInt> out;
  for (auto x : v) out.push_back(big_from_i64(x));
  return out;
}

std::string recurrence_to_string(const Recurrence& r) {
  std::string s;
  for (int i = 0; i <= r.order(); ++i) {
    if (i) s += " + ";
    s += "(" + r.coeffs[i].get_str() + ")f[n-" + std::to_string(i) + "]";
  }
  return s + " = " + r.constant.get_str() + " for n >= " + std::to_string(r.start);
}

}  // namespace hyperrank
