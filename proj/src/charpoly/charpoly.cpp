#include "charpoly/charpoly.hpp"

#include <utility>

#include "common/error.hpp"

namespace f2s {

namespace {

void check_block_spec(const BlockSpec& s) {
  if (s.w == 0 || s.w > 64) fail(ErrorCode::InvalidArgument, "block spec: w must lie in [1, 64]");
  if (s.m == 0 || s.m >= s.n) fail(ErrorCode::InvalidArgument, "block spec: need 0 < m < n");
  if (s.r >= s.w) fail(ErrorCode::InvalidArgument, "block spec: need r < w");
  if (s.w < 64 && (s.a >> s.w)) fail(ErrorCode::InvalidArgument, "block spec: a wider than w bits");
}

void check_square(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) fail(ErrorCode::DimensionMismatch, "matrix is not square");
}

}  // namespace

ZPoly phi_A(std::uint64_t a, unsigned w) {
  std::vector<int> bits(w);
  for (unsigned i = 0; i < w; ++i) bits[i] = static_cast<int>((a >> i) & 1u);
  return phi_A(bits);
}

ZPoly phi_A(const std::vector<int>& a) {
  const std::size_t w = a.size();
  if (w == 0) fail(ErrorCode::InvalidArgument, "phi_A needs w >= 1");
  std::vector<BigInt> c(w + 1);
  c[w] = 1;
  for (std::size_t i = 0; i < w; ++i) c[w - i - 1] -= a[i];
  return ZPoly(std::move(c));
}

ZPoly tgfsr_charpoly(unsigned n, unsigned m, const ZPoly& phi_S) {
  if (m == 0 || m >= n) fail(ErrorCode::InvalidArgument, "need 0 < m < n");
  return compose(phi_S, ZPoly::binomial(n, m, -1));
}

ZPoly tgfsr_charpoly_plus(unsigned n, unsigned m, const ZPoly& phi_S) {
  if (m == 0 || m >= n) fail(ErrorCode::InvalidArgument, "need 0 < m < n");
  return compose(phi_S, ZPoly::binomial(n, m, +1));
}

ZPoly mt_charpoly(const BlockSpec& s) {
  check_block_spec(s);
  if (s.w - s.r < 1) fail(ErrorCode::InvalidArgument, "need w - r >= 1");
  const ZPoly p = ZPoly::binomial(s.n, s.m, -1);
  const ZPoly q = ZPoly::binomial(s.n - 1, s.m - 1, -1);
  auto a = [&](unsigned i) { return (s.a >> i) & 1u; };

  // Powers of q are reused for every term.
  std::vector<ZPoly> qpow(s.r + 1);
  qpow[0] = ZPoly::constant(1);
  for (unsigned e = 1; e <= s.r; ++e) qpow[e] = qpow[e - 1] * q;
  std::vector<ZPoly> ppow(s.w - s.r + 1);
  ppow[0] = ZPoly::constant(1);
  for (unsigned e = 1; e <= s.w - s.r; ++e) ppow[e] = ppow[e - 1] * p;

  const ZPoly& pwr = ppow[s.w - s.r];
  ZPoly inner = qpow[s.r];
  for (unsigned i = 0; i + 2 <= s.r; ++i)
    if (a(i)) inner -= qpow[s.r - 1 - i];
  ZPoly result = pwr * inner;
  for (unsigned i = s.r == 0 ? 0 : s.r - 1; i < s.w; ++i)
    if (a(i)) result -= ppow[s.w - i - 1];
  return result;
}

std::vector<unsigned> mt_expansion_exponents(const BlockSpec& s) {
  check_block_spec(s);
  std::vector<unsigned> out{s.r};
  for (unsigned i = 0; i + 2 <= s.r; ++i)
    if ((s.a >> i) & 1u) out.push_back(s.r - 1 - i);
  return out;
}

ZPoly brute_charpoly(const IntMatrix& M) {
  check_square(M);
  const std::size_t n = M.size();
  if (n > kOracleDimension) fail(ErrorCode::LimitExceeded, "exact characteristic polynomial limited to dimension 64");
  if (n == 0) return ZPoly::constant(1);

  std::vector<std::vector<std::pair<std::size_t, long long>>> sparse(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (M[i][j]) sparse[i].emplace_back(j, M[i][j]);

  using Mat = std::vector<std::vector<BigInt>>;
  auto times_M = [&](const Mat& X) {
    Mat out(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (auto [l, v] : sparse[i])
        for (std::size_t j = 0; j < n; ++j)
          if (!X[l][j].is_zero()) out[i][j] += v * X[l][j];
    return out;
  };

  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  Mat prod(n, std::vector<BigInt>(n));  // M * M_(k-1); zero for k = 1
  for (std::size_t k = 1; k <= n; ++k) {
    Mat Mk = std::move(prod);
    for (std::size_t i = 0; i < n; ++i) Mk[i][i] += c[n - k + 1];
    prod = times_M(Mk);
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += prod[i][i];
    if (tr % k != 0) fail(ErrorCode::Internal, "Faddeev-LeVerrier trace not divisible");
    c[n - k] = -tr / static_cast<long long>(k);
  }
  return ZPoly(std::move(c));
}

BigInt exact_det(const IntMatrix& M) {
  check_square(M);
  const std::size_t n = M.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = M[i][j];
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix companion_A(std::uint64_t a, unsigned w) {
  IntMatrix A(w, std::vector<long long>(w, 0));
  for (unsigned j = 0; j < w; ++j) {
    if (j + 1 < w) A[j][j + 1] = 1;
    A[j][0] += static_cast<long long>((a >> j) & 1u);
  }
  return A;
}

IntMatrix assemble_tgfsr_matrix(unsigned n, unsigned m, const IntMatrix& S) {
  check_square(S);
  const std::size_t w = S.size();
  if (m == 0 || m >= n) fail(ErrorCode::InvalidArgument, "need 0 < m < n");
  const std::size_t N = n * w;
  if (N > kOracleDimension) fail(ErrorCode::LimitExceeded, "assembled matrix exceeds oracle dimension 64");
  IntMatrix B(N, std::vector<long long>(N, 0));
  for (std::size_t j = 0; j + 1 < n; ++j)
    for (std::size_t b = 0; b < w; ++b) B[j * w + b][(j + 1) * w + b] = 1;
  for (std::size_t b = 0; b < w; ++b) {
    B[(n - 1) * w + b][m * w + b] += 1;
    for (std::size_t c = 0; c < w; ++c) B[(n - 1) * w + b][c] += S[b][c];
  }
  return B;
}

IntMatrix assemble_block_matrix(const BlockSpec& s) {
  check_block_spec(s);
  const unsigned w = s.w, r = s.r, n = s.n;
  const std::size_t N = static_cast<std::size_t>(n) * w - r;
  if (N > kOracleDimension) fail(ErrorCode::LimitExceeded, "assembled matrix exceeds oracle dimension 64");
  // Word 0 (oldest) keeps bits r..w-1; the others keep all w bits.
  auto idx = [&](unsigned word, unsigned bit) -> std::size_t {
    if (word == 0) return bit - r;
    return (w - r) + static_cast<std::size_t>(word - 1) * w + bit;
  };
  IntMatrix B(N, std::vector<long long>(N, 0));
  for (unsigned b = r; b < w; ++b) B[idx(0, b)][idx(1, b)] += 1;
  for (unsigned j = 1; j + 1 < n; ++j)
    for (unsigned b = 0; b < w; ++b) B[idx(j, b)][idx(j + 1, b)] += 1;
  // y = upper bits of the oldest word | lower r bits of its successor
  auto ysrc = [&](unsigned t) { return t >= r ? idx(0, t) : idx(1, t); };
  for (unsigned j = 0; j < w; ++j) {
    const std::size_t row = idx(n - 1, j);
    B[row][idx(s.m, j)] += 1;
    if (j + 1 < w) B[row][ysrc(j + 1)] += 1;
    if ((s.a >> j) & 1u) B[row][ysrc(0)] += 1;
  }
  return B;
}

}  // namespace f2s
