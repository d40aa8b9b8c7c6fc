#include "hyperflex/ternary.hpp"

#include <random>

namespace hfx {

namespace {

// Build the 36x36 Macaulay matrix for three ternary cubics (degree-7 rows)
// and the index set of the structured minor.
template <class R>
void build_macaulay(const R& ring, const TForm<R>& f1, const TForm<R>& f2, const TForm<R>& f3,
                    std::vector<std::vector<typename R::Elem>>& M, std::vector<int>& minor_idx) {
  if (f1.d != 3 || f2.d != 3 || f3.d != 3)
    throw std::invalid_argument("macaulay: inputs must be ternary cubics");
  auto mons7 = ternary_monomials(7);
  auto mons3 = ternary_monomials(3);
  size_t n = mons7.size();  // 36
  M.assign(n, std::vector<typename R::Elem>(n, ring.zero()));
  minor_idx.clear();

  // column lookup
  auto col_of = [&](int i, int j) { return tform_index<R>(7, i, j); };

  for (size_t r = 0; r < n; ++r) {
    int i = mons7[r][0], j = mons7[r][1], k = mons7[r][2];
    const TForm<R>* f;
    int mi = i, mj = j, mk = k;  // multiplier exponents
    if (i >= 3) {
      f = &f1;
      mi -= 3;
    } else if (j >= 3) {
      f = &f2;
      mj -= 3;
    } else {
      f = &f3;
      mk -= 3;
    }
    (void)mk;
    for (size_t t = 0; t < mons3.size(); ++t) {
      if (ring.is_zero(f->c[t])) continue;
      int ci = mi + mons3[t][0], cj = mj + mons3[t][1];
      M[r][col_of(ci, cj)] = f->c[t];
    }
    int big = (i >= 3) + (j >= 3) + (k >= 3);
    if (big >= 2) minor_idx.push_back((int)r);
  }
}

template <class R>
std::vector<std::vector<typename R::Elem>> take_minor(
    const std::vector<std::vector<typename R::Elem>>& M, const std::vector<int>& idx) {
  std::vector<std::vector<typename R::Elem>> S(idx.size());
  for (size_t a = 0; a < idx.size(); ++a) {
    S[a].reserve(idx.size());
    for (size_t b = 0; b < idx.size(); ++b) S[a].push_back(M[idx[a]][idx[b]]);
  }
  return S;
}

std::array<std::array<long, 3>, 3> random_sl3(std::mt19937_64& rng) {
  while (true) {
    std::array<std::array<long, 3>, 3> A;
    for (auto& row : A)
      for (auto& v : row) v = (long)(rng() % 7) - 3;
    long det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
               A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
               A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    if (det == 1) return A;
  }
}

constexpr unsigned long long kMacaulaySeed = 0x6d61636175ULL;  // fixed, deterministic

}  // namespace

Int macaulay_cubics_direct(const TForm<ZRing>& f1, const TForm<ZRing>& f2, const TForm<ZRing>& f3,
                           bool& ok) {
  ZRing ring;
  std::vector<std::vector<Int>> M;
  std::vector<int> idx;
  build_macaulay(ring, f1, f2, f3, M, idx);
  Int dm = det_bareiss(ring, take_minor<ZRing>(M, idx));
  if (dm == 0) {
    ok = false;
    return Int(0);
  }
  ok = true;
  Int d = det_bareiss(ring, M);
  return exact_div(d, dm);
}

Int macaulay_resultant_ternary(const TForm<ZRing>& f1, const TForm<ZRing>& f2,
                               const TForm<ZRing>& f3) {
  bool ok = false;
  Int r = macaulay_cubics_direct(f1, f2, f3, ok);
  if (ok) return r;
  ZRing ring;
  std::mt19937_64 rng(kMacaulaySeed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto A = random_sl3(rng);
    // det(A) = 1, so Res(f∘A) = det(A)^{3·3·3} Res(f) = Res(f)
    auto g1 = tform_substitute_linear(ring, f1, A);
    auto g2 = tform_substitute_linear(ring, f2, A);
    auto g3 = tform_substitute_linear(ring, f3, A);
    r = macaulay_cubics_direct(g1, g2, g3, ok);
    if (ok) return r;
  }
  throw MacaulayDegenerate("macaulay: degenerate specialization (minor vanished in 16 frames)");
}

FqField::Elem macaulay_cubics_direct_fq(const FqField& K, const TForm<FqField>& f1,
                                        const TForm<FqField>& f2, const TForm<FqField>& f3,
                                        bool& ok) {
  std::vector<std::vector<FqField::Elem>> M;
  std::vector<int> idx;
  build_macaulay(K, f1, f2, f3, M, idx);
  auto dm = det_field(K, take_minor<FqField>(M, idx));
  if (K.is_zero(dm)) {
    ok = false;
    return K.zero();
  }
  ok = true;
  auto d = det_field(K, M);
  return K.mul(d, K.inv(dm));
}

FqField::Elem macaulay_resultant_ternary_fq(const FqField& K, const TForm<FqField>& f1,
                                            const TForm<FqField>& f2, const TForm<FqField>& f3) {
  bool ok = false;
  auto r = macaulay_cubics_direct_fq(K, f1, f2, f3, ok);
  if (ok) return r;
  std::mt19937_64 rng(kMacaulaySeed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto A = random_sl3(rng);
    auto g1 = tform_substitute_linear(K, f1, A);
    auto g2 = tform_substitute_linear(K, f2, A);
    auto g3 = tform_substitute_linear(K, f3, A);
    r = macaulay_cubics_direct_fq(K, g1, g2, g3, ok);
    if (ok) return r;
  }
  throw MacaulayDegenerate("macaulay: degenerate specialization (minor vanished in 16 frames)");
}

}  // namespace hfx
