#include "hyperflex/e6.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace hfx::e6 {

Mat6 gram_matrix() {
  Mat6 g{};
  for (int i = 0; i < 6; ++i) g[i][i] = 2;
  static const int edges[5][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
  for (auto& e : edges) {
    g[e[0]][e[1]] = -1;
    g[e[1]][e[0]] = -1;
  }
  return g;
}

Mat6 mat_identity() {
  Mat6 m{};
  for (int i = 0; i < 6; ++i) m[i][i] = 1;
  return m;
}

Mat6 simple_reflection(int i) {
  if (i < 0 || i >= 6) throw std::out_of_range("simple_reflection: index");
  Mat6 g = gram_matrix();
  Mat6 m = mat_identity();
  for (int j = 0; j < 6; ++j) m[i][j] -= g[i][j];  // s_i(e_j) = e_j - G_ij e_i
  return m;
}

Mat6 mat_mul(const Mat6& a, const Mat6& b) {
  Mat6 r{};
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      int aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < 6; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

Vec6 mat_apply(const Mat6& m, const Vec6& v) {
  Vec6 r{};
  for (int i = 0; i < 6; ++i) {
    int s = 0;
    for (int j = 0; j < 6; ++j) s += m[i][j] * v[j];
    r[i] = s;
  }
  return r;
}

Int mat_det(const Mat6& m) {
  std::vector<std::vector<Int>> a(6, std::vector<Int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a[i][j] = Int(m[i][j]);
  return det_bareiss(ZRing{}, a);
}

ZPoly mat_charpoly(const Mat6& m) {
  // det(tI - M) by fraction-free elimination over Z[t]
  std::vector<std::vector<ZPoly>> a(6, std::vector<ZPoly>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      ZPoly e;
      if (m[i][j] != 0) e.push_back(Int(-m[i][j]));
      if (i == j) {
        e.resize(2, Int(0));
        e[1] = 1;
      }
      a[i][j] = e;
    }
  return det_bareiss(ZxRing{}, a);
}

long gram_pair(const Vec6& u, const Vec6& v) {
  Mat6 g = gram_matrix();
  long s = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) s += (long)u[i] * g[i][j] * v[j];
  return s;
}

bool preserves_gram(const Mat6& m) {
  // M^T G M == G
  Mat6 g = gram_matrix();
  Mat6 gm = mat_mul(g, m);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int s = 0;
      for (int k = 0; k < 6; ++k) s += m[k][i] * gm[k][j];
      if (s != g[i][j]) return false;
    }
  return true;
}

E6RootSystem build_root_system() {
  E6RootSystem rs;
  rs.gram = gram_matrix();
  std::set<Vec6> seen;
  std::vector<Vec6> queue;
  for (int i = 0; i < 6; ++i) {
    Vec6 e{};
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  std::array<Mat6, 6> refl;
  for (int i = 0; i < 6; ++i) refl[i] = simple_reflection(i);
  for (size_t head = 0; head < queue.size(); ++head) {
    Vec6 v = queue[head];
    for (int i = 0; i < 6; ++i) {
      Vec6 w = mat_apply(refl[i], v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  rs.roots.assign(seen.begin(), seen.end());
  return rs;
}

namespace {
struct Mat6Hash {
  size_t operator()(const Mat6& m) const {
    uint64_t h = 1469598103934665603ull;
    for (auto& row : m)
      for (int x : row) {
        h ^= (uint64_t)(uint32_t)x;
        h *= 1099511628211ull;
      }
    return (size_t)h;
  }
};
}  // namespace

const std::vector<Mat6>& weyl_group() {
  static const std::vector<Mat6> group = [] {
    std::array<Mat6, 6> refl;
    for (int i = 0; i < 6; ++i) refl[i] = simple_reflection(i);
    std::unordered_set<Mat6, Mat6Hash> seen;
    std::vector<Mat6> queue;
    queue.push_back(mat_identity());
    seen.insert(queue[0]);
    seen.reserve(1 << 17);
    for (size_t head = 0; head < queue.size(); ++head) {
      Mat6 m = queue[head];
      for (int i = 0; i < 6; ++i) {
        Mat6 n = mat_mul(refl[i], m);
        if (seen.insert(n).second) queue.push_back(n);
      }
    }
    return queue;
  }();
  return group;
}

// ---- mod-2 layer ----

M2 reduce_mod2(const Mat6& m) {
  M2 r{};
  for (int i = 0; i < 6; ++i) {
    uint8_t row = 0;
    for (int j = 0; j < 6; ++j)
      if (m[i][j] & 1) row |= (uint8_t)(1u << j);
    r[i] = row;
  }
  return r;
}

M2 m2_identity() {
  M2 r{};
  for (int i = 0; i < 6; ++i) r[i] = (uint8_t)(1u << i);
  return r;
}

bool m2_is_identity(const M2& m) { return m == m2_identity(); }

uint8_t m2_apply(const M2& m, uint8_t v) {
  uint8_t r = 0;
  for (int i = 0; i < 6; ++i)
    if (__builtin_popcount(m[i] & v) & 1) r |= (uint8_t)(1u << i);
  return r;
}

int m2_rank(M2 m) {
  int rank = 0;
  for (int col = 0; col < 6; ++col) {
    int piv = -1;
    for (int r = rank; r < 6; ++r)
      if (m[r] & (1u << col)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < 6; ++r)
      if (r != rank && (m[r] & (1u << col))) m[r] ^= m[rank];
    ++rank;
  }
  return rank;
}

bool m2_invertible(const M2& m) { return m2_rank(m) == 6; }

uint64_t m2_key(const M2& m) {
  uint64_t k = 0;
  for (int i = 0; i < 6; ++i) k |= (uint64_t)m[i] << (6 * i);
  return k;
}

ModTwoQuadraticSpace mod2_space() {
  ModTwoQuadraticSpace sp;
  Mat6 g = gram_matrix();
  for (int v = 0; v < 64; ++v) {
    long n = 0;  // (v, v) on the 0/1 lift
    for (int i = 0; i < 6; ++i) {
      if (!(v >> i & 1)) continue;
      for (int j = 0; j < 6; ++j)
        if (v >> j & 1) n += g[i][j];
    }
    sp.q[v] = ((n / 2) % 2 == 0) ? 1 : -1;
  }
  return sp;
}

uint8_t ModTwoQuadraticSpace::pair(uint8_t u, uint8_t v) const {
  static const Mat6 g = gram_matrix();
  long s = 0;
  for (int i = 0; i < 6; ++i) {
    if (!(u >> i & 1)) continue;
    for (int j = 0; j < 6; ++j)
      if (v >> j & 1) s += g[i][j];
  }
  return (uint8_t)(s & 1);
}

bool m2_preserves_pairing(const M2& m) {
  ModTwoQuadraticSpace sp = mod2_space();
  for (int u = 0; u < 64; ++u)
    for (int v = u; v < 64; ++v)
      if (sp.pair((uint8_t)u, (uint8_t)v) !=
          sp.pair(m2_apply(m, (uint8_t)u), m2_apply(m, (uint8_t)v)))
        return false;
  return true;
}

bool m2_preserves_q(const M2& m, const ModTwoQuadraticSpace& sp) {
  for (int v = 0; v < 64; ++v)
    if (sp.q[m2_apply(m, (uint8_t)v)] != sp.q[v]) return false;
  return true;
}

// ---- operations ----

Int dual_index() {
  Int d = mat_det(gram_matrix());
  return d < 0 ? Int(-d) : d;
}

CoxeterChecks coxeter_checks(const std::array<int, 6>& factor_order) {
  {
    std::array<int, 6> s = factor_order;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < 6; ++i)
      if (s[i] != i) throw std::invalid_argument("coxeter_checks: not a permutation of 0..5");
  }
  Mat6 cox = mat_identity();
  for (int i : factor_order) cox = mat_mul(cox, simple_reflection(i));
  CoxeterChecks out;
  {
    Mat6 one_minus{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) one_minus[i][j] = (i == j ? 1 : 0) - cox[i][j];
    out.det_one_minus = mat_det(one_minus);
  }
  out.charpoly = mat_charpoly(cox);
  Mat6 pw = cox;
  int ord = 1;
  while (pw != mat_identity()) {
    pw = mat_mul(pw, cox);
    ++ord;
    if (ord > 100) throw std::runtime_error("coxeter_checks: order out of range");
  }
  out.order = ord;
  return out;
}

std::vector<uint8_t> w_mod2_fixed_space(const std::vector<Mat6>& subset) {
  // stack the rows of (Mbar - I) for every matrix, then extract the null space
  std::vector<uint8_t> rows;
  for (const Mat6& m : subset) {
    M2 r = reduce_mod2(m);
    for (int i = 0; i < 6; ++i) rows.push_back((uint8_t)(r[i] ^ (1u << i)));
  }
  // Gaussian elimination; track pivot column per reduced row
  std::vector<uint8_t> red;
  std::vector<int> pivcol;
  for (uint8_t row : rows) {
    for (size_t k = 0; k < red.size(); ++k)
      if (row & (1u << pivcol[k])) row ^= red[k];
    if (!row) continue;
    int pc = 0;
    while (!(row >> pc & 1)) ++pc;
    for (size_t k = 0; k < red.size(); ++k)
      if (red[k] & (1u << pc)) red[k] ^= row;
    red.push_back(row);
    pivcol.push_back(pc);
  }
  std::vector<uint8_t> basis;
  for (int free = 0; free < 6; ++free) {
    if (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) continue;
    uint8_t v = (uint8_t)(1u << free);
    for (size_t k = 0; k < red.size(); ++k)
      if (red[k] & (1u << free)) v |= (uint8_t)(1u << pivcol[k]);
    basis.push_back(v);
  }
  return basis;
}

namespace {
// null space of the F_2 linear system "A S = S A for all S in gens",
// unknowns = 36 entries of A (bit 6*i+j = A_ij), returned as basis rows
std::vector<uint64_t> commutant_nullspace(const std::vector<M2>& gens) {
  std::vector<uint64_t> rows;
  for (const M2& s : gens) {
    // equation (i,j): sum_k A_ik S_kj + S_ik A_kj = 0
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        uint64_t row = 0;
        for (int k = 0; k < 6; ++k) {
          if (s[k] >> j & 1) row ^= 1ull << (6 * i + k);  // A_ik S_kj
          if (s[i] >> k & 1) row ^= 1ull << (6 * k + j);  // S_ik A_kj
        }
        if (row) rows.push_back(row);
      }
  }
  std::vector<uint64_t> red;
  std::vector<int> pivcol;
  for (uint64_t row : rows) {
    for (size_t k = 0; k < red.size(); ++k)
      if (row >> pivcol[k] & 1) row ^= red[k];
    if (!row) continue;
    int pc = __builtin_ctzll(row);
    for (size_t k = 0; k < red.size(); ++k)
      if (red[k] >> pc & 1) red[k] ^= row;
    red.push_back(row);
    pivcol.push_back(pc);
  }
  std::vector<uint64_t> basis;
  for (int free = 0; free < 36; ++free) {
    if (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) continue;
    uint64_t v = 1ull << free;
    for (size_t k = 0; k < red.size(); ++k)
      if (red[k] >> free & 1) v |= 1ull << pivcol[k];
    basis.push_back(v);
  }
  return basis;
}

M2 m2_from_bits(uint64_t bits) {
  M2 m{};
  for (int i = 0; i < 6; ++i) m[i] = (uint8_t)(bits >> (6 * i) & 0x3f);
  return m;
}
}  // namespace

int commutant_dim(const std::vector<M2>& gens) {
  return (int)commutant_nullspace(gens).size();
}

std::vector<M2> pairing_centralizer_of_w() {
  std::vector<M2> gens;
  for (int i = 0; i < 6; ++i) gens.push_back(reduce_mod2(simple_reflection(i)));
  std::vector<uint64_t> basis = commutant_nullspace(gens);
  if (basis.size() > 20)
    throw std::runtime_error("pairing_centralizer_of_w: commutant too large to enumerate");
  std::vector<M2> out;
  for (uint64_t mask = 0; mask < (1ull << basis.size()); ++mask) {
    uint64_t bits = 0;
    for (size_t k = 0; k < basis.size(); ++k)
      if (mask >> k & 1) bits ^= basis[k];
    M2 m = m2_from_bits(bits);
    if (m2_invertible(m) && m2_preserves_pairing(m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(),
            [](const M2& a, const M2& b) { return m2_key(a) < m2_key(b); });
  return out;
}

AutImageChecks aut_image_checks() {
  const std::vector<Mat6>& w = weyl_group();
  ModTwoQuadraticSpace sp = mod2_space();
  std::unordered_set<uint64_t> image;
  image.reserve(w.size() * 2);
  bool preserves = true;
  for (const Mat6& m : w) {
    M2 r = reduce_mod2(m);
    if (image.insert(m2_key(r)).second)
      if (!m2_preserves_q(r, sp)) preserves = false;
  }
  AutImageChecks out;
  out.injective = image.size() == w.size();
  out.image_order = image.size();
  // order of the orthogonal group of a rank-2n minus-type quadratic space over
  // F_q: 2 q^{n(n-1)} (q^n + 1) prod_{i=1}^{n-1} (q^{2i} - 1), here q=2, n=3
  {
    Int q(2);
    int n = 3;
    Int t = 2 * ipow(q, (unsigned long)(n * (n - 1))) * (ipow(q, (unsigned long)n) + 1);
    for (int i = 1; i < n; ++i) t *= ipow(q, (unsigned long)(2 * i)) - 1;
    out.target_order = t;
  }
  out.image_preserves_q = preserves;
  return out;
}

OrbitSectionReport orbit_and_section_checks() {
  const std::vector<Mat6>& w = weyl_group();
  ModTwoQuadraticSpace sp = mod2_space();
  std::vector<M2> gens;
  for (int i = 0; i < 6; ++i) gens.push_back(reduce_mod2(simple_reflection(i)));

  auto orbit_size = [&](uint8_t start) {
    std::array<bool, 64> seen{};
    std::vector<uint8_t> queue{start};
    seen[start] = true;
    for (size_t head = 0; head < queue.size(); ++head)
      for (const M2& g : gens) {
        uint8_t img = m2_apply(g, queue[head]);
        if (!seen[img]) {
          seen[img] = true;
          queue.push_back(img);
        }
      }
    return queue.size();
  };

  OrbitSectionReport out;
  uint8_t plus_rep = 0, minus_rep = 0;
  for (int v = 1; v < 64; ++v) {
    if (!plus_rep && sp.q[v] == 1) plus_rep = (uint8_t)v;
    if (!minus_rep && sp.q[v] == -1) minus_rep = (uint8_t)v;
  }
  size_t plus_total = 0, minus_total = 0;
  for (int v = 1; v < 64; ++v) (sp.q[v] == 1 ? plus_total : minus_total)++;
  out.transitive_27 = (orbit_size(plus_rep) == plus_total && plus_total == 27);
  out.transitive_36 = (orbit_size(minus_rep) == minus_total && minus_total == 36);

  out.sections_ok = true;
  for (int v = 1; v < 64; ++v) {
    if (sp.q[v] != -1) continue;
    bool half[2] = {false, false};
    for (int u = 1; u < 64; ++u)
      if (sp.q[u] == 1) half[sp.pair((uint8_t)u, (uint8_t)v)] = true;
    if (!half[0] || !half[1]) out.sections_ok = false;
  }

  size_t fixing = 0;
  for (const Mat6& m : w) {
    M2 r = reduce_mod2(m);
    for (int i = 0; i < 6; ++i) r[i] ^= (uint8_t)(1u << i);
    if (m2_rank(r) < 6) ++fixing;
  }
  out.fixing_count = fixing;
  out.weyl_order = w.size();

  {
    Mat6 cox = mat_identity();
    for (int i = 0; i < 6; ++i) cox = mat_mul(cox, simple_reflection(i));
    M2 r = reduce_mod2(cox);
    for (int i = 0; i < 6; ++i) r[i] ^= (uint8_t)(1u << i);
    out.coxeter_fixes_none = (m2_rank(r) == 6);
  }

  {
    E6RootSystem rs = build_root_system();
    std::array<bool, 64> hit{};
    for (const Vec6& rt : rs.roots) {
      uint8_t c = 0;
      for (int i = 0; i < 6; ++i)
        if (rt[i] & 1) c |= (uint8_t)(1u << i);
      hit[c] = true;
    }
    bool ok = true;
    for (int v = 0; v < 64; ++v) {
      bool is_minus = (v != 0 && sp.q[v] == -1);
      if (hit[v] != is_minus) ok = false;
    }
    out.roots_cover_36 = ok;
  }
  return out;
}

}  // namespace hfx::e6
