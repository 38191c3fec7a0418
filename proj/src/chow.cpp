#include "chowkit/chow.hpp"

#include <random>

namespace chowkit {

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

// Inverse over the field, or empty when singular.
Matrix inverse(const Field& f, Matrix A) {
  size_t n = A.size();
  Matrix I(n, std::vector<Scalar>(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && sgn(A[p][c]) == 0) ++p;
    if (p == n) return {};
    std::swap(A[p], A[c]);
    std::swap(I[p], I[c]);
    Scalar inv = f.inv(A[c][c]);
    for (size_t j = 0; j < n; ++j) {
      A[c][j] = f.mul(A[c][j], inv);
      I[c][j] = f.mul(I[c][j], inv);
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || sgn(A[r][c]) == 0) continue;
      Scalar k = A[r][c];
      for (size_t j = 0; j < n; ++j) {
        A[r][j] = f.sub(A[r][j], f.mul(k, A[c][j]));
        I[r][j] = f.sub(I[r][j], f.mul(k, I[c][j]));
      }
    }
  }
  return I;
}

int rank(const Field& f, Matrix A) {
  int r = 0;
  size_t cols = A.empty() ? 0 : A[0].size();
  for (size_t c = 0; c < cols && r < static_cast<int>(A.size()); ++c) {
    size_t p = r;
    while (p < A.size() && sgn(A[p][c]) == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[r]);
    for (size_t i = r + 1; i < A.size(); ++i) {
      if (sgn(A[i][c]) == 0) continue;
      Scalar k = f.div(A[i][c], A[r][c]);
      for (size_t j = c; j < cols; ++j) A[i][j] = f.sub(A[i][j], f.mul(k, A[r][j]));
    }
    ++r;
  }
  return r;
}

// Coordinates (w, y) with y = pi(x) and w completing pi to an isomorphism.
struct Frame {
  RingPtr ring;  // w_1..w_k, y_0..y_d with w eliminated first
  int k = 0;
  std::vector<Polynomial> x_images;  // x_i in terms of (w, y)
};

Frame make_frame(const Projection& pi, const RingPtr& R) {
  const Field& f = R->field();
  int n = R->nvars();
  int d1 = pi.target_dim();
  Matrix M;
  for (auto& row : pi.rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("projection: row length differs from variable count");
    std::vector<Scalar> r;
    for (auto& v : row) r.push_back(f.normalize(v));
    M.push_back(r);
  }
  if (rank(f, M) != d1) throw DegenerateProjection("projection matrix is not of full rank");
  for (int e = 0; e < n && static_cast<int>(M.size()) < n; ++e) {
    std::vector<Scalar> unit(n, Scalar(0));
    unit[e] = 1;
    M.push_back(unit);
    if (rank(f, M) != static_cast<int>(M.size())) M.pop_back();
  }
  Matrix Minv = inverse(f, M);
  int k = n - d1;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("w" + std::to_string(i));
  for (int j = 0; j < d1; ++j) names.push_back("y" + std::to_string(j));
  Frame fr;
  fr.k = k;
  fr.ring = make_ring(names, f, MonomialOrder::block(k));
  // z = M x with z = (y, w); ring position of z_j: y_j at k + j, w_i at i
  auto zpos = [&](int j) { return j < d1 ? k + j : j - d1; };
  for (int i = 0; i < n; ++i) {
    Polynomial p(fr.ring);
    for (int j = 0; j < n; ++j)
      if (sgn(Minv[i][j]) != 0) p = p + Polynomial::variable(fr.ring, zpos(j)).scale(Minv[i][j]);
    fr.x_images.push_back(p);
  }
  return fr;
}

struct Pushed {
  bool finite = false;
  std::vector<Polynomial> image;  // elimination ideal in the y variables
};

Pushed push_component(const Frame& fr, const Ideal& P) {
  std::vector<Polynomial> gens;
  for (auto& g : P.groebner()) gens.push_back(substitute(g, fr.x_images));
  auto gb = groebner_basis(gens, fr.ring);
  Pushed out;
  for (int i = 0; i < fr.k; ++i) {
    bool found = false;
    for (auto& g : gb) {
      const Monomial& m = g.lm();
      if (m[i] > 0 && m.degree() == m[i]) found = true;
    }
    if (!found) return out;
  }
  out.finite = true;
  std::vector<Polynomial> elim;
  for (auto& g : gb) {
    bool uses_w = false;
    for (int i = 0; i < fr.k; ++i) uses_w = uses_w || g.uses_var(i);
    if (!uses_w) elim.push_back(g);
  }
  out.image = elim;
  return out;
}

void check_pure(const Cycle& Z, int d1) {
  auto dims = Z.dimensions();
  if (dims.size() > 1) throw std::invalid_argument("cycle is not pure-dimensional");
  if (!dims.empty() && dims[0] + 1 != d1) throw std::invalid_argument("projection target dimension must be dim Z + 1");
}

}  // namespace

bool is_allowable(const Projection& pi, const Cycle& Z) {
  auto dims = Z.dimensions();
  if (dims.size() > 1) throw std::invalid_argument("cycle is not pure-dimensional");
  if (Z.empty()) return true;
  if (pi.target_dim() < dims[0]) return false;
  Frame fr;
  try {
    fr = make_frame(pi, Z.ring());
  } catch (const DegenerateProjection&) {
    return false;
  }
  for (auto& t : Z.terms())
    if (!push_component(fr, t.component.prime).finite) return false;
  return true;
}

Polynomial pushforward_equation(const Projection& pi, const Cycle& Z) {
  check_pure(Z, pi.target_dim());
  const RingPtr& R = Z.ring();
  if (Z.empty()) return Polynomial::constant(R, 1);
  Frame fr = make_frame(pi, R);
  int d1 = pi.target_dim();
  // y_j pulled back to the original coordinates
  std::vector<Polynomial> y_back(fr.ring->nvars(), Polynomial(R));
  for (int j = 0; j < d1; ++j) {
    Polynomial p(R);
    for (int i = 0; i < R->nvars(); ++i)
      if (sgn(pi.rows[j][i]) != 0) p = p + Polynomial::variable(R, i).scale(R->field().normalize(pi.rows[j][i]));
    y_back[fr.k + j] = p;
  }
  Polynomial f = Polynomial::constant(R, 1);
  for (auto& t : Z.terms()) {
    Pushed pu = push_component(fr, t.component.prime);
    if (!pu.finite) throw DegenerateProjection("projection is not allowable");
    if (pu.image.size() != 1) throw DegenerateProjection("image of a component is not a hypersurface");
    long dg = pu.image[0].total_degree();
    if (dg <= 0 || t.component.degree % dg != 0)
      throw DegenerateProjection("image degree does not divide component degree");
    long e = t.component.degree / dg;
    Polynomial g = substitute(pu.image[0], y_back);
    f *= g.pow(static_cast<unsigned>(e * t.multiplicity));
  }
  return normalize_content(f);
}

namespace {

Projection sample_projection(const RingPtr& R, int d1, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> co(-bound, bound);
  Projection pi;
  for (int j = 0; j < d1; ++j) {
    std::vector<Scalar> row;
    for (int i = 0; i < R->nvars(); ++i) row.push_back(R->field().from_int(co(rng)));
    pi.rows.push_back(row);
  }
  return pi;
}

// Reduced echelon basis of the linear span of the samples; pivots are leading monomials.
class Span {
 public:
  // True when f enlarges the span.
  bool add(Polynomial f) {
    for (auto& b : basis_) {
      Scalar c = f.coefficient(b.lm());
      if (sgn(c) != 0) f -= b.scale(c);
    }
    if (f.is_zero()) return false;
    f = f.monic();
    for (auto& b : basis_) {
      Scalar c = b.coefficient(f.lm());
      if (sgn(c) != 0) b -= f.scale(c);
    }
    basis_.push_back(std::move(f));
    return true;
  }
  const std::vector<Polynomial>& basis() const { return basis_; }

 private:
  std::vector<Polynomial> basis_;
};

// Stability is tested on the span of the samples, which implies stability of
// the ideal they generate. Ideals of a few random samples tend to have huge
// reduced bases, while the full span is small and well conditioned.
Ideal chow_pure(const Cycle& Z, const ChowConfig& cfg, std::mt19937_64& rng, ChowIdealResult& res) {
  const RingPtr& R = Z.ring();
  int d = Z.dimensions().front();
  int n = R->nvars();
  if (d >= n) throw std::invalid_argument("chow_ideal: components must be proper subvarieties");
  Span span;
  long bound = cfg.initial_bound;
  int unchanged = 0, failures = 0, rounds = 0;
  while (rounds < cfg.max_rounds) {
    Projection pi = sample_projection(R, d + 1, bound, rng);
    Polynomial f;
    try {
      f = pushforward_equation(pi, Z);
    } catch (const DegenerateProjection&) {
      if (++failures > 200) throw std::runtime_error("chow_ideal: no allowable projection found");
      if (failures % 3 == 0) bound *= 2;
      continue;
    }
    failures = 0;
    ++rounds;
    ++res.rounds;
    res.samples.push_back({pi, f});
    if (span.add(f)) {
      unchanged = 0;
    } else if (++unchanged >= cfg.window) {
      return Ideal(R, span.basis());
    }
  }
  res.ideal = Ideal(R, span.basis());
  throw ChowNotStabilized("chow_ideal: no stabilization within max_rounds", res);
}

}  // namespace

ChowIdealResult chow_ideal(const Cycle& Z, const ChowConfig& cfg) {
  ChowIdealResult res;
  res.seed = cfg.seed;
  if (!Z.ring()) throw std::invalid_argument("chow_ideal: cycle without a ring");
  const RingPtr& R = Z.ring();
  std::mt19937_64 rng(cfg.seed);
  Ideal acc = Ideal::unit(R);
  for (int d : Z.dimensions()) acc = ideal_product(acc, chow_pure(Z.pure_part(d), cfg, rng, res));
  std::vector<Polynomial> g;
  for (auto& p : acc.groebner()) g.push_back(p.to_ring(R));
  res.ideal = Ideal(R, g);
  res.stabilized = true;
  return res;
}

Cycle embed_cycle(const Cycle& Z, const RingPtr& big, const std::vector<int>& embedding) {
  Cycle out(big);
  std::vector<Polynomial> extra;
  for (int v = 0; v < big->nvars(); ++v)
    if (std::find(embedding.begin(), embedding.end(), v) == embedding.end()) extra.push_back(Polynomial::variable(big, v));
  for (auto& t : Z.terms()) {
    std::vector<Polynomial> g = extra;
    for (auto& p : t.component.prime.groebner()) g.push_back(relabel(p, big, embedding));
    out.add(Component{Ideal(big, g), t.component.dimension, t.component.degree}, t.multiplicity);
  }
  return out;
}

bool chow_restriction_check(const Cycle& Z, const RingPtr& big, const std::vector<int>& embedding,
                            const ChowConfig& config) {
  const RingPtr& R = Z.ring();
  Ideal small = chow_ideal(Z, config).ideal;
  Ideal large = chow_ideal(embed_cycle(Z, big, embedding), config).ideal;
  std::vector<std::pair<int, Polynomial>> zero;
  for (int v = 0; v < big->nvars(); ++v)
    if (std::find(embedding.begin(), embedding.end(), v) == embedding.end())
      zero.push_back({v, Polynomial(big)});
  std::vector<Polynomial> restricted;
  for (auto& g : large.generators()) {
    Polynomial r = substitute_vars(g, zero);
    if (!r.is_zero()) restricted.push_back(r);
  }
  std::vector<int> back(big->nvars(), 0);
  for (size_t i = 0; i < embedding.size(); ++i) back[embedding[i]] = static_cast<int>(i);
  std::vector<Polynomial> moved;
  for (auto& r : restricted) moved.push_back(relabel(r, R, back));
  return ideal_equal(Ideal(R, moved), small);
}

}  // namespace chowkit
