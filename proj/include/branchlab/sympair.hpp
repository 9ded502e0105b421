// Symmetric pair machinery: an ambient graded root datum, an involution
// sigma commuting with the grading, its lift to the Chevalley basis, and the
// two fixed-point subalgebras
//   h  = fix(sigma),        spanned by  e_a + sigma(e_a)  and signed e_a,
//   h0 = fix(sigma.theta),  the associated pair,
// together with their restricted root data in the ambient coordinates, the
// restriction map q_u, the p-space splittings, and the iterated bracket
// criterion for normal-derivative representability.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <branchlab/chevalley.hpp>
#include <branchlab/rootdatum.hpp>

namespace branchlab {

// Ambient involution acting as the given permutation on simple roots and as
// the identity on the orthogonal complement of the root span.
inline QMatrix involution_from_permutation(const RootDatum& rd, const std::vector<size_t>& perm) {
  if (perm.size() != rd.rank()) throw std::invalid_argument("involution: permutation size");
  size_t n = rd.dim(), r = rd.rank();
  QMatrix sf(r, n);
  for (size_t i = 0; i < r; ++i) {
    QVec fa = rd.form().apply(rd.simples()[i]);
    for (size_t j = 0; j < n; ++j) sf(i, j) = fa[j];
  }
  std::vector<QVec> comp = sf.nullspace();
  if (r + comp.size() != n) throw std::invalid_argument("involution: degenerate form");
  QMatrix basis(n, n), images(n, n);
  for (size_t c = 0; c < n; ++c) {
    const QVec& src = c < r ? rd.simples()[c] : comp[c - r];
    const QVec& dst = c < r ? rd.simples()[perm[c]] : comp[c - r];
    for (size_t j = 0; j < n; ++j) {
      basis(j, c) = src[j];
      images(j, c) = dst[j];
    }
  }
  return images * basis.inverse();
}

class SymmetricPair {
 public:
  SymmetricPair(RootDatum rd, std::vector<int> parity, QMatrix sigma,
                std::vector<Rat> simple_signs, std::string id = "pair")
      : g_(std::move(rd)),
        parity_(std::move(parity)),
        sigma_(std::move(sigma)),
        id_(std::move(id)) {
    const RootDatum& d = g_.datum();
    if (parity_.size() != d.rank()) throw std::invalid_argument(id_ + ": parity size");
    for (int b : parity_)
      if (b != 0 && b != 1) throw std::invalid_argument(id_ + ": parity bits");
    if (simple_signs.size() != d.rank()) throw std::invalid_argument(id_ + ": sign count");
    check_matrix();
    build_root_map();
    extend_signs(simple_signs);
    verify_lift();
    build_subdata();
  }

  const std::string& id() const { return id_; }
  const ChevalleyAlgebra& algebra() const { return g_; }
  const RootDatum& ambient() const { return g_.datum(); }
  const std::vector<int>& grading() const { return parity_; }
  const QMatrix& sigma_matrix() const { return sigma_; }

  int root_parity(size_t i) const {
    long s = 0;
    const Root& r = ambient().roots()[i];
    for (size_t k = 0; k < parity_.size(); ++k) s += r.simple_coeff[k] * parity_[k];
    return static_cast<int>(((s % 2) + 2) % 2);
  }

  QMatrix qu_matrix() const {
    QMatrix m = sigma_;
    for (size_t i = 0; i < m.rows(); ++i) {
      for (size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) / 2;
      m(i, i) += Rat(1, 2);
    }
    return m;
  }
  QVec qu(const QVec& v) const { return Rat(1, 2) * (v + sigma_.apply(v)); }

  Rat sigma_sign(size_t root_index) const { return signs_[root_index]; }

  AlgElt sigma_apply(const AlgElt& x) const {
    AlgElt out(ambient().dim());
    out.torus = sigma_.apply(x.torus);
    for (const auto& [i, c] : x.root_part) out.root_part[sroot_[i]] += c * signs_[i];
    out.normalize();
    return out;
  }

  AlgElt theta_apply(const AlgElt& x) const {
    AlgElt out = x;
    for (auto& [i, c] : out.root_part)
      if (root_parity(i) == 1) c = -c;
    out.normalize();
    return out;
  }

  const RootDatum& h_datum() const { return *h_datum_; }
  const RootDatum& h0_datum() const { return *h0_datum_; }

  // Spanning vectors of the noncompact parts, one per sigma-orbit.
  std::vector<AlgElt> p_h_span() const { return span_vectors(true, nullptr); }
  std::vector<AlgElt> p_h0_span() const { return span_vectors(false, nullptr); }

  bool sigma_preserves(const PositiveSystem& ps) const {
    for (const QVec& g : ps.positives())
      if (!ps.is_positive(sigma_.apply(g))) return false;
    return true;
  }

  bool holomorphic_pair(const PositiveSystem& ps) const {
    return system_flags(ambient(), ps).holomorphic && sigma_preserves(ps);
  }

  struct PSplit {
    std::vector<AlgElt> p_h_plus, p_h_minus, p_h0_plus, p_h0_minus;
  };

  PSplit split_p(const PositiveSystem& ps) const {
    if (!holomorphic_pair(ps))
      throw std::domain_error(id_ + ": chirality split needs a holomorphic pair");
    PSplit out;
    out.p_h_plus = span_vectors(true, &ps, +1);
    out.p_h_minus = span_vectors(true, &ps, -1);
    out.p_h0_plus = span_vectors(false, &ps, +1);
    out.p_h0_minus = span_vectors(false, &ps, -1);
    return out;
  }

  // [[p_h0^+, p_h^-], p_h0^+] = 0, evaluated on spanning vectors.
  bool bracket_condition(const PositiveSystem& ps) const {
    PSplit s = split_p(ps);
    for (const AlgElt& x : s.p_h0_plus)
      for (const AlgElt& y : s.p_h_minus)
        for (const AlgElt& z : s.p_h0_plus)
          if (!g_.bracket(g_.bracket(x, y), z).is_zero()) return false;
    return true;
  }

  // Grading bits for a restricted datum's simple roots, taken from any
  // ambient preimage; consistency over every preimage is enforced.
  std::vector<int> induced_parity(const RootDatum& sub) const {
    std::vector<int> out;
    for (const QVec& s : sub.simples()) out.push_back(restricted_parity(s));
    for (const Root& r : sub.roots()) {
      long acc = 0;
      for (size_t k = 0; k < out.size(); ++k) acc += r.simple_coeff[k] * out[k];
      if (static_cast<int>(((acc % 2) + 2) % 2) != restricted_parity(r.v))
        throw std::logic_error(id_ + ": restricted grading is not additive");
    }
    return out;
  }

  // Positive system on a restricted datum induced by an ambient system that
  // sigma preserves.
  PositiveSystem induced_system(const RootDatum& sub, const PositiveSystem& ambient_ps) const {
    if (!sigma_preserves(ambient_ps))
      throw std::domain_error(id_ + ": ambient system is not sigma-stable");
    return PositiveSystem::from_vector(sub, induced_parity(sub), ambient_ps.rho());
  }

 private:
  ChevalleyAlgebra g_;
  std::vector<int> parity_;
  QMatrix sigma_;
  std::string id_;
  std::vector<size_t> sroot_;  // root index -> index of sigma(root)
  std::vector<Rat> signs_;     // sigma(e_i) = signs_[i] * e_{sroot_[i]}
  std::optional<RootDatum> h_datum_, h0_datum_;

  void check_matrix() {
    const RootDatum& d = ambient();
    size_t n = d.dim();
    if (sigma_.rows() != n || sigma_.cols() != n) throw std::invalid_argument(id_ + ": sigma shape");
    if (!(sigma_ * sigma_ == QMatrix::identity(n)))
      throw std::invalid_argument(id_ + ": sigma is not an involution");
    QMatrix st(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) st(i, j) = sigma_(j, i);
    if (!(st * d.form() * sigma_ == d.form()))
      throw std::invalid_argument(id_ + ": sigma is not an isometry");
  }

  void build_root_map() {
    const RootDatum& d = ambient();
    for (size_t i = 0; i < d.num_roots(); ++i) {
      auto j = d.find_root(sigma_.apply(d.roots()[i].v));
      if (!j) throw std::invalid_argument(id_ + ": sigma does not permute the roots");
      sroot_.push_back(*j);
      if (root_parity(i) != root_parity(*j))
        throw std::invalid_argument(id_ + ": sigma breaks the grading");
    }
  }

  void extend_signs(const std::vector<Rat>& simple_signs) {
    const RootDatum& d = ambient();
    signs_.assign(d.num_roots(), Rat(0));
    std::vector<size_t> pos;
    for (size_t i = 0; i < d.num_roots(); ++i)
      if (d.roots()[i].height > 0) pos.push_back(i);
    std::sort(pos.begin(), pos.end(), [&](size_t i, size_t j) {
      return d.roots()[i].height < d.roots()[j].height;
    });
    for (size_t i : pos) {
      const Root& xi = d.roots()[i];
      if (xi.height == 1) {
        size_t k = 0;
        while (!(d.simples()[k] == xi.v)) ++k;
        Rat s = simple_signs[k];
        if (s != 1 && s != -1) throw std::invalid_argument(id_ + ": signs must be +1 or -1");
        signs_[i] = s;
        continue;
      }
      for (size_t ai : pos) {
        if (d.roots()[ai].height >= xi.height) break;
        auto bi = d.find_root(xi.v - d.roots()[ai].v);
        if (!bi || d.roots()[*bi].height <= 0 || signs_[*bi] == 0 || signs_[ai] == 0) continue;
        const QVec &a = d.roots()[ai].v, &b = d.roots()[*bi].v;
        signs_[i] = signs_[ai] * signs_[*bi] *
                    g_.structure_constant(sigma_.apply(a), sigma_.apply(b)) /
                    g_.structure_constant(a, b);
        break;
      }
      if (signs_[i] == 0) throw std::logic_error(id_ + ": sign extension failed");
    }
    for (size_t i = 0; i < d.num_roots(); ++i)
      if (d.roots()[i].height < 0) signs_[i] = signs_[*d.find_root(Rat(-1) * d.roots()[i].v)];
  }

  void verify_lift() {
    const RootDatum& d = ambient();
    for (size_t i = 0; i < d.num_roots(); ++i) {
      if (signs_[i] * signs_[sroot_[i]] != 1)
        throw std::logic_error(id_ + ": lift squares to " + to_string(signs_[i] * signs_[sroot_[i]]));
      for (size_t j = 0; j < d.num_roots(); ++j) {
        QVec s = d.roots()[i].v + d.roots()[j].v;
        if (is_zero(s) || !d.is_root(s)) continue;
        Rat lhs = g_.structure_constant(i, j) * signs_[*d.find_root(s)];
        Rat rhs = signs_[i] * signs_[j] * g_.structure_constant(sroot_[i], sroot_[j]);
        if (lhs != rhs) throw std::logic_error(id_ + ": lift is not an automorphism");
      }
    }
  }

  int restricted_parity(const QVec& restricted_root) const {
    const RootDatum& d = ambient();
    for (size_t i = 0; i < d.num_roots(); ++i)
      if (qu(d.roots()[i].v) == restricted_root) return root_parity(i);
    throw std::invalid_argument(id_ + ": vector is not a restricted root");
  }

  // fixed root e_a lands in h iff sign +1, in h0 iff sign*theta = +1;
  // each swapped orbit contributes one vector to each side
  bool fixed_in(bool h_side, size_t i) const {
    return h_side ? signs_[i] == 1 : signs_[i] * (root_parity(i) == 1 ? -1 : 1) == 1;
  }

  void build_subdata() {
    const RootDatum& d = ambient();
    std::set<QVec> hr, h0r;
    for (size_t i = 0; i < d.num_roots(); ++i) {
      QVec rv = qu(d.roots()[i].v);
      if (is_zero(rv)) throw std::invalid_argument(id_ + ": a root restricts to zero");
      if (sroot_[i] != i) {
        hr.insert(rv);
        h0r.insert(rv);
        continue;
      }
      if (fixed_in(true, i)) hr.insert(rv);
      if (fixed_in(false, i)) h0r.insert(rv);
    }
    h_datum_ = RootDatum::from_roots(d.dim(), d.form(),
                                     std::vector<QVec>(hr.begin(), hr.end()), id_ + ":h");
    h0_datum_ = RootDatum::from_roots(d.dim(), d.form(),
                                      std::vector<QVec>(h0r.begin(), h0r.end()), id_ + ":h0");
  }

  // chirality: 0 = both signs of roots, +1/-1 = positive/negative roots only
  std::vector<AlgElt> span_vectors(bool h_side, const PositiveSystem* ps, int chirality = 0) const {
    const RootDatum& d = ambient();
    std::vector<AlgElt> out;
    for (size_t i = 0; i < d.num_roots(); ++i) {
      if (root_parity(i) != 1) continue;
      if (ps && chirality != 0 && ps->is_positive(d.roots()[i].v) != (chirality > 0)) continue;
      if (sroot_[i] == i) {
        if (fixed_in(h_side, i)) out.push_back(g_.e(i));
      } else if (sroot_[i] > i) {
        // e_a + c e_{sigma a} is sigma-fixed; the noncompact minus combination
        // is sigma.theta-fixed instead
        out.push_back(g_.e(i) + (h_side ? signs_[i] : -signs_[i]) * g_.e(sroot_[i]));
      }
    }
    return out;
  }
};

}  // namespace branchlab
