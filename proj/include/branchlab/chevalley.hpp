// Chevalley basis with integral structure constants, built from a root datum.
//
// Signs follow the extraspecial-pair normalization: positive roots are
// totally ordered by (height, lex on simple coefficients); for each
// non-simple positive xi the minimal pair (alpha, beta) with
// alpha + beta = xi gets N(alpha, beta) = p + 1 > 0, and every other
// constant is forced from those by the Jacobi identity.  Elements carry a
// sparse root part plus an ambient torus vector t acting by
// [t, e_b] = (t, b) e_b, so reductive subalgebras with central directions
// can be represented alongside the semisimple part.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <branchlab/linalg.hpp>
#include <branchlab/rootdatum.hpp>

namespace branchlab {

struct AlgElt {
  std::map<size_t, Rat> root_part;  // root index -> coefficient
  QVec torus;                       // ambient coordinates

  explicit AlgElt(size_t dim = 0) : torus(zero_vec(dim)) {}

  bool is_zero() const { return root_part.empty() && branchlab::is_zero(torus); }

  void normalize() {
    for (auto it = root_part.begin(); it != root_part.end();)
      it = (it->second == 0) ? root_part.erase(it) : std::next(it);
  }

  AlgElt& operator+=(const AlgElt& o) {
    if (torus.size() != o.torus.size()) throw std::invalid_argument("AlgElt+=: dim mismatch");
    for (const auto& [i, c] : o.root_part) root_part[i] += c;
    torus += o.torus;
    normalize();
    return *this;
  }
  friend AlgElt operator+(AlgElt a, const AlgElt& b) { return a += b; }
  friend AlgElt operator*(const Rat& c, AlgElt a) {
    if (c == 0) return AlgElt(a.torus.size());
    for (auto& [i, x] : a.root_part) x *= c;
    a.torus = c * a.torus;
    return a;
  }
  friend AlgElt operator-(const AlgElt& a, const AlgElt& b) { return a + Rat(-1) * b; }
  friend bool operator==(const AlgElt& a, const AlgElt& b) {
    return a.root_part == b.root_part && a.torus == b.torus;
  }
};

class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootDatum rd) : rd_(std::move(rd)) { build_table(); }

  const RootDatum& datum() const { return rd_; }
  size_t dim() const { return rd_.num_roots() + rd_.rank(); }

  AlgElt zero() const { return AlgElt(rd_.dim()); }

  AlgElt e(size_t root_index) const {
    if (root_index >= rd_.num_roots()) throw std::out_of_range("e: bad root index");
    AlgElt x(rd_.dim());
    x.root_part[root_index] = 1;
    return x;
  }
  AlgElt e(const QVec& root) const { return e(rd_.root_index(root)); }

  AlgElt h(const QVec& v) const {
    if (v.size() != rd_.dim()) throw std::invalid_argument("h: dim mismatch");
    AlgElt x(rd_.dim());
    x.torus = v;
    return x;
  }
  AlgElt coroot_elt(const QVec& root) const { return h(rd_.coroot(root)); }

  // N(a, b) for arbitrary roots given by index; 0 when a + b is not a root.
  Rat structure_constant(size_t i, size_t j) const {
    return n_signed(rd_.roots()[i].v, rd_.roots()[j].v);
  }
  Rat structure_constant(const QVec& a, const QVec& b) const {
    if (!rd_.is_root(a) || !rd_.is_root(b)) throw std::invalid_argument("structure_constant: not roots");
    return n_signed(a, b);
  }

  AlgElt bracket(const AlgElt& x, const AlgElt& y) const {
    AlgElt out(rd_.dim());
    // torus against root vectors
    for (const auto& [j, c] : y.root_part) out.root_part[j] += rd_.inner(x.torus, rd_.roots()[j].v) * c;
    for (const auto& [i, c] : x.root_part) out.root_part[i] -= rd_.inner(y.torus, rd_.roots()[i].v) * c;
    // root against root
    for (const auto& [i, ci] : x.root_part) {
      const QVec& a = rd_.roots()[i].v;
      for (const auto& [j, cj] : y.root_part) {
        const QVec& b = rd_.roots()[j].v;
        QVec s = a + b;
        if (branchlab::is_zero(s)) {
          out.torus += (ci * cj) * rd_.coroot(a);
        } else if (auto k = rd_.find_root(s)) {
          out.root_part[*k] += ci * cj * n_signed(a, b);
        }
      }
    }
    out.normalize();
    return out;
  }

  // Invariant form via the closed expression: torus blocks pair through the
  // roots, e_a pairs only with e_{-a}, and mixed blocks vanish.
  Rat killing(const AlgElt& x, const AlgElt& y) const {
    Rat out = 0;
    for (const Root& g : rd_.roots())
      out += rd_.inner(x.torus, g.v) * rd_.inner(y.torus, g.v);
    for (const auto& [i, ci] : x.root_part) {
      const QVec& a = rd_.roots()[i].v;
      auto j = rd_.find_root(Rat(-1) * a);
      auto it = y.root_part.find(*j);
      if (it == y.root_part.end()) continue;
      Rat s = 0;  // B(h_a^vee, h_a^vee) / 2
      QVec av = rd_.coroot(a);
      for (const Root& d : rd_.roots()) {
        Rat p = rd_.inner(av, d.v);
        s += p * p;
      }
      out += ci * it->second * s / 2;
    }
    return out;
  }

  // Coordinates in the basis {e_gamma : gamma root} + {simple coroots};
  // throws when the torus part leaves the coroot span.
  QVec coordinates(const AlgElt& x) const {
    QVec out = zero_vec(dim());
    for (const auto& [i, c] : x.root_part) out[i] = c;
    QMatrix m(rd_.dim(), rd_.rank());
    for (size_t k = 0; k < rd_.rank(); ++k) {
      QVec cr = rd_.coroot(rd_.simples()[k]);
      for (size_t r = 0; r < rd_.dim(); ++r) m(r, k) = cr[r];
    }
    auto sol = m.solve(x.torus);
    if (!sol) throw std::domain_error("coordinates: torus part outside coroot span");
    for (size_t k = 0; k < rd_.rank(); ++k) out[rd_.num_roots() + k] = (*sol)[k];
    return out;
  }

  QMatrix ad_matrix(const AlgElt& x) const {
    QMatrix m(dim(), dim());
    auto put = [&](size_t col, const AlgElt& img) {
      QVec c = coordinates(img);
      for (size_t r = 0; r < dim(); ++r) m(r, col) = c[r];
    };
    for (size_t i = 0; i < rd_.num_roots(); ++i) put(i, bracket(x, e(i)));
    for (size_t k = 0; k < rd_.rank(); ++k)
      put(rd_.num_roots() + k, bracket(x, coroot_elt(rd_.simples()[k])));
    return m;
  }

 private:
  RootDatum rd_;
  std::vector<size_t> pos_sorted_;                 // positive root indices, (height, lex) order
  std::map<size_t, size_t> order_pos_;             // root index -> rank in pos_sorted_
  std::map<std::pair<size_t, size_t>, Rat> table_; // ordered positive special pairs

  static bool positive(const Root& r) { return r.height > 0; }

  Rat lookup(size_t i, size_t j) const {
    bool flip = order_pos_.at(i) > order_pos_.at(j);
    auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table_.end()) throw std::logic_error("structure constant table miss");
    return flip ? -it->second : it->second;
  }

  Rat n_signed(const QVec& a, const QVec& b) const {
    QVec s = a + b;
    if (branchlab::is_zero(s) || !rd_.is_root(s)) return 0;
    const Root& ra = rd_.roots()[rd_.root_index(a)];
    const Root& rb = rd_.roots()[rd_.root_index(b)];
    if (positive(ra) && positive(rb)) return lookup(rd_.root_index(a), rd_.root_index(b));
    if (!positive(ra) && !positive(rb)) return -n_signed(Rat(-1) * a, Rat(-1) * b);
    if (!positive(ra)) return -n_signed(b, a);
    // a positive, b negative, a + b a nonzero root
    QVec y = Rat(-1) * b;
    if (positive(rd_.roots()[rd_.root_index(s)])) {
      return -lookup(rd_.root_index(y), rd_.root_index(s)) * rd_.inner(s, s) / rd_.inner(a, a);
    }
    QVec w = Rat(-1) * s;
    return lookup(rd_.root_index(w), rd_.root_index(a)) * rd_.inner(w, w) / rd_.inner(y, y);
  }

  void build_table() {
    for (size_t i = 0; i < rd_.num_roots(); ++i)
      if (positive(rd_.roots()[i])) pos_sorted_.push_back(i);
    std::sort(pos_sorted_.begin(), pos_sorted_.end(), [&](size_t i, size_t j) {
      const Root &a = rd_.roots()[i], &b = rd_.roots()[j];
      if (a.height != b.height) return a.height < b.height;
      return a.simple_coeff < b.simple_coeff;
    });
    for (size_t k = 0; k < pos_sorted_.size(); ++k) order_pos_[pos_sorted_[k]] = k;

    for (size_t xi_idx : pos_sorted_) {
      const Root& xi = rd_.roots()[xi_idx];
      if (xi.height < 2) continue;
      // locate the extraspecial pair, then force the remaining special pairs
      std::vector<std::pair<size_t, size_t>> special;
      for (size_t gi : pos_sorted_) {
        auto di = rd_.find_root(xi.v - rd_.roots()[gi].v);
        if (!di || !positive(rd_.roots()[*di])) continue;
        if (order_pos_.at(gi) < order_pos_.at(*di)) special.emplace_back(gi, *di);
      }
      if (special.empty()) throw std::logic_error("positive root with no decomposition");
      auto [ai, bi] = special.front();
      const QVec& alpha = rd_.roots()[ai].v;
      const QVec& beta = rd_.roots()[bi].v;
      long p = 0;
      while (rd_.is_root(beta - Rat(p + 1) * alpha)) ++p;
      table_[{ai, bi}] = p + 1;
      Rat n_ma_xi = Rat(p + 1) * rd_.inner(beta, beta) / rd_.inner(xi.v, xi.v);
      for (size_t k = 1; k < special.size(); ++k) {
        auto [gi, di] = special[k];
        const QVec& g = rd_.roots()[gi].v;
        const QVec& d = rd_.roots()[di].v;
        Rat t1 = 0, t2 = 0;
        if (rd_.is_root(g - alpha)) t1 = n_signed(Rat(-1) * alpha, g) * n_signed(g - alpha, d);
        if (rd_.is_root(d - alpha)) t2 = n_signed(Rat(-1) * alpha, d) * n_signed(g, d - alpha);
        Rat val = (t1 + t2) / n_ma_xi;
        if (val == 0) throw std::logic_error("vanishing constant for a special pair");
        table_[{gi, di}] = val;
      }
    }
  }
};

}  // namespace branchlab
