#pragma once

// Exact root-system core: root data in rational epsilon-style coordinates,
// positive systems with a compact/noncompact Z2 grading, rho vectors, Weyl
// group actions, and positive-system property flags.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace branchlab {

struct Root {
  QVec v;                          // ambient coordinates
  std::vector<long> simple_coeff;  // expansion in the datum's simple roots
  long height = 0;                 // sum of simple_coeff
};

// Weight coordinate bases supported by conversions.
enum class Basis { ambient, simple_root, fundamental };

inline std::string basis_name(Basis b) {
  switch (b) {
    case Basis::ambient: return "ambient";
    case Basis::simple_root: return "simple_root";
    case Basis::fundamental: return "fundamental";
  }
  return "?";
}

struct Weight {
  QVec coords;
  Basis basis = Basis::ambient;
};

class RootDatum {
 public:
  // Builds a datum from explicit simple roots; generates the full root set by
  // closing under simple reflections.
  RootDatum(size_t dim, QMatrix form, std::vector<QVec> simples, std::string label)
      : dim_(dim), form_(std::move(form)), simples_(std::move(simples)), label_(std::move(label)) {
    if (form_.rows() != dim_ || form_.cols() != dim_) throw std::invalid_argument("form shape");
    for (const auto& s : simples_)
      if (s.size() != dim_) throw std::invalid_argument("simple root dimension");
    generate_roots();
  }

  static RootDatum build(const std::string& type, int rank);
  static RootDatum product(const std::vector<RootDatum>& factors);
  static RootDatum from_roots(size_t dim, const QMatrix& form, const std::vector<QVec>& roots,
                              const std::string& label = "derived");

  size_t dim() const { return dim_; }
  size_t rank() const { return simples_.size(); }
  const std::string& label() const { return label_; }
  const QMatrix& form() const { return form_; }
  const std::vector<QVec>& simples() const { return simples_; }
  const std::vector<Root>& roots() const { return roots_; }
  size_t num_roots() const { return roots_.size(); }

  Rat inner(const QVec& a, const QVec& b) const {
    QVec fb = form_.apply(b);
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * fb[i];
    return s;
  }

  // <v, alpha-check> = 2 (v, alpha) / (alpha, alpha)
  Rat pairing(const QVec& v, const QVec& alpha) const {
    return Rat(2) * inner(v, alpha) / inner(alpha, alpha);
  }

  QVec coroot(const QVec& alpha) const {
    return alpha * (Rat(2) / inner(alpha, alpha));
  }

  QVec reflect(const QVec& v, const QVec& alpha) const {
    return v - alpha * pairing(v, alpha);
  }

  bool is_root(const QVec& v) const { return index_.count(v) > 0; }

  size_t root_index(const QVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::invalid_argument("not a root");
    return it->second;
  }

  std::optional<size_t> find_root(const QVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Integer Cartan matrix a_ij = <alpha_i, alpha_j-check>.
  std::vector<std::vector<long>> cartan_matrix() const {
    std::vector<std::vector<long>> c(rank(), std::vector<long>(rank(), 0));
    for (size_t i = 0; i < rank(); ++i)
      for (size_t j = 0; j < rank(); ++j) c[i][j] = to_long(pairing(simples_[i], simples_[j]));
    return c;
  }

  // --- basis conversions -------------------------------------------------

  bool in_root_span(const QVec& v) const {
    QMatrix m = simple_matrix();
    return m.transpose().solve(v).has_value();
  }

  QVec to_simple_coords(const QVec& ambient) const {
    auto x = simple_matrix().transpose().solve(ambient);
    if (!x) throw std::domain_error("vector outside the root span");
    // solve() zeroes free variables; verify reconstruction to reject ghosts
    QVec back = zero_vec(dim_);
    for (size_t i = 0; i < rank(); ++i) back += simples_[i] * (*x)[i];
    if (!(back == ambient)) throw std::domain_error("vector outside the root span");
    return *x;
  }

  QVec from_simple_coords(const QVec& c) const {
    if (c.size() != rank()) throw std::invalid_argument("coordinate size");
    QVec v = zero_vec(dim_);
    for (size_t i = 0; i < rank(); ++i) v += simples_[i] * c[i];
    return v;
  }

  QVec to_fundamental_coords(const QVec& ambient) const {
    if (!in_root_span(ambient)) throw std::domain_error("vector outside the root span");
    QVec c(rank());
    for (size_t i = 0; i < rank(); ++i) c[i] = pairing(ambient, simples_[i]);
    return c;
  }

  QVec from_fundamental_coords(const QVec& c) const {
    if (c.size() != rank()) throw std::invalid_argument("coordinate size");
    QVec v = zero_vec(dim_);
    for (size_t i = 0; i < rank(); ++i) v += fundamental_weight(i) * c[i];
    return v;
  }

  Weight convert(const Weight& w, Basis target) const {
    QVec amb;
    switch (w.basis) {
      case Basis::ambient: amb = w.coords; break;
      case Basis::simple_root: amb = from_simple_coords(w.coords); break;
      case Basis::fundamental: amb = from_fundamental_coords(w.coords); break;
    }
    switch (target) {
      case Basis::ambient: return {amb, target};
      case Basis::simple_root: return {to_simple_coords(amb), target};
      case Basis::fundamental: return {to_fundamental_coords(amb), target};
    }
    throw std::logic_error("unreachable");
  }

  // Fundamental weight for simple root i (inside the root span).
  QVec fundamental_weight(size_t i) const {
    if (fund_.empty()) compute_fundamentals();
    return fund_[i];
  }

  // --- Weyl group ---------------------------------------------------------

  QVec weyl_act(const std::vector<size_t>& word, QVec v) const {
    // Reflections applied left to right.
    for (size_t idx : word) {
      if (idx >= rank()) throw std::invalid_argument("reflection index out of range");
      v = reflect(v, simples_[idx]);
    }
    return v;
  }

  // Orbit of v under the group generated by reflections in the given roots.
  std::vector<QVec> orbit(const QVec& v, const std::vector<QVec>& generators) const {
    std::set<QVec> seen{v};
    std::vector<QVec> frontier{v};
    while (!frontier.empty()) {
      std::vector<QVec> next;
      for (const auto& x : frontier)
        for (const auto& g : generators) {
          QVec y = reflect(x, g);
          if (seen.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  // All elements of the reflection group generated by the given roots, as
  // (matrix, determinant sign) pairs. Guarded by an element cap.
  std::vector<std::pair<QMatrix, int>> weyl_elements(const std::vector<QVec>& generators,
                                                     size_t cap = 100000) const {
    std::vector<QMatrix> gens;
    for (const auto& g : generators) gens.push_back(reflection_matrix(g));
    std::map<std::vector<Rat>, size_t> seen;
    std::vector<std::pair<QMatrix, int>> out;
    QMatrix id = QMatrix::identity(dim_);
    auto key = [this](const QMatrix& m) {
      std::vector<Rat> k;
      k.reserve(dim_ * dim_);
      for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) k.push_back(m(i, j));
      return k;
    };
    seen[key(id)] = 0;
    out.emplace_back(id, 1);
    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
      std::vector<size_t> next;
      for (size_t fi : frontier)
        for (const auto& g : gens) {
          QMatrix m = g * out[fi].first;
          auto k = key(m);
          if (seen.count(k)) continue;
          if (out.size() >= cap) throw std::runtime_error("weyl group cap exceeded");
          seen[k] = out.size();
          next.push_back(out.size());
          out.emplace_back(std::move(m), -out[fi].second);
        }
      frontier = std::move(next);
    }
    return out;
  }

  QMatrix reflection_matrix(const QVec& alpha) const {
    QMatrix m = QMatrix::identity(dim_);
    QVec fa = form_.apply(alpha);
    Rat n = inner(alpha, alpha);
    for (size_t i = 0; i < dim_; ++i)
      for (size_t j = 0; j < dim_; ++j) m(i, j) -= Rat(2) * alpha[i] * fa[j] / n;
    return m;
  }

  // Dominant representative under the full Weyl group; also reports the
  // determinant sign of the chamber-moving element and whether v is regular.
  struct Dominated {
    QVec v;
    int sign = 1;
    bool regular = true;
  };
  Dominated dominantize(QVec v) const {
    Dominated d;
    bool moved = true;
    while (moved) {
      moved = false;
      for (const auto& s : simples_) {
        Rat p = pairing(v, s);
        if (p < 0) {
          v = reflect(v, s);
          d.sign = -d.sign;
          moved = true;
        } else if (p == 0) {
          d.regular = false;
        }
      }
    }
    // regularity must be evaluated at the dominant point (zeros can appear late)
    d.regular = true;
    for (const auto& s : simples_)
      if (pairing(v, s) == 0) d.regular = false;
    d.v = v;
    return d;
  }

  // Connected components of the Dynkin diagram, as index sets into simples().
  std::vector<std::vector<size_t>> factors() const {
    std::vector<std::vector<size_t>> comps;
    std::vector<bool> used(rank(), false);
    for (size_t i = 0; i < rank(); ++i) {
      if (used[i]) continue;
      std::vector<size_t> comp{i};
      used[i] = true;
      for (size_t k = 0; k < comp.size(); ++k)
        for (size_t j = 0; j < rank(); ++j)
          if (!used[j] && inner(simples_[comp[k]], simples_[j]) != 0) {
            used[j] = true;
            comp.push_back(j);
          }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  // Cartan type of each diagram component, e.g. "A1 x C3".
  std::string type_name() const;

 private:
  QMatrix simple_matrix() const {
    QMatrix m(rank(), dim_);
    for (size_t i = 0; i < rank(); ++i)
      for (size_t j = 0; j < dim_; ++j) m(i, j) = simples_[i][j];
    return m;
  }

  void generate_roots() {
    std::map<QVec, std::vector<long>> coeff;
    std::vector<QVec> frontier;
    for (size_t i = 0; i < rank(); ++i) {
      std::vector<long> c(rank(), 0);
      c[i] = 1;
      coeff[simples_[i]] = c;
      frontier.push_back(simples_[i]);
      c[i] = -1;
      coeff[simples_[i] * Rat(-1)] = c;
      frontier.push_back(simples_[i] * Rat(-1));
    }
    while (!frontier.empty()) {
      std::vector<QVec> next;
      for (const auto& r : frontier)
        for (size_t i = 0; i < rank(); ++i) {
          Rat p = pairing(r, simples_[i]);
          if (!is_integer(p)) throw std::invalid_argument("non-integral Cartan pairing");
          QVec s = reflect(r, simples_[i]);
          if (coeff.count(s)) continue;
          std::vector<long> c = coeff[r];
          c[i] -= to_long(p);
          coeff[s] = c;
          next.push_back(s);
        }
      frontier = std::move(next);
    }
    for (auto& [v, c] : coeff) {
      Root r;
      r.v = v;
      r.simple_coeff = c;
      for (long x : c) r.height += x;
      roots_.push_back(std::move(r));
    }
    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
      if (a.height != b.height) return a.height < b.height;
      return a.v < b.v;
    });
    for (size_t i = 0; i < roots_.size(); ++i) index_[roots_[i].v] = i;
    if (roots_.size() > 400) throw std::runtime_error("root system unexpectedly large");
  }

  void compute_fundamentals() const {
    // omega_i = sum_k c_k alpha_k with <omega_i, alpha_j-check> = delta_ij.
    QMatrix a(rank(), rank());
    for (size_t k = 0; k < rank(); ++k)
      for (size_t j = 0; j < rank(); ++j) a(j, k) = pairing(simples_[k], simples_[j]);
    QMatrix inv = a.inverse();
    for (size_t i = 0; i < rank(); ++i) {
      QVec w = zero_vec(dim_);
      for (size_t k = 0; k < rank(); ++k) w += simples_[k] * inv(k, i);
      fund_.push_back(w);
    }
  }

  size_t dim_;
  QMatrix form_;
  std::vector<QVec> simples_;
  std::string label_;
  std::vector<Root> roots_;
  std::map<QVec, size_t> index_;
  mutable std::vector<QVec> fund_;
};

// ---------- constructors ----------

namespace detail {
inline QVec eps(size_t dim, size_t i, const Rat& c = Rat(1)) {
  QVec v = zero_vec(dim);
  v[i] = c;
  return v;
}
}  // namespace detail

inline RootDatum RootDatum::build(const std::string& type, int rank) {
  using detail::eps;
  auto ident = [](size_t n) { return QMatrix::identity(n); };
  if (type == "A" && rank >= 1) {
    size_t d = rank + 1;
    std::vector<QVec> s;
    for (int i = 0; i < rank; ++i) s.push_back(eps(d, i) - eps(d, i + 1));
    return RootDatum(d, ident(d), s, "A" + std::to_string(rank));
  }
  if (type == "B" && rank >= 2) {
    size_t d = rank;
    std::vector<QVec> s;
    for (int i = 0; i + 1 < rank; ++i) s.push_back(eps(d, i) - eps(d, i + 1));
    s.push_back(eps(d, rank - 1));
    return RootDatum(d, ident(d), s, "B" + std::to_string(rank));
  }
  if (type == "C" && rank >= 2) {
    size_t d = rank;
    std::vector<QVec> s;
    for (int i = 0; i + 1 < rank; ++i) s.push_back(eps(d, i) - eps(d, i + 1));
    s.push_back(eps(d, rank - 1, Rat(2)));
    return RootDatum(d, ident(d), s, "C" + std::to_string(rank));
  }
  if (type == "D" && rank >= 3) {
    size_t d = rank;
    std::vector<QVec> s;
    for (int i = 0; i + 1 < rank; ++i) s.push_back(eps(d, i) - eps(d, i + 1));
    s.push_back(eps(d, rank - 2) + eps(d, rank - 1));
    return RootDatum(d, ident(d), s, "D" + std::to_string(rank));
  }
  if (type == "E6" || (type == "E" && rank == 6)) {
    size_t d = 8;
    QVec a1(d, Rat(-1, 2));
    a1[0] = Rat(1, 2);
    a1[7] = Rat(1, 2);
    std::vector<QVec> s{a1,
                        eps(d, 0) + eps(d, 1),
                        eps(d, 1) - eps(d, 0),
                        eps(d, 2) - eps(d, 1),
                        eps(d, 3) - eps(d, 2),
                        eps(d, 4) - eps(d, 3)};
    return RootDatum(d, QMatrix::identity(d), s, "E6");
  }
  if (type == "F4" || (type == "F" && rank == 4)) {
    size_t d = 4;
    QVec a4(d, Rat(-1, 2));
    a4[0] = Rat(1, 2);
    std::vector<QVec> s{eps(d, 1) - eps(d, 2), eps(d, 2) - eps(d, 3), eps(d, 3), a4};
    return RootDatum(d, QMatrix::identity(d), s, "F4");
  }
  throw std::invalid_argument("unsupported Cartan type: " + type + std::to_string(rank));
}

inline RootDatum RootDatum::product(const std::vector<RootDatum>& factors) {
  size_t dim = 0;
  for (const auto& f : factors) dim += f.dim();
  QMatrix form(dim, dim);
  std::vector<QVec> simples;
  std::string label;
  size_t off = 0;
  for (const auto& f : factors) {
    for (size_t i = 0; i < f.dim(); ++i)
      for (size_t j = 0; j < f.dim(); ++j) form(off + i, off + j) = f.form()(i, j);
    for (const auto& s : f.simples()) {
      QVec v = zero_vec(dim);
      for (size_t i = 0; i < f.dim(); ++i) v[off + i] = s[i];
      simples.push_back(v);
    }
    label += (label.empty() ? "" : " x ") + f.label();
    off += f.dim();
  }
  return RootDatum(dim, form, simples, label);
}

inline RootDatum RootDatum::from_roots(size_t dim, const QMatrix& form,
                                       const std::vector<QVec>& roots, const std::string& label) {
  std::set<QVec> rs(roots.begin(), roots.end());
  for (const auto& r : rs) {
    if (is_zero(r)) throw std::invalid_argument("from_roots: zero vector");
    if (!rs.count(r * Rat(-1))) throw std::invalid_argument("from_roots: not negation-closed");
  }
  auto lex_positive = [](const QVec& v) {
    for (const auto& x : v) {
      if (x > 0) return true;
      if (x < 0) return false;
    }
    return false;
  };
  std::vector<QVec> pos;
  for (const auto& r : rs)
    if (lex_positive(r)) pos.push_back(r);
  std::set<QVec> posset(pos.begin(), pos.end());
  std::vector<QVec> simples;
  for (const auto& p : pos) {
    bool decomposable = false;
    for (const auto& q : pos) {
      QVec diff = p - q;
      if (!is_zero(diff) && posset.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(p);
  }
  RootDatum rd(dim, form, simples, label);
  if (rd.num_roots() != rs.size()) throw std::invalid_argument("from_roots: not a closed root set");
  for (const auto& r : rd.roots())
    if (!rs.count(r.v)) throw std::invalid_argument("from_roots: closure mismatch");
  return rd;
}

// ---------- positive systems with compactness grading ----------

class PositiveSystem {
 public:
  // parity: one bit per simple root of rd (1 = noncompact); extended
  // additively to every root through its simple-root expansion.
  // The standard system: positives are the roots with positive height.
  static PositiveSystem standard(const RootDatum& rd, std::vector<int> parity) {
    PositiveSystem ps(rd, std::move(parity));
    for (size_t i = 0; i < rd.num_roots(); ++i)
      if (rd.roots()[i].height > 0) ps.positive_[i] = true;
    ps.finish("standard");
    return ps;
  }

  // Positives selected by a regular vector: alpha > 0 iff (v, alpha) > 0.
  static PositiveSystem from_vector(const RootDatum& rd, std::vector<int> parity, const QVec& v) {
    PositiveSystem ps(rd, std::move(parity));
    for (size_t i = 0; i < rd.num_roots(); ++i) {
      Rat p = rd.inner(v, rd.roots()[i].v);
      if (p == 0) throw std::invalid_argument("positivity vector not regular");
      ps.positive_[i] = p > 0;
    }
    ps.finish("vector");
    return ps;
  }

  const RootDatum& datum() const { return *rd_; }

  bool is_positive_index(size_t i) const { return positive_[i]; }
  bool is_positive(const QVec& v) const { return positive_[rd_->root_index(v)]; }

  // parity 0 = compact, 1 = noncompact
  int parity_index(size_t i) const {
    long s = 0;
    const auto& c = rd_->roots()[i].simple_coeff;
    for (size_t k = 0; k < c.size(); ++k) s += c[k] * parity_[k];
    return static_cast<int>(((s % 2) + 2) % 2);
  }
  int parity(const QVec& v) const { return parity_index(rd_->root_index(v)); }
  const std::vector<int>& simple_parities() const { return parity_; }

  std::vector<QVec> positives() const { return select(true, true); }
  std::vector<QVec> compact_positives() const { return select(true, false); }
  std::vector<QVec> noncompact_positives() const { return select(false, true); }
  std::vector<QVec> compact_roots() const {
    std::vector<QVec> out;
    for (size_t i = 0; i < rd_->num_roots(); ++i)
      if (parity_index(i) == 0) out.push_back(rd_->roots()[i].v);
    return out;
  }
  std::vector<QVec> noncompact_roots() const {
    std::vector<QVec> out;
    for (size_t i = 0; i < rd_->num_roots(); ++i)
      if (parity_index(i) == 1) out.push_back(rd_->roots()[i].v);
    return out;
  }

  QVec rho() const { return half_sum(true, true); }
  QVec rho_c() const { return half_sum(true, false); }
  QVec rho_n() const { return half_sum(false, true); }

  // Indecomposable positives of this system (its own simple roots).
  const std::vector<QVec>& system_simples() const { return sys_simples_; }

  bool is_dominant(const QVec& v) const {
    for (const auto& s : sys_simples_)
      if (rd_->pairing(v, s) < 0) return false;
    return true;
  }
  bool is_dominant_integral(const QVec& v) const {
    for (const auto& s : sys_simples_) {
      Rat p = rd_->pairing(v, s);
      if (p < 0 || !is_integer(p)) return false;
    }
    return true;
  }
  bool is_regular(const QVec& v) const {
    for (const auto& r : rd_->roots())
      if (rd_->inner(v, r.v) == 0) return false;
    return true;
  }
  bool is_compact_dominant(const QVec& v) const {
    for (const auto& a : compact_positives())
      if (rd_->pairing(v, a) < 0) return false;
    return true;
  }

 private:
  PositiveSystem(const RootDatum& rd, std::vector<int> parity)
      : rd_(&rd), parity_(std::move(parity)), positive_(rd.num_roots(), false) {
    if (parity_.size() != rd.rank()) throw std::invalid_argument("parity size");
    for (int p : parity_)
      if (p != 0 && p != 1) throw std::invalid_argument("parity bits must be 0/1");
  }

  void finish(const std::string& kind) {
    size_t np = 0;
    for (bool b : positive_) np += b;
    if (2 * np != rd_->num_roots()) throw std::logic_error("positive half mismatch: " + kind);
    std::set<QVec> posset;
    for (size_t i = 0; i < rd_->num_roots(); ++i)
      if (positive_[i]) posset.insert(rd_->roots()[i].v);
    for (const auto& p : posset) {
      bool decomposable = false;
      for (const auto& q : posset) {
        QVec diff = p - q;
        if (!is_zero(diff) && posset.count(diff)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) sys_simples_.push_back(p);
    }
  }

  std::vector<QVec> select(bool want_compact, bool want_noncompact) const {
    std::vector<QVec> out;
    for (size_t i = 0; i < rd_->num_roots(); ++i) {
      if (!positive_[i]) continue;
      bool nc = parity_index(i) == 1;
      if ((nc && want_noncompact && !want_compact) || (!nc && want_compact && !want_noncompact) ||
          (want_compact && want_noncompact))
        out.push_back(rd_->roots()[i].v);
    }
    return out;
  }

  QVec half_sum(bool compact, bool noncompact) const {
    QVec s = zero_vec(rd_->dim());
    for (size_t i = 0; i < rd_->num_roots(); ++i) {
      if (!positive_[i]) continue;
      bool nc = parity_index(i) == 1;
      if ((nc && noncompact) || (!nc && compact)) s += rd_->roots()[i].v;
    }
    return s * Rat(1, 2);
  }

  const RootDatum* rd_;
  std::vector<int> parity_;
  std::vector<bool> positive_;
  std::vector<QVec> sys_simples_;
};

struct SystemFlags {
  bool holomorphic = false;
  bool borel_de_siebenthal = false;
  bool unique_noncompact_simple = false;
};

// Coefficient characterization, evaluated per simple factor of the diagram of
// the system's own simple roots. A factor with no noncompact root is vacuous
// for "unique noncompact simple" only if the whole system has none at all.
inline SystemFlags system_flags(const RootDatum& rd, const PositiveSystem& ps) {
  const auto& simples = ps.system_simples();
  size_t r = simples.size();
  // connected components of the system-simple diagram
  std::vector<std::vector<size_t>> comps;
  {
    std::vector<bool> used(r, false);
    for (size_t i = 0; i < r; ++i) {
      if (used[i]) continue;
      std::vector<size_t> comp{i};
      used[i] = true;
      for (size_t k = 0; k < comp.size(); ++k)
        for (size_t j = 0; j < r; ++j)
          if (!used[j] && rd.inner(simples[comp[k]], simples[j]) != 0) {
            used[j] = true;
            comp.push_back(j);
          }
      comps.push_back(std::move(comp));
    }
  }
  // expansion of every positive root in system simples
  QMatrix m(rd.dim(), r);
  for (size_t j = 0; j < r; ++j)
    for (size_t i = 0; i < rd.dim(); ++i) m(i, j) = simples[j][i];
  auto expand = [&](const QVec& v) {
    auto c = m.solve(v);
    if (!c) throw std::logic_error("positive root outside simple span");
    return *c;
  };

  SystemFlags f;
  f.holomorphic = true;
  f.borel_de_siebenthal = true;
  f.unique_noncompact_simple = true;
  bool any_noncompact_root = false;
  for (const auto& v : ps.noncompact_positives()) {
    (void)v;
    any_noncompact_root = true;
    break;
  }
  if (!any_noncompact_root) return {false, false, false};

  for (const auto& comp : comps) {
    std::vector<size_t> noncompact_simples;
    for (size_t idx : comp)
      if (ps.parity(simples[idx]) == 1) noncompact_simples.push_back(idx);
    if (noncompact_simples.size() != 1) {
      f.holomorphic = false;
      f.borel_de_siebenthal = false;
      f.unique_noncompact_simple = false;
      continue;
    }
    size_t beta = noncompact_simples[0];
    bool hol = true, bds = true;
    for (const auto& root : rd.roots()) {
      QVec c = expand(root.v);
      // skip roots from other factors
      bool in_factor = false;
      for (size_t idx : comp)
        if (c[idx] != 0) in_factor = true;
      if (!in_factor) continue;
      Rat cb = c[beta];
      bool compact = ps.parity(root.v) == 0;
      if (cb < -1 || cb > 1 || compact != (cb == 0)) hol = false;
      bool even = is_integer(cb / 2);
      if (cb < -2 || cb > 2 || compact != even) bds = false;
    }
    f.holomorphic = f.holomorphic && hol;
    f.borel_de_siebenthal = f.borel_de_siebenthal && bds;
  }
  return f;
}

// ---------- type classification ----------

inline std::string RootDatum::type_name() const {
  std::vector<std::string> parts;
  for (const auto& comp : factors()) {
    size_t r = comp.size();
    // collect the roots lying in this factor's span
    std::vector<const Root*> rs;
    for (const auto& root : roots_) {
      bool in = false;
      for (size_t idx : comp)
        if (root.simple_coeff[idx] != 0) in = true;
      if (in) rs.push_back(&root);
    }
    std::set<Rat> norms;
    for (auto* root : rs) norms.insert(inner(root->v, root->v));
    size_t n = rs.size();
    std::string name = "?" + std::to_string(r);
    if (norms.size() == 1) {
      if (n == r * (r + 1))
        name = "A" + std::to_string(r);
      else if (r >= 3 && n == 2 * r * (r - 1))
        name = "D" + std::to_string(r);
      else if (r == 6 && n == 72)
        name = "E6";
      else if (r == 7 && n == 126)
        name = "E7";
      else if (r == 8 && n == 240)
        name = "E8";
    } else if (norms.size() == 2) {
      Rat lo = *norms.begin(), hi = *norms.rbegin();
      size_t nshort = 0;
      for (auto* root : rs)
        if (inner(root->v, root->v) == lo) ++nshort;
      size_t nlong = n - nshort;
      if (hi == lo * 4 && r == 2 && n == 12)
        name = "G2";
      else if (r == 4 && n == 48 && nshort == 24)
        name = "F4";
      else if (n == 2 * r * r && nshort == 2 * r)
        name = "B" + std::to_string(r);
      else if (n == 2 * r * r && nlong == 2 * r)
        name = "C" + std::to_string(r);
    }
    if (r == 1) name = "A1";
    if (r == 2 && norms.size() == 2 && n == 8) name = "B2";
    parts.push_back(name);
  }
  if (parts.empty()) return "torus";
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " x ") + p;
  return out;
}

inline std::pair<QVec, QVec> rho_pair(const PositiveSystem& ps) {
  return {ps.rho_c(), ps.rho_n()};
}

}  // namespace branchlab
