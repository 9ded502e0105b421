// Finite dimensional representation combinatorics over a root datum: Weyl
// dimension, Freudenthal weight multiplicities, tensor and restriction
// decompositions, vector partition counts, and the alternating-sum formula
// for lowest-type modules.  Everything is exact.
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <branchlab/rootdatum.hpp>

namespace branchlab {

using WeightMults = std::map<QVec, Int>;

inline void validate_dominant_integral(const RootDatum& rd, const QVec& hw) {
  for (const QVec& s : rd.simples()) {
    Rat p = rd.pairing(hw, s);
    if (!is_integer(p) || p < 0)
      throw std::invalid_argument("highest weight is not dominant integral: " + to_string(hw));
  }
}

inline QVec rho_of(const RootDatum& rd) {
  QVec r = zero_vec(rd.dim());
  for (const Root& g : rd.roots())
    if (g.height > 0) r += g.v;
  return Rat(1, 2) * r;
}

inline Rat weyl_dim(const RootDatum& rd, const QVec& hw) {
  validate_dominant_integral(rd, hw);
  QVec rho = rho_of(rd);
  Rat num = 1, den = 1;
  for (const Root& g : rd.roots())
    if (g.height > 0) {
      num *= rd.inner(hw + rho, g.v);
      den *= rd.inner(rho, g.v);
    }
  return num / den;
}

// Freudenthal recursion over the dominant weights of V(hw).
inline WeightMults dominant_weight_mults(const RootDatum& rd, const QVec& hw) {
  validate_dominant_integral(rd, hw);
  QVec lowest = Rat(-1) * rd.dominantize(Rat(-1) * hw).v;
  QVec span = rd.to_simple_coords(hw - lowest);
  std::vector<long> box(rd.rank());
  for (size_t i = 0; i < rd.rank(); ++i) box[i] = to_long(span[i]);

  // dominant candidates hw - sum c_i alpha_i inside the box, by depth
  std::vector<std::pair<long, QVec>> cands;  // (height of the drop, weight)
  std::vector<long> c(rd.rank(), 0);
  while (true) {
    QVec mu = hw;
    long ht = 0;
    for (size_t i = 0; i < rd.rank(); ++i) {
      mu = mu - Rat(c[i]) * rd.simples()[i];
      ht += c[i];
    }
    bool dom = true;
    for (const QVec& s : rd.simples())
      if (rd.pairing(mu, s) < 0) {
        dom = false;
        break;
      }
    if (dom) cands.emplace_back(ht, mu);
    size_t j = 0;
    while (j < rd.rank() && c[j] == box[j]) c[j++] = 0;
    if (j == rd.rank()) break;
    ++c[j];
  }
  std::sort(cands.begin(), cands.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  QVec rho = rho_of(rd);
  Rat top = rd.inner(hw + rho, hw + rho);
  WeightMults out;
  for (const auto& [ht, mu] : cands) {
    if (ht == 0) {
      out[mu] = 1;
      continue;
    }
    Rat num = 0;
    for (const Root& g : rd.roots()) {
      if (g.height <= 0) continue;
      for (long k = 1;; ++k) {
        QVec up = mu + Rat(k) * g.v;
        auto it = out.find(rd.dominantize(up).v);
        if (it == out.end()) break;  // weight strings are intervals
        num += 2 * rd.inner(up, g.v) * Rat(it->second);
      }
    }
    Rat den = top - rd.inner(mu + rho, mu + rho);
    Rat m = num / den;
    if (!is_integer(m) || m < 0) throw std::logic_error("weight recursion produced a bad value");
    if (m > 0) out[mu] = Int(m.get_num());
  }
  return out;
}

inline WeightMults all_weight_mults(const RootDatum& rd, const QVec& hw) {
  WeightMults out;
  for (const auto& [mu, m] : dominant_weight_mults(rd, hw))
    for (const QVec& w : rd.orbit(mu, rd.simples())) out[w] = m;
  return out;
}

inline WeightMults push_weights(const WeightMults& wm, const QMatrix& q) {
  WeightMults out;
  for (const auto& [w, m] : wm) out[q.apply(w)] += m;
  return out;
}

// Peel a virtual-character-free weight multiset into irreducible characters
// of `sub`; weights must sit in sub's ambient space.
inline std::map<QVec, Int> extract_characters(const RootDatum& sub, WeightMults pool) {
  QVec rho2 = Rat(2) * rho_of(sub);
  std::map<QVec, Int> out;
  for (auto it = pool.begin(); it != pool.end();)
    it = (it->second == 0) ? pool.erase(it) : std::next(it);
  while (!pool.empty()) {
    auto best = pool.begin();
    Rat best_key = sub.inner(best->first, rho2);
    for (auto it = std::next(pool.begin()); it != pool.end(); ++it) {
      Rat key = sub.inner(it->first, rho2);
      if (key > best_key || (key == best_key && it->first > best->first)) {
        best = it;
        best_key = key;
      }
    }
    QVec mu = best->first;
    Int mult = best->second;
    if (mult < 0) throw std::domain_error("negative multiplicity at a maximal weight");
    validate_dominant_integral(sub, mu);  // otherwise the pool was not a character
    out[mu] += mult;
    for (const auto& [w, m] : all_weight_mults(sub, mu)) {
      pool[w] -= mult * m;
      if (pool[w] == 0) pool.erase(w);
    }
  }
  return out;
}

inline std::map<QVec, Int> tensor_decompose(const RootDatum& rd, const QVec& a, const QVec& b) {
  WeightMults wa = all_weight_mults(rd, a), wb = all_weight_mults(rd, b);
  WeightMults conv;
  for (const auto& [x, mx] : wa)
    for (const auto& [y, my] : wb) conv[x + y] += mx * my;
  return extract_characters(rd, conv);
}

// Single Littlewood-Richardson style coefficient through the alternating
// Weyl sum; independent of the convolution route above.
inline Int tensor_multiplicity(const RootDatum& rd, const QVec& a, const QVec& b, const QVec& c) {
  WeightMults wb = all_weight_mults(rd, b);
  QVec rho = rho_of(rd);
  Int total = 0;
  for (const auto& [m, sign] : rd.weyl_elements(rd.simples())) {
    auto it = wb.find(m.apply(c + rho) - (a + rho));
    if (it != wb.end()) total += Int(sign) * it->second;
  }
  return total;
}

inline std::map<QVec, Int> restrict_decompose(const RootDatum& parent, const QVec& hw,
                                              const RootDatum& sub, const QMatrix& q) {
  return extract_characters(sub, push_weights(all_weight_mults(parent, hw), q));
}

// Number of ways to write a vector as a nonnegative integer combination of
// the generators, with memoization; generators must be positive roots (or at
// least have nonnegative integer simple coordinates).
class KostantPartition {
 public:
  KostantPartition(const RootDatum& rd, const std::vector<QVec>& gens) : rd_(rd) {
    for (const QVec& g : gens) {
      std::vector<long> c = integer_coords(rd_.to_simple_coords(g));
      long ht = 0;
      for (long x : c) {
        if (x < 0) throw std::invalid_argument("partition generator outside the positive cone");
        ht += x;
      }
      if (ht == 0) throw std::invalid_argument("zero partition generator");
      gens_.push_back(std::move(c));
    }
  }

  Int count(const QVec& v) const {
    if (!rd_.in_root_span(v)) return 0;
    QVec c = rd_.to_simple_coords(v);
    for (const Rat& x : c)
      if (!is_integer(x) || x < 0) return 0;
    return rec(integer_coords(c), 0);
  }

 private:
  static std::vector<long> integer_coords(const QVec& c) {
    std::vector<long> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = to_long(c[i]);
    return out;
  }

  Int rec(std::vector<long> v, size_t i) const {
    bool zero = true;
    for (long x : v) zero = zero && x == 0;
    if (zero) return 1;
    if (i == gens_.size()) return 0;
    auto key = std::make_pair(v, i);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    Int total = 0;
    std::vector<long> u = v;
    while (true) {
      total += rec(u, i + 1);
      bool ok = true;
      for (size_t j = 0; j < u.size(); ++j) {
        u[j] -= gens_[i][j];
        ok = ok && u[j] >= 0;
      }
      if (!ok) break;
    }
    memo_[key] = total;
    return total;
  }

  RootDatum rd_;
  std::vector<std::vector<long>> gens_;
  mutable std::map<std::pair<std::vector<long>, size_t>, Int> memo_;
};

// Multiplicity of the compact type with highest weight mu in the lowest-type
// module attached to (ps, nu): an alternating sum over the Weyl group of the
// compact subsystem of vector partition counts over the noncompact positives.
class LowestTypeSpectrum {
 public:
  LowestTypeSpectrum(const RootDatum& rd, const PositiveSystem& ps, QVec nu)
      : nu_(std::move(nu)),
        rho_l_(ps.rho_c()),
        kp_(rd, ps.noncompact_positives()) {
    std::vector<QVec> cpos = ps.compact_positives();
    std::set<QVec> cset(cpos.begin(), cpos.end());
    std::vector<QVec> gens;
    for (const QVec& g : cpos) {
      bool simple = true;
      for (const QVec& a : cpos) {
        if (cset.count(g - a) && !is_zero(g - a)) {
          simple = false;
          break;
        }
      }
      if (simple) gens.push_back(g);
    }
    wl_ = rd.weyl_elements(gens);
  }

  Int multiplicity(const QVec& mu) const {
    Int total = 0;
    for (const auto& [m, sign] : wl_) total += Int(sign) * kp_.count(m.apply(mu + rho_l_) - nu_ - rho_l_);
    return total;
  }

 private:
  QVec nu_, rho_l_;
  std::vector<std::pair<QMatrix, int>> wl_;
  KostantPartition kp_;
};

inline Int blattner_multiplicity(const RootDatum& rd, const PositiveSystem& ps, const QVec& nu,
                                 const QVec& mu) {
  return LowestTypeSpectrum(rd, ps, nu).multiplicity(mu);
}

}  // namespace branchlab
