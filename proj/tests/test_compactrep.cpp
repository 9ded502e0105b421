#include <catch2/catch_amalgamated.hpp>

#include <branchlab/compactrep.hpp>

using namespace branchlab;

namespace {

QVec fund(const RootDatum& rd, std::vector<long> c) {
  QVec f(c.size());
  for (size_t i = 0; i < c.size(); ++i) f[i] = c[i];
  return rd.from_fundamental_coords(f);
}

Int total_dim(const RootDatum& rd, const WeightMults& wm) {
  Int n = 0;
  for (const auto& [w, m] : wm) n += m;
  return n;
}

// Weight multiset of Sym^d of a list of weights, by direct monomial count.
WeightMults sym_power(size_t dim, const std::vector<QVec>& wts, long d) {
  std::map<long, WeightMults> acc;  // degree -> multiset
  acc[0][zero_vec(dim)] = 1;
  // multiply one variable at a time: Sym of a sum splits variable by variable
  for (const QVec& w : wts) {
    std::map<long, WeightMults> next;
    for (const auto& [deg, wm] : acc)
      for (const auto& [v, m] : wm)
        for (long k = 0; deg + k <= d; ++k) next[deg + k][v + Rat(k) * w] += m;
    acc = std::move(next);
  }
  return acc[d];
}

}  // namespace

TEST_CASE("dimension formula on pinned examples") {
  RootDatum a2 = RootDatum::build("A", 2);
  CHECK(weyl_dim(a2, fund(a2, {1, 0})) == 3);
  CHECK(weyl_dim(a2, fund(a2, {1, 1})) == 8);
  CHECK(weyl_dim(a2, fund(a2, {3, 0})) == 10);

  RootDatum c3 = RootDatum::build("C", 3);
  CHECK(weyl_dim(c3, fund(c3, {1, 0, 0})) == 6);
  CHECK(weyl_dim(c3, fund(c3, {0, 1, 0})) == 14);
  CHECK(weyl_dim(c3, fund(c3, {0, 0, 1})) == 14);

  RootDatum b3 = RootDatum::build("B", 3);
  CHECK(weyl_dim(b3, fund(b3, {1, 0, 0})) == 7);
  CHECK(weyl_dim(b3, fund(b3, {0, 0, 1})) == 8);

  RootDatum a5 = RootDatum::build("A", 5);
  CHECK(weyl_dim(a5, fund(a5, {0, 0, 1, 0, 0})) == 20);

  RootDatum f4 = RootDatum::build("F4", 4);
  CHECK(weyl_dim(f4, fund(f4, {1, 0, 0, 0})) == 52);
  CHECK(weyl_dim(f4, fund(f4, {0, 0, 0, 1})) == 26);

  RootDatum e6 = RootDatum::build("E6", 6);
  CHECK(weyl_dim(e6, fund(e6, {1, 0, 0, 0, 0, 0})) == 27);
  CHECK(weyl_dim(e6, fund(e6, {0, 1, 0, 0, 0, 0})) == 78);
  CHECK(weyl_dim(e6, fund(e6, {0, 0, 0, 0, 0, 1})) == 27);
}

TEST_CASE("weight multiplicities on pinned examples") {
  RootDatum a2 = RootDatum::build("A", 2);
  auto adj = dominant_weight_mults(a2, fund(a2, {1, 1}));
  REQUIRE(adj.size() == 2);
  CHECK(adj.at(fund(a2, {1, 1})) == 1);
  CHECK(adj.at(zero_vec(3)) == 2);

  auto sym3 = dominant_weight_mults(a2, fund(a2, {3, 0}));
  REQUIRE(sym3.size() == 3);
  for (const auto& [w, m] : sym3) CHECK(m == 1);

  RootDatum c3 = RootDatum::build("C", 3);
  auto lam2 = dominant_weight_mults(c3, fund(c3, {0, 1, 0}));
  CHECK(lam2.at(zero_vec(3)) == 2);
  CHECK(lam2.at(fund(c3, {0, 1, 0})) == 1);
  auto lam3 = dominant_weight_mults(c3, fund(c3, {0, 0, 1}));
  CHECK(lam3.at(fund(c3, {0, 0, 1})) == 1);
  CHECK(lam3.at(fund(c3, {1, 0, 0})) == 1);
  CHECK(lam3.count(zero_vec(3)) == 0);

  RootDatum b3 = RootDatum::build("B", 3);
  auto spin = all_weight_mults(b3, fund(b3, {0, 0, 1}));
  CHECK(spin.size() == 8);
  for (const auto& [w, m] : spin) CHECK(m == 1);
}

TEST_CASE("weight multiset sizes match the dimension formula") {
  for (const auto& [type, rank, fc] : std::vector<std::tuple<std::string, int, std::vector<long>>>{
           {"A", 2, {2, 1}},
           {"B", 2, {1, 1}},
           {"C", 3, {1, 0, 1}},
           {"D", 4, {0, 1, 0, 0}},
           {"F4", 4, {0, 0, 0, 1}},
           {"E6", 6, {1, 0, 0, 0, 0, 0}}}) {
    RootDatum rd = RootDatum::build(type, rank);
    QVec hw = fund(rd, fc);
    CHECK(Rat(total_dim(rd, all_weight_mults(rd, hw))) == weyl_dim(rd, hw));
  }
}

TEST_CASE("tensor decompositions") {
  RootDatum a1 = RootDatum::build("A", 1);
  auto cg = tensor_decompose(a1, fund(a1, {2}), fund(a1, {2}));
  REQUIRE(cg.size() == 3);
  CHECK(cg.at(fund(a1, {4})) == 1);
  CHECK(cg.at(fund(a1, {2})) == 1);
  CHECK(cg.at(zero_vec(2)) == 1);

  RootDatum a2 = RootDatum::build("A", 2);
  auto mixed = tensor_decompose(a2, fund(a2, {1, 0}), fund(a2, {0, 1}));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed.at(fund(a2, {1, 1})) == 1);
  CHECK(mixed.at(zero_vec(3)) == 1);

  auto square = tensor_decompose(a2, fund(a2, {1, 0}), fund(a2, {1, 0}));
  CHECK(square.at(fund(a2, {2, 0})) == 1);
  CHECK(square.at(fund(a2, {0, 1})) == 1);

  auto adj2 = tensor_decompose(a2, fund(a2, {1, 1}), fund(a2, {1, 1}));
  CHECK(adj2.at(fund(a2, {1, 1})) == 2);
  CHECK(adj2.at(zero_vec(3)) == 1);
  CHECK(adj2.at(fund(a2, {2, 2})) == 1);
  CHECK(adj2.at(fund(a2, {3, 0})) == 1);
  CHECK(adj2.at(fund(a2, {0, 3})) == 1);
  Rat dsum = 0;
  for (const auto& [w, m] : adj2) dsum += Rat(m) * weyl_dim(a2, w);
  CHECK(dsum == 64);

  RootDatum b2 = RootDatum::build("B", 2);
  auto spin2 = tensor_decompose(b2, fund(b2, {0, 1}), fund(b2, {0, 1}));
  REQUIRE(spin2.size() == 3);
  CHECK(spin2.at(fund(b2, {0, 2})) == 1);
  CHECK(spin2.at(fund(b2, {1, 0})) == 1);
  CHECK(spin2.at(zero_vec(2)) == 1);
}

TEST_CASE("alternating-sum route agrees with the convolution route") {
  for (const auto& [type, rank, af, bf] :
       std::vector<std::tuple<std::string, int, std::vector<long>, std::vector<long>>>{
           {"A", 2, {1, 1}, {1, 1}}, {"B", 2, {1, 1}, {0, 1}}, {"C", 3, {0, 1, 0}, {1, 0, 0}}}) {
    RootDatum rd = RootDatum::build(type, rank);
    QVec a = fund(rd, af), b = fund(rd, bf);
    auto dec = tensor_decompose(rd, a, b);
    for (const auto& [c, m] : dec) CHECK(tensor_multiplicity(rd, a, b, c) == m);
    CHECK(tensor_multiplicity(rd, a, b, a + b + Rat(2) * rd.fundamental_weight(0)) == 0);
  }
}

TEST_CASE("restriction to a subdatum in the same ambient space") {
  // unitary rank two inside rank three, aligned with the first simple root
  RootDatum a2 = RootDatum::build("A", 2);
  RootDatum sub = RootDatum::from_roots(
      3, a2.form(), {a2.simples()[0], Rat(-1) * a2.simples()[0]}, "line");
  auto dec = restrict_decompose(a2, fund(a2, {1, 0}), sub, QMatrix::identity(3));
  REQUIRE(dec.size() == 2);
  Int doublet = 0, singlet = 0;
  for (const auto& [w, m] : dec) {
    Rat p = sub.pairing(w, a2.simples()[0]);
    if (p == 1) doublet += m;
    if (p == 0) singlet += m;
  }
  CHECK(doublet == 1);
  CHECK(singlet == 1);

  // vector of so(6) restricted to so(5): one vector plus one trivial
  RootDatum d3 = RootDatum::build("D", 3);
  RootDatum b2in3 = [&] {
    RootDatum b2 = RootDatum::build("B", 2);
    std::vector<QVec> rr;
    for (const Root& r : b2.roots()) rr.push_back(QVec{r.v[0], r.v[1], Rat(0)});
    return RootDatum::from_roots(3, d3.form(), rr, "so5");
  }();
  QMatrix q = QMatrix::identity(3);
  q(2, 2) = 0;
  auto vec = restrict_decompose(d3, QVec{Rat(1), Rat(0), Rat(0)}, b2in3, q);
  REQUIRE(vec.size() == 2);
  CHECK(vec.at(QVec{Rat(1), Rat(0), Rat(0)}) == 1);
  CHECK(vec.at(zero_vec(3)) == 1);
}

TEST_CASE("vector partition counts") {
  RootDatum a2 = RootDatum::build("A", 2);
  QVec a1v = a2.simples()[0], a2v = a2.simples()[1];
  std::vector<QVec> pos{a1v, a2v, a1v + a2v};
  KostantPartition kp(a2, pos);
  CHECK(kp.count(zero_vec(3)) == 1);
  CHECK(kp.count(a1v) == 1);
  CHECK(kp.count(a1v + a2v) == 2);
  CHECK(kp.count(Rat(2) * a1v + a2v) == 2);
  CHECK(kp.count(Rat(2) * (a1v + a2v)) == 3);  // 2(12), (12)+1+2, 1+1+2+2
  CHECK(kp.count(Rat(-1) * a1v) == 0);
  CHECK(kp.count(Rat(1, 2) * a1v) == 0);

  RootDatum b2 = RootDatum::build("B", 2);
  QVec b1 = b2.simples()[0], bb2 = b2.simples()[1];
  KostantPartition kpb(b2, {b1, bb2, b1 + bb2, b1 + Rat(2) * bb2});
  CHECK(kpb.count(b1 + Rat(2) * bb2) == 3);
}

TEST_CASE("lowest-type spectrum for the rank one ladder") {
  RootDatum a1 = RootDatum::build("A", 1);
  PositiveSystem ps = PositiveSystem::standard(a1, {1});
  QVec alpha = a1.simples()[0];
  QVec nu = Rat(3, 2) * alpha;  // any starting character works here
  LowestTypeSpectrum sp(a1, ps, nu);
  for (long d = 0; d <= 8; ++d) CHECK(sp.multiplicity(nu + Rat(d) * alpha) == 1);
  CHECK(sp.multiplicity(nu - alpha) == 0);
  CHECK(sp.multiplicity(nu + Rat(1, 2) * alpha) == 0);
}

TEST_CASE("lowest-type spectrum for the scalar ladder in rank two") {
  RootDatum a2 = RootDatum::build("A", 2);
  PositiveSystem ps = PositiveSystem::standard(a2, {0, 1});
  QVec beta = a2.simples()[0] + a2.simples()[1];  // highest noncompact root
  QVec nu = Rat(4) * a2.fundamental_weight(1);    // trivial on the compact part
  LowestTypeSpectrum sp(a2, ps, nu);
  for (long d = 0; d <= 6; ++d) {
    CHECK(sp.multiplicity(nu + Rat(d) * beta) == 1);
    CHECK(sp.multiplicity(nu + Rat(d) * beta + a2.simples()[1]) == 0);
  }
  CHECK(sp.multiplicity(nu - beta) == 0);

  // independent route: nu tensor the symmetric algebra on the noncompact
  // positives, decomposed under the compact subsystem
  RootDatum usub = RootDatum::from_roots(
      3, a2.form(), {a2.simples()[0], Rat(-1) * a2.simples()[0]}, "compact part");
  for (long d = 0; d <= 6; ++d) {
    WeightMults shifted;
    for (const auto& [w, m] : sym_power(3, ps.noncompact_positives(), d)) shifted[w + nu] += m;
    auto chars = extract_characters(usub, shifted);
    REQUIRE(chars.size() == 1);  // each symmetric power stays irreducible
    for (const auto& [mu, m] : chars) {
      CHECK(mu == nu + Rat(d) * beta);
      CHECK(m == 1);
      CHECK(sp.multiplicity(mu) == m);
    }
  }
}
