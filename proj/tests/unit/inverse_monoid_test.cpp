#include <gtest/gtest.h>

#include <functional>

#include "corpus.hpp"
#include "fcover/inverse_monoid.hpp"
#include "fcover/pipeline.hpp"
#include "fcover/semigroup_bridge.hpp"
#include "oracles.hpp"

namespace fcover {
namespace {

const Carrier kTwo{2};

PartialBijection swap2() {
  return PartialBijection::from_pairs(kTwo, {{0, 1}, {1, 0}});
}
PartialBijection fix0() { return PartialBijection::from_pairs(kTwo, {{0, 0}}); }

MonoidPtr i2() {
  const std::vector<PartialBijection> gens{swap2(), fix0()};
  return std::make_shared<const InverseMonoid>(close_generators(kTwo, gens));
}

MonoidPtr table_monoid(const std::string& name) {
  for (const auto& t : testing::abstract_tables()) {
    if (t.name == name) {
      return std::make_shared<const InverseMonoid>(InverseMonoid::from_semigroup(
          InverseSemigroup::from_mul_table(t.size, t.mul)));
    }
  }
  throw std::runtime_error("no table " + name);
}

Element at(const InverseSemigroup& s, const PartialBijection& f) {
  const auto x = s.find(f);
  if (!x) throw std::runtime_error("missing " + f.to_string());
  return *x;
}

// Semilattice {a, b, 0} with ab = 0: no identity.
InverseSemigroup no_top() {
  return InverseSemigroup::from_mul_table(3, {0, 2, 2, 2, 1, 2, 2, 2, 2});
}

TEST(CloseGenerators, Sizes) {
  EXPECT_EQ(close_generators(kTwo, {}).size(), 1u);
  const std::vector<PartialBijection> t{swap2()};
  EXPECT_EQ(close_generators(kTwo, t).size(), 2u);
  EXPECT_EQ(i2()->size(), 7u);
  EXPECT_EQ(testing::symmetric_inverse_monoid(3).size(), 34u);
}

TEST(CloseGenerators, IdentityIsElementZero) {
  const auto m = i2();
  EXPECT_EQ(m->one(), 0u);
  EXPECT_EQ(m->realization()[0], PartialBijection::identity(kTwo));
}

TEST(CloseGenerators, LimitIsEnforced) {
  const std::vector<PartialBijection> gens{swap2(), fix0()};
  EXPECT_THROW(close_generators(kTwo, gens, 3), Error);
}

TEST(InverseSemigroup, RejectsBrokenTables) {
  // Not associative: x*x = y, y*x = x, x*y = y.
  EXPECT_THROW(InverseSemigroup::from_mul_table(2, {1, 1, 0, 1}), Error);
  // Left-zero band is not inverse.
  EXPECT_THROW(InverseSemigroup::from_mul_table(2, {0, 0, 1, 1}), Error);
  EXPECT_THROW(InverseSemigroup::from_mul_table(2, {0, 2, 1, 1}), Error);
}

TEST(InverseMonoid, FromSemigroupNeedsIdentity) {
  EXPECT_THROW(InverseMonoid::from_semigroup(no_top()), Error);
}

TEST(Idempotents, Examples) {
  EXPECT_EQ(table_monoid("S3")->idempotents().size(), 1u);
  const auto m = i2();
  EXPECT_EQ(m->idempotents().size(), 4u);
  for (Element e : m->idempotents()) {
    EXPECT_TRUE(m->realization()[e].is_idempotent());
  }
  const std::vector<PartialBijection> e{fix0()};
  const auto single = close_generators(kTwo, e);
  EXPECT_EQ(single.size(), 2u);
  EXPECT_EQ(single.idempotents().size(), 2u);
}

TEST(NaturalLeq, Examples) {
  const auto m = i2();
  const Element empty = at(*m, PartialBijection(kTwo));
  const Element t = at(*m, swap2());
  for (Element x = 0; x < m->size(); ++x) EXPECT_TRUE(natural_leq(*m, empty, x));
  EXPECT_TRUE(natural_leq(*m, at(*m, fix0()), m->one()));
  EXPECT_FALSE(natural_leq(
      *m, t, at(*m, PartialBijection::from_pairs(kTwo, {{0, 1}}))));
  EXPECT_TRUE(natural_leq(
      *m, at(*m, PartialBijection::from_pairs(kTwo, {{0, 1}})), t));
}

TEST(NaturalLeq, AgreesWithOraclesOnCorpus) {
  for (const auto& [name, pm] : testing::full_corpus()) {
    const auto& m = *pm.monoid();
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = 0; y < m.size(); ++y) {
        ASSERT_EQ(natural_leq(m, x, y), oracle::leq(m, x, y)) << name;
        ASSERT_EQ(natural_leq(m, x, y),
                  oracle::restricts(m.realization()[x], m.realization()[y]))
            << name;
      }
    }
  }
}

TEST(Sigma, Examples) {
  const auto m = i2();
  for (Element x = 0; x < m->size(); ++x) EXPECT_TRUE(sigma_related(*m, x, x));
  EXPECT_TRUE(sigma_related(*m, m->one(), at(*m, swap2())));
}

TEST(SigmaQuotient, Examples) {
  const std::vector<PartialBijection> e{fix0()};
  const auto semilattice =
      std::make_shared<const InverseMonoid>(close_generators(kTwo, e));
  EXPECT_EQ(sigma_quotient(semilattice).group->size(), 1u);

  const auto s3 = table_monoid("S3");
  const auto q = sigma_quotient(s3);
  EXPECT_EQ(q.group->size(), 6u);
  EXPECT_TRUE(check_cover(q.projection).ok());

  EXPECT_EQ(sigma_quotient(i2()).group->size(), 1u);
}

TEST(SigmaQuotient, ProjectionIsHomomorphismOntoGroup) {
  for (const auto& [name, pm] : testing::full_corpus()) {
    const auto q = sigma_quotient(pm.monoid());
    EXPECT_TRUE(q.group->is_group()) << name;
    const auto report = check_cover(q.projection);
    EXPECT_TRUE(report.surjective && report.homomorphic) << name;
    for (Element x = 0; x < pm.size(); ++x) {
      for (Element y = 0; y < pm.size(); ++y) {
        EXPECT_EQ(q.projection(x) == q.projection(y),
                  oracle::sigma(*pm.monoid(), x, y))
            << name;
      }
    }
  }
}

// Every partition of 0..n-1 as a class-index vector, by restricted growth
// strings.
void for_each_partition(std::size_t n,
                        const std::function<void(const std::vector<Element>&)>& f) {
  std::vector<Element> cls(n, 0);
  std::function<void(std::size_t, Element)> rec = [&](std::size_t i,
                                                      Element blocks) {
    if (i == n) {
      f(cls);
      return;
    }
    for (Element b = 0; b <= blocks; ++b) {
      cls[i] = b;
      rec(i + 1, std::max<Element>(blocks, b + 1));
    }
  };
  if (n == 0) return;
  cls[0] = 0;
  rec(1, 1);
}

TEST(SigmaQuotient, IsTheMinimumGroupCongruence) {
  std::size_t tables = 0, congruences = 0;
  for (const auto& t : testing::abstract_tables()) {
    const auto m = InverseMonoid::from_semigroup(
        InverseSemigroup::from_mul_table(t.size, t.mul));
    const auto sigma = sigma_classes(m);
    ++tables;
    for_each_partition(m.size(), [&](const std::vector<Element>& cls) {
      for (Element x = 0; x < m.size(); ++x) {
        for (Element y = 0; y < m.size(); ++y) {
          if (cls[x] != cls[y]) continue;
          for (Element z = 0; z < m.size(); ++z) {
            if (cls[m.mul(x, z)] != cls[m.mul(y, z)] ||
                cls[m.mul(z, x)] != cls[m.mul(z, y)]) {
              return;
            }
          }
        }
      }
      for (Element x = 0; x < m.size(); ++x) {
        if (cls[m.mul(x, m.inv(x))] != cls[m.one()]) return;
      }
      ++congruences;
      for (Element x = 0; x < m.size(); ++x) {
        for (Element y = 0; y < m.size(); ++y) {
          if (sigma[x] == sigma[y]) EXPECT_EQ(cls[x], cls[y]) << t.name;
        }
      }
    });
  }
  EXPECT_GE(tables, 15u);
  EXPECT_GE(congruences, tables);
}

TEST(EUnitary, Examples) {
  EXPECT_TRUE(is_e_unitary(*table_monoid("S3")));
  EXPECT_TRUE(is_e_unitary(*table_monoid("diamond")));
  EXPECT_FALSE(is_e_unitary(*i2()));
}

TEST(FInverse, Examples) {
  EXPECT_TRUE(is_f_inverse(*table_monoid("Z6")));
  EXPECT_TRUE(is_f_inverse(*table_monoid("C4")));
  EXPECT_TRUE(is_f_inverse(*table_monoid("diamond")));
  EXPECT_FALSE(is_f_inverse(*i2()));
  EXPECT_THROW(is_f_inverse(no_top()), Error);
}

TEST(Predicates, AgreeWithOraclesAndFInverseImpliesEUnitary) {
  for (const auto& [name, pm] : testing::full_corpus()) {
    const auto& m = *pm.monoid();
    const bool e = is_e_unitary(m), f = is_f_inverse(m);
    EXPECT_EQ(e, oracle::e_unitary(m)) << name;
    EXPECT_EQ(f, oracle::f_inverse(m)) << name;
    if (f) EXPECT_TRUE(e) << name;
  }
}

TEST(WagnerPreston, Examples) {
  const auto trivial = std::make_shared<const InverseMonoid>(InverseMonoid::trivial());
  const auto wt = wagner_preston(trivial);
  ASSERT_EQ(wt.image->size(), 1u);
  EXPECT_EQ(wt.image->realization()[0], PartialBijection::identity(Carrier{1}));

  const auto z2 = wagner_preston(table_monoid("Z2"));
  ASSERT_EQ(z2.image->size(), 2u);
  EXPECT_EQ(z2.image->realization()[1],
            PartialBijection::from_pairs(kTwo, {{0, 1}, {1, 0}}));

  const auto c2 = wagner_preston(table_monoid("C2"));
  ASSERT_EQ(c2.image->size(), 2u);
  EXPECT_TRUE(c2.image->realization()[0].is_idempotent());
  EXPECT_TRUE(c2.image->realization()[1].is_idempotent());
  EXPECT_NE(c2.image->realization()[0], c2.image->realization()[1]);
}

TEST(WagnerPreston, InjectiveAndMultiplicative) {
  for (const auto& t : testing::abstract_tables()) {
    const auto m = std::make_shared<const InverseMonoid>(InverseMonoid::from_semigroup(
        InverseSemigroup::from_mul_table(t.size, t.mul)));
    const auto wp = wagner_preston(m);
    const auto& maps = wp.image->realization();
    std::set<PartialBijection> distinct;
    for (Element x = 0; x < m->size(); ++x) {
      distinct.insert(maps[wp.embedding(x)]);
      for (Element y = 0; y < m->size(); ++y) {
        EXPECT_EQ(compose(maps[wp.embedding(x)], maps[wp.embedding(y)]),
                  maps[wp.embedding(m->mul(x, y))])
            << t.name;
      }
    }
    EXPECT_EQ(distinct.size(), m->size()) << t.name;
  }
}

// -- semigroup bridge --

SemigroupPtr single_idempotent() {
  return std::make_shared<const InverseSemigroup>(
      InverseSemigroup::from_mul_table(1, {0}));
}

TEST(AdjoinIdentity, Examples) {
  const auto a = adjoin_identity(single_idempotent());
  EXPECT_EQ(a.monoid->size(), 2u);
  EXPECT_EQ(a.adjoined, 1u);
  EXPECT_EQ(a.monoid->one(), 1u);
  EXPECT_EQ(a.monoid->idempotents().size(), 2u);

  const auto z3 = adjoin_identity(table_monoid("Z3"));
  EXPECT_EQ(z3.monoid->size(), 4u);
  EXPECT_EQ(z3.monoid->one(), 3u);
  EXPECT_TRUE(z3.monoid->is_idempotent(0));
  EXPECT_FALSE(z3.monoid->is_unit(0));
}

TEST(DetectIdentity, Examples) {
  EXPECT_EQ(detect_identity(*table_monoid("S3")), Element{0});
  EXPECT_EQ(detect_identity(*single_idempotent()), Element{0});
  EXPECT_FALSE(detect_identity(no_top()));
}

TEST(RestrictTo, RejectsNonClosed) {
  const auto m = i2();
  const std::vector<Element> just_swap{at(*m, swap2())};
  EXPECT_THROW(restrict_to(*m, just_swap), Error);
}

Homomorphism identity_hom(const SemigroupPtr& s) {
  Homomorphism h{s, s, std::vector<Element>(s->size())};
  for (Element x = 0; x < s->size(); ++x) h.map[x] = x;
  return h;
}

TEST(StripKernel, IdentityOnSOne) {
  const SemigroupPtr s = table_monoid("S3");
  const auto a = adjoin_identity(s);
  const auto stripped = strip_kernel(identity_hom(a.monoid), a);
  EXPECT_EQ(stripped.semigroup->size(), 6u);
  EXPECT_EQ(stripped.semigroup->mul_table(), s->mul_table());
  EXPECT_TRUE(check_cover(stripped.cover).ok());

  const auto t = adjoin_identity(table_monoid("Z1"));
  EXPECT_EQ(strip_kernel(identity_hom(t.monoid), t).semigroup->size(), 1u);
}

TEST(StripKernel, RejectsWrongTarget) {
  const auto a = adjoin_identity(table_monoid("Z2"));
  const auto b = adjoin_identity(table_monoid("Z2"));
  EXPECT_THROW(strip_kernel(identity_hom(a.monoid), b), Error);
}

TEST(OrderIdealConditions, Examples) {
  const auto m = i2();
  std::vector<Element> all(m->size());
  for (Element x = 0; x < m->size(); ++x) all[x] = x;
  EXPECT_EQ(order_ideal_conditions(*m, all), (OrderIdealConditions{true, true}));
  const std::vector<Element> one{m->one()};
  EXPECT_FALSE(order_ideal_conditions(*m, one).order_ideal);
}

// Covers of S^1 come from the e-unitary pipeline run on a P-generated
// version of S^1, so they are surjective and idempotent-separating.
TEST(StripKernel, PipelineCoversOfAdjoinedMonoids) {
  for (const char* name : {"Z2", "Z3", "S3", "C3", "diamond", "Z2^0"}) {
    const auto a = adjoin_identity(table_monoid(name));
    const auto pm = testing::generated_by_all(a.monoid);
    const auto cover = build_e_unitary_cover(pm);
    Homomorphism theta{cover.theta.source, a.monoid, cover.theta.map};
    const auto stripped = strip_kernel(theta, a);
    EXPECT_TRUE(check_cover(stripped.cover).ok()) << name;
    EXPECT_TRUE(is_e_unitary(*stripped.semigroup)) << name;
    EXPECT_EQ(order_ideal_conditions(*cover.theta.source, stripped.members),
              (OrderIdealConditions{true, true}))
        << name;
    // S is a monoid here, so the stripped cover must be one too.
    EXPECT_TRUE(detect_identity(*stripped.semigroup).has_value()) << name;
  }
}

}  // namespace
}  // namespace fcover
