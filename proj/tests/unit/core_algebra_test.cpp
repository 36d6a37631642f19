#include <gtest/gtest.h>

#include <random>

#include "fcover/alphabet.hpp"
#include "fcover/closure.hpp"
#include "fcover/partial_bijection.hpp"

namespace fcover {
namespace {

PartialBijection random_pb(std::mt19937& rng, std::size_t n) {
  std::vector<Point> targets(n);
  for (Point i = 0; i < n; ++i) targets[i] = i;
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<Point> images(n);
  for (Point i = 0; i < n; ++i) {
    images[i] = rng() % 3 == 0 ? PartialBijection::kUndefined : targets[i];
  }
  return PartialBijection(Carrier{n}, images);
}

TEST(PartialBijection, RejectsNonInjectiveAndOutOfRange) {
  EXPECT_THROW(PartialBijection(Carrier{2}, {0, 0}), Error);
  EXPECT_THROW(PartialBijection(Carrier{2}, {2, PartialBijection::kUndefined}),
               Error);
  EXPECT_THROW(PartialBijection(Carrier{2}, {0}), Error);
}

TEST(PartialBijection, ComposeWithIdentity) {
  const Carrier c{3};
  const auto f = PartialBijection::from_pairs(c, {{0, 2}, {2, 1}});
  EXPECT_EQ(compose(PartialBijection::identity(c), f), f);
  EXPECT_EQ(compose(f, PartialBijection::identity(c)), f);
}

TEST(PartialBijection, ComposeReadsLeftToRight) {
  const Carrier c{2};
  const auto swap = PartialBijection::from_pairs(c, {{0, 1}, {1, 0}});
  const auto fix0 = PartialBijection::from_pairs(c, {{0, 0}});
  EXPECT_EQ(compose(swap, fix0), PartialBijection::from_pairs(c, {{1, 0}}));
}

TEST(PartialBijection, ComposeRejectsCarrierMismatch) {
  EXPECT_THROW(compose(PartialBijection::identity(Carrier{2}),
                       PartialBijection::identity(Carrier{3})),
               Error);
}

TEST(PartialBijection, ComposeWithInverseIsDomainIdentity) {
  const Carrier c{3};
  const auto f = PartialBijection::from_pairs(c, {{0, 2}, {2, 1}});
  const auto dom = std::vector<Point>{0, 2};
  EXPECT_EQ(compose(f, invert(f)),
            PartialBijection::restriction_of_identity(c, dom));
}

TEST(PartialBijection, InvertExamples) {
  const Carrier c{2};
  EXPECT_EQ(invert(PartialBijection(c)), PartialBijection(c));
  EXPECT_EQ(invert(PartialBijection::from_pairs(c, {{0, 1}})),
            PartialBijection::from_pairs(c, {{1, 0}}));
  const auto swap = PartialBijection::from_pairs(c, {{0, 1}, {1, 0}});
  EXPECT_EQ(invert(swap), swap);
}

TEST(PartialBijection, RandomInverseLaws) {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const auto f = random_pb(rng, n);
    const auto g = random_pb(rng, n);
    const auto fi = invert(f);
    EXPECT_EQ(invert(fi), f);
    EXPECT_EQ(compose(compose(f, fi), f), f);
    EXPECT_EQ(compose(compose(fi, f), fi), fi);
    // Composition stays injective: the constructor would throw otherwise,
    // and the rank cannot grow.
    const auto fg = compose(f, g);
    EXPECT_LE(fg.rank(), std::min(f.rank(), g.rank()));
    for (Point x = 0; x < n; ++x) {
      EXPECT_EQ(fg.defined_at(x), f.defined_at(x) && g.defined_at(f(x)));
      if (fg.defined_at(x)) EXPECT_EQ(fg(x), g(f(x)));
    }
  }
}

TEST(PartialBijection, IdempotentsAreRestrictionsOfIdentity) {
  const Carrier c{3};
  EXPECT_TRUE(PartialBijection::from_pairs(c, {{1, 1}}).is_idempotent());
  EXPECT_FALSE(PartialBijection::from_pairs(c, {{1, 2}}).is_idempotent());
  EXPECT_TRUE(PartialBijection(c).is_idempotent());
}

TEST(PartialBijection, Printing) {
  EXPECT_EQ(PartialBijection::from_pairs(Carrier{2}, {{0, 1}, {1, 0}})
                .to_string(),
            "[0->1, 1->0]");
}

TEST(CompleteToPermutation, Examples) {
  EXPECT_EQ(complete_to_permutation(PartialBijection(Carrier{2})),
            Permutation::identity(Carrier{2}));
  EXPECT_EQ(complete_to_permutation(
                PartialBijection::from_pairs(Carrier{2}, {{0, 0}})),
            Permutation::identity(Carrier{2}));
  const auto p = complete_to_permutation(
      PartialBijection::from_pairs(Carrier{3}, {{0, 1}}));
  EXPECT_EQ(p.as_partial(),
            PartialBijection::from_pairs(Carrier{3}, {{0, 1}, {1, 0}, {2, 2}}));
}

TEST(CompleteToPermutation, ExtendsRandomMaps) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_pb(rng, 1 + rng() % 7);
    const auto p = complete_to_permutation(f);
    EXPECT_TRUE(p.as_partial().is_total());
    EXPECT_TRUE(f.is_restriction_of(p.as_partial()));
  }
}

TEST(Permutation, RejectsPartialMaps) {
  EXPECT_THROW(Permutation(PartialBijection::from_pairs(Carrier{2}, {{0, 0}})),
               Error);
}

TEST(Alphabet, RejectsNonInvolution) {
  EXPECT_THROW(InvolutiveAlphabet({1, 2, 0}), Error);
  EXPECT_THROW(InvolutiveAlphabet({3}), Error);
}

TEST(Alphabet, WordInverse) {
  const auto a = InvolutiveAlphabet::with_pairs(2);  // p0 P0 p1 P1
  EXPECT_EQ(word_inverse(a, {}), Word{});
  EXPECT_EQ(word_inverse(a, {0}), Word{1});
  EXPECT_EQ(word_inverse(a, {0, 2}), (Word{3, 1}));
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    Word u(rng() % 8);
    for (auto& p : u) p = rng() % 4;
    EXPECT_EQ(word_inverse(a, word_inverse(a, u)), u);
  }
}

TEST(Alphabet, SelfInverseLetters) {
  const InvolutiveAlphabet a({0, 2, 1}, {"t", "p", "q"});
  EXPECT_TRUE(a.is_self_inverse(0));
  EXPECT_EQ(a.find("q"), Letter{2});
  EXPECT_EQ(a.orbit_representatives(), (std::vector<Letter>{0, 1}));
  EXPECT_EQ(word_inverse(a, {0, 1}), (Word{2, 0}));
  EXPECT_EQ(format_word(a, {}), "1");
  EXPECT_EQ(format_word(a, {1, 0}), "p t");
  EXPECT_THROW(check_word(a, {3}), Error);
}

TEST(Alphabet, AllWordsShortlex) {
  const auto words = all_words(2, 2);
  ASSERT_EQ(words.size(), 7u);
  EXPECT_EQ(words[0], Word{});
  EXPECT_EQ(words[1], Word{0});
  EXPECT_EQ(words[3], (Word{0, 0}));
  EXPECT_EQ(words[6], (Word{1, 1}));
}

TEST(BfsClosure, CyclicGroup) {
  const std::vector<int> letters{1};
  auto r = bfs_closure<int>(0, letters, [](int x, int y) { return (x + y) % 5; },
                            100);
  EXPECT_EQ(r.elements.size(), 5u);
  EXPECT_EQ(r.graph.witness(3), (Word{0, 0, 0}));
  EXPECT_THROW(bfs_closure<int>(0, letters,
                                [](int x, int y) { return (x + y) % 5; }, 4),
               Error);
}

}  // namespace
}  // namespace fcover
