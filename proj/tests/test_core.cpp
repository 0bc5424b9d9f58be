#include <gtest/gtest.h>

#include <limits>

#include "bicyclic/enumeration.hpp"
#include "bicyclic/monoid.hpp"
#include "oracle/reference_model.hpp"

namespace bicyclic {
namespace {

Elem E(Int i, Int j, Int b) { return Elem(i, j, b); }

reference::Triple ref(const Elem& x) { return {x.i, x.j, x.base()}; }

TEST(InductiveSet, IntersectShiftedExamples) {
  EXPECT_EQ(intersect_shifted(InductiveSet(1), -2, InductiveSet(0)), InductiveSet(0));
  EXPECT_EQ(intersect_shifted(InductiveSet(0), 0, InductiveSet(0)), InductiveSet(0));
  EXPECT_EQ(intersect_shifted(InductiveSet(0), -1, InductiveSet(1)), InductiveSet(1));
}

TEST(InductiveSet, IntersectShiftedMatchesSetAlgebra) {
  for (Int a = 0; a <= 5; ++a) {
    for (Int b = 0; b <= 5; ++b) {
      for (Int d = -7; d <= 7; ++d) {
        const auto want = reference::base_of(reference::intersect(
            reference::shift(d, reference::interval_from(a)), reference::interval_from(b)));
        EXPECT_EQ(intersect_shifted(InductiveSet(a), d, InductiveSet(b)).base(), want);
      }
    }
  }
}

TEST(InductiveSet, InductivityCharacterization) {
  for (Int n = 0; n <= 10; ++n) {
    EXPECT_EQ(intersect_shifted(InductiveSet(n), -1, InductiveSet(n)), InductiveSet(n));
  }
}

TEST(InductiveSet, RejectsNegativeBaseAndOverflow) {
  EXPECT_THROW(InductiveSet(-1), DomainError);
  EXPECT_THROW(intersect_shifted(InductiveSet(5), std::numeric_limits<Int>::max(), InductiveSet(0)),
               OverflowError);
}

TEST(Family, CanonicalIsZeroOne) {
  const Family& f = Family::canonical();
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.at(0).base(), 0);
  EXPECT_EQ(f.at(1).base(), 1);
  EXPECT_TRUE(f.is_canonical());
  EXPECT_EQ(f.to_string(), "{[0),[1)}");
}

TEST(Family, SortsAndValidates) {
  Family f({2, 0, 1});
  EXPECT_EQ(f.at(0).base(), 0);
  EXPECT_EQ(f.index_of(InductiveSet(2)), 2u);
  EXPECT_FALSE(f.contains(InductiveSet(3)));
  EXPECT_FALSE(f.is_canonical());
}

TEST(Family, RejectsInvalidFamilies) {
  EXPECT_THROW(Family({}), FamilyError);
  EXPECT_THROW(Family({0, 0}), FamilyError);
  EXPECT_THROW(Family({1}), FamilyError);     // [0) missing
  EXPECT_THROW(Family({0, 2}), FamilyError);  // [2) ∩ (-1 + [2)) = [1) missing
  EXPECT_THROW(Family({-1, 0}), FamilyError);
  EXPECT_NO_THROW(Family({0}));
  EXPECT_NO_THROW(Family({0, 1, 2, 3}));
}

TEST(Family, ClosureMatchesBruteForce) {
  // A subset of {0..4} is accepted iff it is closed under every shift.
  for (unsigned mask = 1; mask < 32; ++mask) {
    std::vector<Int> bases;
    for (Int b = 0; b < 5; ++b) {
      if (mask & (1u << b)) bases.push_back(b);
    }
    bool closed = bases.front() == 0;
    for (Int b1 : bases) {
      for (Int b2 : bases) {
        for (Int n = 0; n <= 10; ++n) {
          const auto meet = reference::base_of(reference::intersect(
              reference::interval_from(b1), reference::shift(-n, reference::interval_from(b2))));
          closed = closed && std::find(bases.begin(), bases.end(), meet) != bases.end();
        }
      }
    }
    bool accepted = true;
    try {
      Family f(bases);
    } catch (const FamilyError&) {
      accepted = false;
    }
    EXPECT_EQ(accepted, closed) << "mask " << mask;
  }
}

TEST(Elem, RejectsNegativeCoordinates) {
  EXPECT_THROW(E(-1, 0, 0), DomainError);
  EXPECT_THROW(E(0, -3, 1), DomainError);
  EXPECT_EQ(to_string(E(3, 5, 1)), "(3,5,1)");
}

TEST(Mul, Examples) {
  const BicyclicExtension m;
  EXPECT_EQ(m.mul(E(0, 0, 0), E(2, 3, 1)), E(2, 3, 1));
  EXPECT_EQ(m.mul(E(1, 2, 0), E(1, 3, 1)), E(1, 4, 0));
  EXPECT_EQ(m.mul(E(2, 2, 1), E(2, 2, 0)), E(2, 2, 1));
}

TEST(Mul, ExamplesAgreeWithReferenceModel) {
  for (auto [x, y] : {std::pair{E(0, 0, 0), E(2, 3, 1)}, std::pair{E(1, 2, 0), E(1, 3, 1)},
                      std::pair{E(2, 2, 1), E(2, 2, 0)}}) {
    const auto r = reference::mul(ref(x), ref(y));
    EXPECT_EQ(ref(product(x, y)), r);
  }
}

TEST(Mul, AgreesWithReferenceOnTruncation) {
  const BicyclicExtension m;
  const auto elems = Truncation(5).elements();
  for (const Elem& x : elems) {
    for (const Elem& y : elems) ASSERT_EQ(ref(m.mul(x, y)), reference::mul(ref(x), ref(y)));
  }
}

TEST(Mul, BranchesAgreeOnTheDiagonal) {
  for (const Elem& x : Truncation(6).elements()) {
    for (const Elem& y : Truncation(6).elements()) {
      if (x.j == y.i) ASSERT_EQ(product_when_le(x, y), product_when_ge(x, y));
    }
  }
}

TEST(Mul, RejectsElementsOutsideFamily) {
  const BicyclicExtension m;
  EXPECT_THROW(m.mul(E(0, 0, 2), E(0, 0, 0)), DomainError);
  const BicyclicExtension single(Family({0}));
  EXPECT_THROW(single.mul(E(0, 0, 0), E(0, 0, 1)), DomainError);
}

TEST(Mul, OverflowIsAnError) {
  const BicyclicExtension m;
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(m.mul(E(big, 0, 0), E(1, 0, 0)), OverflowError);
  EXPECT_THROW(m.mul(E(0, big, 0), E(0, 1, 0)), OverflowError);
}

TEST(MulBicyclic, Examples) {
  EXPECT_EQ(mul_bicyclic({0, 0}, {4, 7}), (BicyclicPair{4, 7}));
  EXPECT_EQ(mul_bicyclic({1, 2}, {3, 4}), (BicyclicPair{2, 4}));
  EXPECT_EQ(mul_bicyclic({3, 1}, {1, 2}), (BicyclicPair{3, 2}));
}

TEST(MulBicyclic, IsTheProjectionOnSingleSetFamilies) {
  for (Int b : {0, 3}) {
    for (const auto& x : reference::truncation(5, {b})) {
      for (const auto& y : reference::truncation(5, {b})) {
        const Elem got = product(E(x.i, x.j, b), E(y.i, y.j, b));
        EXPECT_EQ((BicyclicPair{got.i, got.j}), mul_bicyclic({x.i, x.j}, {y.i, y.j}));
        EXPECT_EQ(got.base(), b);
      }
    }
  }
}

TEST(Inverse, Examples) {
  const BicyclicExtension m;
  EXPECT_EQ(m.inverse(E(3, 5, 1)), E(5, 3, 1));
  EXPECT_EQ(m.inverse(E(4, 4, 0)), E(4, 4, 0));
  EXPECT_EQ(m.inverse(E(0, 7, 0)), E(7, 0, 0));
}

TEST(Idempotent, Examples) {
  const BicyclicExtension m;
  EXPECT_TRUE(m.is_idempotent(E(2, 2, 1)));
  EXPECT_EQ(m.mul(E(2, 3, 0), E(2, 3, 0)), E(2, 4, 0));
  EXPECT_FALSE(m.is_idempotent(E(2, 3, 0)));
  EXPECT_TRUE(m.is_idempotent(E(0, 0, 0)));
}

TEST(NaturalOrder, Examples) {
  const BicyclicExtension m;
  EXPECT_TRUE(m.leq_natural(E(2, 2, 0), E(1, 1, 1)));
  EXPECT_FALSE(m.leq_natural(E(3, 3, 0), E(3, 3, 1)));
  EXPECT_EQ(m.mul(E(3, 3, 1), E(3, 3, 0)), E(3, 3, 1));
  EXPECT_TRUE(m.leq_natural(E(4, 1, 1), E(4, 1, 1)));
}

TEST(NaturalOrder, MatchesExistentialDefinition) {
  // s <= t iff s = t e for some idempotent e; the idempotents needed never
  // exceed the coordinates of s.
  const BicyclicExtension m;
  const auto elems = Truncation(4).elements();
  for (const Elem& s : elems) {
    for (const Elem& t : elems) {
      bool exists = false;
      for (const Elem& e : Truncation(4).elements()) {
        if (e.i == e.j && product(t, e) == s) exists = true;
      }
      EXPECT_EQ(m.leq_natural(s, t), exists) << to_string(s) << " " << to_string(t);
    }
  }
}

TEST(NaturalOrder, ChainFromLevelsInterleave) {
  const BicyclicExtension m;
  for (Int t = 1; t <= 10; ++t) {
    EXPECT_TRUE(m.leq_natural(E(t + 1, t + 1, 1), E(t + 1, t + 1, 0)));
    EXPECT_TRUE(m.leq_natural(E(t + 1, t + 1, 0), E(t, t, 1)));
  }
  EXPECT_TRUE(m.leq_natural(E(1, 1, 0), E(0, 0, 1)));
}

TEST(Truncation, SizeAndOrder) {
  const Truncation t(2);
  EXPECT_EQ(t.size(), 18u);
  const auto e = t.elements();
  ASSERT_EQ(e.size(), 18u);
  EXPECT_EQ(e.front(), E(0, 0, 0));
  EXPECT_EQ(e[1], E(0, 1, 0));
  EXPECT_EQ(e[9], E(0, 0, 1));
  EXPECT_EQ(e.back(), E(2, 2, 1));
  EXPECT_TRUE(t.contains(E(2, 1, 1)));
  EXPECT_FALSE(t.contains(E(3, 1, 1)));
  EXPECT_EQ(Truncation(8).size(), 162u);
  EXPECT_EQ(Truncation(3, Family({0, 1, 2})).size(), 48u);
  EXPECT_THROW(Truncation(-1), DomainError);
}

}  // namespace
}  // namespace bicyclic
