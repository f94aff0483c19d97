#include <gtest/gtest.h>

#include "semicircle/error.hpp"
#include "semicircle/matrix.hpp"

using namespace semicircle;

TEST(SymmetricMatrix, SetWritesBothTriangles) {
  SymmetricMatrix m(3);
  m.set(0, 2, 4.5);
  EXPECT_EQ(m(0, 2), 4.5);
  EXPECT_EQ(m(2, 0), 4.5);
}

TEST(SymmetricMatrix, RejectsAsymmetricInput) {
  EXPECT_THROW(SymmetricMatrix(2, {1.0, 2.0, 2.0 + 1e-16 * 4, 1.0}), DomainError);
  EXPECT_THROW(SymmetricMatrix(2, {1.0, 2.0, 2.0}), DomainError);
  EXPECT_NO_THROW(SymmetricMatrix(2, {1.0, 2.0, 2.0, 1.0}));
}

TEST(SymmetricMatrix, TraceFrobeniusAndShift) {
  SymmetricMatrix m(2, {1.0, 2.0, 2.0, 3.0});
  EXPECT_EQ(m.trace(), 4.0);
  EXPECT_EQ(m.frobenius_squared(), 1.0 + 4.0 + 4.0 + 9.0);
  EXPECT_EQ(m.shifted(0.5).trace(), 5.0);
  EXPECT_EQ(trace_of_squared_difference(m, m.shifted(0.5)), 0.5);
  EXPECT_THROW(trace_of_squared_difference(m, SymmetricMatrix(3)), DomainError);
}

TEST(SymmetricMatrix, PermutationKeepsSymmetry) {
  SymmetricMatrix m(3, {1, 2, 3, 2, 4, 5, 3, 5, 6});
  const std::size_t perm[] = {2, 0, 1};
  const SymmetricMatrix p = m.permuted(perm);
  EXPECT_EQ(p(2, 0), m(0, 1));
  EXPECT_EQ(p(2, 2), m(0, 0));
  EXPECT_NO_THROW(SymmetricMatrix(3, std::vector<double>(p.data().begin(), p.data().end())));
}
