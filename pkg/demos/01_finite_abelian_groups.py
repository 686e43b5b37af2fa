"""
Exact finite abelian groups: presentations, duals, exterior squares
===================================================================

Everything in this package reduces to integer matrix arithmetic on
presented finite abelian groups.  This script walks the core toolkit.
"""

from moduli_brauer import (
    FinAbGroup,
    dual,
    exterior_square,
    image_cokernel,
    kernel,
    quotient,
    smith_normal_form,
    subgroup,
)
from moduli_brauer.finab import hom_from_images, merged_invariants

# A group is Z^m modulo the column span of a relation matrix.  Smith
# normal form turns any presentation into canonical invariant factors
# d_1 | d_2 | ... with every d >= 2.
g = FinAbGroup.from_relations([[2, 1], [0, 6]])
print("presented by [[2,1],[0,6]]:", g.invariant_factors, "order", g.order())

# The transform pair is exact and deterministic: U * M * V = S.
u, s, v = smith_normal_form([[4, 6], [2, 8]])
print("snf diagonal:", [s[i][i] for i in range(2)])

# Subgroups and quotients come with certified inclusion/projection
# maps; orders always multiply up.
big = FinAbGroup.from_invariants([4, 4])
sub, incl = subgroup(big, [[2, 0]])
quot, proj = quotient(big, [[2, 0]])
print("Z/4 x Z/4 mod <(2,0)>:", quot.invariant_factors, "subgroup:", sub.invariant_factors)

# Homomorphisms carry a well-definedness certificate: a matrix that
# does not send relations into relations is rejected at construction.
a = FinAbGroup.from_invariants([8])
b = FinAbGroup.from_invariants([4])
f = hom_from_images(a, b, [[1]])
ker, _ = kernel(f)
img, _, cok, _ = image_cokernel(f)
print("Z/8 -> Z/4 kernel:", ker.invariant_factors, "image:", img.invariant_factors,
      "cokernel:", cok.invariant_factors)

# The character group Hom(A, Q/Z) has the same invariant factors.
print("dual of Z/2 x Z/12:", dual(FinAbGroup.from_invariants([2, 12])).invariant_factors)

# Exterior squares follow the divisor-chain rule; for (Z/d)^k the
# result is (Z/d)^(k choose 2).
gamma = FinAbGroup.from_invariants([2] * 6)
print("Lambda^2 (Z/2)^6:", exterior_square(gamma).invariant_factors)

# Direct sums of invariant chains merge prime power by prime power,
# with no matrix work at all.
print("merge [2,4] with [3]:", merged_invariants([2, 4], [3]))
