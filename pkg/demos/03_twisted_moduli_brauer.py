"""
Twisted moduli of simply connected bundles: Brauer groups and descent
=====================================================================

For a simply connected group and a twist class delta in its center,
the Brauer group of the regularly stable moduli space is the cokernel
of evaluating the center pairings at delta.  The order of the image is
the smallest power of the stack's generating line bundle that descends.
"""

from math import gcd

from moduli_brauer import (
    DynkinType,
    br_twisted_sc,
    min_descending_power,
    sp_local_factoriality,
)

# Special linear: the answer is cyclic of order gcd(n, d).
print("special linear, n = 6:")
for d in range(6):
    grp = br_twisted_sc(DynkinType("A", 5), d)
    print(f"  d={d}: Brauer {grp.invariant_factors or 'trivial'},",
          f"expected gcd {gcd(6, d)}")

# Symplectic with the nontrivial twist: the parity of the rank decides
# whether the generating line bundle descends on the nose or only its
# square does.
print("twisted symplectic:")
for n in (3, 4, 5, 6):
    grp = br_twisted_sc(DynkinType("C", n), 1)
    pw = min_descending_power(DynkinType("C", n), 1)
    print(f"  rank {n}: Brauer {grp.invariant_factors or 'trivial'}, descent power {pw}")

# That same parity governs local factoriality of the semistable moduli
# space of twisted symplectic bundles.
print("locally factorial:", {n: sp_local_factoriality(n) for n in range(3, 9)})

# Spin covers of even dimension: the congruence class of the dimension
# mod 4 and the order of the twist pick out one of several answers for
# the Pfaffian descent power.
print("twisted spin, dimension 10 (cyclic Z/4 center):")
for d in range(4):
    grp = br_twisted_sc(DynkinType("D", 5), (d,))
    pw = min_descending_power(DynkinType("D", 5), (d,))
    print(f"  d={d}: Brauer {grp.invariant_factors or 'trivial'}, Pfaffian power {pw}")

print("twisted spin, dimension 16 (center (Z/2)^2):")
for dv in ((0, 0), (1, 0), (0, 1), (1, 1)):
    grp = br_twisted_sc(DynkinType("D", 8), dv)
    pw = min_descending_power(DynkinType("D", 8), dv)
    print(f"  delta={dv}: Brauer {grp.invariant_factors or 'trivial'}, power {pw}")
