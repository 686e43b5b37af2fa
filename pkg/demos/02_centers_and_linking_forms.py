"""
Centers of simply connected groups and their linking forms
==========================================================

The center of a simply connected simple group is the coweight lattice
modulo the coroot lattice.  The basic even invariant form on coroots
induces a Q/Z-valued symmetric pairing on that quotient; this pairing
drives every Brauer computation downstream.
"""

from moduli_brauer import DynkinType, cartan_matrix, center, named_subgroup, product_center

# Cartan matrices use exact integers; the determinant is the center order.
for fam, rank in (("A", 3), ("B", 4), ("C", 3), ("D", 5), ("E", 6)):
    t = DynkinType(fam, rank)
    cd = center(t)
    print(f"{fam}{rank}: center {cd.group.invariant_factors or 'trivial'},",
          f"|det Cartan| matches order {cd.group.order()}")

# The linking form on a cyclic Z/4 center (even orthogonal cover of
# dimension 10): the generator pairs with itself to a fraction of
# exact order 4.
cd = center(DynkinType("D", 5))
z = cd.group.canonical_generators()[0]
print("D5 generator self-pairing:", cd.pairing(z, z), "form order:", cd.form_order(0))

# The odd orthogonal covers are special: their Z/2 center has
# identically zero linking form, so no pairing obstruction survives.
cd_b = center(DynkinType("B", 4))
zb = cd_b.group.canonical_generators()[0]
print("B4 generator self-pairing:", cd_b.pairing(zb, zb))

# Named subgroups identify the classical quotients.  For even
# orthogonal types the kernel of the vector representation and a
# half-spin kernel are different order-2 subgroups.
t = DynkinType("D", 6)
grp = center(t).group
so = named_subgroup(t, "so-kernel")[0]
om = named_subgroup(t, "omega-kernel")[0]
print("D6 so-kernel vs omega-kernel coords:",
      grp.canonical_coords(so), "vs", grp.canonical_coords(om))

# Product centers are block diagonal: factors never pair with each
# other because no invariant cross form exists.
pc = product_center((DynkinType("A", 2), DynkinType("C", 3)))
print("A2 x C3 center:", pc.group.invariant_factors)
