"""Exact calculators for Brauer groups of moduli of principal bundles.

The package is organized in three layers plus a command line front end:

- :mod:`moduli_brauer.finab`: finitely generated abelian groups with
  exact integer arithmetic (Smith normal form, duals, exterior squares).
- :mod:`moduli_brauer.rootdata`: root-system lattices, centers of the
  simply connected groups, and the linking form on the center.
- :mod:`moduli_brauer.brauer`: the Brauer-group pipeline (obstruction
  pairings, evaluation at the topological type, family resolution).
- :mod:`moduli_brauer.cli`: the ``moduli-brauer`` command.
"""

from .brauer import (
    BrauerReport,
    ConsistencyReport,
    PsiGroup,
    PsiSubgroup,
    br_moduli,
    br_stack,
    br_twisted_sc,
    coker_ev,
    cross_check,
    ev,
    gamma,
    h2_gamma,
    min_descending_power,
    psi,
    psi_G,
    sp_local_factoriality,
)
from .finab import (
    FinAbGroup,
    GroupHom,
    QmodZ,
    dual,
    exterior_square,
    image_cokernel,
    kernel,
    power,
    quotient,
    smith_normal_form,
    subgroup,
)
from .rootdata import (
    CenterData,
    DynkinType,
    GroupSpec,
    cartan_matrix,
    center,
    coroot_gram,
    named_subgroup,
    product_center,
    simple_roots,
)

__version__ = "0.1.0"

__all__ = [
    "BrauerReport",
    "CenterData",
    "ConsistencyReport",
    "DynkinType",
    "FinAbGroup",
    "GroupHom",
    "GroupSpec",
    "PsiGroup",
    "PsiSubgroup",
    "QmodZ",
    "br_moduli",
    "br_stack",
    "br_twisted_sc",
    "cartan_matrix",
    "center",
    "coker_ev",
    "coroot_gram",
    "cross_check",
    "dual",
    "ev",
    "exterior_square",
    "gamma",
    "h2_gamma",
    "image_cokernel",
    "kernel",
    "min_descending_power",
    "named_subgroup",
    "power",
    "product_center",
    "psi",
    "psi_G",
    "quotient",
    "simple_roots",
    "smith_normal_form",
    "sp_local_factoriality",
    "subgroup",
]
