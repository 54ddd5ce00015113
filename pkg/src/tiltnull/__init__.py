"""tiltnull: exact nullity computations, facet tables, cells, and link invariants."""

from .cells import (
    a_value,
    cell_report,
    chain_partition,
    ideal_member,
    in_D_lambda,
    modular_region_member,
    nk_member,
    shi_tableau,
)
from .dims import (
    NotKNegligibleError,
    a2_modular_cells,
    modified_dim,
    modular_nullity_simple,
    modular_weyl_dim,
    quantum_nullity,
    quantum_weyl_dim,
    sl2_modular_ideal,
    steinberg_weight,
    telescope_weight,
)
from .facets import (
    FacetPattern,
    facet_k,
    standard_facet,
    strongly_minimal_facets,
    table_rows,
    tableau_facet,
)
from .laurent import (
    InfiniteValuationError,
    LaurentPolynomial,
    NumberFieldElement,
    cyclotomic,
    phi_valuation,
)
from .roots import RootSystem, root_system
from .tl import (
    colored_invariant,
    invariant_jet,
    jones_wenzl,
    modified_invariant,
    object_nullity_tl,
)
from .young import StandardTableau, partitions, standard_tableaux, transpose

__version__ = "0.1.0"
