"""Vanishing ideals of toric sets parameterized by complete multipartite graphs."""
from .finite_field import FieldTable, build_field, primitive_element, units
from .graph import MultipartiteGraph, PartitionSpec, build_graph, edge_index, four_cycles, parse_partition
from .polyring import Binomial, MonomialOrder, Polynomial, compare, default_order, vanishes_on_X, weighted_subgraph
from .generators import (
    TypeIIIConfig, generalized_type_iii, move_weight, swap_endpoints, type_i, type_ii,
    type_iii, witness_monomial,
)
from .toric_set import ToricSet, enumerate_X, evaluate, expected_cardinality, torus_image
from .groebner import (
    GroebnerBasis, HilbertProfile, Ideal, buchberger, hilbert_profile, ideal_equal,
    normal_form, saturate, toric_ideal_PG,
)
from .analysis import (
    CodeParams, VerificationReport, WorkBounds, code_params, grs_lower_bound, hilbert_oracle,
    regularity_formula, regularity_oracle, verify_generation, verify_regularity_witness,
)

__version__ = "0.1.0"
