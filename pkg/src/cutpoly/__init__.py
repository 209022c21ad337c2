"""Exact base polytopes of cut functions and their zonotopes."""
from .basepoly import (Polytope, enumerate_vertices, facet_rows, graph_polytope, hrep_vertices,
                       is_vertex, support_value, tight_sets, vertex_from_chain, vertex_from_order)
from .combinatorics import belts, f_vector, face_lattice, is_primitive, same_type, type_fingerprint
from .graphs import Graph, circuit, complete_graph, cut_edges, is_minimal_cut, path, rank, star
from .setfunctions import SetFunction, cut_function, is_modular, is_submodular, weights_from_beta
from .zonotope import (equals_base_polytope, generators, gram_matrix, minimal_vector_map, nrd,
                       tiling_check, zonotope_polytope, zonotope_vertices)

__version__ = "0.1.0"
