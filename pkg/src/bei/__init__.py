"""Combinatorics governing Cohen-Macaulayness of binomial edge ideals:
cutset enumeration, combinatorial primary decomposition, unmixedness,
accessibility, the strongly-unmixed recursion, and theorem-verification
harnesses."""

from .constructors import (add_whisker, block_with_whiskers, glue,
                           match_star_product, paper_corpus, relabel,
                           star_product, whiskered_star_product)
from .cutsets import (CutSet, CutSetFamily, CutsetBudgetError,
                      cutsets_after_clique_close, cutsets_of_glued,
                      enumerate_cutsets, is_cutset, is_unmixed,
                      primary_decomposition)
from .graph import BlockDecomposition, Graph, UnknownVertexError
from .io import (analysis_report, encode_graph6, parse_edge_list,
                 parse_graph6, serialize_edge_list)
from .properties import (BudgetExceeded, classify_block, cm_verdict,
                         is_accessible, is_r_cut_connected,
                         is_strongly_r_cut_connected, is_strongly_unmixed)

__version__ = "0.1.0"

__all__ = [
    "Graph", "BlockDecomposition", "UnknownVertexError",
    "CutSet", "CutSetFamily", "CutsetBudgetError",
    "enumerate_cutsets", "is_cutset", "is_unmixed", "primary_decomposition",
    "cutsets_of_glued", "cutsets_after_clique_close",
    "is_accessible", "is_strongly_unmixed", "is_r_cut_connected",
    "is_strongly_r_cut_connected", "classify_block", "cm_verdict",
    "BudgetExceeded",
    "add_whisker", "block_with_whiskers", "star_product",
    "whiskered_star_product", "glue", "relabel", "match_star_product",
    "paper_corpus",
    "parse_edge_list", "serialize_edge_list", "parse_graph6", "encode_graph6",
    "analysis_report",
    "__version__",
]
