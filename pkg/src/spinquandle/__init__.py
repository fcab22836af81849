"""Spherical quandles and their embeddings into orthogonal, Spin and Pin groups."""
from .clifford import CliffordElement, Versor, covering_matrix, h_tilde, volume_element
from .embeddings import EmbeddingMap, build_embedding, inn_map, iota_1, iota_3, iota_n, p4, pin4_cover
from .kernels import BACKEND
from .numerics import EPS, ComplexScalar, Matrix
from .quandle import FiniteQuandle, ProjectivePoint, SpherePoint, check_axioms
from .report import VerificationReport
from .search import FiniteGroup, group_catalog, quandle_isomorphic, search_core_vs_twisted

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "EPS", "CliffordElement", "ComplexScalar", "EmbeddingMap", "FiniteGroup",
    "FiniteQuandle", "Matrix", "ProjectivePoint", "SpherePoint", "VerificationReport", "Versor",
    "build_embedding", "check_axioms", "covering_matrix", "group_catalog", "h_tilde", "inn_map",
    "iota_1", "iota_3", "iota_n", "p4", "pin4_cover", "quandle_isomorphic",
    "search_core_vs_twisted", "volume_element",
]
