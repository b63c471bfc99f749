"""MDS codes with prescribed Euclidean or Hermitian hulls, and the quantum codes they yield."""

from __future__ import annotations

__version__ = "0.1.0"

from .code import GrsCode, HullReport, InnerProduct, hull_dim, mds_distance
from .constructions import ConstructionRecord, construct, hull_reduce, parameter_grid
from .eaqecc import EaqeccParams, entanglement_count, mds_eaqecc_pair, singleton_check
from .gf import Field, field_create

__all__ = [
    "ConstructionRecord",
    "EaqeccParams",
    "Field",
    "GrsCode",
    "HullReport",
    "InnerProduct",
    "construct",
    "entanglement_count",
    "field_create",
    "hull_dim",
    "hull_reduce",
    "mds_distance",
    "mds_eaqecc_pair",
    "parameter_grid",
    "singleton_check",
]
