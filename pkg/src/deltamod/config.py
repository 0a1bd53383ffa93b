"""Configurable size bounds for exhaustive computations."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    """Hard limits that keep every exhaustive search desk-scale.

    max_ring_size / max_module_size cap the element counts accepted at
    construction time; max_lattice_nodes caps submodule lattice growth;
    max_hom_candidates caps the section search in projectivity testing.
    """

    max_ring_size: int = 256
    max_module_size: int = 4096
    max_lattice_nodes: int = 1 << 16
    max_hom_candidates: int = 1_000_000


DEFAULT_BOUNDS = Bounds()
