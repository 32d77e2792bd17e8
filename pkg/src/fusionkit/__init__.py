"""Exact root systems, Weyl groups, Verlinde dimensions and twisted K-theory rank tables."""
from .root_system import LieType, RootSystem, build_root_system, root_system
from .weyl_group import WeylGroup, generate

__all__ = ["LieType", "RootSystem", "WeylGroup", "build_root_system", "generate", "root_system"]
