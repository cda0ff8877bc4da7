"""Exact characters, symplectic Dirac operators and character lifting for osp(1|2n)."""

__version__ = "0.1.0"
