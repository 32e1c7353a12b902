"""Workbench for finite involution semigroups and the identity bases of A0 and B0."""

__version__ = "0.1.0"
