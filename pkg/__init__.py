"""
IntComplex: homology of high-order interaction networks

Exact-arithmetic tools for complexes of binary-tree interactions: boundary
operators, layer and multilayer homology, persistence over weight filtrations,
and bottleneck distances between persistence diagrams.
"""

__version__ = "1.0.0"
