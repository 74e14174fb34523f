"""
Computational services of the engine.

Each sub-package owns one area of the computation and its exception
hierarchy.
"""
