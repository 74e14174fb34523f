"""
Published resonance data for vP_3 and vP_4^+.

Coordinates follow the algebra bases: vP_4^+ uses x12, x13, x23, x14, x24,
x34 and vP_3 uses x12, x13, x23, x21, x31, x32.
"""

from typing import Dict, List

from sympy.polys.rings import PolyRing

from grlie.services.numeric.polynomials import MultiPoly
from grlie.services.resonance.varieties import LinearSubspaceParam, line, subspace_from_equations

VP4PLUS_COORDINATES = ("x12", "x13", "x23", "x14", "x24", "x34")
VP3_COORDINATES = ("x12", "x13", "x23", "x21", "x31", "x32")


def _vector(coordinates, **coefficients) -> List[int]:
    return [coefficients.get(name, 0) for name in coordinates]


def _vp4(**coefficients) -> List[int]:
    return _vector(VP4PLUS_COORDINATES, **coefficients)


def _vp3(**coefficients) -> List[int]:
    return _vector(VP3_COORDINATES, **coefficients)


VP4PLUS_LINES: Dict[str, List[int]] = {
    "e12": _vp4(x12=1),
    "e13": _vp4(x13=1),
    "e23": _vp4(x23=1),
    "e14": _vp4(x14=1),
    "e24": _vp4(x24=1),
    "e34": _vp4(x34=1),
    "e12-e13+e23": _vp4(x12=1, x13=-1, x23=1),
    "e12-e14+e24": _vp4(x12=1, x14=-1, x24=1),
    "e13-e14+e34": _vp4(x13=1, x14=-1, x34=1),
    "e23-e24+e34": _vp4(x23=1, x24=-1, x34=1),
    "e13-e23-e14+e24": _vp4(x13=1, x23=-1, x14=-1, x24=1),
    "e12+e23-e14+e34": _vp4(x12=1, x23=1, x14=-1, x34=1),
    "e12-e13+e24-e34": _vp4(x12=1, x13=-1, x24=1, x34=-1),
}


def vp4plus_lines() -> Dict[str, LinearSubspaceParam]:
    """The 13 lines making up R^1_2(vP_4^+)."""
    return {name: line(vec, name) for name, vec in VP4PLUS_LINES.items()}


def vp4plus_equations(ring: PolyRing) -> List[MultiPoly]:
    """The four cubics cutting out R^1_1(vP_4^+), in a ring with the vP_4^+ coordinates."""
    x12, x13, x23, x14, x24, x34 = ring.gens
    return [
        x12 * x24 * (x13 + x23) + x13 * x34 * (x12 - x23) - x24 * x34 * (x12 + x13),
        x12 * x23 * (x14 + x24) + x12 * x34 * (x23 - x14) + x14 * x34 * (x23 + x24),
        x13 * x23 * (x14 + x24) + x14 * x24 * (x13 + x23) + x34 * (x13 * x23 - x14 * x24),
        x12 * (x13 * x14 - x23 * x24) + x34 * (x13 * x23 - x14 * x24),
    ]


def vp4plus_aomoto_rows(ring: PolyRing) -> List[List[MultiPoly]]:
    """The printed 7 x 6 Aomoto matrix of vP_4^+."""
    x12, x13, x23, x14, x24, x34 = ring.gens
    z = ring.zero
    return [
        [-x34, z, z, z, z, x12],
        [-x13 - x23, x12 - x23, x12 + x13, z, z, z],
        [z, -x24, z, z, x13, z],
        [z, z, -x14, x23, z, z],
        [-x14 - x24, z, z, x12 - x24, x12 + x14, z],
        [z, -x14 - x34, z, x13 - x34, z, x13 + x14],
        [z, z, -x24 - x34, z, x23 - x34, x23 + x24],
    ]


VP3_COMPONENT_EQUATIONS: Dict[str, List[List[int]]] = {
    "x12-x23=x12+x32=x12+x21=0": [
        _vp3(x12=1, x23=-1), _vp3(x12=1, x32=1), _vp3(x12=1, x21=1),
    ],
    "x13+x23=x12+x32=x21+x31=0": [
        _vp3(x13=1, x23=1), _vp3(x12=1, x32=1), _vp3(x21=1, x31=1),
    ],
    "x13+x23=x13-x32=x13+x31=0": [
        _vp3(x13=1, x23=1), _vp3(x13=1, x32=-1), _vp3(x13=1, x31=1),
    ],
    "x12+x13=x12+x21=x12-x31=0": [
        _vp3(x12=1, x13=1), _vp3(x12=1, x21=1), _vp3(x12=1, x31=-1),
    ],
    "x12+x13=x23+x21=x31+x32=0": [
        _vp3(x12=1, x13=1), _vp3(x23=1, x21=1), _vp3(x31=1, x32=1),
    ],
}

VP3_LINE = _vp3(x12=1, x21=-1, x13=-1, x31=1, x23=1, x32=-1)
VP3_LINE_NAME = "x12=-x21=-x13=x31=x23=-x32"


def vp3_components() -> Dict[str, LinearSubspaceParam]:
    """The five 3-dimensional components of R^1_2(vP_3)."""
    return {
        name: subspace_from_equations(len(VP3_COORDINATES), equations, name)
        for name, equations in VP3_COMPONENT_EQUATIONS.items()
    }


def vp3_line() -> LinearSubspaceParam:
    """The common line of the five components, R^1_3 = R^1_4 = R^1_5 of vP_3."""
    return line(VP3_LINE, VP3_LINE_NAME)


CANDIDATES = {
    ("vP4plus", 2): vp4plus_lines,
    ("vP3", 2): vp3_components,
    ("vP3", 5): lambda: {VP3_LINE_NAME: vp3_line()},
}


def candidate_components(family: str, depth: int) -> Dict[str, LinearSubspaceParam]:
    """Published components to verify for a family at a depth (empty when none are recorded)."""
    builder = CANDIDATES.get((family, depth))
    return builder() if builder else {}
