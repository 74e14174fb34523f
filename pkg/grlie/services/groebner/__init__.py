"""
Commutative Gröbner bases over QQ: membership, radical membership, dimension.
"""

from grlie.services.groebner.ideal import (
    GREVLEX,
    Ideal,
    MonomialOrder,
    buchberger,
    ideal,
    ideal_membership,
    krull_dimension,
    leading_monomials,
    normal_form,
    radical_membership,
)

__all__ = [
    "GREVLEX",
    "Ideal",
    "MonomialOrder",
    "buchberger",
    "ideal",
    "ideal_membership",
    "krull_dimension",
    "leading_monomials",
    "normal_form",
    "radical_membership",
]
