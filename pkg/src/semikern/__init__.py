"""Exact computations in finite semiabelian categories.

``exactlin`` does the arithmetic, ``catcore`` states the category contract,
``instances`` provides vector spaces over F_p, finite abelian groups and
their decorated (linearly topologized) versions, ``constructions`` builds
images, factorizations, meets, joins and the isomorphism theorems
generically, and ``homcheck`` verifies universal properties over probes.
"""

from .catcore import Category, Morphism, QuotientPair, SubobjectPair, dualize
from .instances import Finab, Vect, decorate

__version__ = "0.1.0"

__all__ = ["Category", "Finab", "Morphism", "QuotientPair", "SubobjectPair", "Vect",
           "decorate", "dualize"]
