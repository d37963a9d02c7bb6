"""Concrete categories: vect, finab and their decorated (topologized) variants."""

from .vect import Vect, VectObject
from .finab import Finab, FinabObject, Subgroup
from .decorated import Decorated, DecoratedObject, decorate
