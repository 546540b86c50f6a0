"""
Elementary algebras given by a basis of elements.

An algebra A here has a finite vertex set (primitive idempotents e_i), a list of
generators (arrows), and a basis of elements e_j A e_i. Every basis element
records its *word*: the generators it is the product of, in the order they act
(first generator first). Multiplying a basis element on the left by a generator
gives a linear combination of basis elements. Modules are left modules given by
one matrix per generator, so the action of any basis element is the product of
the generator matrices along its word.

The opposite algebra keeps the element and generator keys, with sources and
targets swapped. ``A.basis(i, j)`` and ``A.opposite().basis(j, i)`` therefore
list the same keys in the same order, which is what the transpose Tr relies on.
"""
import functools
from abc import ABC, abstractmethod
from typing import NamedTuple

from django.core.exceptions import ValidationError

from .models import Module, Rep, ModuleMap, RepMap


class Generator(NamedTuple):
    key: tuple
    source: int
    target: int


class Element(NamedTuple):
    key: tuple
    source: int
    target: int
    word: tuple


class Algebra(ABC):
    module_class = Module
    map_class = ModuleMap

    vertices = ()
    generators = ()
    elements = ()

    def _index(self):
        self._vertex = {label: i for i, label in enumerate(self.vertices)}
        self._generator = {g.key: g for g in self.generators}
        self._element = {e.key: e for e in self.elements}
        grouped = {}
        for e in self.elements:
            grouped.setdefault((e.source, e.target), []).append(e)
        self._basis = {pair: tuple(sorted(es, key=lambda e: e.key)) for pair, es in grouped.items()}
        self._position = {pair: {e.key: k for k, e in enumerate(es)} for pair, es in self._basis.items()}
        self._identity = {}
        for e in self.elements:
            if not e.word:
                self._identity[e.source] = e

    @abstractmethod
    def left_multiply(self, generator_key, element):
        """generator * element as {element key: integer coefficient}."""

    @abstractmethod
    def opposite(self):
        pass

    @property
    def n_vertices(self):
        return len(self.vertices)

    def vertex(self, vertex):
        """Vertex index from a label or an index."""
        if isinstance(vertex, str) and vertex in self._vertex:
            return self._vertex[vertex]
        if isinstance(vertex, int) and 0 <= vertex < self.n_vertices:
            return vertex
        raise ValidationError("Unknown vertex %(vertex)s", code='vertex', params={'vertex': vertex})

    def generator(self, key):
        return self._generator[key]

    def element(self, key):
        return self._element[key]

    def basis(self, source, target):
        return self._basis.get((source, target), ())

    def position(self, source, target, key):
        return self._position[(source, target)][key]

    def identity(self, vertex):
        return self._identity[vertex]

    def same_vertex(self, other):
        """Index map: vertex i of ``other`` is vertex result[i] of self (matched by label)."""
        return [self._vertex[label] for label in other.vertices]

    def make_module(self, field, dims, action):
        return self.module_class(self, field, dims, action)

    def make_map(self, source, target, comps):
        return self.map_class(source, target, comps)


class PathAlgebra(Algebra):
    """
    Path algebra kQ of an acyclic quiver, or its opposite (``reverse=True``).

    Element keys are (tag, start, arrows) for a path of the base quiver; the
    tag keeps two copies of the same quiver apart inside a triangular algebra.
    """
    module_class = Rep
    map_class = RepMap

    def __init__(self, base, tag='h', suffix='', reverse=False, opposite=None):
        self.base = base
        self.tag = tag
        self.suffix = suffix
        self.reverse = reverse
        labelled = base.relabel(suffix)
        self.quiver = labelled.opposite() if reverse else labelled
        self.vertices = self.quiver.labels
        self.generators = tuple(
            Generator((tag, a), t, s) if reverse else Generator((tag, a), s, t)
            for a, (s, t) in enumerate(base.arrows))
        elements = []
        for start, arrows in base.paths:
            end = base.path_end((start, arrows))
            word = tuple((tag, a) for a in arrows)
            if reverse:
                elements.append(Element((tag, start, arrows), end, start, word[::-1]))
            else:
                elements.append(Element((tag, start, arrows), start, end, word))
        self.elements = tuple(elements)
        self._opposite = opposite
        self._index()

    def __repr__(self):
        return f"<PathAlgebra {self.quiver}{' op' if self.reverse else ''}>"

    def owns(self, key):
        return key[0] == self.tag

    def arrow_key(self, a):
        return (self.tag, a)

    def left_multiply(self, generator_key, element):
        a = generator_key[1]
        s, t = self.base.arrows[a]
        _, start, arrows = element.key
        if self.reverse:
            if t == start:
                return {(self.tag, s, (a,) + arrows): 1}
            return {}
        if self.base.path_end((start, arrows)) == s:
            return {(self.tag, start, arrows + (a,)): 1}
        return {}

    def opposite(self):
        if self._opposite is None:
            self._opposite = PathAlgebra(self.base, self.tag, self.suffix, not self.reverse, opposite=self)
        return self._opposite


@functools.lru_cache(maxsize=None)
def path_algebra(q):
    """The path algebra kQ (cached per quiver)."""
    if not q.is_acyclic:
        raise ValidationError("The quiver must be acyclic", code='cyclic')
    return PathAlgebra(q)
