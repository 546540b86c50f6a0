"""
Triangular matrix algebras [[H, M], [0, L]] built from a quiver H.

A module over such an algebra is a triple (x, y, f): x an L-module on the
primed vertices, y an H-module on the plain vertices, and f : M (x) x -> y. The
structure map is stored in adjoint form, one matrix mu_phi : x_u -> y_v for each
basis element phi of the bimodule, so the bimodule elements are generators of
the algebra next to the arrows of H and L.

Lambda uses L = H and M = DH. Gamma uses L = k Delta for the sinks Delta of H
and M = DH e_Delta, the sum of the injectives I_delta.
"""
import functools
import logging

from django.core.exceptions import ValidationError

from hmod.algebras import Algebra, Element, Generator, PathAlgebra

from .models import Triple, TripleMap

logger = logging.getLogger(__name__)

LAMBDA = 'Lambda'
GAMMA = 'Gamma'
BIMODULE_TAG = 'm'


class DualPathBimodule:
    """
    D(H) restricted to a set of vertices: the dual basis p* of the paths p of H
    ending in the support. p* goes from the primed copy of end(p) to start(p).
    """

    def __init__(self, h, support, opposite=None):
        self.h = h
        self.support = tuple(support)
        position = {v: k for k, v in enumerate(self.support)}
        # tail arrow k is the k-th arrow of h inside the support
        self.tail_arrows = tuple(a for a, (s, t) in enumerate(h.arrows) if s in position and t in position)
        self.elements = tuple(
            ((BIMODULE_TAG, start, arrows), position[h.path_end((start, arrows))], start)
            for start, arrows in h.paths if h.path_end((start, arrows)) in position)
        self._opposite = opposite

    def left_act(self, generator_key, key):
        """b . p* = (p without its first arrow b)*."""
        b = generator_key[1]
        _, start, arrows = key
        if arrows and arrows[0] == b:
            return {(BIMODULE_TAG, self.h.arrows[b][1], arrows[1:]): 1}
        return {}

    def right_act(self, generator_key, key):
        """p* . a = (p without its last arrow a)*."""
        a = self.tail_arrows[generator_key[1]]
        _, start, arrows = key
        if arrows and arrows[-1] == a:
            return {(BIMODULE_TAG, start, arrows[:-1]): 1}
        return {}

    def opposite(self):
        if self._opposite is None:
            self._opposite = OppositeBimodule(self)
        return self._opposite


class OppositeBimodule:
    """The same elements seen from the opposite algebras: the two actions trade places."""

    def __init__(self, inner):
        self.inner = inner
        self.elements = tuple((key, head, tail) for key, tail, head in inner.elements)

    def left_act(self, generator_key, key):
        return self.inner.right_act(generator_key, key)

    def right_act(self, generator_key, key):
        return self.inner.left_act(generator_key, key)

    def opposite(self):
        return self.inner


class TriangularAlgebra(Algebra):
    """
    Algebra with vertices head + tail; bimodule elements go from tail vertices to
    head vertices, acted on by head elements from the left and tail elements
    from the right.
    """
    module_class = Triple
    map_class = TripleMap

    def __init__(self, head, tail, bimodule, opposite=None):
        self.head = head
        self.tail = tail
        self.bimodule = bimodule
        shift = head.n_vertices
        self.head_vertices = tuple(range(shift))
        self.tail_vertices = tuple(range(shift, shift + tail.n_vertices))
        self.vertices = tuple(head.vertices) + tuple(tail.vertices)
        self.generators = (
            tuple(head.generators)
            + tuple(Generator(g.key, g.source + shift, g.target + shift) for g in tail.generators)
            + tuple(Generator(key, t + shift, h) for key, t, h in bimodule.elements))
        self.elements = (
            tuple(head.elements)
            + tuple(Element(e.key, e.source + shift, e.target + shift, e.word) for e in tail.elements)
            + tuple(Element(key, t + shift, h, (key,)) for key, t, h in bimodule.elements))
        self._opposite = opposite
        self._index()

    def __repr__(self):
        return f"<{type(self).__name__} {', '.join(self.vertices)}>"

    def part(self, key):
        if self.head.owns(key):
            return 'head'
        if self.tail.owns(key):
            return 'tail'
        return 'bimodule'

    def left_multiply(self, generator_key, element):
        side = self.part(generator_key)
        target = self.part(element.key)
        if side == 'head':
            if target == 'head':
                return self.head.left_multiply(generator_key, element)
            if target == 'bimodule':
                return self.bimodule.left_act(generator_key, element.key)
            return {}
        if side == 'tail':
            return self.tail.left_multiply(generator_key, element) if target == 'tail' else {}
        if target != 'tail':
            return {}
        if not element.word:
            return {generator_key: 1} if self.generator(generator_key).source == element.source else {}
        current = {generator_key: 1}
        for g in reversed(element.word):
            step = {}
            for key, coeff in current.items():
                for result, c in self.bimodule.right_act(g, key).items():
                    step[result] = step.get(result, 0) + coeff * c
            current = {k: c for k, c in step.items() if c}
        return current

    def make_opposite(self):
        return TriangularAlgebra(self.tail.opposite(), self.head.opposite(), self.bimodule.opposite(), opposite=self)

    def opposite(self):
        if self._opposite is None:
            self._opposite = self.make_opposite()
        return self._opposite


class AlgebraInstance(TriangularAlgebra):
    """Lambda or Gamma of a quiver h, or the opposite of one of them."""

    def __init__(self, kind, h, is_opposite=False, parts=None, opposite=None):
        self.kind = kind
        self.h = h
        self.is_opposite = is_opposite
        self.sinks = tuple(h.sinks())
        self.support = tuple(range(h.n)) if kind == LAMBDA else self.sinks
        if parts is None:
            plain = PathAlgebra(h, tag='y')
            primed = PathAlgebra(h.full_subquiver(self.support), tag='x', suffix="'")
            parts = (plain, primed, DualPathBimodule(h, self.support))
        super().__init__(*parts, opposite=opposite)

    def __repr__(self):
        return f"<{self.kind}{' op' if self.is_opposite else ''} of {self.h}>"

    @property
    def plain(self):
        """The copy of H (the y component)."""
        return self.tail if self.is_opposite else self.head

    @property
    def primed(self):
        """The primed algebra (the x component)."""
        return self.head if self.is_opposite else self.tail

    @property
    def plain_vertices(self):
        return self.tail_vertices if self.is_opposite else self.head_vertices

    @property
    def primed_vertices(self):
        return self.head_vertices if self.is_opposite else self.tail_vertices

    @property
    def delta(self):
        """Primed vertex indices of the sinks."""
        return tuple(self.vertex(self.h.labels[s] + "'") for s in self.sinks)

    def make_opposite(self):
        parts = (self.tail.opposite(), self.head.opposite(), self.bimodule.opposite())
        return AlgebraInstance(self.kind, self.h, not self.is_opposite, parts, opposite=self)


def _instance(kind, h):
    if not h.is_acyclic:
        raise ValidationError("The quiver must be acyclic", code='cyclic')
    algebra = AlgebraInstance(kind, h)
    logger.debug("Built %r with %d basis elements", algebra, len(algebra.elements))
    return algebra


@functools.lru_cache(maxsize=None)
def lambda_of(h):
    return _instance(LAMBDA, h)


@functools.lru_cache(maxsize=None)
def gamma_of(h):
    return _instance(GAMMA, h)
