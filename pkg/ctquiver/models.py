from collections import Counter
from dataclasses import dataclass, field

from hmod.algebras import Algebra, Element, Generator
from quiver.dot import dot_lines
from quiver.models import Quiver

IDENTITY_TAG = 'e'
RADICAL_TAG = 'r'


class BasicAlgebra(Algebra):
    """
    A basic algebra End(T_1 + ... + T_m) given by structure constants.

    Vertex i is the summand T_i. A basis element from vertex i to vertex j is a
    map T_j -> T_i, so an arrow i -> j of the quiver is an irreducible map
    T_j -> T_i and End of the projective generator of kQ has quiver Q. The
    generators are all radical basis elements; ``products[(g, e)]`` is g * e,
    the composite of the map of e after the map of g, in the radical basis.
    """

    def __init__(self, labels, field, radical, products, hom_dims, reverse=False, opposite=None):
        self.labels = tuple(labels)
        self.field = field
        self.radical = tuple(radical)  # (key, source, target) with source/target of the unreversed algebra
        self.products = products
        self.hom_dims = hom_dims  # hom_dims[i][j] = dim e_j E e_i = dim Hom(T_j, T_i)
        self.reverse = reverse
        self.vertices = self.labels
        generators = []
        elements = [Element((IDENTITY_TAG, i), i, i, ()) for i in range(len(self.labels))]
        for key, s, t in self.radical:
            s, t = (t, s) if reverse else (s, t)
            generators.append(Generator(key, s, t))
            elements.append(Element(key, s, t, (key,)))
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._opposite = opposite
        self._index()

    def __repr__(self):
        return f"<BasicAlgebra {', '.join(self.labels)}{' op' if self.reverse else ''}>"

    @property
    def dimension(self):
        return len(self.elements)

    def left_multiply(self, generator_key, element):
        g = self.generator(generator_key)
        if element.target != g.source:
            return {}
        if not element.word:
            return {generator_key: 1}
        pair = (element.key, generator_key) if self.reverse else (generator_key, element.key)
        return dict(self.products.get(pair, {}))

    def opposite(self):
        if self._opposite is None:
            self._opposite = BasicAlgebra(self.labels, self.field, self.radical, self.products,
                                          self.hom_dims, not self.reverse, opposite=self)
        return self._opposite

    def radical_basis(self, source, target):
        return [e for e in self.basis(source, target) if e.word]

    def to_json(self):
        return {
            'composition': 'g*f is the map of f after the map of g',
            'vertices': list(self.labels),
            'hom_dims': [list(row) for row in self.hom_dims],
            'radical': [[str(key), self.labels[s], self.labels[t]] for key, s, t in self.radical],
            'products': [[str(a), str(b), {str(c): v for c, v in out.items()}]
                         for (a, b), out in sorted(self.products.items()) if out],
        }


@dataclass
class QuiverOut:
    """Quiver of a cluster-tilted algebra, over the summand labels."""
    quiver: Quiver
    stable_arrows: dict = field(default_factory=dict)  # (i, j) -> arrows of the stable End quiver
    relations: dict = field(default_factory=dict)  # (i, j) -> minimal relations from T_i to T_j

    @property
    def n(self):
        return self.quiver.n

    def arrow_counts(self):
        return Counter(self.quiver.arrows)

    def to_json(self):
        labels = self.quiver.labels
        return {
            'vertices': list(labels),
            'arrows': [[labels[s], labels[t]] for s, t in self.quiver.arrows],
            'stable_arrows': [[labels[i], labels[j], c] for (i, j), c in sorted(self.stable_arrows.items())],
            'relations': [[labels[i], labels[j], c] for (i, j), c in sorted(self.relations.items())],
        }

    def to_dot(self, name=None):
        return ''.join(dot_lines(self.quiver, name))
