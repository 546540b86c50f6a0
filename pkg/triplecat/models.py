from exactlin import linalg as la
from hmod.models import Module, ModuleMap


class Triple(Module):
    """
    Module over Lambda or Gamma, read as a triple (x, y, f).

    ``x`` lives on the primed vertices, ``y`` on the copy of H and ``mu`` holds
    the structure map in adjoint form. ``f`` is the map T(x) -> y itself.
    """

    def _restrict(self, algebra, vertices):
        keys = [g.key for g in algebra.generators]
        return algebra.make_module(self.field, [self.dims[v] for v in vertices],
                                   {key: self.action[key] for key in keys})

    @property
    def x(self):
        return self._restrict(self.algebra.primed, self.algebra.primed_vertices)

    @property
    def y(self):
        return self._restrict(self.algebra.plain, self.algebra.plain_vertices)

    @property
    def mu(self):
        return {key: self.action[key] for key, _, _ in self.algebra.bimodule.elements}

    @property
    def f(self):
        from .construct import structure_map

        return structure_map(self)

    @property
    def label(self):
        from .construct import stacked_label

        return stacked_label(self)

    def to_json(self):
        from .construct import bimodule_element_name

        return {
            'labels': list(self.algebra.vertices),
            'dims': list(self.dims),
            'x': self.x.to_json(),
            'y': self.y.to_json(),
            'mu': {bimodule_element_name(self.algebra, key): la.to_lists(mat) for key, mat in self.mu.items()},
        }


class TripleMap(ModuleMap):
    """(alpha, beta) with beta o f = f' o T(alpha)."""

    @property
    def alpha(self):
        return [self.comps[v] for v in self.source.algebra.primed_vertices]

    @property
    def beta(self):
        return [self.comps[v] for v in self.source.algebra.plain_vertices]
