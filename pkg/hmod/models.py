import numpy as np

from exactlin import linalg as la


class Module:
    """
    Finite-dimensional left module over an elementary algebra: a vector space
    of dimension dims[i] at every vertex and one matrix per generator, of shape
    dims[target] x dims[source]. Instances are treated as immutable.
    """

    def __init__(self, algebra, field, dims, action):
        self.algebra = algebra
        self.field = field
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.n_vertices or min(self.dims, default=0) < 0:
            raise ValueError(f"Bad dimension vector {self.dims} for {algebra!r}")
        self.action = {}
        for g in algebra.generators:
            shape = (self.dims[g.target], self.dims[g.source])
            mat = action.get(g.key)
            if mat is None:
                mat = la.zeros(field, *shape)
            elif not isinstance(mat, la.Mat) or type(mat) is not field:
                mat = la.matrix(field, mat, shape=shape)
            if mat.shape != shape:
                raise ValueError(f"Generator {g.key} needs a {shape} matrix, got {mat.shape}")
            self.action[g.key] = mat
        self._acts = {}

    def __repr__(self):
        return f"<{type(self).__name__} dims={self.dims}>"

    @property
    def dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.dim == 0

    def act(self, element):
        """Matrix of a basis element of the algebra acting on this module."""
        mat = self._acts.get(element.key)
        if mat is None:
            mat = la.identity(self.field, self.dims[element.source])
            for g in element.word:
                mat = la.mul(self.action[g], mat)
            self._acts[element.key] = mat
        return mat

    def act_combination(self, source, target, coefficients):
        """Action of the combination sum c_k * basis(source, target)[k]."""
        out = la.zeros(self.field, self.dims[target], self.dims[source])
        for c, e in zip(la.ints(coefficients), self.algebra.basis(source, target)):
            if c:
                out = la.add(out, la.scale(c, self.act(e)))
        return out

    def to_json(self):
        return {
            'dims': list(self.dims),
            'mats': {str(key): la.to_lists(mat) for key, mat in self.action.items()},
        }


class Rep(Module):
    """Representation of an acyclic quiver, i.e. a module over its path algebra."""

    @classmethod
    def from_mats(cls, q, dims, mats, field=None):
        from .algebras import path_algebra

        algebra = path_algebra(q)
        field = field or la.prime_field()
        return cls(algebra, field, dims, {algebra.arrow_key(a): m for a, m in enumerate(mats)})

    @property
    def q(self):
        return self.algebra.quiver

    @property
    def mats(self):
        return [self.action[self.algebra.arrow_key(a)] for a in range(len(self.q.arrows))]

    def to_json(self):
        return {
            'dims': list(self.dims),
            'mats': {str(a): la.to_lists(m) for a, m in enumerate(self.mats)},
        }


class ModuleMap:
    """Module homomorphism given by one matrix per vertex."""

    def __init__(self, source, target, comps):
        if source.algebra is not target.algebra:
            raise ValueError("Maps must stay over one algebra")
        self.source = source
        self.target = target
        self.comps = []
        for i, comp in enumerate(comps):
            shape = (target.dims[i], source.dims[i])
            if comp.shape != shape:
                raise ValueError(f"Component {i} needs shape {shape}, got {comp.shape}")
            self.comps.append(comp)

    def __repr__(self):
        return f"<{type(self).__name__} {self.source.dims} -> {self.target.dims}>"

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, [la.zeros(source.field, t, s) for s, t in zip(source.dims, target.dims)])

    @classmethod
    def identity(cls, module):
        return cls(module, module, [la.identity(module.field, d) for d in module.dims])

    @classmethod
    def from_vector(cls, source, target, vec):
        comps = []
        offset = 0
        for s, t in zip(source.dims, target.dims):
            comps.append(vec[offset:offset + s * t].reshape(t, s))
            offset += s * t
        return cls(source, target, comps)

    def vector(self):
        flat = [la.ints(c).reshape(-1) for c in self.comps]
        return la.wrap(self.source.field, np.concatenate(flat) if flat else np.zeros(0, dtype=np.int64))

    def compose(self, first):
        """self o first."""
        return type(self)(first.source, self.target, [la.mul(g, f) for g, f in zip(self.comps, first.comps)])

    def is_zero(self):
        return all(la.is_zero(c) for c in self.comps)

    def is_homomorphism(self):
        for g in self.source.algebra.generators:
            left = la.mul(self.target.action[g.key], self.comps[g.source])
            right = la.mul(self.comps[g.target], self.source.action[g.key])
            if not la.is_zero(la.sub(left, right)):
                return False
        return True


RepMap = ModuleMap
