from dataclasses import dataclass, field


@dataclass(frozen=True)
class TiltingSet:
    """A basic tilting module: sorted node indices of an AR quiver."""
    ar: object = field(compare=False, repr=False)
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, 'summands', tuple(sorted(set(self.summands))))

    def __len__(self):
        return len(self.summands)

    def __contains__(self, node):
        return node in self.summands

    @property
    def algebra(self):
        return self.ar.algebra

    @property
    def modules(self):
        return [self.ar.nodes[i].module for i in self.summands]

    def labels(self):
        return [self.ar.nodes[i].label for i in self.summands]

    def to_json(self):
        return self.labels()


@dataclass(frozen=True)
class ClusterTiltObj:
    """A cluster-tilting object, as sorted positions in the fundamental domain."""
    domain: object = field(compare=False, repr=False)
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, 'summands', tuple(sorted(set(self.summands))))

    def __len__(self):
        return len(self.summands)

    @property
    def objects(self):
        return [self.domain.objects[k] for k in self.summands]

    @property
    def nodes(self):
        return [self.domain.objects[k].node for k in self.summands]

    def labels(self):
        return [self.domain.label(k) for k in self.summands]

    def to_json(self):
        return self.labels()
