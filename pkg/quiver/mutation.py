"""Matrix mutation and mutation classes of quivers up to vertex permutation."""
import itertools
import logging
from collections import deque

from django.conf import settings
from django.core.exceptions import ValidationError

from .models import ExchangeMatrix

logger = logging.getLogger(__name__)


def mutate(b, k):
    """Mutation of b at vertex k (1-based)."""
    n = b.n
    if not 1 <= k <= n:
        raise ValueError(f"Mutation vertex {k} out of range 1..{n}")
    k -= 1
    B = b.b
    mutated = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-B[i][j])
            else:
                row.append(B[i][j] + (abs(B[i][k]) * B[k][j] + B[i][k] * abs(B[k][j])) // 2)
        mutated.append(tuple(row))
    return ExchangeMatrix(tuple(mutated))


def _signature(b, i):
    row = b.b[i]
    return (sorted(row), sum(x for x in row if x > 0), -sum(x for x in row if x < 0))


def canonical_form(b):
    """
    Least permuted matrix (row-major lexicographic) over the permutations that
    list vertices by increasing signature. The signature of a vertex depends
    only on the isomorphism class, so equal results mean isomorphic quivers.
    """
    n = b.n
    groups = {}
    for i in range(n):
        groups.setdefault(repr(_signature(b, i)), []).append(i)
    ordered = [groups[key] for key in sorted(groups)]
    best = None
    for parts in itertools.product(*(itertools.permutations(g) for g in ordered)):
        order = [v for part in parts for v in part]
        candidate = b.permuted(order)
        if best is None or candidate.b < best.b:
            best = candidate
    return best


def mutation_class(q, cap=None):
    """Canonical exchange matrices reachable from q by mutations."""
    cap = cap or settings.MAX_MUTATION_CLASS
    start = canonical_form(ExchangeMatrix.from_quiver(q))
    seen = {start}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for k in range(1, b.n + 1):
            c = canonical_form(mutate(b, k))
            if c in seen:
                continue
            seen.add(c)
            if len(seen) > cap:
                raise ValidationError(
                    "Mutation class exceeds %(cap)s matrices; is the quiver of finite type?",
                    code='refused', params={'cap': cap})
            queue.append(c)
    logger.info("Mutation class of %s has %d members", q, len(seen))
    return frozenset(seen)


def in_mutation_class(qc, q):
    if qc.n != q.n:
        return False
    return canonical_form(ExchangeMatrix.from_quiver(qc)) in mutation_class(q)
