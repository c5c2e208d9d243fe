"""
Shared builders for tests: small exact objects and morphisms from
literals, and hypothesis strategies backed by the law-suite sampler.
"""

from collections.abc import Sequence

from hypothesis import strategies as st

from starcat.category import WMorphism, WObject
from starcat.harness import GenConfig, Sampler
from starcat.scalars import RingId, Scalar, parse_scalar

Q = RingId.RATIONAL


def s(text: str | int, ring: RingId = Q) -> Scalar:
    return parse_scalar(str(text), ring)


def obj(*weights: str | int, ring: RingId = Q) -> WObject:
    return WObject(ring, tuple(s(w, ring) for w in weights))


def mor(
    rows: Sequence[Sequence[str | int]],
    dom: WObject | None = None,
    cod: WObject | None = None,
    ring: RingId = Q,
) -> WMorphism:
    """A morphism from literal rows, unweighted unless objects are given."""
    matrix = tuple(tuple(s(x, ring) for x in row) for row in rows)
    if dom is None:
        width = len(matrix[0]) if matrix else 0
        dom = WObject.unweighted(ring, width)
    if cod is None:
        cod = WObject.unweighted(ring, len(matrix))
    return WMorphism(dom, cod, matrix)


def samplers(ring: RingId, max_dim: int = 3) -> st.SearchStrategy[Sampler]:
    """Samplers with hypothesis-chosen seeds."""
    return st.builds(
        lambda seed: Sampler(
            GenConfig(ring=ring, seed=seed, max_dim=max_dim), 0, "test"
        ),
        st.integers(min_value=0, max_value=2**32 - 1),
    )


ALL_RINGS = list(RingId)
