"""
Configuration of a law-suite run.
"""

from pydantic import BaseModel, ConfigDict, Field

from starcat.scalars import RingId


class GenConfig(BaseModel):
    """
    Everything a generator needs to reproduce a case.

    Generation is a pure function of (config, case index, law name), so two
    runs with equal configs produce identical instances.

    Example:
        ```python
        from starcat.harness import GenConfig, run_laws

        report = run_laws(GenConfig(ring="rational", seed=1, cases=50))
        assert report.total_failures == 0
        ```
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    ring: RingId
    seed: int = Field(default=1, ge=0, lt=2**64)
    cases: int = Field(default=50, ge=0)
    max_dim: int = Field(default=5, ge=0)
    numerator_bound: int = Field(default=5, ge=1)
    denominator_bound: int = Field(default=4, ge=1)
    ratfun_degree_bound: int = Field(default=2, ge=1)
    # Rational functions grow in degree under elimination
    ratfun_max_dim: int = Field(default=3, ge=0)
    max_reflections: int = Field(default=3, ge=1)

    @property
    def dim_bound(self) -> int:
        """The largest dimension generators draw for this ring."""
        if self.ring is RingId.RATFUN:
            return min(self.max_dim, self.ratfun_max_dim)
        return self.max_dim
