"""Numerical tolerances used across the analysis, gathered in one record."""

from dataclasses import asdict, dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    root_tol: float = 1e-12          # Aberth correction stop, relative to 1 + |z|
    cluster_eps: float = 1e-6        # root clustering, scaled by 1 + max|root|
    one_band: float = 1e-8           # |lambda - 1| below this counts as multiplier one
    index_agree: float = 1e-8        # contour vs closed-form index
    sum_pass: float = 1e-7           # |sum of indices - 1|
    super_attracting: float = 1e-12
    circle_band: float = 1e-9        # distance of |lambda| from 1 still called indifferent
    rational_tol: float = 1e-6
    rational_max_order: int = 64
    contour_tol: float = 1e-10
    contour_start: int = 64
    contour_max: int = 2 ** 16
    pole_tol: float = 1e-12
    identity_tol: float = 1e-14
    fixed_residual: float = 1e-8
    witness_tol: float = 1e-9        # one-sided slack on Re(lambda) >= 1 / <= 1
    max_sweeps: int = 1000

    def with_overrides(self, **kw):
        return replace(self, **{k: v for k, v in kw.items() if v is not None})

    def as_dict(self):
        return asdict(self)


DEFAULT = Tolerances()
