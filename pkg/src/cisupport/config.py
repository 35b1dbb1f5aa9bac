"""Engine configuration shared by the library, the DSL runner and the CLI."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .algebra import FieldSpec, MonomialOrder

ENGINE_VERSION = "0.1.0"


@dataclass(frozen=True)
class EngineConfig:
    field: str = "QQ"
    order: str = "grevlex"
    res_bound: int | None = None   # None: 2 * dim Q + 4
    ann_window: int = 2
    seed: int = 0

    def __post_init__(self):
        FieldSpec.parse(self.field)
        MonomialOrder(self.order)
        if self.ann_window < 1:
            raise ValueError("ann_window must be positive")
        if self.res_bound is not None and self.res_bound < 2:
            raise ValueError("res_bound must be at least 2")

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)

    @property
    def monomial_order(self) -> MonomialOrder:
        return MonomialOrder(self.order)

    def bound_for(self, nvars: int) -> int:
        return self.res_bound if self.res_bound is not None else 2 * nvars + 4

    def bound_schedule(self, nvars: int) -> list[int]:
        """Resolution lengths to try for supports; an explicit bound is never raised."""
        if self.res_bound is not None:
            return [self.res_bound]
        base = self.bound_for(nvars)
        return [base, base + 4, base + 8]

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT = EngineConfig()
