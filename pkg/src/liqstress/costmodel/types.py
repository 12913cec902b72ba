"""Domain types for the transaction cost model.

All spreads, costs, participations and volatilities are stored as plain
fractions (4 bps = 0.0004, 20% = 0.20). Conversion to and from bps/percent
happens only at the file-ingestion and CLI layers.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum


class ProhibitiveTradeError(ValueError):
    """Raised when code tries to use the numeric value of a prohibitive cost."""


class UnitCost:
    """Unit transaction cost as a fraction of traded value.

    Either a finite nonnegative number or the ``prohibitive`` sentinel meaning
    the trade size exceeds that day's trading limit. The sentinel deliberately
    has no numeric value: arithmetic on it raises instead of propagating an
    infinity or NaN into downstream totals.
    """

    __slots__ = ("_value",)

    def __init__(self, value: float):
        if value < 0:
            raise ValueError(f"unit cost must be nonnegative, got {value}")
        self._value = float(value)

    @classmethod
    def prohibitive(cls) -> "UnitCost":
        out = object.__new__(cls)
        out._value = None
        return out

    @property
    def is_prohibitive(self) -> bool:
        return self._value is None

    @property
    def value(self) -> float:
        """Numeric cost fraction; raises for the prohibitive sentinel."""
        if self._value is None:
            raise ProhibitiveTradeError(
                "trade exceeds the trading limit; no finite unit cost exists"
            )
        return self._value

    def value_or(self, default: float) -> float:
        return default if self._value is None else self._value

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitCost):
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __repr__(self) -> str:
        if self._value is None:
            return "UnitCost.prohibitive()"
        return f"UnitCost({self._value!r})"


class RiskMeasure(Enum):
    """Which security risk number scales the price impact."""

    VOLATILITY = "volatility"  # daily volatility, annual vol / sqrt(260)
    DTS = "dts"  # duration-times-spread, used as-is (no annualization)


class ParticipationBasis(Enum):
    """Denominator of the participation rate."""

    VOLUME = "volume"  # x = q / daily volume
    OUTSTANDING = "outstanding"  # y = q / shares outstanding


@dataclass(frozen=True)
class SecurityLiquidityProfile:
    """Per-security market data snapshot.

    Args:
        security_id: opaque identifier.
        price: currency per share, > 0.
        half_spread: half bid-ask spread as a fraction of price.
        annual_vol: annualized return volatility (fraction per year).
        daily_volume: shares traded per day.
        outstanding: shares issued (optional; needed for outstanding-based
            participation).
        turnover: daily traded value over outstanding, in (0, 1] (optional).
        dts: duration-times-spread as a fraction (optional; needed when the
            risk measure is DTS).
        fixed_cost_per_share: flat currency amount charged per share traded.
    """

    security_id: str
    price: float
    half_spread: float
    annual_vol: float
    daily_volume: float
    outstanding: float | None = None
    turnover: float | None = None
    dts: float | None = None
    fixed_cost_per_share: float = 0.0

    def __post_init__(self):
        if self.price <= 0:
            raise ValueError(f"{self.security_id}: price must be > 0")
        if self.half_spread < 0:
            raise ValueError(f"{self.security_id}: half_spread must be >= 0")
        if self.annual_vol < 0:
            raise ValueError(f"{self.security_id}: annual_vol must be >= 0")
        if self.daily_volume < 0:
            raise ValueError(f"{self.security_id}: daily_volume must be >= 0")
        if self.turnover is not None and not (0 < self.turnover <= 1):
            raise ValueError(f"{self.security_id}: turnover must be in (0, 1]")
        if self.dts is not None and self.dts < 0:
            raise ValueError(f"{self.security_id}: dts must be >= 0")

    def with_market(
        self, half_spread: float, annual_vol: float, daily_volume: float
    ) -> "SecurityLiquidityProfile":
        """Copy with replaced spread / vol / volume (used by stress scenarios)."""
        return replace(
            self,
            half_spread=half_spread,
            annual_vol=annual_vol,
            daily_volume=daily_volume,
        )


@dataclass(frozen=True)
class BucketParams:
    """Cost-model parameters shared by securities in one liquidity bucket.

    The unit cost of trading q shares is

        beta_spread * s + beta_impact * R * kernel(participation)

    where R is the daily volatility or the DTS per ``risk_measure``, the
    participation is q/volume or q/outstanding per ``participation_basis``,
    and the kernel is a power law with exponent gamma1 up to the inflection
    point x_tilde, a second power law with exponent gamma2 from x_tilde to the
    trading limit x_plus (glued continuously), and prohibitive beyond x_plus.
    """

    beta_spread: float
    beta_impact: float
    gamma1: float
    gamma2: float
    x_tilde: float
    x_plus: float
    risk_measure: RiskMeasure = RiskMeasure.VOLATILITY
    participation_basis: ParticipationBasis = ParticipationBasis.VOLUME

    def __post_init__(self):
        if not (0 < self.x_tilde <= self.x_plus):
            raise ValueError(
                f"need 0 < x_tilde <= x_plus, got x_tilde={self.x_tilde}, "
                f"x_plus={self.x_plus}"
            )
        if self.gamma1 <= 0 or self.gamma2 <= 0:
            raise ValueError("exponents gamma1, gamma2 must be > 0")
        if self.beta_spread < 0 or self.beta_impact < 0:
            raise ValueError("beta coefficients must be >= 0")


@dataclass(frozen=True)
class TwoRegimeImpactParams:
    """Parameters of the raw two-power-regime impact curve.

    phi2 is derived from continuity at the inflection point:
    phi2 = phi1 * x_tilde ** (gamma1 - gamma2).
    """

    phi1: float
    gamma1: float
    gamma2: float
    x_tilde: float
    x_plus: float

    def __post_init__(self):
        if not (0 < self.x_tilde <= self.x_plus):
            raise ValueError(
                f"need 0 < x_tilde <= x_plus, got x_tilde={self.x_tilde}, "
                f"x_plus={self.x_plus}"
            )

    @property
    def phi2(self) -> float:
        return self.phi1 * self.x_tilde ** (self.gamma1 - self.gamma2)


class ShockKind(Enum):
    MULT = "mult"
    ADD = "add"


@dataclass(frozen=True)
class Shock:
    """One parameter shock, multiplicative (value = m) or additive (value = delta)."""

    kind: ShockKind
    value: float

    @classmethod
    def mult(cls, m: float) -> "Shock":
        if m <= 0:
            raise ValueError(f"multiplicative shock factor must be > 0, got {m}")
        return cls(ShockKind.MULT, m)

    @classmethod
    def add(cls, delta: float) -> "Shock":
        return cls(ShockKind.ADD, delta)

    @classmethod
    def none(cls) -> "Shock":
        return cls(ShockKind.MULT, 1.0)

    def apply(self, x: float) -> float:
        if self.kind is ShockKind.MULT:
            return x * self.value
        return x + self.value


@dataclass(frozen=True)
class StressScenario:
    """Joint shock to spread, volatility and volume.

    Spread and volatility accept multiplicative or additive shocks; the
    additive volatility shock is stated in annualized terms. Volume only
    supports a multiplicative factor.
    """

    spread: Shock
    vol: Shock
    volume: Shock

    def __post_init__(self):
        if self.volume.kind is not ShockKind.MULT:
            raise ValueError("volume shock must be multiplicative")

    @classmethod
    def identity(cls) -> "StressScenario":
        return cls(Shock.none(), Shock.none(), Shock.none())

    @classmethod
    def of(
        cls,
        spread_mult: float = 1.0,
        vol_mult: float = 1.0,
        volume_mult: float = 1.0,
        spread_add: float = 0.0,
        vol_add: float = 0.0,
    ) -> "StressScenario":
        """Convenience constructor; additive terms win when nonzero."""
        spread = Shock.add(spread_add) if spread_add else Shock.mult(spread_mult)
        vol = Shock.add(vol_add) if vol_add else Shock.mult(vol_mult)
        return cls(spread, vol, Shock.mult(volume_mult))
