"""Parameter types for the augmentation operators.

An :class:`AugmentSpec` is a frozen, validated bag of every knob an operator
can consume; each operator reads only the fields it documents.  Keeping one
spec type (rather than one per method) lets batch drivers, CLI flags, and
experiment configs share a single serialization.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from enum import Enum

from .._validation import (
    check_positive_int,
    check_seed,
    check_unit_open_interval,
)
from ..errors import ParameterError
from ..spectral import CandidatePolicy

__all__ = ["Method", "Band", "BandPolicy", "AugmentSpec", "MINOR_COMPLEMENT_K"]

#: The minor band is always the candidate set minus the top-10 dominant bins,
#: independent of any k configured for dominant selection.
MINOR_COMPLEMENT_K = 10


class Method(str, Enum):
    """Augmentation operator identifiers, as used in configs and CLIs."""

    DOMINANT_SHUFFLE = "dominant_shuffle"
    FREQ_MASK = "freq_mask"
    FREQ_MIX = "freq_mix"
    FREQ_ADD = "freq_add"
    FREQ_POOL = "freq_pool"
    FREQ_NOISE = "freq_noise"
    FREQ_RANDOM = "freq_random"
    UPSAMPLE = "upsample"

    @classmethod
    def coerce(cls, value: "Method | str") -> "Method":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value))
        except ValueError:
            known = ", ".join(m.value for m in cls)
            raise ParameterError(f"unknown method {value!r}; expected one of: {known}") from None


class Band(str, Enum):
    """Which part of the candidate spectrum an operator touches."""

    FULL = "full"
    DOMINANT = "dominant"
    MINOR = "minor"

    @classmethod
    def coerce(cls, value: "Band | str") -> "Band":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value))
        except ValueError:
            known = ", ".join(b.value for b in cls)
            raise ParameterError(f"unknown band {value!r}; expected one of: {known}") from None


#: Per-method default band when AugmentSpec.band is left unset.  The shuffle
#: and the magnitude-rewrite operator target dominant bins; masking, mixing,
#: and noising default to the whole candidate spectrum.
_DEFAULT_BANDS: dict[Method, Band] = {
    Method.DOMINANT_SHUFFLE: Band.DOMINANT,
    Method.FREQ_MASK: Band.FULL,
    Method.FREQ_MIX: Band.FULL,
    Method.FREQ_NOISE: Band.FULL,
    Method.FREQ_RANDOM: Band.DOMINANT,
}


@dataclass(frozen=True, slots=True)
class BandPolicy:
    """A band choice plus the selection parameters it needs.

    ``k`` applies to the dominant band only; the minor band is always the
    complement of the top-``MINOR_COMPLEMENT_K`` set.
    """

    band: Band
    k: int = MINOR_COMPLEMENT_K
    candidates: CandidatePolicy = field(default_factory=CandidatePolicy)

    def __post_init__(self) -> None:
        object.__setattr__(self, "band", Band.coerce(self.band))
        object.__setattr__(self, "k", check_positive_int(self.k, name="k"))


@dataclass(frozen=True, slots=True)
class AugmentSpec:
    """Validated parameters for one augmentation method.

    Attributes
    ----------
    method : Method or str
    k : int
        Dominant-bin count for the shuffle and for dominant-band selection.
    band : Band, str, or None
        None picks the method's default band.
    mask_rate : float in (0, 1)
        Fraction of band bins zeroed (masking) or swapped in (mixing).
    sigma : float > 0
        Noise scale; relative to the mean candidate magnitude unless
        ``sigma_is_absolute`` is set.
    pool_size : int >= 1
        Group width for magnitude pooling.
    upsample_factor : int >= 2
        Interpolation factor for the upsample-and-crop operator.
    per_variate_independent : bool
        Shuffle only: draw one permutation per variate (True) or share a
        single permutation across variates (False).
    include_dc, include_nyquist : bool
        Admit the structurally special bins into the candidate set.
    seed : int
        Unsigned 64-bit base seed consumed by batch drivers.
    """

    method: Method
    k: int = 4
    band: Band | None = None
    mask_rate: float = 0.1
    sigma: float = 0.1
    sigma_is_absolute: bool = False
    pool_size: int = 4
    upsample_factor: int = 2
    per_variate_independent: bool = True
    include_dc: bool = False
    include_nyquist: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "method", Method.coerce(self.method))
        if self.band is not None:
            object.__setattr__(self, "band", Band.coerce(self.band))
        object.__setattr__(self, "k", check_positive_int(self.k, name="k"))
        object.__setattr__(
            self, "mask_rate", check_unit_open_interval(self.mask_rate, name="mask_rate")
        )
        sigma = float(self.sigma)
        if sigma <= 0.0:
            raise ParameterError(f"sigma must be > 0, got {sigma}")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "pool_size", check_positive_int(self.pool_size, name="pool_size"))
        factor = check_positive_int(self.upsample_factor, name="upsample_factor")
        if factor < 2:
            raise ParameterError(f"upsample_factor must be >= 2, got {factor}")
        object.__setattr__(self, "upsample_factor", factor)
        object.__setattr__(self, "seed", check_seed(self.seed))

    def resolved_band(self) -> Band:
        """The effective band: the explicit one, else the method default."""
        if self.band is not None:
            return self.band
        return _DEFAULT_BANDS.get(self.method, Band.FULL)

    def candidate_policy(self) -> CandidatePolicy:
        return CandidatePolicy(
            include_dc=self.include_dc, include_nyquist=self.include_nyquist
        )

    def band_policy(self) -> BandPolicy:
        return BandPolicy(
            band=self.resolved_band(), k=self.k, candidates=self.candidate_policy()
        )

    def with_seed(self, seed: int) -> "AugmentSpec":
        return replace(self, seed=check_seed(seed))

    def to_params(self) -> dict:
        """Plain-dict form (method as its string value), JSON-friendly."""
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, Enum):
                value = value.value
            out[f.name] = value
        return out

    @classmethod
    def from_params(cls, params: dict) -> "AugmentSpec":
        """Build from a plain dict, rejecting unknown keys."""
        known = {f.name for f in fields(cls)}
        unknown = set(params) - known
        if unknown:
            raise ParameterError(
                f"unknown augmentation parameter(s): {sorted(unknown)}; known: {sorted(known)}"
            )
        if "method" not in params:
            raise ParameterError("augmentation parameters must include 'method'")
        return cls(**params)
