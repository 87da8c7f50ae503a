"""Seeded input families.

Random symbols come from SplitMix64 (Steele, Lea & Flood 2014): the k-th
output (k = 1, 2, ...) of seed ``s`` is ``mix(s + k * 0x9E3779B97F4A7C15)``
modulo 2**64.  Seed 0 yields ``0xE220A8397B1DCDAF`` first.  A symbol is drawn
from an output ``z`` as ``((z >> 32) * sigma) >> 32``, so ports in any
language reproduce the same bytes.  Letters are ``a``, ``b``, ... in order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import InvalidInput

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
GENERATOR_NAME = "splitmix64"
DEFAULT_BORDER_FRACTIONS = (Fraction(1, 4), Fraction(2, 5))


class Family(enum.Enum):
    RANDOM = "random"
    FIBONACCI = "fibonacci"
    THUE_MORSE = "thue-morse"
    RUN_RICH = "run-rich"
    BORDER_HEAVY = "border-heavy"


def _fraction(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    sigma: int = 2
    seed: int = 0
    border_fraction: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.border_fraction is not None:
            object.__setattr__(self, "border_fraction", _fraction(self.border_fraction))
        if self.n < 1:
            raise InvalidInput("n must be at least 1")
        if not 2 <= self.sigma <= 256:
            raise InvalidInput("sigma must lie in 2..256")
        if not 0 <= self.seed < 2**64:
            raise InvalidInput("seed must fit in 64 bits")
        if self.family is Family.BORDER_HEAVY:
            beta = self.border_fraction
            if beta is None or not 0 < beta <= Fraction(1, 2):
                raise InvalidInput("border-heavy needs a border fraction in (0, 1/2]")

    @property
    def label(self) -> str:
        """Family description without the size, for grouping benchmark rows."""
        f = self.family
        if f is Family.RANDOM:
            return f"random(sigma={self.sigma},seed={self.seed})"
        if f is Family.BORDER_HEAVY:
            return f"border-heavy(beta={self.border_fraction},sigma={self.sigma},seed={self.seed})"
        return f.value

    def descriptor(self) -> dict[str, str]:
        return {
            "family": self.family.value,
            "n": str(self.n),
            "sigma": str(self.sigma),
            "seed": str(self.seed),
            "border_fraction": "" if self.border_fraction is None else str(self.border_fraction),
            "generator": GENERATOR_NAME,
        }


def splitmix64(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Outputs ``start+1 .. start+count`` of SplitMix64 as uint64."""
    k = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed) + k * np.uint64(GOLDEN_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


def random_symbols(seed: int, count: int, sigma: int, start: int = 0) -> bytes:
    z = splitmix64(seed, count, start) >> np.uint64(32)
    draws = (z * np.uint64(sigma)) >> np.uint64(32)
    return (draws.astype(np.uint8) + ord("a")).tobytes()


def fibonacci_word(n: int) -> bytes:
    a, b = b"a", b"ab"
    if n == 1:
        return a
    while len(b) < n:
        a, b = b, b + a
    return b[:n]


def thue_morse_word(n: int) -> bytes:
    k = np.arange(n, dtype=np.uint64)
    parity = np.zeros(n, dtype=np.uint8)
    while k.any():
        parity ^= (k & np.uint64(1)).astype(np.uint8)
        k >>= np.uint64(1)
    return (parity + ord("a")).tobytes()


def run_rich_word(n: int) -> bytes:
    """a b aa b aaa b ... truncated to n."""
    out = bytearray()
    k = 1
    while len(out) < n:
        out += b"a" * k + b"b"
        k += 1
    return bytes(out[:n])


def generate(spec: FamilySpec) -> bytes:
    f, n = spec.family, spec.n
    if f is Family.RANDOM:
        return random_symbols(spec.seed, n, spec.sigma)
    if f is Family.FIBONACCI:
        return fibonacci_word(n)
    if f is Family.THUE_MORSE:
        return thue_morse_word(n)
    if f is Family.RUN_RICH:
        return run_rich_word(n)
    # border-heavy: b + filler + b, one stream for both parts
    nb = int(spec.border_fraction * n)
    border = random_symbols(spec.seed, nb, spec.sigma)
    filler = random_symbols(spec.seed, n - 2 * nb, spec.sigma, start=nb)
    return border + filler + border


def write_descriptor(path: Path, spec: FamilySpec) -> Path:
    path = Path(path)
    lines = [f"{k}={v}" for k, v in spec.descriptor().items()]
    path.write_text("\n".join(lines) + "\n")
    return path


def read_descriptor(path: Path) -> FamilySpec:
    fields = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        fields[key.strip()] = value.strip()
    try:
        return FamilySpec(
            family=Family(fields["family"]),
            n=int(fields["n"]),
            sigma=int(fields.get("sigma", 2)),
            seed=int(fields.get("seed", 0)),
            border_fraction=Fraction(fields["border_fraction"]) if fields.get("border_fraction") else None,
        )
    except (KeyError, ValueError) as exc:
        raise InvalidInput(f"malformed descriptor {path}: {exc}") from None


def write_family(spec: FamilySpec, path: Path) -> tuple[Path, Path]:
    """Write raw bytes to ``path`` and the sidecar descriptor to ``path + '.desc'``."""
    path = Path(path)
    path.write_bytes(generate(spec))
    desc = write_descriptor(path.with_name(path.name + ".desc"), spec)
    return path, desc
