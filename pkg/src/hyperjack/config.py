"""Parameter grids for the identity suite."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path


@dataclass(frozen=True)
class GridConfig:
    n_values: tuple = (1, 2, 3)
    k_values: tuple = (1, 2)
    p_values: tuple = (0, 1, 2)
    alphas: tuple = ("1", "2", "1/2")
    # small finite alphabets, used where the evaluated side needs few letters
    y_alphabets: tuple = (("1",), ("1", "2"), ("1", "1/2", "3"))
    z_alphabet: tuple = ("2", "5")
    # wide alphabets for evaluated-only cases (a Jack shape with r rows needs r letters)
    wide_alphabets: tuple = (
        ("1", "2", "3", "4", "5", "6", "7"),
        ("1", "1/2", "1/3", "1/4", "1/5", "1/6", "1/7"),
        ("-1", "2", "-3", "4", "-5", "6", "7/2"),
    )
    extra_nk: tuple = ((4, 1),)  # added to D2H and VAND-JACK
    evaluated_nk: tuple = ((4, 2),)  # D2H pairs only checked on values
    lambda_weight: int = 4  # TRANS-SCHUR / K1-EXAMPLE shapes
    skew_weight: int = 3  # SKEW-HANKEL / FINAL-SKEW shapes
    branching_weight: int = 4
    kernel_degree: int = 5
    omega_range: tuple = (-2, 2)  # entries of the integer vectors fed to Omega+
    formal_weight: int = 12  # above this, symmetric-function sides are compared on values
    max_weight: int = 16  # cases needing Jack polynomials above this weight are skipped
    seed: int = 20240101

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "GridConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown grid fields: {sorted(unknown)}")
        return cls(**{k: _freeze(v) for k, v in data.items()})


def _freeze(v):
    if isinstance(v, list):
        return tuple(_freeze(x) for x in v)
    return v


DEFAULT = GridConfig()

SMALL = replace(
    DEFAULT,
    n_values=(1, 2),
    k_values=(1,),
    p_values=(0, 1),
    alphas=("1", "2"),
    extra_nk=(),
    evaluated_nk=(),
    lambda_weight=3,
    skew_weight=2,
    branching_weight=3,
    kernel_degree=3,
    omega_range=(-1, 1),
)


def load_grid(name: str | None) -> GridConfig:
    """``default``, ``small`` or a path to a JSON file of GridConfig fields."""
    if name in (None, "default"):
        return DEFAULT
    if name == "small":
        return SMALL
    data = json.loads(Path(name).read_text())
    return GridConfig.from_json(data)
