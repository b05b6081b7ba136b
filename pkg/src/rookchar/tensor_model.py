"""Finite-dimensional product-state oracles.

The data is a self-adjoint operator A stored in its eigenbasis (``a_diag``),
a marked unit vector v (stored through its squared entries so closed forms
stay rational), a set of *regular* coordinates that absorb the leftover mass
1 - sum|a| slot by slot, and a truncation depth N.

Two independent evaluation routes are provided:

* :func:`phi_closed_form` multiplies per-part traces over the quasi-cycle
  decomposition -- exact rationals throughout;
* :func:`phi_model` materializes the generator embedding on the N-fold
  tensor power (a swap with a sign twist over the negative spectral block
  for each adjacent transposition, the rank-1 projection onto v for e{1}),
  multiplies matrices along a generator word, and traces against the
  product state.

At finite truncation a genuinely infinite regular block is unavailable, so
slot k recycles regular coordinate k mod #regular.  Plain cycles whose slots
collide on one regular coordinate pick up a spurious (1 - sum|a|)^len term;
with sum|a| = 1 (empty regular set) the two routes agree on everything.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .elements import PartialBijection, transposition
from .quasicycles import CYCLE, TRIVIAL, decompose
from .states import State
from .words import EPS1, element_to_word
from .errors import ParseError, ResourceGuardError

DEFAULT_MAX_DIM = 4096
MAX_DIM_ENV = "ROOKCHAR_MAX_DIM"


@dataclass(frozen=True)
class ModelParams:
    a_diag: tuple[Fraction, ...]
    v_sq: tuple[Fraction, ...]
    regular: tuple[int, ...]
    slots: int

    def __post_init__(self):
        if len(self.v_sq) != len(self.a_diag):
            raise ValueError("v and a_diag must have the same dimension")
        if self.slots < 1:
            raise ValueError("need at least one tensor slot")
        d = len(self.a_diag)
        if len(set(self.regular)) != len(self.regular) or any(
            not 1 <= j <= d for j in self.regular
        ):
            raise ValueError("regular coordinates must be distinct indices in 1..d")
        if any(q < 0 for q in self.v_sq):
            raise ValueError("squared vector entries must be nonnegative")

    @staticmethod
    def of(a_diag: Iterable, v_sq: Iterable, regular: Iterable[int] = (), slots: int = 4) -> "ModelParams":
        return ModelParams(
            tuple(Fraction(a) for a in a_diag),
            tuple(Fraction(q) for q in v_sq),
            tuple(sorted(int(j) for j in regular)),
            int(slots),
        )

    @property
    def d(self) -> int:
        return len(self.a_diag)

    @property
    def spectral_mass(self) -> Fraction:
        return sum((abs(a) for a in self.a_diag), Fraction(0))

    def to_json(self) -> dict:
        return {
            "a_diag": [str(a) for a in self.a_diag],
            "v": [_format_sqrt(q) for q in self.v_sq],
            "regular": list(self.regular),
            "N": self.slots,
        }

    @staticmethod
    def from_json(data: dict) -> "ModelParams":
        return ModelParams.of(
            (Fraction(a) for a in data["a_diag"]),
            (_parse_sqrt(tok) for tok in data["v"]),
            data.get("regular", ()),
            data["N"],
        )


def _format_sqrt(q: Fraction) -> str:
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return str(Fraction(rn, rd))
    return f"sqrt({q})"


def _parse_sqrt(token: str) -> Fraction:
    token = token.strip()
    try:
        if token.startswith("sqrt(") and token.endswith(")"):
            return Fraction(token[5:-1])
        return Fraction(token) ** 2
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad vector entry {token!r}") from exc


def load_params(path: str) -> ModelParams:
    with open(path, encoding="utf-8") as fh:
        return ModelParams.from_json(json.load(fh))


@dataclass(frozen=True)
class ModelValidation:
    conditions: tuple[tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.conditions)

    def failures(self) -> tuple[str, ...]:
        return tuple(f"({code}) {detail}" for code, ok, detail in self.conditions if not ok)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "conditions": [
                {"condition": code, "ok": ok, "detail": detail}
                for code, ok, detail in self.conditions
            ],
        }


def validate_params(p: ModelParams) -> ModelValidation:
    """Report-style check of the admissibility conditions (a)-(f)."""
    mass = p.spectral_mass
    regular = set(p.regular)
    conditions = [
        ("a", mass <= 1, f"trace norm of A is {mass}"),
        ("b", sum(p.v_sq) == 1, f"v has squared norm {sum(p.v_sq)}"),
        (
            "c",
            mass < 1 or not regular,
            "full spectral mass leaves no room for regular coordinates",
        ),
        (
            "d",
            mass == 1 or bool(regular),
            "leftover spectral mass needs at least one regular coordinate",
        ),
        (
            "e",
            all(q == 0 for a, q in zip(p.a_diag, p.v_sq) if a < 0),
            "v must vanish on the negative spectral block",
        ),
        (
            "f",
            all(p.v_sq[j - 1] == 0 for j in regular),
            "v must vanish on the regular coordinates",
        ),
        (
            "range",
            all(-1 <= a <= 1 for a in p.a_diag),
            "eigenvalues must lie in [-1, 1]",
        ),
        (
            "regular-kernel",
            all(p.a_diag[j - 1] == 0 for j in regular),
            "regular coordinates must carry eigenvalue 0",
        ),
    ]
    return ModelValidation(tuple(conditions))


def _require_valid(p: ModelParams):
    report = validate_params(p)
    if not report.ok:
        raise ValueError("invalid model parameters: " + "; ".join(report.failures()))


# --- closed-form route --------------------------------------------------------


def _tr_q_pow(p: ModelParams, m: int) -> Fraction:
    """Tr(q A^m) = <A^m v, v>."""
    return sum((a**m * q for a, q in zip(p.a_diag, p.v_sq)), Fraction(0))


def _tr_q_pow_abs(p: ModelParams, m: int) -> Fraction:
    """Tr(q A^m |A|) = <A^m |A| v, v>."""
    return sum((a**m * abs(a) * q for a, q in zip(p.a_diag, p.v_sq)), Fraction(0))


def _tr_cycle(p: ModelParams, k: int) -> Fraction:
    """Tr(A^{k-1} |A|): the plain k-cycle value."""
    return sum((a ** (k - 1) * abs(a) for a in p.a_diag), Fraction(0))


def phi_closed_form(p: ModelParams, r: PartialBijection) -> Fraction:
    """Exact state value from the per-part trace formulas.

    Each decomposition part contributes one factor: Tr(q |A|) for a trivial
    quasi-cycle, Tr(q A^{len-1} |A|) for a quasi-cycle, Tr(A^{len-1} |A|)
    for a plain cycle.
    """
    _require_valid(p)
    value = Fraction(1)
    for part in decompose(r):
        if part.kind == CYCLE:
            value *= _tr_cycle(p, part.length)
        elif part.kind == TRIVIAL:
            value *= _tr_q_pow_abs(p, 0)
        else:
            value *= _tr_q_pow_abs(p, part.length - 1)
    return value


def marked_cycle_value(p: ModelParams, k: int, marks: Sequence[int]) -> Fraction:
    """Value on the k-cycle (1 2 ... k) with the points ``marks`` killed.

    This is the multi-marked trace product: consecutive gaps between marked
    positions contribute Tr(q A^gap) and the wrap-around gap contributes
    Tr(q A^{k - a_last + a_first - 1} |A|); with no marks it is the plain
    cycle trace.  It factors through the decomposition of the same element,
    which the tests cross-check.
    """
    _require_valid(p)
    pos = sorted(set(marks))
    if pos and not (1 <= pos[0] and pos[-1] <= k):
        raise ValueError("marked positions must lie on the cycle")
    if not pos:
        return _tr_cycle(p, k)
    value = Fraction(1)
    for prev, nxt in zip(pos, pos[1:]):
        value *= _tr_q_pow(p, nxt - prev)
    return value * _tr_q_pow_abs(p, k - pos[-1] + pos[0] - 1)


# --- dense tensor route ---------------------------------------------------------


def _max_dim() -> int:
    return int(os.environ.get(MAX_DIM_ENV, DEFAULT_MAX_DIM))


class TensorEmbedding:
    """Dense generator images on the N-fold tensor power and the product state.

    ``matrix(r)`` multiplies the generator images along a word for r; ``psi``
    traces against the product state whose k-th slot density is
    |A| + (1 - Tr|A|) e_jj on the k-th recycled regular coordinate j.
    """

    def __init__(self, params: ModelParams, *, twist: bool = True):
        _require_valid(params)
        self.params = params
        self.d = params.d
        self.slots = params.slots
        self.dim = self.d**self.slots
        if self.dim > _max_dim():
            raise ResourceGuardError(
                f"tensor dimension {self.d}^{self.slots} = {self.dim} exceeds "
                f"the guard ({_max_dim()}); raise {MAX_DIM_ENV} to override"
            )
        a = np.array([float(x) for x in params.a_diag])
        self._a = a
        self._v = np.sqrt([float(q) for q in params.v_sq])
        self._q = np.outer(self._v, self._v)

        d = self.d
        pair = np.zeros((d * d, d * d))
        neg = a < 0
        for i in range(d):
            for j in range(d):
                sign = -1.0 if (twist and neg[i] and neg[j]) else 1.0
                pair[j * d + i, i * d + j] = sign
        self._pair_swap = pair

        leftover = 1.0 - float(params.spectral_mass)
        slot_rhos = []
        for k in range(1, self.slots + 1):
            rho = np.abs(a).copy()
            if params.regular and leftover:
                j = params.regular[(k - 1) % len(params.regular)]
                rho[j - 1] += leftover
            slot_rhos.append(rho)
        self.rho_vec = reduce(np.kron, slot_rhos)
        self._letters: dict[int, np.ndarray] = {}
        self._elements: dict[PartialBijection, np.ndarray] = {}

    def generator_s(self, k: int) -> np.ndarray:
        """The image of the adjacent transposition (k k+1)."""
        if not 1 <= k < self.slots:
            raise ValueError(f"slot index {k} out of range for N={self.slots}")
        if k not in self._letters:
            left = np.eye(self.d ** (k - 1))
            right = np.eye(self.d ** (self.slots - k - 1))
            self._letters[k] = np.kron(np.kron(left, self._pair_swap), right)
        return self._letters[k]

    def generator_eps1(self) -> np.ndarray:
        """The image of e{1}: the rank-1 projection onto v in the first slot."""
        if EPS1 not in self._letters:
            self._letters[EPS1] = np.kron(self._q, np.eye(self.d ** (self.slots - 1)))
        return self._letters[EPS1]

    def matrix(self, r: PartialBijection) -> np.ndarray:
        if r.bound > self.slots:
            raise ValueError(
                f"support of {r.literal()} exceeds the {self.slots} tensor slots"
            )
        cached = self._elements.get(r)
        if cached is None:
            cached = np.eye(self.dim)
            for letter in element_to_word(r):
                gen = self.generator_eps1() if letter == EPS1 else self.generator_s(letter)
                cached = cached @ gen
            self._elements[r] = cached
        return cached

    def slot_diag(self, k: int, values: np.ndarray) -> np.ndarray:
        """The diagonal (as a vector) of diag(values) acting in slot k."""
        parts = [np.ones(self.d)] * self.slots
        parts[k - 1] = np.asarray(values, dtype=float)
        return reduce(np.kron, parts)

    def psi(self, m: np.ndarray) -> float:
        return float(np.diagonal(m) @ self.rho_vec)

    def state_value(self, r: PartialBijection) -> float:
        return self.psi(self.matrix(r))

    def pair_value(self, mid: np.ndarray, x: PartialBijection, y: PartialBijection) -> float:
        """<pi(mid) x xi, y xi> = psi(T(y)^T mid T(x))."""
        return self.psi(self.matrix(y).T @ mid @ self.matrix(x))

    def pair_value_diag(self, diag: np.ndarray, x: PartialBijection, y: PartialBijection) -> float:
        return self.psi(self.matrix(y).T @ (diag[:, None] * self.matrix(x)))


def embed_generators(p: ModelParams, *, twist: bool = True) -> TensorEmbedding:
    """Materialize the generator images T(s_k), T(e{1}) and the product state."""
    return TensorEmbedding(p, twist=twist)


def phi_model(
    p: ModelParams,
    r: PartialBijection,
    embedding: TensorEmbedding | None = None,
) -> float:
    """The dense-trace state value; the independent oracle for the closed form."""
    emb = embedding if embedding is not None else TensorEmbedding(p)
    return emb.state_value(r)


# --- Okounkov operators ---------------------------------------------------------


@dataclass(frozen=True)
class OkounkovReport:
    slot: int
    x: str
    y: str
    target: float
    values: tuple[tuple[int, float], ...]
    max_deviation: float

    @property
    def stabilized(self) -> bool:
        return self.max_deviation <= 1e-12

    def to_json(self) -> dict:
        return {
            "slot": self.slot,
            "x": self.x,
            "y": self.y,
            "target": self.target,
            "values": {str(n): v for n, v in self.values},
            "max_deviation": self.max_deviation,
        }


def _admissible(emb: TensorEmbedding, k: int, x: PartialBijection, y: PartialBijection) -> list[int]:
    blocked = x.support() | y.support() | {k}
    if max(blocked) > emb.slots - 1:
        raise ValueError("supports of x, y and the slot must stay below N")
    return [n for n in range(1, emb.slots + 1) if n not in blocked]


def okounkov_check(
    p: ModelParams,
    k: int,
    x: PartialBijection,
    y: PartialBijection,
    embedding: TensorEmbedding | None = None,
) -> OkounkovReport:
    """Compare <pi((k n)) x xi, y xi> across admissible n with the A-insertion.

    The weak limit of the transposition images acts as A in slot k; on the
    truncated model every admissible n already gives the limit value, so the
    report's deviation is expected to be ~1e-16.
    """
    emb = embedding if embedding is not None else TensorEmbedding(p)
    target = emb.pair_value_diag(emb.slot_diag(k, emb._a), x, y)
    values = []
    for n in _admissible(emb, k, x, y):
        values.append((n, emb.pair_value(emb.matrix(transposition(k, n)), x, y)))
    max_dev = max((abs(v - target) for _, v in values), default=0.0)
    return OkounkovReport(k, x.literal(), y.literal(), target, tuple(values), max_dev)


def okounkov_projection_check(
    p: ModelParams,
    k: int,
    x: PartialBijection,
    y: PartialBijection,
    embedding: TensorEmbedding | None = None,
) -> float:
    """Max deviation of double-transposition values from the single target.

    When A is a projection (eigenvalues in {0, 1}) the limit operator must
    satisfy P^2 = P, so <pi((k n)) pi((k m)) x xi, y xi> equals the single
    insertion for distinct admissible n, m.
    """
    if any(a not in (0, 1) for a in p.a_diag):
        raise ValueError("projection law requires eigenvalues in {0, 1}")
    emb = embedding if embedding is not None else TensorEmbedding(p)
    target = emb.pair_value_diag(emb.slot_diag(k, emb._a), x, y)
    devs = [0.0]
    admissible = _admissible(emb, k, x, y)
    for n in admissible:
        for m in admissible:
            if n == m:
                continue
            mid = emb.matrix(transposition(k, n)) @ emb.matrix(transposition(k, m))
            devs.append(abs(emb.pair_value(mid, x, y) - target))
    return max(devs)


# --- bridge from the state family ---------------------------------------------


def model_from_state(state: State, slots: int = 4) -> ModelParams:
    """Model parameters whose closed form reproduces the state exactly.

    The spectrum lists alpha then -beta; the marked vector splits its mass
    between the marked alpha coordinate (weight t) and a fresh kernel
    coordinate (weight 1 - t); leftover spectral mass gets one declared
    regular coordinate.
    """
    a: list[Fraction] = list(state.thoma.alpha) + [-b for b in state.thoma.beta]
    v_sq: list[Fraction] = [Fraction(0)] * len(a)
    t = state.weight
    if state.mark is not None:
        v_sq[state.mark[0] - 1] = t
    if t < 1:
        a.append(Fraction(0))
        v_sq.append(1 - t)
    regular: tuple[int, ...] = ()
    if sum(abs(x) for x in a) < 1:
        a.append(Fraction(0))
        v_sq.append(Fraction(0))
        regular = (len(a),)
    return ModelParams(tuple(a), tuple(v_sq), regular, slots)
