"""Integral cohomology rings of smooth quadrics and of products of projective spaces.

Classes are stored densely over a fixed ordered basis, one integer per basis
element.  Two ring families are supported:

``Quadric(n)``
    Basis ``b0 .. bn`` plus ``bp<m>`` when ``n = 2m``.  For ``i`` below the
    middle ``b_i = h^i``; above it ``h^i = 2 b_i``.  For even ``n`` the two
    middle classes ``b_m = l`` and ``bp_m = l'`` are the classes of the two
    families of ``m``-planes and ``h^m = l + l'``.  The point class ``b_n``
    integrates to 1, so ``h^n`` integrates to 2.

``MultiProjective(dims)``
    ``P^{a_1} x ... x P^{a_k}`` with basis the monomials ``t1^e1 * ... * tk^ek``
    with ``e_i <= a_i``.  The hyperplane class is ``t1 + ... + tk`` (Segre
    polarization).
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "StructureConstantError",
    "Quadric",
    "MultiProjective",
    "RingDescriptor",
    "CohClass",
    "ring_max_dim",
    "hyperplane",
    "mul",
    "integrate",
    "restrict_to_linear",
    "restrict_to_hyperplane_quadric",
    "pullback_factor",
    "ring_to_json",
    "ring_from_json",
    "class_to_json",
    "class_from_json",
    "format_class",
    "FAMILY_L",
    "FAMILY_LP",
]

FAMILY_L = "l"
FAMILY_LP = "lp"


class StructureConstantError(ArithmeticError):
    """A multiplication rule produced a non-integral coefficient."""


def ring_max_dim() -> int:
    """Largest supported total dimension: 16, or ``n_max + 1`` if that is larger."""
    from .config import load_config

    return max(16, load_config().n_max + 1)


@dataclass(frozen=True)
class Quadric:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"Quadric needs n >= 2, got {self.n!r}")
        if self.n > ring_max_dim():
            raise ValueError(f"Quadric({self.n}) exceeds the supported dimension {ring_max_dim()}")

    @property
    def dim(self) -> int:
        return self.n

    @property
    def middle(self) -> int:
        return (self.n + 1) // 2

    def __str__(self):
        return f"Q{self.n}"


@dataclass(frozen=True)
class MultiProjective:
    dims: tuple[int, ...]

    def __init__(self, dims: Iterable[int]):
        dims = tuple(dims)
        if not dims or any(not isinstance(a, int) or a < 1 for a in dims):
            raise ValueError(f"MultiProjective needs positive factor dimensions, got {dims!r}")
        if sum(dims) > ring_max_dim():
            raise ValueError(f"total dimension {sum(dims)} exceeds {ring_max_dim()}")
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def __str__(self):
        return " x ".join(f"P{a}" for a in self.dims)


RingDescriptor = Quadric | MultiProjective


# -- basis and structure constants ---------------------------------------------

@dataclass(frozen=True)
class _Tables:
    labels: tuple[str, ...]
    degrees: tuple[int, ...]
    index: Mapping[str, int]
    # products[i][j] -> tuple of (k, coeff)
    products: tuple[tuple[tuple[tuple[int, int], ...], ...], ...]
    top: int


def _quadric_weight(n: int, i: int) -> int:
    # h^i = weight * b_i away from the middle of an even quadric
    return 1 if i < (n + 1) // 2 else 2


def _quadric_tables(n: int) -> _Tables:
    m = (n + 1) // 2
    even = n % 2 == 0
    labels, degrees = [], []
    for i in range(n + 1):
        labels.append(f"b{i}")
        degrees.append(i)
        if even and i == m:
            labels.append(f"bp{m}")
            degrees.append(m)
    index = {lab: k for k, lab in enumerate(labels)}
    L, LP = (index[f"b{m}"], index[f"bp{m}"]) if even else (None, None)

    def prod(x: int, y: int) -> dict[int, int]:
        i, j = degrees[x], degrees[y]
        k = i + j
        if k > n:
            return {}
        if i == 0:
            return {y: 1}
        if j == 0:
            return {x: 1}
        if even and (x in (L, LP) or y in (L, LP)):
            if x in (L, LP) and y in (L, LP):
                same = x == y
                # m even: l^2 = l'^2 = pt, l l' = 0; m odd: the reverse
                if (m % 2 == 0) == same:
                    return {index[f"b{n}"]: 1}
                return {}
            # h^i * l = b_{m+i} for 0 < i < m
            return {index[f"b{k}"]: 1}
        wi, wj = _quadric_weight(n, i), _quadric_weight(n, j)
        if even and k == m:
            if wi * wj != 1:
                raise StructureConstantError(f"b{i}*b{j} on Q{n}")
            return {L: 1, LP: 1}
        wk = _quadric_weight(n, k)
        coeff, rem = divmod(wk, wi * wj)
        if rem:
            raise StructureConstantError(f"b{i}*b{j} on Q{n} needs coefficient {wk}/{wi * wj}")
        return {index[f"b{k}"]: coeff}

    products = tuple(
        tuple(tuple(sorted(prod(x, y).items())) for y in range(len(labels)))
        for x in range(len(labels))
    )
    return _Tables(tuple(labels), tuple(degrees), index, products, index[f"b{n}"])


def _monomial_label(exps: tuple[int, ...]) -> str:
    return "*".join(f"t{i + 1}^{e}" for i, e in enumerate(exps))


def _multiprojective_tables(dims: tuple[int, ...]) -> _Tables:
    monos = sorted(
        itertools.product(*(range(a + 1) for a in dims)),
        key=lambda e: (sum(e), tuple(-x for x in e)),
    )
    labels = tuple(_monomial_label(e) for e in monos)
    degrees = tuple(sum(e) for e in monos)
    pos = {e: k for k, e in enumerate(monos)}

    def prod(x, y):
        e = tuple(a + b for a, b in zip(monos[x], monos[y]))
        if any(ei > ai for ei, ai in zip(e, dims)):
            return ()
        return ((pos[e], 1),)

    products = tuple(tuple(prod(x, y) for y in range(len(monos))) for x in range(len(monos)))
    return _Tables(labels, degrees, {lab: k for k, lab in enumerate(labels)}, products, pos[tuple(dims)])


@lru_cache(maxsize=None)
def _tables(ring: RingDescriptor) -> _Tables:
    if isinstance(ring, Quadric):
        return _quadric_tables(ring.n)
    return _multiprojective_tables(ring.dims)


# -- classes -------------------------------------------------------------------

@dataclass(frozen=True, eq=True)
class CohClass:
    """An integral class: coefficients over the ordered basis of ``ring``."""

    ring: RingDescriptor
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(_tables(self.ring).labels):
            raise ValueError("coefficient vector does not match the ring basis")

    # constructors
    @classmethod
    def zero(cls, ring: RingDescriptor) -> "CohClass":
        return cls(ring, (0,) * len(_tables(ring).labels))

    @classmethod
    def one(cls, ring: RingDescriptor) -> "CohClass":
        return cls.basis(ring, _tables(ring).labels[0])

    @classmethod
    def basis(cls, ring: RingDescriptor, label: str, coeff: int = 1) -> "CohClass":
        tab = _tables(ring)
        if label not in tab.index:
            raise KeyError(f"{label!r} is not a basis element of {ring}")
        c = [0] * len(tab.labels)
        c[tab.index[label]] = coeff
        return cls(ring, tuple(c))

    @classmethod
    def from_dict(cls, ring: RingDescriptor, coeffs: Mapping[str, int]) -> "CohClass":
        tab = _tables(ring)
        c = [0] * len(tab.labels)
        for key, v in coeffs.items():
            label = _canonical_label(ring, key)
            if label not in tab.index:
                raise KeyError(f"{key!r} is not a basis element of {ring}")
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"coefficient of {key!r} must be an integer")
            c[tab.index[label]] += v
        return cls(ring, tuple(c))

    # introspection
    @property
    def labels(self) -> tuple[str, ...]:
        return _tables(self.ring).labels

    @property
    def degrees(self) -> tuple[int, ...]:
        return _tables(self.ring).degrees

    def to_dict(self) -> dict[str, int]:
        return {lab: c for lab, c in zip(self.labels, self.coeffs) if c}

    def __getitem__(self, label: str) -> int:
        return self.coeffs[_tables(self.ring).index[_canonical_label(self.ring, label)]]

    def part(self, degree: int) -> "CohClass":
        """Homogeneous component of the given codegree."""
        return CohClass(self.ring, tuple(c if d == degree else 0 for c, d in zip(self.coeffs, self.degrees)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_homogeneous(self, degree: int) -> bool:
        return all(c == 0 or d == degree for c, d in zip(self.coeffs, self.degrees))

    def top_degree(self) -> int:
        """Largest codegree with a nonzero coefficient, ``-1`` for the zero class."""
        return max((d for c, d in zip(self.coeffs, self.degrees) if c), default=-1)

    # arithmetic
    def _check(self, other: "CohClass"):
        if not isinstance(other, CohClass):
            raise TypeError(f"expected CohClass, got {type(other).__name__}")
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = CohClass.one(self.ring).scale(other)
        self._check(other)
        return CohClass(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: int) -> "CohClass":
        return CohClass(self.ring, tuple(k * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = CohClass.one(self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        terms = [f"{c}*{lab}" for lab, c in self.to_dict().items()]
        return f"CohClass({self.ring}: {' + '.join(terms) or '0'})"


def _canonical_label(ring: RingDescriptor, key: str) -> str:
    if isinstance(ring, Quadric):
        return key
    # accept omitted factors, "1", and spaces in monomial keys
    key = key.replace(" ", "")
    if key == "1":
        return _monomial_label((0,) * len(ring.dims))
    exps = [0] * len(ring.dims)
    for factor in key.split("*"):
        mt = re.fullmatch(r"t(\d+)(?:\^(\d+))?", factor)
        if not mt:
            return key
        i = int(mt.group(1)) - 1
        if not 0 <= i < len(exps):
            return key
        exps[i] += int(mt.group(2) or 1)
    return _monomial_label(tuple(exps))


def mul(x: CohClass, y: CohClass) -> CohClass:
    x._check(y)
    tab = _tables(x.ring)
    out = [0] * len(tab.labels)
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        row = tab.products[i]
        for j, b in enumerate(y.coeffs):
            if not b:
                continue
            for k, c in row[j]:
                out[k] += a * b * c
    return CohClass(x.ring, tuple(out))


def hyperplane(ring: RingDescriptor) -> CohClass:
    if isinstance(ring, Quadric):
        if ring.n == 2:
            return CohClass.basis(ring, "b1") + CohClass.basis(ring, "bp1")
        return CohClass.basis(ring, "b1")
    out = CohClass.zero(ring)
    for i in range(len(ring.dims)):
        e = [0] * len(ring.dims)
        e[i] = 1
        out = out + CohClass.basis(ring, _monomial_label(tuple(e)))
    return out


def factor_class(ring: MultiProjective, i: int) -> CohClass:
    """Hyperplane class ``t_{i+1}`` pulled back from the ``i``-th factor."""
    e = [0] * len(ring.dims)
    e[i] = 1
    return CohClass.basis(ring, _monomial_label(tuple(e)))


def integrate(x: CohClass) -> int:
    return x.coeffs[_tables(x.ring).top]


def restrict_to_linear(n: int, family: str, x: CohClass) -> CohClass:
    """Pull ``x`` back to an ``m``-plane of ``Q_{2m}`` lying in ``family``.

    ``family`` is :data:`FAMILY_L` for planes of class ``l = b_m`` and
    :data:`FAMILY_LP` for planes of class ``l' = bp_m``.
    """
    if n % 2:
        raise ValueError(f"Q{n} has no middle-dimensional planes (odd dimension)")
    if family not in (FAMILY_L, FAMILY_LP):
        raise ValueError(f"unknown family {family!r}")
    if x.ring != Quadric(n):
        raise ValueError(f"class lives on {x.ring}, expected Q{n}")
    m = n // 2
    target = MultiProjective((m,))
    out = [0] * (m + 1)
    own, other = (f"b{m}", f"bp{m}") if family == FAMILY_L else (f"bp{m}", f"b{m}")
    for lab, c in zip(x.labels, x.coeffs):
        d = int(re.sub(r"\D", "", lab))
        if d < m:
            out[d] += c
        elif d == m:
            # m even: a plane meets its own family in a point; m odd: the other one
            hits = own if m % 2 == 0 else other
            if lab == hits:
                out[m] += c
    return CohClass(target, tuple(out))


def restrict_to_hyperplane_quadric(x: CohClass) -> CohClass:
    """Pull back along a hyperplane section ``Q_{2m-1}`` of ``Q_{2m}``."""
    if not isinstance(x.ring, Quadric) or x.ring.n % 2:
        raise ValueError("source must be an even-dimensional quadric")
    n = x.ring.n
    target = Quadric(n - 1)
    out = {}
    for lab, c in x.to_dict().items():
        d = int(re.sub(r"\D", "", lab))
        if d <= n - 1:
            out[f"b{d}"] = out.get(f"b{d}", 0) + c
    return CohClass.from_dict(target, out)


def pullback_factor(x: CohClass, target: MultiProjective, factor: int) -> CohClass:
    """Pull a class on ``P^a`` back to ``target`` along projection to ``factor``."""
    if x.ring != MultiProjective((target.dims[factor],)):
        raise ValueError(f"class on {x.ring} cannot be pulled back from factor {factor} of {target}")
    t = factor_class(target, factor)
    out = CohClass.zero(target)
    for e, c in enumerate(x.coeffs):
        if c:
            out = out + (t ** e).scale(c)
    return out


def format_class(x: CohClass) -> str:
    """Readable form such as ``1 - b1 + 2 bp2``."""
    terms = []
    for lab, d, c in zip(x.labels, x.degrees, x.coeffs):
        if not c:
            continue
        if d == 0:
            terms.append(str(c))
        else:
            terms.append(lab if c == 1 else "-" + lab if c == -1 else f"{c} {lab}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


# -- JSON ----------------------------------------------------------------------

def ring_to_json(ring: RingDescriptor) -> dict:
    if isinstance(ring, Quadric):
        return {"type": "quadric", "n": ring.n}
    return {"type": "multiprojective", "dims": list(ring.dims)}


def ring_from_json(data: Mapping) -> RingDescriptor:
    if not isinstance(data, Mapping):
        raise TypeError("ring JSON must be an object")
    kind = data.get("type")
    if kind == "quadric":
        return Quadric(data["n"])
    if kind == "multiprojective":
        return MultiProjective(data["dims"])
    raise ValueError(f"unknown ring type {kind!r}")


def class_to_json(x: CohClass) -> dict:
    return {"ring": ring_to_json(x.ring), "coeffs": x.to_dict()}


def class_from_json(data: Mapping) -> CohClass:
    if not isinstance(data, Mapping) or not isinstance(data.get("coeffs", {}), Mapping):
        raise TypeError("class JSON must be an object with a coeffs object")
    return CohClass.from_dict(ring_from_json(data["ring"]), data.get("coeffs", {}))
