"""Classical-character decompositions of the determinant characters.

The spectral-parameter-forgetting projection sends the determinant character
to an ordinary Lie-algebra character.  For type A it is irreducible; for
type C it decomposes with Littlewood-Richardson multiplicities against even
partitions.  Both sides are computed independently here: the left side from
the determinant, the right side from tableau models for the classical
characters.
"""

from __future__ import annotations

import itertools

from .ring import AlgType, RingElem, make_type
from .shapes import Partition, SkewShape, shape
from .jacobitrudi import chi_h


# ---------------------------------------------------------------------------
# Laurent polynomials in z_1..z_N with integer coefficients


class ZPoly:
    """Sparse Laurent polynomial; keys are exponent tuples of length nvars."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @staticmethod
    def const(nvars: int, c: int = 1) -> "ZPoly":
        return ZPoly(nvars, {(0,) * nvars: c})

    def __add__(self, other: "ZPoly") -> "ZPoly":
        assert self.nvars == other.nvars
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return ZPoly(self.nvars, out)

    def __mul__(self, other) -> "ZPoly":
        if isinstance(other, int):
            return ZPoly(self.nvars, {k: c * other for k, c in self.terms.items()})
        assert self.nvars == other.nvars
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + c1 * c2
        return ZPoly(self.nvars, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def eval_ones(self) -> int:
        return sum(self.terms.values())

    def normalize_projective(self) -> "ZPoly":
        """Canonical form modulo z_1*...*z_N = 1: shift each exponent vector
        so its minimum entry is zero."""
        out: dict = {}
        for k, c in self.terms.items():
            m = min(k)
            k2 = tuple(e - m for e in k)
            out[k2] = out.get(k2, 0) + c
        return ZPoly(self.nvars, out)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items()):
            factors = [
                f"z{i + 1}" + (f"^{e}" if e != 1 else "")
                for i, e in enumerate(k)
                if e
            ]
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(body)
            elif c == -1 and factors:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}" if factors else str(c))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"ZPoly({self.to_text()})"


def beta_to_z(t: AlgType, e: RingElem) -> ZPoly:
    """Express the classical projection in weight coordinates z_i.

    The i-th fundamental weight corresponds to z_1*...*z_i, for type A in
    n+1 variables (modulo the determinant relation) and for type C in n
    variables.
    """
    nvars = t.rank + 1 if t.family == "A" else t.rank
    out: dict = {}
    for m, c in e.beta().terms.items():
        exps = [0] * nvars
        for i, _s, exp in m:
            for j in range(i):
                exps[j] += exp
        k = tuple(exps)
        out[k] = out.get(k, 0) + c
    p = ZPoly(nvars, out)
    return p.normalize_projective() if t.family == "A" else p


# ---------------------------------------------------------------------------
# Schur polynomials and Littlewood-Richardson coefficients


def _ssyt(s: SkewShape, max_entry: int):
    """Semistandard fillings of the skew shape with entries 1..max_entry."""
    boxes = s.boxes()
    filling: dict = {}

    def rec(idx):
        if idx == len(boxes):
            yield dict(filling)
            return
        i, j = boxes[idx]
        left = filling.get((i, j - 1), 1)
        above = filling.get((i - 1, j))
        lo = max(left, above + 1 if above is not None else 1)
        for v in range(lo, max_entry + 1):
            filling[(i, j)] = v
            yield from rec(idx + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_poly(lam, nvars: int) -> ZPoly:
    """Schur polynomial s_lambda(z_1..z_nvars) as a tableau sum."""
    s = shape(lam)
    out: dict = {}
    for f in _ssyt(s, nvars):
        exps = [0] * nvars
        for v in f.values():
            exps[v - 1] += 1
        k = tuple(exps)
        out[k] = out.get(k, 0) + 1
    return ZPoly(nvars, out)


def lr_coeff(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient: fillings of lam/mu with content nu
    whose reverse reading word is a lattice word."""
    lam_p, mu_p, nu_p = Partition(lam), Partition(mu), Partition(nu)
    if lam_p.size() != mu_p.size() + nu_p.size() or not lam_p.contains(mu_p):
        return 0
    s = SkewShape(lam_p, mu_p)
    count = 0
    lnu = len(nu_p)
    for f in _ssyt(s, lnu if lnu else 1):
        content = [0] * (lnu + 1)
        for v in f.values():
            content[v - 1] += 1
        if tuple(content[:lnu]) != nu_p.parts:
            continue
        # reverse reading word: right to left along rows, top to bottom
        running = [0] * (lnu + 1)
        ok = True
        for i in range(1, len(lam_p) + 1):
            for j in range(lam_p[i], mu_p[i], -1):
                v = f[(i, j)]
                running[v - 1] += 1
                if v > 1 and running[v - 1] > running[v - 2]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Symplectic characters via King tableaux


def sp_character(mu, n: int) -> ZPoly:
    """Character of the rank-n symplectic irreducible with highest weight mu,
    as a sum over King tableaux.

    Alphabet 1 < 1' < 2 < 2' < ... < n < n', encoded as 2(k-1) + barred;
    rows weakly increase, columns strictly increase, and entries in row i
    are at least i.  A letter k contributes z_k, its primed partner z_k^-1.
    """
    mu_p = Partition(mu)
    assert len(mu_p) <= n
    s = shape(mu_p)
    boxes = s.boxes()
    filling: dict = {}
    out: dict = {}

    def rec(idx, exps):
        if idx == len(boxes):
            k = tuple(exps)
            out[k] = out.get(k, 0) + 1
            return
        i, j = boxes[idx]
        left = filling.get((i, j - 1), 0)
        above = filling.get((i - 1, j))
        lo = max(left, above + 1 if above is not None else 0, 2 * (i - 1))
        for v in range(lo, 2 * n):
            filling[(i, j)] = v
            k, barred = v // 2, v % 2
            exps[k] += -1 if barred else 1
            rec(idx + 1, exps)
            exps[k] -= -1 if barred else 1
        filling.pop((i, j), None)

    rec(0, [0] * n)
    return ZPoly(n, out)


# ---------------------------------------------------------------------------
# Decomposition reports


def _partitions_of(size, max_len=None):
    out = []

    def rec(prefix, remaining, bound):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_len is not None and len(prefix) >= max_len:
            return
        for p in range(min(bound, remaining), 0, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], size, size)
    return out


def decomposition_multiplicities(lam, n: int) -> dict:
    """Multiplicity of each symplectic highest weight mu in the projected
    determinant character: sum over even partitions 2-kappa of the
    Littlewood-Richardson coefficient c^lam_{2kappa, mu}."""
    lam_p = Partition(lam)
    mult: dict = {}
    for m2 in range(0, lam_p.size() + 1, 2):
        for kappa in _partitions_of(m2 // 2):
            two_kappa = tuple(2 * p for p in kappa)
            if not lam_p.contains(Partition(two_kappa)):
                continue
            for mu in _partitions_of(lam_p.size() - m2, max_len=n):
                c = lr_coeff(lam_p.parts, two_kappa, mu)
                if c:
                    mult[mu] = mult.get(mu, 0) + c
    return mult


def verify_decomposition_C(lam, n: int) -> dict:
    lam_p = Partition(lam)
    assert len(lam_p) <= n
    t = make_type("C", n)
    lhs = beta_to_z(t, chi_h(t, shape(lam_p)))
    mult = decomposition_multiplicities(lam_p.parts, n)
    rhs = ZPoly(n)
    for mu, c in sorted(mult.items()):
        rhs = rhs + sp_character(mu, n) * c
    return {
        "type": f"C{n}",
        "lambda": list(lam_p.parts),
        "multiplicities": {",".join(map(str, mu)) or "(empty)": c for mu, c in sorted(mult.items())},
        "lhs": lhs.to_text(),
        "rhs": rhs.to_text(),
        "equal": lhs == rhs,
    }


def verify_decomposition_A(lam, n: int) -> dict:
    lam_p = Partition(lam)
    assert len(lam_p) <= n + 1
    t = make_type("A", n)
    lhs = beta_to_z(t, chi_h(t, shape(lam_p)))
    rhs = schur_poly(lam_p.parts, n + 1).normalize_projective()
    return {
        "type": f"A{n}",
        "lambda": list(lam_p.parts),
        "lhs": lhs.to_text(),
        "rhs": rhs.to_text(),
        "equal": lhs == rhs,
    }
