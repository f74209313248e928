"""Structure equations of a Lie algebra with invariant complex structure, and the
bigraded complex of invariant forms they generate.

Forms are wedge monomials in the coframe phi^1..phi^n and its conjugate
phi^1~..phi^n~. Internally a letter is an int: holomorphic generator i is ``i``,
its conjugate is ``n + i`` (0-based), and monomials are sorted letter tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .algebra import GaussianRational, Matrix, ZERO
from .bicomplex import DoubleComplex, ValidationReport, validate_jacobi
from .errors import DimensionError, IntegrabilityError, ParseError, UnknownNameError

CONJ_SUFFIX = "~"

_TOP_KEYS = {"complex_dimension", "generators", "differential", "name", "description"}
_TERM_KEYS = {"coeff", "wedge"}
_COEFF_KEYS = {"re", "im"}


@dataclass(frozen=True)
class Term:
    coeff: GaussianRational
    factors: tuple[str, str]


@dataclass(frozen=True)
class StructureSpec:
    complex_dimension: int
    generators: tuple[str, ...]
    differential: dict[str, tuple[Term, ...]]
    name: str = ""

    def letter(self, name: str) -> int:
        n = self.complex_dimension
        if name.endswith(CONJ_SUFFIX):
            base = name[: -len(CONJ_SUFFIX)]
            if base in self.generators:
                return n + self.generators.index(base)
        elif name in self.generators:
            return self.generators.index(name)
        raise UnknownNameError(f"unknown generator name {name!r}")

    def letter_name(self, letter: int) -> str:
        n = self.complex_dimension
        return self.generators[letter] if letter < n else self.generators[letter - n] + CONJ_SUFFIX

    def conjugated(self) -> "StructureSpec":
        """The spec obtained by swapping every generator with its conjugate.

        Only integrable when no dphi^i has a (2,0) part.
        """
        n = self.complex_dimension
        flip = lambda nm: self.letter_name((self.letter(nm) + n) % (2 * n))
        diff = {g: tuple(Term(t.coeff.conj(), (flip(t.factors[0]), flip(t.factors[1]))) for t in terms)
                for g, terms in self.differential.items()}
        return _normalize(self.complex_dimension, self.generators, diff, self.name + "~")

    def to_json(self) -> dict:
        doc = {"complex_dimension": self.complex_dimension, "generators": list(self.generators),
               "differential": {g: [{"coeff": dict(zip(("re", "im"), t.coeff.to_strings())),
                                     "wedge": list(t.factors)} for t in terms]
                                for g, terms in self.differential.items() if terms}}
        if self.name:
            doc["name"] = self.name
        return doc


def _normalize(n: int, generators: tuple[str, ...], raw: dict[str, tuple[Term, ...]], name: str = "") -> StructureSpec:
    proto = StructureSpec(n, generators, {}, name)
    out: dict[str, tuple[Term, ...]] = {}
    for g, terms in raw.items():
        if g not in generators:
            raise UnknownNameError(f"differential given for unknown generator {g!r}")
        acc: dict[tuple[int, int], GaussianRational] = {}
        for t in terms:
            a, b = (proto.letter(f) for f in t.factors)
            if a >= n and b >= n:
                raise IntegrabilityError(f"d{g} has a (0,2) term {t.factors[0]}^{t.factors[1]}")
            if a == b:
                continue
            coeff = t.coeff
            if a > b:
                a, b, coeff = b, a, -coeff
            acc[(a, b)] = acc.get((a, b), ZERO) + coeff
        out[g] = tuple(Term(c, (proto.letter_name(a), proto.letter_name(b)))
                       for (a, b), c in sorted(acc.items()) if c)
    return StructureSpec(n, generators, out, name)


def spec_from_dict(doc: dict) -> StructureSpec:
    if not isinstance(doc, dict):
        raise ParseError("structure spec must be a JSON object")
    extra = set(doc) - _TOP_KEYS
    if extra:
        raise ParseError(f"unknown keys: {sorted(extra)}")
    try:
        n = doc["complex_dimension"]
        generators = tuple(doc["generators"])
    except KeyError as exc:
        raise ParseError(f"missing key {exc}") from exc
    if not isinstance(n, int) or n < 1:
        raise ParseError("complex_dimension must be a positive integer")
    if len(generators) != n or len(set(generators)) != n:
        raise ParseError(f"expected {n} distinct generator names")
    if any(not isinstance(g, str) or not g or g.endswith(CONJ_SUFFIX) for g in generators):
        raise ParseError("generator names must be nonempty and must not end with '~'")
    raw = {}
    diff = doc.get("differential", {})
    if not isinstance(diff, dict):
        raise ParseError("differential must be an object")
    for g, terms in diff.items():
        if not isinstance(terms, list):
            raise ParseError(f"terms of d{g} must be a list")
        parsed = []
        for t in terms:
            if not isinstance(t, dict) or set(t) - _TERM_KEYS or "coeff" not in t or "wedge" not in t:
                raise ParseError(f"malformed term in d{g}: {t!r}")
            c = t["coeff"]
            if not isinstance(c, dict) or set(c) - _COEFF_KEYS or "re" not in c:
                raise ParseError(f"malformed coefficient in d{g}: {c!r}")
            w = t["wedge"]
            if not isinstance(w, list) or len(w) != 2 or not all(isinstance(f, str) for f in w):
                raise ParseError(f"wedge in d{g} must be a pair of names, got {w!r}")
            parsed.append(Term(GaussianRational.parse(c["re"], c.get("im", "0")), (w[0], w[1])))
        raw[g] = tuple(parsed)
    return _normalize(n, generators, raw, doc.get("name", ""))


def parse_spec(document: str) -> StructureSpec:
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return spec_from_dict(doc)


# building the complex

def basis(n: int, p: int, q: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Canonical basis of A^{p,q}: pairs (P, Q) of increasing index tuples, lexicographic."""
    return [(P, Q) for P in combinations(range(n), p) for Q in combinations(range(n), q)]


def _sort_sign(letters: list[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sort letters, returning (sign, sorted tuple), or None if a letter repeats."""
    if len(set(letters)) != len(letters):
        return None
    a = list(letters)
    sign = 1
    for i in range(len(a)):
        for j in range(len(a) - 1 - i):
            if a[j] > a[j + 1]:
                a[j], a[j + 1] = a[j + 1], a[j]
                sign = -sign
    return sign, tuple(a)


def _letter_differentials(s: StructureSpec) -> dict[int, list[tuple[GaussianRational, int, int]]]:
    n = s.complex_dimension
    out: dict[int, list] = {i: [] for i in range(2 * n)}
    for g, terms in s.differential.items():
        i = s.generators.index(g)
        for t in terms:
            a, b = (s.letter(f) for f in t.factors)
            out[i].append((t.coeff, a, b))
            # d(conj phi) = conj(d phi), factors conjugated
            ca, cb, c = (a + n) % (2 * n), (b + n) % (2 * n), t.coeff.conj()
            out[n + i].append((c, ca, cb) if ca < cb else (-c, cb, ca))
    return out


def _d_monomial(mono: tuple[int, ...], dletters) -> dict[tuple[int, ...], GaussianRational]:
    result: dict[tuple[int, ...], GaussianRational] = {}
    for j, letter in enumerate(mono):
        sign = -1 if j % 2 else 1
        for c, a, b in dletters[letter]:
            ss = _sort_sign(list(mono[:j]) + [a, b] + list(mono[j + 1:]))
            if ss is None:
                continue
            s2, key = ss
            result[key] = result.get(key, ZERO) + c * (sign * s2)
    return {k: v for k, v in result.items() if v}


def build_bicomplex(s: StructureSpec) -> DoubleComplex:
    n = s.complex_dimension
    bases = {(p, q): basis(n, p, q) for p in range(n + 1) for q in range(n + 1)}
    index = {pq: {(P, Q): i for i, (P, Q) in enumerate(b)} for pq, b in bases.items()}
    dletters = _letter_differentials(s)
    partial, partial_bar, sigma = {}, {}, {}
    for (p, q), b in bases.items():
        del_cols, bar_cols = [], []
        for P, Q in b:
            mono = P + tuple(n + j for j in Q)
            col_del = [ZERO] * len(bases.get((p + 1, q), ()))
            col_bar = [ZERO] * len(bases.get((p, q + 1), ()))
            for key, c in _d_monomial(mono, dletters).items():
                P2 = tuple(x for x in key if x < n)
                Q2 = tuple(x - n for x in key if x >= n)
                if len(P2) == p + 1:
                    col_del[index[(p + 1, q)][(P2, Q2)]] += c
                elif len(Q2) == q + 1:
                    col_bar[index[(p, q + 1)][(P2, Q2)]] += c
                else:
                    raise IntegrabilityError(f"differential leaves bidegrees (1,0)+(0,1) on {mono}")
            del_cols.append(col_del)
            bar_cols.append(col_bar)
        partial[(p, q)] = Matrix.from_columns(del_cols, len(bases.get((p + 1, q), ())))
        partial_bar[(p, q)] = Matrix.from_columns(bar_cols, len(bases.get((p, q + 1), ())))
        sig = Matrix.zeros(len(bases[(q, p)]), len(b)).to_rows()
        for j, (P, Q) in enumerate(b):
            sig[index[(q, p)][(Q, P)]][j] = GaussianRational(-1 if (p * q) % 2 else 1)
        sigma[(p, q)] = Matrix.from_rows(sig, len(b))
    cells = {pq: len(b) for pq, b in bases.items()}
    return DoubleComplex(n, cells, partial, partial_bar, sigma)


def validate_spec(s: StructureSpec) -> ValidationReport:
    return validate_jacobi(build_bicomplex(s))


# shipped examples

BUILTINS = {
    "torus": "torus{n}.json",
    "iwasawa": "iwasawa.json",
    "kodaira_thurston": "kodaira_thurston.json",
}
TORUS_DIMENSIONS = (1, 2, 3)


def list_builtins() -> list[str]:
    return [f"torus {n}" for n in TORUS_DIMENSIONS] + ["iwasawa", "kodaira_thurston"]


@lru_cache(maxsize=None)
def _builtin_text(filename: str) -> str:
    return resources.files("bottchern.data").joinpath(filename).read_text(encoding="utf-8")


def builtin_spec(name: str, n: int | None = None) -> StructureSpec:
    key = name.replace("-", "_").lower()
    if key not in BUILTINS:
        raise DimensionError(f"unknown builtin {name!r}; choose from {list_builtins()}")
    if key == "torus":
        if n not in TORUS_DIMENSIONS:
            raise DimensionError(f"torus needs a dimension in {TORUS_DIMENSIONS}, got {n}")
        filename = BUILTINS[key].format(n=n)
    else:
        if n is not None:
            raise DimensionError(f"builtin {name!r} takes no dimension argument")
        filename = BUILTINS[key]
    return parse_spec(_builtin_text(filename))


@lru_cache(maxsize=None)
def _builtin_complex(key: str, n: int | None) -> DoubleComplex:
    return build_bicomplex(builtin_spec(key, n))


def builtin_complex(name: str, n: int | None = None) -> DoubleComplex:
    return _builtin_complex(name.replace("-", "_").lower(), n)
