"""Noncommutative words in the generators and their normal ordering.

Expressions over A, B, C, D, alpha, beta, gamma, delta are parsed into
formal sums of words.  Normal ordering first eliminates C = delta - A - B
and gamma = -alpha - beta, then straightens the remaining letters into the
ordered monomials A^i D^j B^k alpha^r delta^s beta^t using

    B A -> A B - 2 D
    D A -> A D + A delta - A^2 - 2 A B + 2 D - alpha
    B D -> D B + B delta - B^2 - 2 A B + 2 D + beta

(alpha, beta, delta are central and commute with everything).  Each rule
application strictly drops the measure (total degree, inversion count), so
the straightening terminates; an iteration cap guards it anyway.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import Mat
from .modules import ModuleRep
from .rational import ONE, Rat, ZERO, format_rat, parse_rat, rat

SYMBOLS = ("A", "B", "C", "D", "alpha", "beta", "gamma", "delta")
EXPONENT_LIMIT = 64
REWRITE_LIMIT = 10**6


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class RewriteLimitError(RuntimeError):
    pass


class _Element:
    """Formal linear combination; terms maps key -> nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        object.__setattr__(
            self, "terms", {k: v for k, v in terms.items() if v != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = rat(c)
        return type(self)({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, other):
        return self.scale(other)


class FreeElement(_Element):
    """Sum of plain words (tuples over SYMBOLS) with rational coefficients."""

    @classmethod
    def zero(cls) -> "FreeElement":
        return cls({})

    @classmethod
    def one(cls) -> "FreeElement":
        return cls({(): ONE})

    @classmethod
    def scalar(cls, c) -> "FreeElement":
        return cls({(): rat(c)})

    @classmethod
    def symbol(cls, name: str) -> "FreeElement":
        if name not in SYMBOLS:
            raise ValueError(f"unknown generator {name!r}")
        return cls({(name,): ONE})

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            return self.scale(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, ZERO) + c1 * c2
        return FreeElement(out)

    def __pow__(self, k: int) -> "FreeElement":
        if k < 0:
            raise ValueError("negative powers are not defined")
        acc = FreeElement.one()
        for _ in range(k):
            acc = acc * self
        return acc


class NormalElement(_Element):
    """Sum of ordered monomials keyed (i, j, k, r, s, t) for
    A^i D^j B^k alpha^r delta^s beta^t."""

    def to_free(self) -> FreeElement:
        out = {}
        for (i, j, k, r, s, t), c in self.terms.items():
            word = (
                ("A",) * i
                + ("D",) * j
                + ("B",) * k
                + ("alpha",) * r
                + ("delta",) * s
                + ("beta",) * t
            )
            out[word] = c
        return FreeElement(out)


# ---------------------------------------------------------------- parsing

_SINGLE = set("+-*^()[],")


def _tokenize(text: str):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        pos = i + 1  # 1-based for messages
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == "/" and j + 1 < len(text) and text[j + 1].isdigit():
                j += 1
                while j < len(text) and text[j].isdigit():
                    j += 1
            toks.append(("num", text[i:j], pos))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            toks.append(("name", text[i:j], pos))
            i = j
        elif ch in _SINGLE:
            toks.append((ch, ch, pos))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
    toks.append(("end", "", len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str, opened_at: int | None = None):
        tok = self.peek()
        if tok[0] != kind:
            pos = opened_at if opened_at is not None else tok[2]
            raise ParseError(what, pos)
        return self.take()

    def parse(self) -> FreeElement:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self) -> FreeElement:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> FreeElement:
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> FreeElement:
        value = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num" or "/" in tok[1]:
                raise ParseError("exponent must be a nonnegative integer", tok[2])
            self.take()
            e = int(tok[1])
            if e > EXPONENT_LIMIT:
                raise ParseError(
                    f"exponent {e} exceeds the limit {EXPONENT_LIMIT}", tok[2]
                )
            value = value**e
        return value

    def atom(self) -> FreeElement:
        tok = self.peek()
        kind, text, pos = tok
        if kind == "num":
            self.take()
            try:
                return FreeElement.scalar(parse_rat(text))
            except ValueError as exc:
                raise ParseError(str(exc), pos) from None
        if kind == "name":
            self.take()
            if text not in SYMBOLS:
                raise ParseError(f"unknown generator {text!r}", pos)
            return FreeElement.symbol(text)
        if kind == "(":
            self.take()
            value = self.expr()
            self.expect(")", "unclosed parenthesis", opened_at=pos)
            return value
        if kind == "[":
            self.take()
            left = self.expr()
            self.expect(",", "commutator bracket needs two comma-separated arguments")
            right = self.expr()
            self.expect("]", "unclosed commutator bracket", opened_at=pos)
            return left * right - right * left
        if kind == "-":
            self.take()
            return -self.factor()
        if kind == "+":
            self.take()
            return self.factor()
        raise ParseError("expected a number, generator, parenthesis or bracket", pos)


def parse(text: str) -> FreeElement:
    """Parse an expression in + - * ^ ( ) and commutator brackets [x,y]
    over the eight generator names and integer/rational literals."""
    return _Parser(text).parse()


# ------------------------------------------------------------ elimination

_C_EXPANSION = FreeElement(
    {("delta",): ONE, ("A",): -ONE, ("B",): -ONE}
)
_GAMMA_EXPANSION = FreeElement({("alpha",): -ONE, ("beta",): -ONE})


def eliminate(x: FreeElement) -> FreeElement:
    """Rewrite C and gamma away: C = delta - A - B, gamma = -alpha - beta."""
    out = FreeElement.zero()
    for word, coeff in x.terms.items():
        acc = FreeElement.scalar(coeff)
        for sym in word:
            if sym == "C":
                acc = acc * _C_EXPANSION
            elif sym == "gamma":
                acc = acc * _GAMMA_EXPANSION
            else:
                acc = acc * FreeElement.symbol(sym)
        out = out + acc
    return out


# --------------------------------------------------------- normal ordering

_CENTRAL = ("alpha", "delta", "beta")
_RANK = {"A": 0, "D": 1, "B": 2}


def _rewrite_pair(left: str, right: str):
    """Replacement terms for the out-of-order pair left*right: a list of
    (core letters, coeff, extra alpha, extra delta, extra beta)."""
    if (left, right) == ("B", "A"):
        return (
            (("A", "B"), ONE, 0, 0, 0),
            (("D",), rat(-2), 0, 0, 0),
        )
    if (left, right) == ("D", "A"):
        return (
            (("A", "D"), ONE, 0, 0, 0),
            (("A",), ONE, 0, 1, 0),
            (("A", "A"), -ONE, 0, 0, 0),
            (("A", "B"), rat(-2), 0, 0, 0),
            (("D",), rat(2), 0, 0, 0),
            ((), -ONE, 1, 0, 0),
        )
    if (left, right) == ("B", "D"):
        return (
            (("D", "B"), ONE, 0, 0, 0),
            (("B",), ONE, 0, 1, 0),
            (("B", "B"), -ONE, 0, 0, 0),
            (("A", "B"), rat(-2), 0, 0, 0),
            (("D",), rat(2), 0, 0, 0),
            ((), ONE, 0, 0, 1),
        )
    raise AssertionError(f"no rule for {left}*{right}")


def normal_form(x: FreeElement) -> NormalElement:
    """Straighten a free expression into the ordered monomial basis.

    The result is reached by leftmost-first rule application; soundness is
    checked elsewhere by evaluating both sides on concrete modules."""
    y = eliminate(x)
    work: dict = {}
    for word, coeff in y.terms.items():
        r = sum(1 for s in word if s == "alpha")
        s = sum(1 for sym in word if sym == "delta")
        t = sum(1 for sym in word if sym == "beta")
        core = tuple(sym for sym in word if sym in _RANK)
        key = (core, r, s, t)
        work[key] = work.get(key, ZERO) + coeff
    done: dict = {}
    steps = 0
    while work:
        (core, r, s, t), coeff = work.popitem()
        if coeff == 0:
            continue
        bad = next(
            (
                idx
                for idx in range(len(core) - 1)
                if _RANK[core[idx]] > _RANK[core[idx + 1]]
            ),
            None,
        )
        if bad is None:
            i = sum(1 for sym in core if sym == "A")
            j = sum(1 for sym in core if sym == "D")
            k = sum(1 for sym in core if sym == "B")
            key = (i, j, k, r, s, t)
            done[key] = done.get(key, ZERO) + coeff
            continue
        steps += 1
        if steps > REWRITE_LIMIT:
            raise RewriteLimitError(
                f"normal ordering exceeded {REWRITE_LIMIT} rewrite steps"
            )
        head, tail = core[:bad], core[bad + 2 :]
        for letters, factor, dr, ds, dt in _rewrite_pair(core[bad], core[bad + 1]):
            nkey = (head + letters + tail, r + dr, s + ds, t + dt)
            work[nkey] = work.get(nkey, ZERO) + coeff * factor
    return NormalElement(done)


# -------------------------------------------------------------- evaluation

def evaluate(x, rep: ModuleRep) -> Mat:
    """Value of an expression on a concrete module; central symbols act by
    the module's scalars."""
    if isinstance(x, NormalElement):
        x = x.to_free()
    n = rep.dim
    ident = Mat.identity(n)
    sc = rep.scalars
    table = {
        "A": rep.A,
        "B": rep.B,
        "C": rep.C,
        "D": rep.D,
        "alpha": ident.scale(sc.zeta),
        "beta": ident.scale(sc.zeta_star),
        "gamma": ident.scale(sc.gamma),
        "delta": ident.scale(sc.eta),
    }
    total = Mat.zero(n)
    for word, coeff in x.terms.items():
        acc = ident
        for sym in word:
            acc = acc * table[sym]
        total = total + acc.scale(coeff)
    return total


# -------------------------------------------------------------- formatting

def _format_terms(items) -> str:
    """items: iterable of (word tuple, coeff).  Sorted by total length
    descending, then alphabetically; powers are collapsed."""

    def render_word(word) -> str:
        parts = []
        idx = 0
        while idx < len(word):
            run = 1
            while idx + run < len(word) and word[idx + run] == word[idx]:
                run += 1
            parts.append(word[idx] if run == 1 else f"{word[idx]}^{run}")
            idx += run
        return "*".join(parts)

    ordered = sorted(items, key=lambda wc: (-len(wc[0]), wc[0]))
    if not ordered:
        return "0"
    pieces = []
    for word, coeff in ordered:
        body = render_word(word)
        if not body:
            text = format_rat(abs(coeff))
        elif abs(coeff) == 1:
            text = body
        else:
            text = f"{format_rat(abs(coeff))}*{body}"
        if not pieces:
            pieces.append(text if coeff > 0 else f"-{text}")
        else:
            pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
    return " ".join(pieces)


def format_element(x) -> str:
    """Canonical text for a free or normal element; parse(format_element(x))
    recovers x for normal elements."""
    if isinstance(x, NormalElement):
        return _format_terms(x.to_free().terms.items())
    return _format_terms(x.terms.items())
