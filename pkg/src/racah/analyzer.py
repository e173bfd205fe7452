"""Classification of the finite-dimensional modules: irreducibility,
diagonalizability of the generators, the triangular transition matrix L,
parameter identification from traces, and isomorphism testing.

Everything here comes in two routes: a closed-form criterion in the
parameters, and a structural oracle that only touches the matrices.  The
two must agree; analyze() hard-asserts it (ConsistencyError on violation),
which is the package's standing cross-check of the formulas against the
linear algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .linalg import (
    Subspace,
    eigenspace,
    intertwiner_space,
    invertible,
    minimal_polynomial,
    spin,
)
from .matrix import Mat
from .modules import ModuleRep, build_R
from .params import (
    ParamTriple,
    Scalars,
    SignFlip,
    Witness,
    act,
    canonical,
    in_P,
    phi,
    scalars,
    theta,
    theta_star,
    trace_formula,
    varphi,
)
from .poly import Poly, squarefree
from .rational import HALF, ONE, ZERO, Rat, rat


class ConsistencyError(AssertionError):
    """A closed-form criterion disagreed with its structural oracle."""


def irreducible_criterion(p: ParamTriple, d: int) -> tuple[bool, list[Witness]]:
    """Parameter-side irreducibility test (characteristic zero): the module
    is irreducible iff none of the four linear forms lands in
    {d/2 - i : i = 1..d}."""
    return in_P(p, d)


def irreducible_oracle(rep: ModuleRep) -> tuple[bool, Optional[Subspace]]:
    """Matrix-side irreducibility test; returns a proper nonzero invariant
    subspace as witness when reducible.

    A vanishing superdiagonal entry varphi_i of B hands us the invariant
    tail span(v_i..v_d) directly.  Otherwise B is nonderogatory with all
    eigenvalues on its diagonal, so every nonzero invariant subspace
    contains one of its (one-dimensional) eigenlines; the module is
    irreducible iff each eigenline generates everything under {A, B}.
    """
    if rep.basis != "v":
        raise ValueError("the oracle walks the v-basis; build the module with basis='v'")
    n = rep.dim
    b = rep.B
    for i in range(1, n):
        if b.entries[i - 1][i] == 0:
            tail = [
                tuple(ONE if j == h else ZERO for j in range(n)) for h in range(i, n)
            ]
            return False, Subspace(n, tail)
    ops = [rep.A, rep.B]
    seen = []
    for i in range(n):
        lam = b.entries[i][i]
        if lam in seen:
            continue
        seen.append(lam)
        line = eigenspace(b, lam)
        assert line.dim == 1, "nonzero superdiagonal must leave 1-dim eigenspaces"
        generated = spin(n, line.basis, ops)
        if not generated.is_full():
            return False, generated
    return True, None


def l_matrix(p: ParamTriple, d: int, method: str = "closed") -> Mat:
    """Lower-triangular transition matrix between the w-basis and the
    v-basis, in three independently computable ways.

    closed:     binomial closed form for each entry;
    recurrence: first column from products, then
                L[i][j] = (theta_i - theta_(j-1)) L[i][j-1] + L[i-1][j-1];
    direct:     read off row 0 of prod_h (B - theta*_h) times the partial
                A-products, straight from the v-basis matrices.
    """
    if not isinstance(d, int) or d < 0:
        raise ValueError(f"d must be a nonnegative integer, got {d!r}")
    n = d + 1
    th = [theta(p, d, i) for i in range(n)]
    ts = [theta_star(p, d, i) for i in range(n)]
    ph = [phi(p, d, i) for i in range(n)]  # ph[0] unused
    vp = [varphi(p, d, i) for i in range(n)]

    if method == "closed":
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if j > i:
                    row.append(ZERO)
                    continue
                val = rat(math.comb(d - i + j, j) * math.comb(i, j), math.comb(d, j))
                for h in range(1, i - j + 1):
                    val = val * (ts[0] - ts[d - h + 1])
                for h in range(1, d - i + 1):
                    val = val * ph[h]
                for h in range(1, j + 1):
                    val = val * vp[h]
                row.append(val)
            rows.append(row)
        return Mat(rows)

    if method == "recurrence":
        grid = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            val = ONE
            for h in range(1, i + 1):
                val = val * (ts[0] - ts[d - h + 1])
            for h in range(1, d - i + 1):
                val = val * ph[h]
            grid[i][0] = val
        for j in range(1, n):
            for i in range(j, n):
                grid[i][j] = (th[i] - th[j - 1]) * grid[i][j - 1] + grid[i - 1][j - 1]
        return Mat(grid)

    if method == "direct":
        rep = build_R(p, d, "v")
        prod_b = Mat.identity(n)
        for h in range(1, n):
            prod_b = prod_b * (rep.B - Mat.identity(n).scale(ts[h]))
        partial = Mat.identity(n)  # prod_(h=1..d-i) (A - theta_(d-h+1)), built downward
        partials = [None] * n
        partials[d] = partial
        for i in range(d - 1, -1, -1):
            partial = partial * (rep.A - Mat.identity(n).scale(th[i + 1]))
            partials[i] = partial
        rows = []
        for i in range(n):
            m = prod_b * partials[i]
            for r in range(1, n):
                assert all(
                    x == 0 for x in m.entries[r]
                ), "B-annihilator product must land in the top row"
            rows.append(list(m.entries[0]))
        return Mat(rows)

    raise ValueError(f"method must be closed, recurrence or direct, got {method!r}")


_GENERATOR_COORD = {"A": 0, "B": 1, "C": 2}


def diagonalizable(p: ParamTriple, d: int, generator: str, mode: str = "both") -> bool:
    """Is the generator's matrix on R_d(a,b,c) diagonalizable?

    criterion: the matching coordinate avoids {(i-d-1)/2 : i = 1..2d-1}
               (only meaningful for irreducible modules);
    oracle:    squarefreeness of the exact minimal polynomial;
    both:      run the two and insist they agree.
    """
    if generator not in _GENERATOR_COORD:
        raise ValueError(f"generator must be one of A, B, C, got {generator!r}")
    if mode not in ("criterion", "oracle", "both"):
        raise ValueError(f"mode must be criterion, oracle or both, got {mode!r}")

    verdict_c = None
    if mode in ("criterion", "both"):
        ok, _ = in_P(p, d)
        if not ok:
            raise ValueError(
                "the coordinate criterion only classifies irreducible modules; "
                "use mode='oracle' here"
            )
        x = p[_GENERATOR_COORD[generator]]
        verdict_c = all(x != rat(i - d - 1, 2) for i in range(1, 2 * d))
        if mode == "criterion":
            return verdict_c

    rep = build_R(p, d, "v")
    verdict_o = squarefree(minimal_polynomial(rep.generator(generator)))
    if mode == "both" and verdict_c != verdict_o:
        raise ConsistencyError(
            f"diagonalizability of {generator} at {p}, d={d}: "
            f"criterion {verdict_c}, oracle {verdict_o}"
        )
    return verdict_o


@dataclass(frozen=True)
class GeneratorIdentification:
    trace: Rat
    quadratic: Poly
    roots: Optional[tuple[Rat, Rat]]  # (canonical root >= -1/2, its partner)


@dataclass(frozen=True)
class IdentifyResult:
    d: int
    per_generator: dict  # name -> GeneratorIdentification
    candidate: Optional[ParamTriple]  # canonical triple, when all roots rational
    all_rational: bool


def identify(a_mat: Mat, b_mat: Mat, c_mat: Mat) -> IdentifyResult:
    """Recover the parameter orbit of a claimed R_d from generator traces.

    Each coordinate solves x^2 + x + d(d+2)/12 - tr/(d+1) = 0; the two
    roots of each quadratic are partners under x -> -x-1, so the solution
    set is exactly one flip orbit, reported by its canonical (>= -1/2)
    representative."""
    mats = {"A": a_mat, "B": b_mat, "C": c_mat}
    sizes = {m.rows for m in mats.values()} | {m.cols for m in mats.values()}
    if len(sizes) != 1:
        raise ValueError(f"generator matrices must share one square size, got {sorted(sizes)}")
    n = sizes.pop()
    d = n - 1
    shift = rat(d * (d + 2), 12)
    per = {}
    coords = {}
    all_rational = True
    for name, m in mats.items():
        tr = m.trace()
        const = shift - tr / (d + 1)
        quad = Poly([const, ONE, ONE])
        disc = 1 - 4 * const
        root = None
        if disc >= 0:
            num, den = int(disc.numerator), int(disc.denominator)
            rn, rd = math.isqrt(num), math.isqrt(den)
            if rn * rn == num and rd * rd == den:
                s = rat(rn, rd)
                root = ((-1 + s) * HALF, (-1 - s) * HALF)
        if root is None:
            all_rational = False
            per[name] = GeneratorIdentification(tr, quad, None)
        else:
            per[name] = GeneratorIdentification(tr, quad, root)
            coords[name] = root[0]
    candidate = (
        ParamTriple(coords["A"], coords["B"], coords["C"]) if all_rational else None
    )
    return IdentifyResult(d, per, candidate, all_rational)


@dataclass(frozen=True)
class IsoResult:
    d: int
    p1: ParamTriple
    p2: ParamTriple
    same_orbit: bool
    hom_dim: int
    iso: bool
    intertwiner: Optional[Mat]


def isomorphic(p1: ParamTriple, p2: ParamTriple, d: int) -> IsoResult:
    """Are R_d(p1) and R_d(p2) isomorphic?  Criterion: same flip orbit.
    Oracle: the space of module maps, i.e. matrices intertwining both A and
    B (A and B generate, together with the central scalars; for the scalars
    to match, eta must agree, and unequal eta forces the zero map)."""
    ok1, _ = in_P(p1, d)
    ok2, _ = in_P(p2, d)
    if not (ok1 and ok2):
        raise ValueError(
            "isomorphism testing is defined here for irreducible modules only"
        )
    same_orbit = canonical(p1)[0] == canonical(p2)[0]
    r1 = build_R(p1, d, "v")
    r2 = build_R(p2, d, "v")
    if r1.scalars.eta != r2.scalars.eta:
        basis = []
    else:
        basis = intertwiner_space(r1.A, r1.B, r2.A, r2.B)
    hom_dim = len(basis)
    witness = None
    iso = False
    if hom_dim == 1 and invertible(basis[0]):
        iso = True
        witness = basis[0]
    if hom_dim not in (0, 1):
        raise ConsistencyError(
            f"hom space between irreducible modules has dimension {hom_dim}"
        )
    if iso != same_orbit:
        raise ConsistencyError(
            f"orbit criterion ({same_orbit}) disagrees with intertwiner oracle "
            f"({iso}) at {p1} vs {p2}, d={d}"
        )
    return IsoResult(d, p1, p2, same_orbit, hom_dim, iso, witness)


@dataclass(frozen=True)
class AnalysisReport:
    params: ParamTriple
    d: int
    scalars: Scalars
    canonical_params: ParamTriple
    flip: SignFlip
    irreducible: bool
    witnesses: tuple[Witness, ...]
    reducible_subspace: Optional[Subspace]
    traces: dict
    minimal_polynomials: dict  # generator -> Poly
    diagonalizable: dict  # generator -> bool (oracle verdict)
    l_diagonal: tuple
    l_det_nonzero: bool
    identification: IdentifyResult


def analyze(p: ParamTriple, d: int) -> AnalysisReport:
    """Full classification report for one parameter point, with every
    criterion checked against its oracle on the spot."""
    crit, witnesses = irreducible_criterion(p, d)
    rep = build_R(p, d, "v")
    oracle, bad_subspace = irreducible_oracle(rep)
    if crit != oracle:
        raise ConsistencyError(
            f"irreducibility criterion ({crit}) disagrees with spin oracle "
            f"({oracle}) at {p}, d={d}"
        )

    traces = {name: rep.generator(name).trace() for name in ("A", "B", "C")}
    formula = trace_formula(p, d)
    if traces != formula:
        raise ConsistencyError(
            f"trace formula {formula} disagrees with matrix traces {traces} "
            f"at {p}, d={d}"
        )

    minpolys = {name: minimal_polynomial(rep.generator(name)) for name in ("A", "B", "C")}
    diag = {}
    for name in ("A", "B", "C"):
        verdict_o = squarefree(minpolys[name])
        if crit:
            verdict_c = diagonalizable(p, d, name, mode="criterion")
            if verdict_c != verdict_o:
                raise ConsistencyError(
                    f"diagonalizability of {name} at {p}, d={d}: "
                    f"criterion {verdict_c}, oracle {verdict_o}"
                )
        diag[name] = verdict_o

    lmat = l_matrix(p, d, "closed")
    l_diag = tuple(lmat.entries[i][i] for i in range(d + 1))
    det_nonzero = all(x != 0 for x in l_diag)
    if det_nonzero != crit:
        raise ConsistencyError(
            f"invertibility of L ({det_nonzero}) disagrees with irreducibility "
            f"({crit}) at {p}, d={d}"
        )

    ident = identify(rep.A, rep.B, rep.C)
    canon, flip = canonical(p)
    if not ident.all_rational or ident.candidate != canon:
        raise ConsistencyError(
            f"trace identification {ident.candidate} missed the canonical "
            f"representative {canon} at {p}, d={d}"
        )

    return AnalysisReport(
        params=p,
        d=d,
        scalars=rep.scalars,
        canonical_params=canon,
        flip=flip,
        irreducible=crit,
        witnesses=tuple(witnesses),
        reducible_subspace=bad_subspace,
        traces=traces,
        minimal_polynomials=minpolys,
        diagonalizable=diag,
        l_diagonal=l_diag,
        l_det_nonzero=det_nonzero,
        identification=ident,
    )
