"""Matrices as bounded operators between l_p^n spaces.

A LinOp is a matrix together with explicit domain and codomain space
descriptors; the operator (quasi-)norm then depends on both exponents.
Exact norm formulas exist for the identity, for p <= 1 with q >= 1 (the
extreme points of the domain ball are the signed unit vectors, so the norm
is the largest column norm), and for the Hilbert case p = q = 2 (largest
singular value).  Everything else falls back to a seeded sampled-ascent
lower bound that is reported as non-exact.
"""

import math
import zlib
from dataclasses import dataclass

import numpy as np

from .spaces import (
    COMPLEX,
    REAL,
    SpaceSpec,
    inv_exponent,
    lp_norm,
    sample_sphere,
)


@dataclass(frozen=True)
class OpNormResult:
    """Value of an operator-norm computation plus how it was obtained.

    ``exact`` is True only for the closed-form paths; the sampled-ascent
    path is a certified lower bound of the true norm but not the norm.
    """

    value: float
    exact: bool
    method: str  # identity-formula | column-max | svd | sampled-ascent


@dataclass(frozen=True)
class LinOp:
    matrix: np.ndarray
    domain: SpaceSpec
    codomain: SpaceSpec

    def __post_init__(self):
        M = np.asarray(self.matrix)
        if M.ndim != 2:
            raise ValueError("operator matrix must be 2-d")
        if M.shape != (self.codomain.n, self.domain.n):
            raise ValueError(
                f"matrix shape {M.shape} does not match spaces "
                f"({self.codomain.n}, {self.domain.n})"
            )
        if self.domain.field != self.codomain.field:
            raise ValueError("domain and codomain must share the scalar field")
        if np.iscomplexobj(M) and self.domain.field != COMPLEX:
            raise ValueError("complex matrix over real spaces")
        dtype = complex if self.domain.field == COMPLEX else float
        M = np.ascontiguousarray(M, dtype=dtype)
        M.setflags(write=False)
        object.__setattr__(self, "matrix", M)

    @property
    def field(self):
        return self.domain.field

    @property
    def shape(self):
        return self.matrix.shape

    def __call__(self, x):
        return self.matrix @ np.asarray(x)


def operator(matrix, p, q, field=None):
    """Wrap a matrix as an operator l_p -> l_q; the field is inferred if omitted."""
    M = np.asarray(matrix)
    if M.ndim != 2:
        raise ValueError("operator matrix must be 2-d")
    if field is None:
        field = COMPLEX if np.iscomplexobj(M) else REAL
    m, n = M.shape
    return LinOp(M, SpaceSpec(p, n, field), SpaceSpec(q, m, field))


def identity_operator(n, p, q, field=REAL):
    """The identity id: l_p^n -> l_q^n."""
    return operator(np.eye(n), p, q, field=field)


def diagonal_operator(diag, p=2.0, q=2.0, field=None):
    diag = np.asarray(diag)
    return operator(np.diag(diag), p, q, field=field)


def add(S, T):
    """Pointwise sum; spaces must match exactly."""
    if S.domain != T.domain or S.codomain != T.codomain:
        raise ValueError("operator sum needs identical domain and codomain specs")
    return LinOp(S.matrix + T.matrix, S.domain, S.codomain)


def compose(S, T):
    """The composition S after T (first apply T)."""
    if T.codomain != S.domain:
        raise ValueError(
            f"cannot compose: T maps into {T.codomain}, S expects {S.domain}"
        )
    return LinOp(S.matrix @ T.matrix, T.domain, S.codomain)


def realify(T):
    """The real 2n x 2m block form [[Re, -Im], [Im, Re]] of a complex operator.

    Every singular value of T appears twice among the singular values of the
    realification, which is what the real/complex comparison of s-numbers
    consumes.
    """
    if T.field != COMPLEX:
        raise ValueError("realify expects a complex operator")
    M = T.matrix
    R = np.block([[M.real, -M.imag], [M.imag, M.real]])
    return operator(R, T.domain.p, T.codomain.p, field=REAL)


def singular_values(T):
    return np.linalg.svd(T.matrix, compute_uv=False)


def numerical_rank(T, tol=1e-10):
    """Number of singular values above tol * sigma_1 (0 for the zero operator)."""
    s = singular_values(T)
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int((s > tol * s[0]).sum())


def _norm_rows(A, q):
    """lp_norm applied to each row of A."""
    a = np.abs(A)
    if math.isinf(q):
        return a.max(axis=1)
    if q == 2.0:
        return np.sqrt((a * a).sum(axis=1))
    if q == 1.0:
        return a.sum(axis=1)
    return (a**q).sum(axis=1) ** (1.0 / q)


def _unit_directions(n, field):
    eye = np.eye(n)
    dirs = [eye, -eye]
    if field == COMPLEX:
        dirs += [1j * eye]
    return np.vstack(dirs)


def _sampled_ascent(T, budget, seed):
    """Seeded lower bound for ||T: l_p -> l_q|| by sampling plus hill climbing."""
    M = T.matrix
    p, q = T.domain.p, T.codomain.p
    n = T.domain.n
    rng = np.random.default_rng(
        [int(seed) & 0xFFFFFFFF, zlib.crc32(np.ascontiguousarray(M).tobytes())]
    )
    X = _unit_directions(n, T.field)
    nsamp = max(16, budget // 2)
    X = np.vstack([X, sample_sphere(rng, n, p, T.field, nsamp)])
    vals = _norm_rows(X @ M.T, q)
    order = np.argsort(vals)[::-1]
    best = float(vals[order[0]])

    spent = X.shape[0]
    for idx in order[:4]:
        x = X[idx].copy()
        cur = float(vals[idx])
        radius = 0.5
        while spent < budget and radius > 1e-7:
            step = rng.standard_normal(n)
            if T.field == COMPLEX:
                step = step + 1j * rng.standard_normal(n)
            y = x + radius * step
            ny = lp_norm(y, p)
            spent += 1
            if ny == 0.0:
                continue
            y = y / ny
            v = lp_norm(M @ y, q)
            if v > cur:
                x, cur = y, v
            else:
                radius *= 0.8
        best = max(best, cur)
    return best


def op_norm(T, budget=2000, seed=0):
    """The operator (quasi-)norm of T: l_p -> l_q, with the method recorded.

    Dispatch, strongest first: exact identity formula n^max(0, 1/q - 1/p);
    exact column maximum for p <= 1, q >= 1; exact sigma_1 for p = q = 2;
    otherwise a seeded sampled-ascent lower bound (exact=False).
    """
    M = T.matrix
    p, q = T.domain.p, T.codomain.p
    n = T.domain.n

    if T.shape[0] == T.shape[1] and np.array_equal(M, np.eye(n, dtype=M.dtype)):
        value = float(n) ** max(0.0, inv_exponent(q) - inv_exponent(p))
        return OpNormResult(value, True, "identity-formula")
    if p <= 1.0 and q >= 1.0:
        value = float(_norm_rows(M.T, q).max()) if n else 0.0
        return OpNormResult(value, True, "column-max")
    if p == 2.0 and q == 2.0:
        s = singular_values(T)
        return OpNormResult(float(s[0]) if s.size else 0.0, True, "svd")
    return OpNormResult(_sampled_ascent(T, budget, seed), False, "sampled-ascent")


# ---------------------------------------------------------------------------
# CSV matrix ingestion
# ---------------------------------------------------------------------------


def _parse_scalar(token, path, lineno, colno):
    text = token.strip()
    if not text:
        raise ValueError(f"{path}: line {lineno}, column {colno}: empty entry")
    try:
        return float(text), False
    except ValueError:
        pass
    try:
        return complex(text.replace(" ", "").replace("i", "j")), True
    except ValueError:
        raise ValueError(
            f"{path}: line {lineno}, column {colno}: cannot parse {token.strip()!r}"
        ) from None


def read_matrix_csv(path):
    """Read a matrix from plain-text CSV; complex entries use 'a+bi' tokens.

    One row per line, commas between entries.  Blank lines and lines starting
    with '#' are ignored.  Parse failures report the line and column.
    """
    rows = []
    any_complex = False
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            row = []
            for colno, token in enumerate(stripped.split(","), start=1):
                value, was_complex = _parse_scalar(token, path, lineno, colno)
                any_complex = any_complex or was_complex
                row.append(value)
            if rows and len(row) != len(rows[0][1]):
                raise ValueError(
                    f"{path}: line {lineno}: expected {len(rows[0][1])} entries, got {len(row)}"
                )
            rows.append((lineno, row))
    if not rows:
        raise ValueError(f"{path}: no matrix rows found")
    data = [r for _, r in rows]
    return np.array(data, dtype=complex if any_complex else float)


def load_operator(path, p, q, field=None):
    """Read a CSV matrix and wrap it as an operator l_p -> l_q."""
    return operator(read_matrix_csv(path), p, q, field=field)
