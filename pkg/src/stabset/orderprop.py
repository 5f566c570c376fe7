"""Order-property witnesses: verification, canonical recovery, exact maxima.

A set A in an abelian group has the k-order property when there are length-k
sequences s and t with s_i + t_j in A exactly when i <= j.  This module makes
that definition executable: it checks claimed witnesses cell by cell, recovers
the unique enumeration of witnessing sets, and computes the exact maximal k
for subsets of F2^n by confined depth-first search, cross-checkable against an
independent brute-force oracle and a SAT encoding.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from stabset.gf2 import BitVector, sort_vectors

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

Element = Union[BitVector, int]


@dataclass(frozen=True)
class Ambient:
    """Group descriptor: F2^n ("f2", with n) or the integers ("z")."""

    kind: str
    n: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == "f2":
            if self.n is None or self.n < 0:
                raise ValueError("f2 ambient needs a non-negative dimension")
        elif self.kind == "z":
            if self.n is not None:
                raise ValueError("z ambient carries no dimension")
        else:
            raise ValueError(f"unknown ambient kind {self.kind!r}")

    def check_element(self, x: Element) -> None:
        if self.kind == "f2":
            if not isinstance(x, BitVector) or x.n != self.n:
                raise ValueError(f"element {x!r} not in F2^{self.n}")
        else:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValueError(f"element {x!r} not an integer")
            if not INT64_MIN <= x <= INT64_MAX:
                raise ValueError(f"integer {x} outside signed 64-bit range")


def ambient_f2(n: int) -> Ambient:
    return Ambient("f2", n)


AMBIENT_Z = Ambient("z")


@dataclass(frozen=True)
class FiniteSet:
    """A finite subset of F2^n or of the 64-bit integers."""

    ambient: Ambient
    elements: frozenset

    def __post_init__(self) -> None:
        for x in self.elements:
            self.ambient.check_element(x)

    @classmethod
    def f2(cls, n: int, elements: Iterable[BitVector]) -> "FiniteSet":
        return cls(ambient_f2(n), frozenset(elements))

    @classmethod
    def z(cls, elements: Iterable[int]) -> "FiniteSet":
        return cls(AMBIENT_Z, frozenset(elements))

    @property
    def N(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list:
        if self.ambient.kind == "f2":
            return sort_vectors(self.elements)
        return sorted(self.elements)


@dataclass(frozen=True)
class Witness:
    """Claimed order-k witness: sequences s and t of length k."""

    ambient: Ambient
    s: tuple
    t: tuple

    def __post_init__(self) -> None:
        if len(self.s) != len(self.t):
            raise ValueError("s and t must have equal length")
        for x in self.s:
            self.ambient.check_element(x)
        for x in self.t:
            self.ambient.check_element(x)
        if self.ambient.kind == "z" and self.s:
            # keep every pairwise sum inside the signed 64-bit range
            for a in (min(self.s) + min(self.t), max(self.s) + max(self.t)):
                if not INT64_MIN <= a <= INT64_MAX:
                    raise ValueError("witness sums overflow signed 64-bit range")

    @property
    def k(self) -> int:
        return len(self.s)

    def translate(self, g: Element) -> "Witness":
        """(s + g, t + g); in characteristic 2 this preserves every s_i + t_j."""
        self.ambient.check_element(g)
        return Witness(self.ambient, tuple(x + g for x in self.s), tuple(x + g for x in self.t))

    def permute(self, sigma: Iterable[int], tau: Iterable[int]) -> "Witness":
        """Reorder by 0-based index sequences sigma (for s) and tau (for t)."""
        return Witness(
            self.ambient,
            tuple(self.s[i] for i in sigma),
            tuple(self.t[j] for j in tau),
        )


@dataclass(frozen=True)
class Verdict:
    """Outcome of a witness check; `where` carries 1-based indices."""

    valid: bool
    reason: Optional[str] = None
    where: Optional[tuple[int, int]] = None

    def describe(self) -> str:
        if self.valid:
            return "valid"
        i, j = self.where
        return f"({i},{j}) {self.reason}"


@dataclass(frozen=True)
class SolveReport:
    kmax: int
    witness: Witness
    nodes_explored: int
    elapsed: float
    status: str  # "exact" | "lower-bound-only"


def _ambients_match(a: Ambient, b: Ambient) -> None:
    if a != b:
        raise ValueError(f"ambient mismatch: {a} vs {b}")


def verify_witness(A: FiniteSet, w: Witness) -> Verdict:
    """Check the definition cell by cell; k = 0 is vacuously valid.

    Reports the first duplicate entry, then the first bad cell in row-major
    order: "expected-in-A" when i <= j but s_i + t_j misses A, and
    "expected-not-in-A" when i > j but the sum lands in A.
    """
    _ambients_match(A.ambient, w.ambient)
    k = w.k
    seen: dict = {}
    for idx, x in enumerate(w.s, start=1):
        if x in seen:
            return Verdict(False, "duplicate-s", (seen[x], idx))
        seen[x] = idx
    seen = {}
    for idx, x in enumerate(w.t, start=1):
        if x in seen:
            return Verdict(False, "duplicate-t", (seen[x], idx))
        seen[x] = idx
    members = A.elements
    for i in range(1, k + 1):
        si = w.s[i - 1]
        for j in range(1, k + 1):
            inside = (si + w.t[j - 1]) in members
            if (i <= j) and not inside:
                return Verdict(False, "expected-in-A", (i, j))
            if (i > j) and inside:
                return Verdict(False, "expected-not-in-A", (i, j))
    return Verdict(True)


def canonical_enumeration(A: FiniteSet, S: Iterable, T: Iterable) -> Optional[Witness]:
    """Recover the unique witnessing order of the sets S and T, if any.

    In a valid witness s_i has degree k+1-i against T and t_j has degree j
    against S, so the degrees are forced and pairwise distinct: sort S by
    descending degree, T by ascending degree, then verify.  Returns None when
    degrees collide or the sorted sequences fail verification.
    """
    S = list(S)
    T = list(T)
    if len(S) != len(set(S)) or len(T) != len(set(T)):
        raise ValueError("S and T must be sets of distinct elements")
    if len(S) != len(T):
        raise ValueError(f"size mismatch: |S| = {len(S)}, |T| = {len(T)}")
    members = A.elements
    s_deg = {x: sum(1 for y in T if (x + y) in members) for x in S}
    t_deg = {y: sum(1 for x in S if (x + y) in members) for y in T}
    if len(set(s_deg.values())) != len(S) or len(set(t_deg.values())) != len(T):
        return None
    s_seq = sorted(S, key=lambda x: -s_deg[x])
    t_seq = sorted(T, key=lambda y: t_deg[y])
    w = Witness(A.ambient, tuple(s_seq), tuple(t_seq))
    return w if verify_witness(A, w).valid else None


def staircase_check(w: Witness) -> Verdict:
    """Structural check on the matrix M_ij = s_i + t_j (F2 only).

    Valid witnesses force every row and every column of M to be distinct, and
    forbid M_ij = M_i'j' whenever i <= j < i' <= j' (two comparable cells of
    the upper staircase can never coincide).
    """
    if w.ambient.kind != "f2":
        raise ValueError("staircase check supports F2 ambients only")
    k = w.k
    m = [[(w.s[i] + w.t[j]).bits for j in range(k)] for i in range(k)]
    for i in range(k):
        row = {}
        for j in range(k):
            if m[i][j] in row:
                return Verdict(False, "row-collision", (i + 1, j + 1))
            row[m[i][j]] = j
    for j in range(k):
        col = {}
        for i in range(k):
            if m[i][j] in col:
                return Verdict(False, "column-collision", (i + 1, j + 1))
            col[m[i][j]] = i
    # prefix[c] = values of upper cells (i <= j) with column j <= c
    prefix: set = set()
    by_column: list[set] = []
    for j in range(k):
        by_column.append(set(prefix))
        for i in range(j + 1):
            prefix.add(m[i][j])
    for i2 in range(k):
        for j2 in range(i2, k):
            if m[i2][j2] in by_column[i2]:
                return Verdict(False, "staircase-collision", (i2 + 1, j2 + 1))
    return Verdict(True)


# ---------------------------------------------------------------------------
# Exact search.
#
# Search-space confinement (two-line lemma): translating both sequences by
# t_1 changes no pairwise sum in characteristic 2, so t_1 = 0 may be assumed.
# Then s_1 = s_1 + t_1 lies in A; every t_j satisfies s_1 + t_j in A, hence
# t_j in s_1 + A, a subset of A + A; and every s_i satisfies s_i + t_i in A,
# hence s_i in t_i + A, a subset of A + A + A.


def _require_f2(A: FiniteSet) -> int:
    if A.ambient.kind != "f2":
        raise ValueError("exact search supports F2 ambients only")
    return A.ambient.n


def _lex_sorted(bits: Iterable[int], n: int) -> list[int]:
    return [v.bits for v in sort_vectors(BitVector(n, b) for b in bits)]


class _Timeout(Exception):
    pass


def max_order_exact(
    A: FiniteSet,
    time_limit: Optional[float] = None,
    node_limit: Optional[int] = None,
) -> SolveReport:
    """Largest k for which A has the k-order property, with a witness.

    Depth-first search over rounds r = 1..k, choosing t_r then s_r from the
    confined domains t_r in the intersection of s_i + A over i < r (t_1 = 0)
    and s_r in (t_r + A) minus the union of t_j + A over j < r.  Pruning:
    entry distinctness, diagonal distinctness, staircase distinctness, the
    cardinality cap k <= |A|, and a branch bound by the remaining t-domain.
    On hitting time_limit (wall clock) or node_limit (deterministic budget)
    the best witness found so far is reported as a lower bound.
    """
    n = _require_f2(A)
    start = time.monotonic()
    members = frozenset(x.bits for x in A.elements)
    ncap = len(members)
    empty = Witness(A.ambient, (), ())
    if not members:
        return SolveReport(0, empty, 0, time.monotonic() - start, "exact")

    shifted = {}  # g -> frozenset(g + A)

    def shift(g: int) -> frozenset:
        got = shifted.get(g)
        if got is None:
            got = frozenset(g ^ a for a in members)
            shifted[g] = got
        return got

    best_k = 0
    best_s: list[int] = []
    best_t: list[int] = []
    nodes = 0

    s_seq: list[int] = []
    t_seq: list[int] = []
    s_used: set[int] = set()
    union_t: set[int] = set()  # union of t_j + A over chosen j
    diag: set[int] = set()
    upper_prefix: list[set[int]] = [set()]

    def out_of_budget() -> bool:
        if node_limit is not None and nodes >= node_limit:
            return True
        return time_limit is not None and time.monotonic() - start > time_limit

    def descend(t_domain: list[int]) -> None:
        # t_domain: candidates for this round's t, already restricted to the
        # intersection of s_i + A over previous rounds, minus the used t's
        # (the first round pins t_1 = 0, so its domain is just [0])
        nonlocal best_k, best_s, best_t, nodes
        r = len(s_seq) + 1
        if r > ncap or best_k == ncap:
            return
        if r > 1 and len(s_seq) + len(t_domain) <= best_k:
            return
        for t in t_domain:
            # staircase: the new cells (i, r), i < r, must avoid every upper
            # value in columns before i (implied by the domains; kept as a
            # guard so the search never depends on that argument)
            if any((s_seq[i] ^ t) in upper_prefix[i] for i in range(r - 1)):
                continue
            if out_of_budget():
                raise _Timeout
            s_domain = _lex_sorted(
                (a for a in shift(t) if a not in union_t and a not in s_used), n
            )
            for s in s_domain:
                d = s ^ t
                if d in diag or d in upper_prefix[r - 1]:
                    continue
                nodes += 1
                s_seq.append(s)
                t_seq.append(t)
                s_used.add(s)
                added_union = shift(t) - union_t
                union_t.update(added_union)
                diag.add(d)
                new_upper = {s_seq[i] ^ t for i in range(r)}
                upper_prefix.append(upper_prefix[-1] | new_upper)
                if r > best_k:
                    best_k, best_s, best_t = r, list(s_seq), list(t_seq)
                if r == 1:
                    sub_domain = _lex_sorted(shift(s) - {0}, n)
                else:
                    sub_domain = [u for u in t_domain if u != t and u in shift(s)]
                descend(sub_domain)
                upper_prefix.pop()
                diag.discard(d)
                union_t.difference_update(added_union)
                s_used.discard(s)
                s_seq.pop()
                t_seq.pop()
                if best_k == ncap:
                    return

    status = "exact"
    try:
        descend([0])
    except _Timeout:
        status = "lower-bound-only"

    witness = Witness(
        A.ambient,
        tuple(BitVector(n, b) for b in best_s),
        tuple(BitVector(n, b) for b in best_t),
    )
    return SolveReport(best_k, witness, nodes, time.monotonic() - start, status)


def max_order_bruteforce(A: FiniteSet) -> int:
    """Independent oracle: naive enumeration over the confined global domains.

    Candidates are drawn from fixed sets (t_1 = 0, later t from A + A, every
    s from A + A + A) and every extension is validated directly against the
    definition on its new row and column, with no incremental domain logic.
    Guarded to |A| <= 8 and n <= 5.
    """
    n = _require_f2(A)
    if A.N > 8 or n > 5:
        raise ValueError("brute-force oracle guarded to |A| <= 8 and n <= 5")
    if not A.elements:
        return 0
    members = frozenset(x.bits for x in A.elements)
    aa = frozenset(a ^ b for a in members for b in members)
    aaa = frozenset(a ^ b for a in aa for b in members)
    t_candidates = _lex_sorted(aa, n)
    s_candidates = _lex_sorted(aaa, n)

    def new_cells_ok(ss: list[int], tt: list[int]) -> bool:
        r = len(ss) - 1  # 0-based index of the appended pair
        s_new, t_new = ss[r], tt[r]
        for j in range(r + 1):
            if ((s_new ^ tt[j]) in members) != (r <= j):
                return False
        for i in range(r):
            if ((ss[i] ^ t_new) in members) != (i <= r):
                return False
        return True

    best = 0

    def extend(ss: list[int], tt: list[int]) -> None:
        nonlocal best
        best = max(best, len(ss))
        t_opts = [0] if not ss else t_candidates
        for t in t_opts:
            for s in s_candidates:
                ss.append(s)
                tt.append(t)
                if new_cells_ok(ss, tt):
                    extend(ss, tt)
                ss.pop()
                tt.pop()

    extend([], [])
    return best


# ---------------------------------------------------------------------------
# DIMACS export.


@dataclass(frozen=True)
class CnfLayout:
    """Variable layout of the order-property encoding (ids are 1-based)."""

    n: int
    k: int
    s_domain: tuple[int, ...]  # bits values, lexicographic
    t1_domain: tuple[int, ...]  # (0,) once A is nonempty
    t_domain: tuple[int, ...]

    def s_var(self, i: int, a: int) -> int:
        """Variable for s_i = s_domain[a]; i is 1-based, a 0-based."""
        return (i - 1) * len(self.s_domain) + a + 1

    def t_var(self, j: int, b: int) -> int:
        base = self.k * len(self.s_domain)
        if j == 1:
            return base + b + 1
        return base + len(self.t1_domain) + (j - 2) * len(self.t_domain) + b + 1

    @property
    def var_count(self) -> int:
        return (
            self.k * len(self.s_domain)
            + len(self.t1_domain)
            + (self.k - 1) * len(self.t_domain)
        )


def cnf_layout(A: FiniteSet, k: int) -> CnfLayout:
    n = _require_f2(A)
    if k < 1:
        raise ValueError("k must be at least 1")
    members = frozenset(x.bits for x in A.elements)
    if not members:
        return CnfLayout(n, k, (), (), ())
    aa = frozenset(a ^ b for a in members for b in members)
    aaa = frozenset(a ^ b for a in aa for b in members)
    return CnfLayout(
        n,
        k,
        tuple(_lex_sorted(aaa, n)),
        (0,),
        tuple(_lex_sorted(aa, n)),
    )


def export_cnf(A: FiniteSet, k: int) -> str:
    """DIMACS CNF satisfiable iff A has the k-order property.

    One-hot selection variables pick each s_i from A + A + A and each t_j
    from A + A (t_1 is pinned to 0 by translation); clauses forbid any pair
    of choices violating a cell of the definition, and force pairwise
    distinct values within each role.  Header comments carry the layout and
    the candidate values so that a model decodes back into a witness.
    """
    layout = cnf_layout(A, k)
    n, members = layout.n, frozenset(x.bits for x in A.elements)
    clauses: list[list[int]] = []

    def one_hot(var_ids: list[int]) -> None:
        clauses.append(list(var_ids))
        for x in range(len(var_ids)):
            for y in range(x + 1, len(var_ids)):
                clauses.append([-var_ids[x], -var_ids[y]])

    def t_dom(j: int) -> tuple[int, ...]:
        return layout.t1_domain if j == 1 else layout.t_domain

    for i in range(1, k + 1):
        one_hot([layout.s_var(i, a) for a in range(len(layout.s_domain))])
    for j in range(1, k + 1):
        one_hot([layout.t_var(j, b) for b in range(len(t_dom(j)))])

    for i in range(1, k + 1):
        for j in range(1, k + 1):
            want_in = i <= j
            dom = t_dom(j)
            for a, sval in enumerate(layout.s_domain):
                for b, tval in enumerate(dom):
                    if ((sval ^ tval) in members) != want_in:
                        clauses.append([-layout.s_var(i, a), -layout.t_var(j, b)])

    for i1 in range(1, k + 1):
        for i2 in range(i1 + 1, k + 1):
            for a in range(len(layout.s_domain)):
                clauses.append([-layout.s_var(i1, a), -layout.s_var(i2, a)])
    for j1 in range(1, k + 1):
        for j2 in range(j1 + 1, k + 1):
            d1, d2 = t_dom(j1), t_dom(j2)
            for b1, v1 in enumerate(d1):
                for b2, v2 in enumerate(d2):
                    if v1 == v2:
                        clauses.append([-layout.t_var(j1, b1), -layout.t_var(j2, b2)])

    def fmt(bits: int) -> str:
        return BitVector(n, bits).to_string()

    lines = [
        "c stabset order-property encoding",
        f"c group f2 n={n}  set-size={len(members)}  k={k}",
        "c variables, in blocks: s_1..s_k over sdom, t_1 over t1dom, t_2..t_k over tdom",
        "c var(s_i = sdom[a]) = (i-1)*|sdom| + a + 1",
        "c var(t_1 = t1dom[b]) = k*|sdom| + b + 1",
        "c var(t_j = tdom[b]) = k*|sdom| + |t1dom| + (j-2)*|tdom| + b + 1   (j >= 2)",
        "c variable count = k*|sdom| + |t1dom| + (k-1)*|tdom|",
        "c sdom " + " ".join(fmt(v) for v in layout.s_domain),
        "c t1dom " + " ".join(fmt(v) for v in layout.t1_domain),
        "c tdom " + " ".join(fmt(v) for v in layout.t_domain),
        f"p cnf {layout.var_count} {len(clauses)}",
    ]
    for cl in clauses:
        lines.append(" ".join(str(lit) for lit in cl) + " 0")
    return "\n".join(lines) + "\n"


def decode_cnf_model(A: FiniteSet, k: int, true_vars: Iterable[int]) -> Witness:
    """Rebuild the witness selected by a satisfying assignment."""
    layout = cnf_layout(A, k)
    n = layout.n
    true_set = set(true_vars)
    s_vals: list[Optional[int]] = [None] * k
    t_vals: list[Optional[int]] = [None] * k
    for i in range(1, k + 1):
        for a, val in enumerate(layout.s_domain):
            if layout.s_var(i, a) in true_set:
                if s_vals[i - 1] is not None:
                    raise ValueError(f"model selects two values for s_{i}")
                s_vals[i - 1] = val
    for j in range(1, k + 1):
        dom = layout.t1_domain if j == 1 else layout.t_domain
        for b, val in enumerate(dom):
            if layout.t_var(j, b) in true_set:
                if t_vals[j - 1] is not None:
                    raise ValueError(f"model selects two values for t_{j}")
                t_vals[j - 1] = val
    if any(v is None for v in s_vals) or any(v is None for v in t_vals):
        raise ValueError("model leaves a role unassigned")
    return Witness(
        A.ambient,
        tuple(BitVector(n, v) for v in s_vals),
        tuple(BitVector(n, v) for v in t_vals),
    )
