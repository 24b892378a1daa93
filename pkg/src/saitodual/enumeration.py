"""Corpus generation and the batch duality-verification harness.

Generates every loop and chain block with exponents in [2, max_exp] on at
most max_vars variables, optionally all direct (Thom-Sebastiani) sums of
such blocks, deduplicates up to variable permutation, and runs the two
duality verifiers over the result.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .linalg import IntMatrix
from .polynomials import InvertiblePolynomial
from .zeta import verify_root_duality, verify_zeta_duality


def chain_matrix(exponents):
    """Exponent matrix of x1^p1*x2 + x2^p2*x3 + ... + xm^pm."""
    ps = list(exponents)
    m = len(ps)
    rows = [[0] * m for _ in range(m)]
    for i, p in enumerate(ps):
        rows[i][i] = p
        if i + 1 < m:
            rows[i][i + 1] = 1
    return IntMatrix(rows)


def loop_matrix(exponents):
    """Exponent matrix of x1^p1*x2 + ... + xm^pm*x1 (m >= 2)."""
    ps = list(exponents)
    m = len(ps)
    if m < 2:
        raise ValueError("a loop needs at least two variables")
    rows = [[0] * m for _ in range(m)]
    for i, p in enumerate(ps):
        rows[i][i] = p
        rows[i][(i + 1) % m] = 1
    return IntMatrix(rows)


def _necklaces(length, values):
    """Tuples over ``values`` up to cyclic rotation (canonical = minimal
    rotation); relabeling a loop's variables only rotates its exponents."""
    for tup in itertools.product(values, repeat=length):
        if all(tup <= tup[k:] + tup[:k] for k in range(1, length)):
            yield tup


def atom_specs(max_vars, max_exp, include_chains=True, include_loops=True):
    """All chain and loop blocks within the bounds, as (kind, exponents)."""
    exps = range(2, max_exp + 1)
    specs = []
    if include_chains:
        for m in range(1, max_vars + 1):
            specs.extend(("chain", ps)
                         for ps in itertools.product(exps, repeat=m))
    if include_loops:
        for m in range(2, max_vars + 1):
            specs.extend(("loop", ps) for ps in _necklaces(m, exps))
    return specs


def build_polynomial(specs):
    """Direct sum of the given blocks, on variables x1..xn."""
    blocks = [chain_matrix(ps) if kind == "chain" else loop_matrix(ps)
              for kind, ps in specs]
    n = sum(b.nrows for b in blocks)
    rows = [[0] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                rows[offset + i][offset + j] = b.entry(i, j)
        offset += b.nrows
    return InvertiblePolynomial(IntMatrix(rows))


def canonical_matrix_key(e):
    """Canonical form of an exponent matrix under independent monomial
    reordering and variable relabeling: the lexicographically smallest
    sorted row tuple over all column permutations."""
    n = e.ncols
    rows = e.rows
    best = None
    for perm in itertools.permutations(range(n)):
        candidate = tuple(sorted(tuple(row[j] for j in perm) for row in rows))
        if best is None or candidate < best:
            best = candidate
    return best


def generate_corpus(max_vars, max_exp, include_sums=False,
                    include_chains=True, include_loops=True, limit=None,
                    sample=None, seed=0):
    """Deduplicated, deterministically ordered polynomial corpus.

    ``sample`` draws that many polynomials pseudo-randomly (seeded, so
    reproducible) from the deduplicated corpus.  Returns (polynomials,
    truncated); ``truncated`` is True when ``limit`` cut the list short.
    """
    specs = atom_specs(max_vars, max_exp, include_chains, include_loops)
    combos = [[s] for s in specs]
    if include_sums:
        sizes = [len(ps) for _, ps in specs]

        def extend(start, used, acc):
            for i in range(start, len(specs)):
                size = sizes[i]
                if used + size > max_vars:
                    continue
                acc.append(specs[i])
                if len(acc) >= 2:
                    combos.append(list(acc))
                extend(i, used + size, acc)
                acc.pop()

        extend(0, 0, [])
    seen = {}
    for combo in combos:
        f = build_polynomial(combo)
        key = (f.nvars, canonical_matrix_key(f.exponents))
        if key not in seen:
            seen[key] = f
    ordered = [seen[k] for k in sorted(seen)]
    if sample is not None and sample < len(ordered):
        import random
        picks = random.Random(seed).sample(range(len(ordered)), sample)
        ordered = [ordered[i] for i in sorted(picks)]
    truncated = False
    if limit is not None and len(ordered) > limit:
        ordered = ordered[:limit]
        truncated = True
    return ordered, truncated


@dataclass
class PolynomialVerification:
    """Verification outcome for one polynomial."""

    polynomial: InvertiblePolynomial
    theorem: object
    corollary: object  # None when the group is not cyclic

    @property
    def corollary_checked(self):
        return self.corollary is not None


def verify_polynomial(f):
    """Run the zeta-duality check, and the root-duality check when the
    symmetry group is cyclic."""
    theorem = verify_zeta_duality(f)
    corollary = None
    if theorem.rhs_report.group.is_cyclic:
        corollary = verify_root_duality(f)
    return PolynomialVerification(f, theorem, corollary)


def _failure_entry(f, kind, report):
    return {
        "polynomial": f.text(),
        "variables": list(f.variables),
        "E": [list(r) for r in f.exponents.rows],
        "kind": kind,
        "report": report.to_json(include_reports=True),
    }


@dataclass
class BatchReport:
    """Aggregate result of a corpus run."""

    total: int = 0
    theorem_pass: int = 0
    theorem_fail: int = 0
    corollary_checked: int = 0
    corollary_pass: int = 0
    corollary_fail: int = 0
    failures: list = field(default_factory=list)
    truncated: bool = False
    records: list = None

    @property
    def ok(self):
        return self.theorem_fail == 0 and self.corollary_fail == 0

    def to_json(self):
        return {
            "total": self.total,
            "theoremPass": self.theorem_pass,
            "theoremFail": self.theorem_fail,
            "corollaryChecked": self.corollary_checked,
            "corollaryPass": self.corollary_pass,
            "corollaryFail": self.corollary_fail,
            "failures": self.failures,
            "truncated": self.truncated,
        }


def _verify_task(payload):
    rows, variables = payload
    f = InvertiblePolynomial(IntMatrix(rows), variables)
    v = verify_polynomial(f)
    failures = []
    if not v.theorem.equal:
        failures.append(_failure_entry(f, "theorem", v.theorem))
    if v.corollary is not None and not v.corollary.equal:
        failures.append(_failure_entry(f, "corollary", v.corollary))
    return (v.theorem.equal, v.corollary_checked,
            v.corollary.equal if v.corollary is not None else None, failures)


def run_batch(polynomials, workers=1, keep_records=False, truncated=False):
    """Verify every polynomial; aggregation order follows the input order,
    so sorted input gives byte-stable reports."""
    report = BatchReport(total=len(polynomials), truncated=truncated,
                         records=[] if keep_records else None)

    def absorb(theorem_equal, corollary_checked, corollary_equal, failures):
        if theorem_equal:
            report.theorem_pass += 1
        else:
            report.theorem_fail += 1
        if corollary_checked:
            report.corollary_checked += 1
            if corollary_equal:
                report.corollary_pass += 1
            else:
                report.corollary_fail += 1
        report.failures.extend(failures)

    if workers > 1 and not keep_records:
        import multiprocessing

        payloads = [(tuple(f.exponents.rows), f.variables)
                    for f in polynomials]
        with multiprocessing.Pool(workers) as pool:
            for result in pool.map(_verify_task, payloads, chunksize=8):
                absorb(*result)
        return report

    for f in polynomials:
        v = verify_polynomial(f)
        failures = []
        if not v.theorem.equal:
            failures.append(_failure_entry(f, "theorem", v.theorem))
        if v.corollary is not None and not v.corollary.equal:
            failures.append(_failure_entry(f, "corollary", v.corollary))
        absorb(v.theorem.equal, v.corollary_checked,
               v.corollary.equal if v.corollary is not None else None,
               failures)
        if keep_records:
            report.records.append(v)
    return report
