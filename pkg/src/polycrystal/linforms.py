"""Affine-linear forms on the infinite lattice and the piecewise-linear
rewriting operators whose closures generate the defining inequality systems.

A form is ``const + sum_k coeff_k * x_k`` with finitely many nonzero integer
coefficients.  Two rewriting operators act on forms at a position k:

* the plain operator subtracts ``coeff_k`` times the next-occurrence
  difference form ``beta_k`` when ``coeff_k > 0`` and adds it back from the
  previous occurrence (nothing at a first occurrence) when ``coeff_k <= 0``;
* the highest-weight operator does the same but, at a first occurrence with
  ``coeff_k <= 0``, uses the variant carrying the weight pairing as a
  constant term.

Worklist closures of seed forms under these operators, restricted to a
support window, produce the inequality systems; truncation is reported
honestly whenever a generated form escapes the window.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .cartan import Weight
from .iota import IotaSequence

PLAIN = "plain"
HAT = "hat"


class BudgetExceededError(RuntimeError):
    """A generation budget was hit; carries the partial result."""

    def __init__(self, partial):
        super().__init__(f"budget exceeded ({len(partial)} items kept)")
        self.partial = partial


class InconclusiveError(RuntimeError):
    """A truncated system cannot support the requested conclusive verdict."""


@dataclass(frozen=True)
class LinForm:
    """Canonical affine-linear form: sorted (position, coefficient) pairs, no zeros.

    ``label`` is a rendering hint for constants that arise from a named weight
    coefficient; it never takes part in equality or hashing.
    """

    const: int = 0
    coeffs: tuple[tuple[int, int], ...] = ()
    label: str | None = field(default=None, compare=False)

    @staticmethod
    def build(const: int = 0, coeffs=None, label: str | None = None) -> "LinForm":
        items = {}
        if coeffs:
            pairs = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for k, c in pairs:
                if k < 1:
                    raise ValueError("positions are 1-based")
                items[k] = items.get(k, 0) + c
        cleaned = tuple(sorted((k, c) for k, c in items.items() if c != 0))
        return LinForm(const, cleaned, label)

    @staticmethod
    def unit(k: int) -> "LinForm":
        return LinForm.build(coeffs={k: 1})

    def coeff(self, k: int) -> int:
        for pos, c in self.coeffs:
            if pos == k:
                return c
        return 0

    @property
    def is_zero(self) -> bool:
        return self.const == 0 and not self.coeffs

    @property
    def max_index(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else 0

    def evaluate(self, values) -> int:
        """Exact value at a point given as a mapping position -> entry."""
        get = values.get
        return self.const + sum(c * get(k, 0) for k, c in self.coeffs)

    def plus(self, other: "LinForm", scale: int = 1) -> "LinForm":
        items = dict(self.coeffs)
        for k, c in other.coeffs:
            items[k] = items.get(k, 0) + scale * c
        cleaned = tuple(sorted((k, c) for k, c in items.items() if c != 0))
        return LinForm(self.const + scale * other.const, cleaned)

    def scaled(self, scale: int) -> "LinForm":
        return LinForm(self.const * scale, tuple((k, c * scale) for k, c in self.coeffs))

    def sort_key(self):
        return (self.max_index, self.coeffs, self.const)

    def __repr__(self):
        return f"LinForm({self.render()})"

    def render(self, positions: str = "x") -> str:
        parts = []
        if self.label is not None:
            parts.append(self.label)
        elif self.const != 0 or not self.coeffs:
            parts.append(str(self.const))
        for k, c in self.coeffs:
            term = f"{positions}_{k}" if abs(c) == 1 else f"{abs(c)}{positions}_{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def beta_plus(s: IotaSequence, k: int) -> LinForm:
    """x_k + sum of pairings strictly between k and its next occurrence + x_{k^(+)}."""
    i = s.index(k)
    kp = s.k_plus(k)
    coeffs = {k: 1, kp: 1}
    for j in range(k + 1, kp):
        c = s.cartan.pairing(i, s.index(j))
        if c:
            coeffs[j] = c
    return LinForm.build(coeffs=coeffs)


def beta_minus(s: IotaSequence, lam: Weight, k: int) -> LinForm:
    """Previous-occurrence variant; at a first occurrence it carries -<h_{i_k}, lam>."""
    km = s.k_minus(k)
    if km > 0:
        return beta_plus(s, km)
    i = s.index(k)
    coeffs = {k: 1}
    for j in range(1, k):
        c = s.cartan.pairing(i, s.index(j))
        if c:
            coeffs[j] = c
    return LinForm.build(const=-lam.pairing(i), coeffs=coeffs)


def s_plain(s: IotaSequence, phi: LinForm, k: int) -> LinForm:
    """Weight-free rewriting at position k (first-occurrence negative case is a no-op)."""
    c = phi.coeff(k)
    if c > 0:
        return phi.plus(beta_plus(s, k), -c)
    if c < 0:
        km = s.k_minus(k)
        if km == 0:
            return phi
        return phi.plus(beta_plus(s, km), -c)
    return phi


def s_hat(s: IotaSequence, lam: Weight, phi: LinForm, k: int) -> LinForm:
    """Highest-weight rewriting at position k; idempotent."""
    c = phi.coeff(k)
    if c > 0:
        return phi.plus(beta_plus(s, k), -c)
    if c < 0:
        return phi.plus(beta_minus(s, lam, k), -c)
    return phi


def xi_form(s: IotaSequence, i: int) -> LinForm:
    """The seed form with coefficient -1 at the first occurrence of i."""
    fi = s.first(i)
    coeffs = {fi: -1}
    for j in range(1, fi):
        c = s.cartan.pairing(i, s.index(j))
        if c:
            coeffs[j] = -c
    return LinForm.build(coeffs=coeffs)


def lambda_form(s: IotaSequence, lam: Weight, i: int) -> LinForm:
    """<h_i, lam> plus the xi seed; equals minus the first-occurrence beta variant."""
    base = xi_form(s, i)
    return LinForm(lam.pairing(i), base.coeffs, label=f"lambda_{i}")


@dataclass(frozen=True)
class FormSet:
    """A deduplicated set of forms, with closure bookkeeping.

    ``truncated`` means some generated form escaped the support window (or a
    budget was hit), so membership tests against this set are necessary
    conditions only.  ``zero_beyond`` asserts that the full system pins
    x_k = 0 for every k past that cutoff; closed-form builders set it so that
    membership stays exact for points of arbitrary support.
    """

    forms: frozenset
    truncated: bool
    support_bound: int
    generators: tuple[LinForm, ...] = ()
    operator: str = PLAIN
    zero_beyond: int | None = None

    @property
    def sorted_forms(self) -> list[LinForm]:
        return sorted(self.forms, key=LinForm.sort_key)

    def __len__(self):
        return len(self.forms)


def generate_closure(
    s: IotaSequence,
    lam: Weight | None,
    seeds,
    operator: str = HAT,
    support_bound: int = 20,
    max_forms: int = 10000,
) -> FormSet:
    """Worklist closure of the seeds under the chosen operator at positions <= support_bound.

    Forms whose support escapes the window are dropped and flagged via
    ``truncated``; the zero form is discarded (it encodes 0 >= 0).  Raises
    :class:`BudgetExceededError` carrying the partial set when more than
    ``max_forms`` distinct forms appear.
    """
    if operator not in (PLAIN, HAT):
        raise ValueError(f"unknown operator {operator!r}")
    if operator == HAT and lam is None:
        raise ValueError("the highest-weight operator needs a weight")

    def apply(phi: LinForm, k: int) -> LinForm:
        if operator == PLAIN:
            return s_plain(s, phi, k)
        return s_hat(s, lam, phi, k)

    seeds = tuple(seeds)
    if max_forms < len(seeds):
        raise ValueError("max_forms is smaller than the seed set")
    for seed in seeds:
        if seed.max_index > support_bound:
            raise ValueError(f"seed {seed!r} exceeds the support bound {support_bound}")

    seen: set[LinForm] = set()
    queue: deque[LinForm] = deque()
    truncated = False
    for seed in seeds:
        if seed.is_zero or seed in seen:
            continue
        seen.add(seed)
        queue.append(seed)

    def result(trunc):
        return FormSet(frozenset(seen), trunc, support_bound, seeds, operator)

    while queue:
        phi = queue.popleft()
        for k in range(1, support_bound + 1):
            psi = apply(phi, k)
            if psi == phi or psi.is_zero or psi in seen:
                continue
            if psi.max_index > support_bound:
                truncated = True
                continue
            if len(seen) + 1 > max_forms:
                raise BudgetExceededError(result(True))
            seen.add(psi)
            queue.append(psi)
    return result(truncated)


@dataclass(frozen=True)
class PositivityReport:
    """Verdict of the first-occurrence nonnegativity scan.

    A found violation is conclusive; a clean verdict on a truncated set is not.
    """

    passed: bool
    violations: tuple[tuple[LinForm, int], ...]
    conclusive: bool

    def __bool__(self):
        return self.passed


def check_positivity(
    fs: FormSet, s: IotaSequence, strict: bool = False, require_conclusive: bool = False
) -> PositivityReport:
    """Scan every form for a negative coefficient at a first-occurrence position.

    ``strict`` excludes the set's recorded seed forms, which legitimately
    carry a -1 there.
    """
    first_positions = sorted(s.first(i) for i in s.cartan.indices)
    excluded = set(fs.generators) if strict else set()
    violations = []
    for phi in fs.sorted_forms:
        if phi in excluded:
            continue
        for k in first_positions:
            if phi.coeff(k) < 0:
                violations.append((phi, k))
    passed = not violations
    conclusive = (not passed) or (not fs.truncated)
    if require_conclusive and not conclusive:
        raise InconclusiveError("positivity verdict would rest on a truncated closure")
    return PositivityReport(passed, tuple(violations), conclusive)


@dataclass(frozen=True)
class AmpleReport:
    """Whether every generated form keeps a nonnegative constant term."""

    ample: bool
    conclusive: bool
    witness: LinForm | None

    def __bool__(self):
        return self.ample


def check_ample(
    s: IotaSequence,
    lam: Weight,
    support_bound: int = 20,
    max_forms: int = 10000,
    require_conclusive: bool = False,
) -> AmpleReport:
    """Test whether the zero vector satisfies the generated system.

    Runs the highest-weight closure over the unit seeds and the weight seeds;
    a negative constant term is a conclusive failure, while an all-clear on a
    truncated closure is reported with ``conclusive=False``.
    """
    if not lam.dominant:
        raise ValueError("ampleness is defined for dominant weights")
    seeds = [LinForm.unit(k) for k in range(1, support_bound + 1)]
    seeds += [lambda_form(s, lam, i) for i in s.cartan.indices]
    budget_hit = False
    try:
        fs = generate_closure(s, lam, seeds, HAT, support_bound, max_forms)
    except BudgetExceededError as exc:
        fs = exc.partial
        budget_hit = True
    witness = None
    for phi in fs.sorted_forms:
        if phi.const < 0:
            witness = phi
            break
    ample = witness is None
    conclusive = (not ample) or not (fs.truncated or budget_hit)
    if require_conclusive and not conclusive:
        raise InconclusiveError("ampleness verdict would rest on a truncated closure")
    return AmpleReport(ample, conclusive, witness)


def forms_to_json(fs: FormSet) -> list[dict]:
    return [
        {"const": phi.const, "coeffs": {str(k): c for k, c in phi.coeffs}}
        for phi in fs.sorted_forms
    ]


def form_from_json(data: dict) -> LinForm:
    return LinForm.build(
        const=int(data.get("const", 0)),
        coeffs={int(k): int(c) for k, c in data.get("coeffs", {}).items()},
    )
