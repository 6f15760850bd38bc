"""Cross-validation between the closed form and the character-theoretic oracle.

The deep checks here walk all |G| elements, so everything is gated by the
oracle size bound. Character values are handled in a monomial form: every
value of every character is either 0 or deg * zeta_{p^C}^e with
C = max(n, m), so value tables are plain integer exponent tables and the
orthogonality/trace sums reduce through the same canonical basis reduction
that CyclotomicElement uses. The monomial tables are themselves checked
against `character_value` on random elements, tying the fast path to the
exact slow one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complex_reps import (
    InducedOrbit,
    IrreducibleCharacter,
    LinearOrbit,
    character_value,
    enumerate_irreducibles,
    materialize_matrices,
)
from .cyclotomic import CyclotomicElement, reduce_power_vector, root_power
from .errors import SizeBoundError
from .formulas import (
    complex_counts_closed_form,
    rational_counts_closed_form,
    wedderburn_closed_form,
)
from .group import (
    ORACLE_ORDER_BOUND,
    GroupElement,
    GroupParams,
    conjugacy_classes,
    from_s,
)
from .rational import (
    GaloisClass,
    WedderburnDecomposition,
    assemble_components,
    galois_classes,
    rational_counts_from_classes,
    sigma_on_character,
    wedderburn_from_classes,
)


def _check_oracle_bound(params: GroupParams, bound: int) -> None:
    if params.order > bound:
        raise SizeBoundError(
            f"|G| = {params.order} exceeds the oracle bound {bound}"
        )


def valid_parameter_sets(p: int, max_order: int):
    """All non-abelian (n, m, s) with p^(n+m) <= max_order, canonical r."""
    nm = 3  # n >= 2, m >= 1
    while p ** nm <= max_order:
        for n in range(2, nm):
            m = nm - n
            if m < 1:
                continue
            for s in range(1, min(n - 1, m) + 1):
                yield from_s(p, n, m, s)
        nm += 1


def decomposition_via_oracle(
    params: GroupParams, *, bound: int = ORACLE_ORDER_BOUND
) -> WedderburnDecomposition:
    """Decompose from first principles: enumerate Irr(G), class it under
    the Galois action, and assemble one component per class."""
    _check_oracle_bound(params, bound)
    if params.abelian or params.s == 0:
        return _abelian_oracle(params)
    chars = enumerate_irreducibles(params)
    classes = galois_classes(chars, params)
    return wedderburn_from_classes(classes, params)


def _abelian_oracle(params: GroupParams) -> WedderburnDecomposition:
    """Galois-orbit brute force on the character grid of C_{p^n} x C_{p^m}."""
    p, n, m = params.p, params.n, params.m
    qa, qb = p ** n, p ** m
    units = [a for a in range(1, p ** max(n, m)) if a % p] or [1]
    seen = [False] * (qa * qb)
    items = []
    for i in range(qa):
        for j in range(qb):
            if seen[i * qb + j]:
                continue
            orbit = {((alpha * i) % qa, (alpha * j) % qb) for alpha in units}
            for x, y in orbit:
                seen[x * qb + y] = True
            li = 0 if i == 0 else n - _val(i, p)
            lj = 0 if j == 0 else m - _val(j, p)
            items.append((1, max(li, lj), 1))
    return assemble_components(p, items)


def _val(x: int, p: int) -> int:
    w = 0
    while x % p == 0:
        x //= p
        w += 1
    return w


@dataclass(frozen=True)
class CrossCheck:
    params: GroupParams
    closed: WedderburnDecomposition
    oracle: WedderburnDecomposition
    match: bool
    diff: tuple[str, ...]


def diff_components(
    a: WedderburnDecomposition, b: WedderburnDecomposition
) -> list[str]:
    """Human-readable per-component differences (empty when equal)."""
    ma, mb = a.as_multiset(), b.as_multiset()
    out = []
    for key in sorted(set(ma) | set(mb)):
        ca, cb = ma.get(key, 0), mb.get(key, 0)
        if ca != cb:
            out.append(f"q={key[0]} lambda={key[1]}: closed={ca} oracle={cb}")
    return out


def cross_validate(
    params: GroupParams, *, bound: int = ORACLE_ORDER_BOUND
) -> CrossCheck:
    """Run both routes and compare the component multisets exactly."""
    closed = wedderburn_closed_form(params)
    oracle = decomposition_via_oracle(params, bound=bound)
    diff = diff_components(closed, oracle)
    return CrossCheck(params, closed, oracle, not diff, tuple(diff))


# ---------------------------------------------------------------------------
# monomial value tables
# ---------------------------------------------------------------------------

def ambient_level(params: GroupParams) -> int:
    """Level C with all character values inside Q(zeta_{p^C})."""
    return max(params.n, params.m)


def monomial_exponent(
    ch: IrreducibleCharacter, i: int, j: int, params: GroupParams
) -> int | None:
    """Exponent e with psi(a^i b^j) = deg(psi) * zeta_{p^C}^e, or None for 0."""
    p, n, m, s = params.p, params.n, params.m, params.s
    qc = p ** ambient_level(params)
    if isinstance(ch.orbit, LinearOrbit):
        ea = ch.orbit.lam * p ** s * i * (qc // p ** n)
        eb = ch.u * j * (qc // p ** m)
        return (ea + eb) % qc
    d = p ** ch.orbit.t
    if i % d or j % d:
        return None
    ea = i * ch.orbit.l * p ** (s - ch.orbit.t) * (qc // p ** n)
    eb = ch.u * (j // d) * (qc // p ** (m - ch.orbit.t))
    return (ea + eb) % qc


def value_table(ch: IrreducibleCharacter, params: GroupParams) -> list[int | None]:
    """Exponent table over all group elements, indexed by i * p^m + j."""
    qa, qb = params.p ** params.n, params.p ** params.m
    table: list[int | None] = [None] * (qa * qb)
    for i in range(qa):
        base = i * qb
        for j in range(qb):
            table[base + j] = monomial_exponent(ch, i, j, params)
    return table


def _monomial_as_element(params, degree: int, exponent: int | None) -> CyclotomicElement:
    if exponent is None:
        return CyclotomicElement.rational(params.p, 0)
    return degree * root_power(params.p, ambient_level(params), exponent)


# ---------------------------------------------------------------------------
# monomial matrices (images of group elements under an induced character)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialMatrix:
    """A matrix with a single root-of-unity entry per row: row c holds
    zeta_{p^C}^exps[c] at column perm[c]. Closed under multiplication, so
    relation checks stay O(degree)."""

    modulus: int
    perm: tuple[int, ...]
    exps: tuple[int, ...]

    @staticmethod
    def identity(modulus: int, d: int) -> "MonomialMatrix":
        return MonomialMatrix(modulus, tuple(range(d)), (0,) * d)

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        perm = tuple(other.perm[c] for c in self.perm)
        exps = tuple(
            (self.exps[c] + other.exps[self.perm[c]]) % self.modulus
            for c in range(len(self.perm))
        )
        return MonomialMatrix(self.modulus, perm, exps)

    def inv(self) -> "MonomialMatrix":
        d = len(self.perm)
        inv_perm = [0] * d
        for c, target in enumerate(self.perm):
            inv_perm[target] = c
        exps = tuple((-self.exps[inv_perm[c]]) % self.modulus for c in range(d))
        return MonomialMatrix(self.modulus, tuple(inv_perm), exps)

    def pow(self, e: int) -> "MonomialMatrix":
        acc = MonomialMatrix.identity(self.modulus, len(self.perm))
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def trace_vector(self, p: int, level: int) -> list:
        """Canonical basis coordinates of the trace."""
        vec = [0] * (p ** level)
        for c, target in enumerate(self.perm):
            if target == c:
                vec[self.exps[c]] += 1
        return reduce_power_vector(p, level, vec)

    def to_dense(self, p: int, level: int) -> list[list[CyclotomicElement]]:
        d = len(self.perm)
        zero = CyclotomicElement.rational(p, 0)
        out = [[zero] * d for _ in range(d)]
        for c in range(d):
            out[c][self.perm[c]] = root_power(p, level, self.exps[c])
        return out


def monomial_generators(
    ch: IrreducibleCharacter, params: GroupParams
) -> tuple[MonomialMatrix, MonomialMatrix]:
    """Monomial-matrix images of a and b for an induced character, with all
    roots of unity written at the ambient level."""
    assert isinstance(ch.orbit, InducedOrbit)
    p, n, m, s = params.p, params.n, params.m, params.s
    t, l = ch.orbit.t, ch.orbit.l
    d = p ** t
    qc = p ** ambient_level(params)
    qn = p ** (n - s + t)
    scale_a = qc // p ** n
    a_exps = []
    step = 1
    for _ in range(d):
        a_exps.append(step * l * p ** (s - t) * scale_a % qc)
        step = step * params.r % qn
    a_mat = MonomialMatrix(qc, tuple(range(d)), tuple(a_exps))
    b_perm = tuple((c + 1) % d for c in range(d))
    b_exps = [0] * d
    b_exps[d - 1] = ch.u * (qc // p ** (m - t)) % qc
    b_mat = MonomialMatrix(qc, b_perm, tuple(b_exps))
    return a_mat, b_mat


# ---------------------------------------------------------------------------
# deep checks
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class DeepChecker:
    """Caches the per-group state (characters, value tables, classes) that
    the individual checks share. All checks are exact; `detail` carries the
    work counts so suite logs show what actually ran."""

    params: GroupParams
    rng: random.Random = field(default_factory=lambda: random.Random(0))
    bound: int = ORACLE_ORDER_BOUND

    def __post_init__(self):
        _check_oracle_bound(self.params, self.bound)
        self._chars: list[IrreducibleCharacter] | None = None
        self._tables: dict[int, list[int | None]] = {}
        self._conj_classes = None
        self._galois: list[GaloisClass] | None = None

    @property
    def chars(self) -> list[IrreducibleCharacter]:
        if self._chars is None:
            self._chars = enumerate_irreducibles(self.params)
        return self._chars

    def table(self, k: int) -> list[int | None]:
        """Value table of the k-th character, built on first use."""
        if k not in self._tables:
            self._tables[k] = value_table(self.chars[k], self.params)
        return self._tables[k]

    @property
    def conj_classes(self):
        if self._conj_classes is None:
            self._conj_classes = conjugacy_classes(self.params)
        return self._conj_classes

    @property
    def galois(self) -> list[GaloisClass]:
        if self._galois is None:
            self._galois = galois_classes(self.chars, self.params)
        return self._galois

    # -- individual checks ------------------------------------------------

    def check_counts(self) -> CheckResult:
        """Brute-force class count == closed-form count == #Irr(G), and
        sum(deg^2) = |G|."""
        params = self.params
        formula = complex_counts_closed_form(params)
        by_degree: dict[int, int] = {}
        for ch in self.chars:
            by_degree[ch.degree] = by_degree.get(ch.degree, 0) + 1
        ok = (
            by_degree == formula
            and len(self.conj_classes) == len(self.chars)
            and sum(d * d * c for d, c in by_degree.items()) == params.order
        )
        detail = f"classes={len(self.conj_classes)} chars={len(self.chars)}"
        return CheckResult("counts", ok, detail)

    def check_class_functions(self) -> CheckResult:
        """Characters are constant on brute-force conjugacy classes."""
        qb = self.params.p ** self.params.m
        for k in range(len(self.chars)):
            table = self.table(k)
            for cls in self.conj_classes:
                first = table[cls[0].i * qb + cls[0].j]
                for g in cls[1:]:
                    if table[g.i * qb + g.j] != first:
                        return CheckResult(
                            "class_functions", False, f"in class of {cls[0]}"
                        )
        return CheckResult(
            "class_functions", True,
            f"chars={len(self.chars)} classes={len(self.conj_classes)}",
        )

    def _pair_orthogonal(self, x: int, y: int) -> bool:
        params = self.params
        qc = params.p ** ambient_level(params)
        tx, ty = self.table(x), self.table(y)
        coeff = self.chars[x].degree * self.chars[y].degree
        acc = [0] * qc
        for g in range(len(tx)):
            e1 = tx[g]
            if e1 is None:
                continue
            e2 = ty[g]
            if e2 is None:
                continue
            acc[(e1 - e2) % qc] += coeff
        reduced = reduce_power_vector(params.p, ambient_level(params), acc)
        expected0 = params.order if x == y else 0
        if reduced[0] != expected0:
            return False
        return not any(reduced[1:])

    def check_orthogonality(
        self, *, all_pairs_bound: int = 243, sample_pairs: int = 100
    ) -> CheckResult:
        """First orthogonality, exactly: sum_g psi(g) conj(psi'(g)) is |G|
        on the diagonal and 0 off it. All pairs for |G| <= all_pairs_bound,
        else `sample_pairs` random pairs plus random diagonal entries."""
        count = len(self.chars)
        checked = 0
        if self.params.order <= all_pairs_bound:
            for x in range(count):
                for y in range(x, count):
                    if not self._pair_orthogonal(x, y):
                        return CheckResult(
                            "orthogonality", False, f"pair ({x}, {y})"
                        )
                    checked += 1
            return CheckResult("orthogonality", True, f"all pairs ({checked})")
        for _ in range(sample_pairs):
            x = self.rng.randrange(count)
            y = self.rng.randrange(count)
            if not self._pair_orthogonal(x, y):
                return CheckResult("orthogonality", False, f"pair ({x}, {y})")
            checked += 1
        for _ in range(5):
            x = self.rng.randrange(count)
            if not self._pair_orthogonal(x, x):
                return CheckResult("orthogonality", False, f"diagonal {x}")
            checked += 1
        return CheckResult("orthogonality", True, f"sampled pairs ({checked})")

    def check_galois_action(
        self, *, exhaustive_bound: int = 243, samples: int = 40
    ) -> CheckResult:
        """Parameter-level Galois action == value-level action: the image
        character's value at every g is sigma_alpha of the original value."""
        params = self.params
        qc = params.p ** ambient_level(params)
        units = [a for a in range(1, qc) if a % params.p]
        index = {ch: k for k, ch in enumerate(self.chars)}
        if params.order <= exhaustive_bound:
            work = [
                (k, alpha) for k in range(len(self.chars)) for alpha in units
            ]
        else:
            work = [
                (self.rng.randrange(len(self.chars)), self.rng.choice(units))
                for _ in range(samples)
            ]
        for k, alpha in work:
            image = sigma_on_character(self.chars[k], alpha, params)
            t_src = self.table(k)
            t_img = self.table(index[image])
            for g in range(len(t_src)):
                e = t_src[g]
                expected = None if e is None else (e * alpha) % qc
                if t_img[g] != expected:
                    return CheckResult(
                        "galois_action", False, f"char {k} alpha {alpha}"
                    )
        return CheckResult("galois_action", True, f"pairs checked={len(work)}")

    def check_matrix_relations(self) -> CheckResult:
        """For one sampled induced character per degree: the monomial
        matrices satisfy A^(p^n) = I, B^(p^m) = I, B A B^-1 = A^r, they
        agree entry-wise with `materialize_matrices`, and their traces match
        the character value on every group element."""
        params = self.params
        p, n, m = params.p, params.n, params.m
        level = ambient_level(params)
        qc = p ** level
        checked = []
        for t in range(1, params.s + 1):
            degree = p ** t
            pool = [ch for ch in self.chars if ch.degree == degree]
            ch = self.rng.choice(pool)
            a_mat, b_mat = monomial_generators(ch, params)
            d = degree
            ident = MonomialMatrix.identity(qc, d)
            if a_mat.pow(p ** n) != ident:
                return CheckResult("matrix_relations", False, f"A^(p^n) != I at t={t}")
            if b_mat.pow(p ** m) != ident:
                return CheckResult("matrix_relations", False, f"B^(p^m) != I at t={t}")
            if b_mat * a_mat * b_mat.inv() != a_mat.pow(params.r):
                return CheckResult("matrix_relations", False, f"B A B^-1 != A^r at t={t}")
            dense_a, dense_b = materialize_matrices(ch, params)
            if a_mat.to_dense(p, level) != dense_a or b_mat.to_dense(p, level) != dense_b:
                return CheckResult(
                    "matrix_relations", False, f"dense mismatch at t={t}"
                )
            if not self._traces_match(ch, a_mat, b_mat):
                return CheckResult("matrix_relations", False, f"trace mismatch at t={t}")
            checked.append(ch)
        return CheckResult(
            "matrix_relations", True, f"degrees checked={[c.degree for c in checked]}"
        )

    def _traces_match(
        self, ch: IrreducibleCharacter, a_mat: MonomialMatrix, b_mat: MonomialMatrix
    ) -> bool:
        params = self.params
        p, level = params.p, ambient_level(params)
        qc = p ** level
        qa, qb = p ** params.n, p ** params.m
        d = len(a_mat.perm)
        b_pows = [MonomialMatrix.identity(qc, d)]
        for _ in range(qb - 1):
            b_pows.append(b_pows[-1] * b_mat)
        a_exps = [0] * d
        for i in range(qa):
            if i:
                a_exps = [
                    (a_exps[c] + a_mat.exps[c]) % qc for c in range(d)
                ]
            for j in range(qb):
                expected = monomial_exponent(ch, i, j, params)
                bj = b_pows[j]
                if j % d:  # shift permutation: zero diagonal, zero trace
                    if expected is not None:
                        return False
                    continue
                vec = [0] * qc
                for c in range(d):
                    vec[(a_exps[c] + bj.exps[c]) % qc] += 1
                reduced = reduce_power_vector(p, level, vec)
                target = [0] * len(reduced)
                if expected is not None:
                    tvec = [0] * qc
                    tvec[expected] = ch.degree
                    target = reduce_power_vector(p, level, tvec)
                if reduced != target:
                    return False
        return True

    def check_value_function_agreement(self, samples: int = 50) -> CheckResult:
        """Monomial exponent tables agree with the CyclotomicElement value
        function on random elements (ties fast path to slow path)."""
        params = self.params
        qa, qb = params.p ** params.n, params.p ** params.m
        for _ in range(samples):
            k = self.rng.randrange(len(self.chars))
            i, j = self.rng.randrange(qa), self.rng.randrange(qb)
            ch = self.chars[k]
            slow = character_value(ch, GroupElement(i, j), params)
            fast = _monomial_as_element(params, ch.degree, self.table(k)[i * qb + j])
            if slow != fast:
                return CheckResult(
                    "value_agreement", False, f"char {k} at ({i}, {j})"
                )
        return CheckResult("value_agreement", True, f"samples={samples}")

    def check_rational_counts(self) -> CheckResult:
        """Closed-form per-degree rational counts == oracle class counts."""
        formula = rational_counts_closed_form(self.params)
        oracle = rational_counts_from_classes(self.galois, self.params)
        ok = formula.by_degree == oracle
        return CheckResult(
            "rational_counts", ok,
            f"degrees={sorted(oracle)}" if ok else f"{formula.by_degree} != {oracle}",
        )

    def check_decomposition(self) -> CheckResult:
        """Closed-form multiset == oracle multiset (the headline identity)."""
        result = cross_validate(self.params, bound=self.bound)
        return CheckResult(
            "decomposition", result.match, "; ".join(result.diff)
        )

    def run_all(self) -> list[CheckResult]:
        return [
            self.check_counts(),
            self.check_class_functions(),
            self.check_orthogonality(),
            self.check_galois_action(),
            self.check_matrix_relations(),
            self.check_value_function_agreement(),
            self.check_rational_counts(),
            self.check_decomposition(),
        ]
