"""Voting-system models and Banzhaf / Public Good Index computation.

Systems are conjunctions of chambers over disjoint voter blocks; a plain
quota-and-weights system is the one-chamber case.  Total Banzhaf power is
computed by several independent routes (Boolean derivative, quotient
formulas on the decision function or its complement, closed forms for
k-out-of-n chambers, subset-sum dynamic programming, and the brute-force
oracle), which must agree exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle as oracle_mod
from .boolean_core import (
    Literal,
    Product,
    SopForm,
    conjoin_literal,
    make_disjoint,
    restrict,
    weight_disjoint,
)
from .boolean_core import derivative_weight as _sop_derivative_weight
from .combinatorics import binom, cum_binom
from .errors import (
    DomainError,
    ResourceLimitError,
    UnsupportedMethodError,
    ValidationError,
)
from .symmetric import SymFunction, kofn_success

MWC_CAP = 10**6

METHODS = (
    "derivative",
    "quotient_pos",
    "quotient_neg",
    "quotient_diff",
    "complement",
    "closed_form",
    "oracle",
    "auto",
)


@dataclass(frozen=True)
class ScalarWeightedSystem:
    """A (quota; weights) system with positive integer weights."""

    quota: int
    weights: tuple[int, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        weights = tuple(self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise ValidationError("at least one voter required")
        if any(not isinstance(w, int) or w <= 0 for w in weights):
            raise ValidationError(f"weights must be positive integers, got {list(weights)}")
        if not isinstance(self.quota, int) or self.quota < 1:
            raise ValidationError(f"quota must be a positive integer, got {self.quota}")
        if self.quota > sum(weights):
            raise ValidationError(
                f"quota {self.quota} exceeds total weight {sum(weights)}"
            )
        labels = tuple(self.labels) or tuple(f"X{i + 1}" for i in range(len(weights)))
        if len(labels) != len(weights):
            raise ValidationError("labels and weights differ in length")
        if len(set(labels)) != len(labels):
            raise ValidationError("duplicate voter labels")
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def prudent(self) -> bool:
        """Quota strictly above half the total weight (warning-level only)."""
        return 2 * self.quota > sum(self.weights)

    def evaluate(self, bits: int) -> bool:
        total = 0
        for i, w in enumerate(self.weights):
            if bits >> i & 1:
                total += w
        return total >= self.quota


@dataclass(frozen=True)
class Chamber:
    """One conjunct of a chamber system: either weighted or k-out-of-n."""

    labels: tuple[str, ...]
    quota: int | None = None
    weights: tuple[int, ...] | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(self.weights))
        weighted = self.weights is not None or self.quota is not None
        k_of_n = self.k is not None
        if weighted == k_of_n:
            raise ValidationError("chamber must be weighted or k-out-of-n, not both")
        if weighted:
            # delegate validation (positivity, quota range, label uniqueness)
            ScalarWeightedSystem(self.quota, self.weights, self.labels)
        else:
            if not 0 <= self.k <= self.n:
                raise ValidationError(f"k={self.k} outside 0..{self.n}")
            if len(set(self.labels)) != len(self.labels):
                raise ValidationError("duplicate voter labels")

    @classmethod
    def weighted(cls, labels, quota: int, weights) -> "Chamber":
        return cls(labels=tuple(labels), quota=quota, weights=tuple(weights))

    @classmethod
    def k_of_n(cls, labels, k: int) -> "Chamber":
        return cls(labels=tuple(labels), k=k)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def is_k_of_n(self) -> bool:
        return self.k is not None

    def as_scalar(self) -> ScalarWeightedSystem:
        if self.is_k_of_n:
            if self.k < 1:
                raise DomainError("constant-true chamber has no scalar form")
            return ScalarWeightedSystem(self.k, (1,) * self.n, self.labels)
        return ScalarWeightedSystem(self.quota, self.weights, self.labels)

    def as_kofn(self) -> tuple[int, int] | None:
        """Reduce to (k, n) when possible: native, equal weights, or unanimity."""
        if self.is_k_of_n:
            return self.k, self.n
        total = sum(self.weights)
        if self.quota == total:
            return self.n, self.n
        if len(set(self.weights)) == 1:
            w = self.weights[0]
            return -(-self.quota // w), self.n
        return None

    @property
    def prudent(self) -> bool:
        if self.is_k_of_n:
            return 2 * self.k > self.n
        return 2 * self.quota > sum(self.weights)

    def evaluate(self, bits: int) -> bool:
        """Decision on a chamber-local assignment bitmask."""
        if self.is_k_of_n:
            return bits.bit_count() >= self.k
        return self.as_scalar().evaluate(bits)

    def weight(self) -> int:
        """Number of winning local assignments."""
        if self.is_k_of_n:
            return cum_binom(self.n, self.k)
        return _dp_winning_count(self.weights, self.quota)

    def symmetric_blocks(self) -> list[list[int]]:
        """Local voter indices grouped so each group provably shares one TBP."""
        if self.is_k_of_n:
            return [list(range(self.n))]
        groups: dict[int, list[int]] = {}
        for i, w in enumerate(self.weights):
            groups.setdefault(w, []).append(i)
        return [groups[w] for w in sorted(groups, reverse=True)]

    def mwc_products(self, cap: int = MWC_CAP) -> list[Product]:
        """Prime implicants of the chamber decision (local variable indices)."""
        if self.is_k_of_n:
            if self.k <= 0:
                return [Product()]
            if binom(self.n, self.k) > cap:
                raise ResourceLimitError(
                    f"{binom(self.n, self.k)} minimal winning coalitions exceed cap {cap}"
                )
            return [
                Product(Literal(v) for v in combo)
                for combo in itertools.combinations(range(self.n), self.k)
            ]
        return list(build_mwc_sop(self.as_scalar(), cap=cap).products)

    def mlc_products(self, cap: int = MWC_CAP) -> list[Product]:
        """Prime implicants of the chamber complement (complemented literals)."""
        if self.is_k_of_n:
            absent = self.n - self.k + 1
            if self.k <= 0:
                return []
            if binom(self.n, absent) > cap:
                raise ResourceLimitError(
                    f"{binom(self.n, absent)} maximal losing coalitions exceed cap {cap}"
                )
            return [
                Product(Literal(v, positive=False) for v in combo)
                for combo in itertools.combinations(range(self.n), absent)
            ]
        return list(build_mlc_sop(self.as_scalar(), cap=cap).products)


@dataclass(frozen=True)
class ChamberSystem:
    """Conjunction of chambers over disjoint voter blocks."""

    chambers: tuple[Chamber, ...]
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "chambers", tuple(self.chambers))
        if not self.chambers:
            raise ValidationError("at least one chamber required")
        labels = [lab for ch in self.chambers for lab in ch.labels]
        if len(set(labels)) != len(labels):
            raise ValidationError("duplicate voter labels across chambers")

    @classmethod
    def from_scalar(cls, sys: ScalarWeightedSystem, name: str = "") -> "ChamberSystem":
        return cls((Chamber.weighted(sys.labels, sys.quota, sys.weights),), name=name)

    @property
    def total_n(self) -> int:
        return sum(ch.n for ch in self.chambers)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for ch in self.chambers for lab in ch.labels)

    @property
    def offsets(self) -> tuple[int, ...]:
        offs = []
        pos = 0
        for ch in self.chambers:
            offs.append(pos)
            pos += ch.n
        return tuple(offs)

    @property
    def dimension_bound(self) -> int:
        return len(self.chambers)

    def evaluate(self, bits: int) -> bool:
        for ch, off in zip(self.chambers, self.offsets):
            local = (bits >> off) & ((1 << ch.n) - 1)
            if not ch.evaluate(local):
                return False
        return True

    def warnings(self) -> list[str]:
        out = []
        for idx, ch in enumerate(self.chambers):
            if not ch.prudent:
                out.append(
                    f"chamber {idx + 1} quota is not strictly above half the total weight"
                )
        return out


@dataclass
class VoterPower:
    label: str
    tbp: int
    ntbp: Fraction
    dummy: bool
    pgi: int | None = None
    cpgi: int | None = None


@dataclass
class PowerReport:
    system_name: str
    method: str
    voters: list[VoterPower]
    total_tbp: int
    warnings: list[str] = field(default_factory=list)

    @property
    def tbp_vector(self) -> list[int]:
        return [v.tbp for v in self.voters]

    @property
    def ntbp_vector(self) -> list[Fraction]:
        return [v.ntbp for v in self.voters]


# ---------------------------------------------------------------------------
# Prime implicant enumeration


def build_mwc_sop(sys: ScalarWeightedSystem, cap: int = MWC_CAP) -> SopForm:
    """All minimal winning coalitions as a positive-unate sum of products.

    Branch and bound over weight-sorted voters; a branch is cut as soon as it
    wins (supersets are non-minimal) or cannot reach the quota.  Products are
    returned in canonical (cardinality, lexicographic index) order.
    """
    n, quota, weights = sys.n, sys.quota, sys.weights
    order = sorted(range(n), key=lambda i: (-weights[i], i))
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[order[i]]
    found: list[tuple[int, ...]] = []

    def descend(idx: int, chosen: list[int], total: int) -> None:
        if total >= quota:
            # voters were added in non-increasing weight, so the lightest
            # member is the last; minimality needs even it to be necessary
            if total - weights[chosen[-1]] < quota:
                if len(found) >= cap:
                    raise ResourceLimitError(
                        f"more than {cap} minimal winning coalitions; "
                        "use the symmetric or dynamic-programming routes"
                    )
                found.append(tuple(sorted(chosen)))
            return
        if idx == n or total + suffix[idx] < quota:
            return
        chosen.append(order[idx])
        descend(idx + 1, chosen, total + weights[order[idx]])
        chosen.pop()
        descend(idx + 1, chosen, total)

    descend(0, [], 0)
    found.sort(key=lambda s: (len(s), s))
    products = tuple(Product(Literal(v) for v in s) for s in found)
    return SopForm(n, products)


def build_mlc_sop(sys: ScalarWeightedSystem, cap: int = MWC_CAP) -> SopForm:
    """Prime implicants of the complement as products of complemented literals.

    A maximal losing coalition leaves out a minimal blocking set of voters;
    blocking sets are the minimal winning coalitions of the system with the
    complemented threshold (total - quota + 1).
    """
    mirrored = ScalarWeightedSystem(
        sum(sys.weights) - sys.quota + 1, sys.weights, sys.labels
    )
    positive = build_mwc_sop(mirrored, cap=cap)
    products = tuple(
        Product(Literal(lit.var, positive=False) for lit in p.literals())
        for p in positive.products
    )
    return SopForm(sys.n, products)


def _canonical_sort(products: list[Product]) -> tuple[Product, ...]:
    return tuple(
        sorted(products, key=lambda p: (p.literal_count, sorted(v.var for v in p.literals())))
    )


def mwc_sop(system: ChamberSystem, cap: int = MWC_CAP) -> SopForm:
    """Materialized prime implicants of the whole conjunction.

    With disjoint voter blocks these are exactly the cross products of the
    per-chamber minimal winning coalitions.
    """
    per_chamber = []
    count = 1
    for ch in system.chambers:
        prods = ch.mwc_products(cap=cap)
        count *= max(len(prods), 1)
        if count > cap:
            raise ResourceLimitError(f"more than {cap} minimal winning coalitions")
        per_chamber.append(prods)
    offsets = system.offsets
    combined = []
    for combo in itertools.product(*per_chamber):
        pos = neg = 0
        for prod, off in zip(combo, offsets):
            pos |= prod.pos << off
            neg |= prod.neg << off
        combined.append(Product.from_masks(pos, neg))
    return SopForm(system.total_n, _canonical_sort(combined))


def mlc_sop(system: ChamberSystem, cap: int = MWC_CAP) -> SopForm:
    """Materialized prime implicants of the complement.

    The complement of a conjunction over disjoint blocks is the disjunction
    of the chamber complements, so its prime implicants are the union of the
    per-chamber ones.
    """
    combined = []
    for ch, off in zip(system.chambers, system.offsets):
        for prod in ch.mlc_products(cap=cap):
            combined.append(Product.from_masks(prod.pos << off, prod.neg << off))
            if len(combined) > cap:
                raise ResourceLimitError(f"more than {cap} maximal losing coalitions")
    return SopForm(system.total_n, _canonical_sort(combined))


def decision_function(system: ChamberSystem) -> list[SymFunction | SopForm]:
    """Factored representation: one symmetric function or SOP per chamber,
    each over its chamber-local universe."""
    out: list[SymFunction | SopForm] = []
    for ch in system.chambers:
        if ch.is_k_of_n:
            out.append(kofn_success(ch.k, ch.n))
        else:
            out.append(build_mwc_sop(ch.as_scalar()))
    return out


# ---------------------------------------------------------------------------
# Subset-sum dynamic programming (internal route for large scalar chambers)


def _dp_sum_counts(weights: tuple[int, ...]) -> list[int]:
    counts = [0] * (sum(weights) + 1)
    counts[0] = 1
    top = 0
    for w in weights:
        top += w
        for s in range(top, w - 1, -1):
            counts[s] += counts[s - w]
    return counts


def _dp_winning_count(weights: tuple[int, ...], quota: int) -> int:
    counts = _dp_sum_counts(weights)
    return sum(counts[quota:])


def _dp_swing_count(weights: tuple[int, ...], quota: int, m: int) -> int:
    others = weights[:m] + weights[m + 1 :]
    counts = _dp_sum_counts(others) if others else [1]
    lo = max(quota - weights[m], 0)
    hi = min(quota - 1, len(counts) - 1)
    return sum(counts[lo : hi + 1])


# ---------------------------------------------------------------------------
# Total Banzhaf power


def chamber_closed_form_tbp(system: ChamberSystem, chamber_index: int) -> int:
    """TBP of any member of the indexed chamber when every chamber reduces to
    k-out-of-n: c(n_i - 1, k_i - 1) times the product of the other chambers'
    cumulative binomial weights."""
    reduced = []
    for ch in system.chambers:
        kn = ch.as_kofn()
        if kn is None:
            raise UnsupportedMethodError(
                "closed form needs every chamber to reduce to k-out-of-n"
            )
        reduced.append(kn)
    if not 0 <= chamber_index < len(reduced):
        raise DomainError(f"chamber index {chamber_index} out of range")
    k_i, n_i = reduced[chamber_index]
    tbp = binom(n_i - 1, k_i - 1)
    for j, (k_j, n_j) in enumerate(reduced):
        if j != chamber_index:
            tbp *= cum_binom(n_j, k_j)
    return tbp


def _fan_out(system: ChamberSystem, per_chamber_fn) -> list[int]:
    """Build the global TBP vector, computing one representative per
    symmetric block and copying across the block."""
    vector: list[int] = []
    for ci, ch in enumerate(system.chambers):
        values = [0] * ch.n
        for block in ch.symmetric_blocks():
            v = per_chamber_fn(ci, ch, block[0])
            for i in block:
                values[i] = v
        vector.extend(values)
    return vector


def _tbp_sop_route(system: ChamberSystem, method: str, mwc_cap: int) -> list[int]:
    fd = make_disjoint(mwc_sop(system, cap=mwc_cap))
    wt_f = weight_disjoint(fd)

    def one(ci: int, ch: Chamber, local: int) -> int:
        m = system.offsets[ci] + local
        if method == "derivative":
            return _sop_derivative_weight(fd, m)
        if method == "quotient_pos":
            hi = weight_disjoint(conjoin_literal(restrict(fd, m, 1), m, True))
            return 2 * hi - wt_f
        if method == "quotient_neg":
            lo = weight_disjoint(conjoin_literal(restrict(fd, m, 0), m, False))
            return wt_f - 2 * lo
        hi = weight_disjoint(conjoin_literal(restrict(fd, m, 1), m, True))
        lo = weight_disjoint(conjoin_literal(restrict(fd, m, 0), m, False))
        return hi - lo

    return _fan_out(system, one)


def _tbp_complement_route(system: ChamberSystem, mwc_cap: int) -> list[int]:
    gd = make_disjoint(mlc_sop(system, cap=mwc_cap))
    wt_g = weight_disjoint(gd)

    def one(ci: int, ch: Chamber, local: int) -> int:
        m = system.offsets[ci] + local
        hi = weight_disjoint(conjoin_literal(restrict(gd, m, 1), m, True))
        return wt_g - 2 * hi

    return _fan_out(system, one)


def _tbp_oracle_route(system: ChamberSystem, oracle_cap: int) -> list[int]:
    n = system.total_n

    def one(ci: int, ch: Chamber, local: int) -> int:
        return oracle_mod.oracle_tbp(
            system.evaluate, n, system.offsets[ci] + local, cap=oracle_cap
        )

    return _fan_out(system, one)


def _tbp_closed_form(system: ChamberSystem) -> list[int]:
    per = [chamber_closed_form_tbp(system, i) for i in range(len(system.chambers))]
    return [per[ci] for ci, ch in enumerate(system.chambers) for _ in range(ch.n)]


def _tbp_dp_route(system: ChamberSystem) -> list[int]:
    chamber_weights = [ch.weight() for ch in system.chambers]

    def one(ci: int, ch: Chamber, local: int) -> int:
        if ch.is_k_of_n:
            swing = binom(ch.n - 1, ch.k - 1) if ch.k >= 1 else 0
        else:
            swing = _dp_swing_count(ch.weights, ch.quota, local)
        for j, w in enumerate(chamber_weights):
            if j != ci:
                swing *= w
        return swing

    return _fan_out(system, one)


def tbp_vector(
    system: ChamberSystem,
    method: str = "auto",
    *,
    oracle_cap: int = oracle_mod.DEFAULT_ORACLE_CAP,
    mwc_cap: int = MWC_CAP,
) -> tuple[list[int], str]:
    """Raw per-voter Banzhaf counts and the method actually used."""
    if method not in METHODS:
        raise UnsupportedMethodError(f"unknown method {method!r}")
    if method == "auto":
        try:
            return _tbp_closed_form(system), "closed_form"
        except UnsupportedMethodError:
            pass
        try:
            return _tbp_sop_route(system, "quotient_pos", mwc_cap), "quotient_pos"
        except ResourceLimitError:
            return _tbp_dp_route(system), "dp"
    if method == "closed_form":
        return _tbp_closed_form(system), method
    if method == "oracle":
        return _tbp_oracle_route(system, oracle_cap), method
    if method == "complement":
        return _tbp_complement_route(system, mwc_cap), method
    return _tbp_sop_route(system, method, mwc_cap), method


def tbp_report(
    system: ChamberSystem,
    method: str = "auto",
    *,
    oracle_cap: int = oracle_mod.DEFAULT_ORACLE_CAP,
    mwc_cap: int = MWC_CAP,
    with_pgi: bool = False,
) -> PowerReport:
    """Full power report: TBP, exact normalized TBP, dummy flags, and
    optionally the Public Good Index counts."""
    vector, used = tbp_vector(system, method, oracle_cap=oracle_cap, mwc_cap=mwc_cap)
    total = sum(vector)
    pgi = cpgi = None
    if with_pgi:
        pgi, cpgi = pgi_cpgi(system, cap=mwc_cap)
    voters = []
    for i, label in enumerate(system.labels):
        ntbp = Fraction(vector[i], total) if total else Fraction(0)
        voters.append(
            VoterPower(
                label=label,
                tbp=vector[i],
                ntbp=ntbp,
                dummy=vector[i] == 0,
                pgi=pgi[i] if pgi else None,
                cpgi=cpgi[i] if cpgi else None,
            )
        )
    return PowerReport(
        system_name=system.name,
        method=used,
        voters=voters,
        total_tbp=total,
        warnings=system.warnings(),
    )


# ---------------------------------------------------------------------------
# Public Good Index


def pgi_cpgi(system: ChamberSystem, cap: int = MWC_CAP) -> tuple[list[int], list[int]]:
    """Per-voter counts of minimal winning coalitions containing the voter and
    of maximal-losing-coalition products naming the voter's absence."""
    n = system.total_n
    winning = mwc_sop(system, cap=cap)
    losing = mlc_sop(system, cap=cap)
    pgi = [0] * n
    cpgi = [0] * n
    for p in winning.products:
        for v in range(n):
            if p.pos >> v & 1:
                pgi[v] += 1
    for p in losing.products:
        for v in range(n):
            if p.neg >> v & 1:
                cpgi[v] += 1
    return pgi, cpgi


# ---------------------------------------------------------------------------
# Structural checks and constructions


def swap_robust_check(
    system: ChamberSystem, cap: int = oracle_mod.DEFAULT_ORACLE_CAP
) -> tuple[bool, dict | None]:
    """Search all pairs of winning coalitions for a one-for-one voter exchange
    that leaves both results losing.  Returns (verdict, witness)."""
    n = system.total_n
    if n > cap:
        raise ResourceLimitError(f"{n} voters exceeds cap {cap}")
    labels = system.labels
    winning = [bits for bits in range(1 << n) if system.evaluate(bits)]
    win_set = set(winning)
    for i1, c1 in enumerate(winning):
        for c2 in winning[i1 + 1 :]:
            a_mask = c1 & ~c2
            while a_mask:
                a = a_mask & -a_mask
                b_mask = c2 & ~c1
                while b_mask:
                    b = b_mask & -b_mask
                    c1_new = (c1 & ~a) | b
                    c2_new = (c2 & ~b) | a
                    if c1_new not in win_set and c2_new not in win_set:
                        return False, {
                            "coalition1": _label_set(c1, labels),
                            "coalition2": _label_set(c2, labels),
                            "swap_out": labels[a.bit_length() - 1],
                            "swap_in": labels[b.bit_length() - 1],
                        }
                    b_mask ^= b
                a_mask ^= a
    return True, None


def _label_set(bits: int, labels: tuple[str, ...]) -> list[str]:
    return [labels[i] for i in range(len(labels)) if bits >> i & 1]


def veto_equivalent_scalar(
    vetoer_count: int,
    k: int,
    n: int,
    labels: tuple[str, ...] | None = None,
) -> ScalarWeightedSystem:
    """Scalar system equivalent to (unanimity of p vetoers) AND (k-of-n others).

    Each vetoer gets weight n - k + 1 so that all of them plus k others are
    needed; everyone else keeps weight 1.
    """
    if vetoer_count < 0:
        raise DomainError("vetoer count must be nonnegative")
    if not 0 <= k <= n:
        raise DomainError(f"k={k} outside 0..{n}")
    if vetoer_count == 0 and k == 0:
        raise DomainError("always-true system has no scalar form")
    w = n - k + 1
    quota = vetoer_count * w + k
    weights = (w,) * vetoer_count + (1,) * n
    if labels is None:
        labels = tuple(f"P{i + 1}" for i in range(vetoer_count)) + tuple(
            f"N{j + 1}" for j in range(n)
        )
    return ScalarWeightedSystem(quota, weights, labels)
