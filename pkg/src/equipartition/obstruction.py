"""Generating classes, stabilizers and obstruction classes for two hyperplanes.

``2d - 3j = 1`` (``n = (j + 1) / 2``): the circles of the solution manifold are
grouped into D8-orbits (generating classes).  For one chosen component of each
class we compute its stabilizer, the monodromy (the stabilizer element acting
as the minimal positive rotation) and, for two-component classes, the
orientation sign ``epsilon`` and Jacobian sign ``eta``.  Contributions:

* ``n`` even, trivial coefficients: the abelianized monodromy in ``Z/2 + Z/2``;
* ``n`` odd, twisted coefficients (``Z/4``): 8 components give 0, 4 components
  give ``X_ab``, 2 components give ``+X_ca`` if ``epsilon * eta = +1`` and
  ``-X_ca`` otherwise.  The total is ``Omega * X_ca`` with
  ``Omega = alpha + 2 beta - gamma``.

``2d - 3j = 0`` (``j = 2m``): the obstruction is the parity of the number of
D8-orbits on sign vectors times balanced {a,b}-words.

A vanishing obstruction is never reported as non-admissibility.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from math import comb

from .dynamics import (
    MAX_J,
    Circle,
    SignedWord,
    SolutionState,
    act,
    check_j,
    enumerate_circles,
)
from .group import (
    ELEMENTS,
    GAMMA,
    ALPHA,
    X_AB,
    X_CA,
    Coefficients,
    DihedralElement,
    HomologyClass,
    Subgroup,
    abelianized_class,
    compose,
)
from .errors import InconsistencyError
from .jacobian import eta as jacobian_eta
from .words import conjugate, count_star_primitive, divisors

__all__ = [
    "Case",
    "GeneratingClass",
    "ObstructionResult",
    "EPSILON_CONVENTIONS",
    "generating_classes",
    "epsilon_sign",
    "obstruction_delta1",
    "obstruction_delta0",
    "closed_form_z2z2",
    "delta0_types",
    "convention_sign_map",
]

GAMMA_ALPHA = compose(GAMMA, ALPHA)

# "quarter": +1 iff gamma o alpha advances the chosen circle by L/4 steps
EPSILON_CONVENTIONS = ("quarter", "three-quarter")


class Case(Enum):
    DELTA0 = "Delta0"
    DELTA1_TRIVIAL = "Delta1-TrivialZ"
    DELTA1_TWISTED = "Delta1-TwistedZ"


@dataclass
class GeneratingClass:
    circles: list[Circle]
    canonical: SignedWord
    base_state: SolutionState
    component: Circle
    stabilizer: Subgroup
    monodromy: DihedralElement
    epsilon: int | None = None
    eta: int | None = None
    contribution: HomologyClass | None = None

    @property
    def components(self) -> int:
        return len(self.circles)

    @property
    def length(self) -> int:
        return self.component.length

    def to_dict(self) -> dict:
        return {
            "canonical": self.canonical.word,
            "signs": self.canonical.signs,
            "components": self.components,
            "circle_length": self.length,
            "stabilizer": self.stabilizer.names(),
            "monodromy": self.monodromy.name,
            "epsilon": self.epsilon,
            "eta": self.eta,
            "contribution": self.contribution.token if self.contribution is not None else None,
            "compressed": [str(w) for w in self.component.compressed_from(self.canonical)],
        }


@dataclass
class ObstructionResult:
    case: Case
    d: int
    j: int
    classes: list[GeneratingClass]
    total: HomologyClass | int
    admissible: bool
    counters: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "admissible" if self.admissible else "no conclusion"

    def to_dict(self) -> dict:
        total = self.total.token if isinstance(self.total, HomologyClass) else self.total
        return {
            "case": self.case.value,
            "d": self.d,
            "j": self.j,
            "k": 2,
            "classes": [c.to_dict() for c in self.classes],
            "counters": dict(self.counters),
            "total": total,
            "admissible": self.admissible,
            "verdict": self.verdict,
            "notes": list(self.notes),
        }


def _base_state(canonical: SignedWord) -> SolutionState:
    w = canonical.word
    return SolutionState(w[0], 0, canonical.signs, w[1:].lower())


def _sampled_state(canonical: SignedWord) -> SolutionState:
    w = canonical.word
    return SolutionState(w[-1], len(w) - 1, canonical.signs, w[:-1].lower())


def epsilon_sign(
    component: Circle, base: SolutionState, convention: str = "quarter"
) -> int:
    """Orientation sign of a two-component class.

    ``base`` is the position-0 state realising the canonical signed word and
    ``component`` its circle, oriented by ``step``.  Under the ``quarter``
    convention the sign is +1 iff gamma o alpha moves ``base`` forward by a
    quarter of the circle.
    """
    if convention not in EPSILON_CONVENTIONS:
        raise ValueError(f"unknown epsilon convention {convention!r}")
    length = component.length
    image = act(GAMMA_ALPHA, base)
    if image not in component:
        raise InconsistencyError(f"gamma o alpha does not preserve the circle through {base}")
    t = (component.index[image] - component.index[base]) % length
    if 4 * t == length:
        quarter = True
    elif 4 * t == 3 * length:
        quarter = False
    else:
        raise InconsistencyError(f"gamma o alpha rotates by {t}/{length}, not a quarter turn")
    return 1 if quarter == (convention == "quarter") else -1


def generating_classes(
    j: int,
    *,
    epsilon_convention: str = "quarter",
    row_order: str = "standard",
    bound: int | None = MAX_J,
) -> list[GeneratingClass]:
    """D8-orbits of circles for ``j`` intervals, sorted by canonical word.

    Contributions are filled in according to the coefficient module selected by
    the parity of ``n = (j + 1) / 2``.
    """
    n = check_j(j, bound)
    twisted = n % 2 == 1
    circles = enumerate_circles(j, bound)
    owner: dict[SolutionState, int] = {}
    for i, c in enumerate(circles):
        for s in c.states:
            owner[s] = i

    assigned: set[int] = set()
    classes = []
    for i, c in enumerate(circles):
        if i in assigned:
            continue
        members = sorted({owner[act(g, c.states[0])] for g in ELEMENTS})
        assigned.update(members)
        member_circles = [circles[k] for k in members]

        # every word of the class occurs with every sign vector, so the
        # canonical signed word is the least word with signs (++)
        word = min(w.word for m in member_circles for w in m.compressed())
        canonical = SignedWord(word, "++")
        base = _base_state(canonical)
        sampled = _sampled_state(canonical)
        for s in (base, sampled):
            if owner.get(s) not in members:
                raise InconsistencyError(f"state {s} missing from class {word}")
        # the reported component is the circle whose compressed cycle holds
        # the canonical signed word
        component = circles[owner[sampled]]

        stab = frozenset(g for g in ELEMENTS if act(g, sampled) in component)
        stabilizer = Subgroup(stab)
        if len(member_circles) * stabilizer.order != 8:
            raise InconsistencyError(f"orbit-stabilizer fails for class {word}")
        if component.length % stabilizer.order:
            raise InconsistencyError(f"stabilizer of {word} does not act by rotations")
        shift = component.length // stabilizer.order
        target = component.states[(component.index[sampled] + shift) % component.length]
        monodromy = next(g for g in stab if act(g, sampled) == target)

        gc = GeneratingClass(member_circles, canonical, base, component, stabilizer, monodromy)
        if stabilizer.order == 4:
            gc.epsilon = epsilon_sign(circles[owner[base]], base, epsilon_convention)
            # same sign read on the reported component, oriented by the letter
            # rotation (first letter to the end), which runs against step
            if epsilon_sign(component, sampled, epsilon_convention) != -gc.epsilon:
                raise InconsistencyError(f"epsilon of {word} depends on the reading")
            gc.eta = jacobian_eta(canonical, row_order)

        if not twisted:
            gc.contribution = abelianized_class(monodromy)
        elif gc.components == 8:
            gc.contribution = HomologyClass.zero(Coefficients.TWISTED)
        elif gc.components == 4:
            gc.contribution = X_AB
        elif gc.components == 2:
            gc.contribution = X_CA if gc.epsilon * gc.eta == 1 else -X_CA  # type: ignore[operator]
        else:
            raise InconsistencyError(f"class {word} has {gc.components} components")
        classes.append(gc)

    classes.sort(key=lambda g: g.canonical.word)
    return classes


def closed_form_z2z2(m: int) -> tuple[int, int]:
    """``(O1, O2)``: parities of ``sum A(k)`` over odd, resp. even, ``k | 2m``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    o1 = o2 = 0
    for k in divisors(2 * m):
        if k % 2:
            o1 += count_star_primitive(k)
        else:
            o2 += count_star_primitive(k)
    return o1 % 2, o2 % 2


def obstruction_delta1(
    j: int,
    d: int | None = None,
    *,
    epsilon_convention: str = "quarter",
    row_order: str = "standard",
    bound: int | None = MAX_J,
) -> ObstructionResult:
    n = check_j(j, bound)
    expected_d = (3 * j + 1) // 2
    if d is not None and d != expected_d:
        raise ValueError(f"(d, j) = ({d}, {j}) does not satisfy 2d - 3j = 1")
    classes = generating_classes(
        j, epsilon_convention=epsilon_convention, row_order=row_order, bound=bound
    )
    twisted = n % 2 == 1
    coeffs = Coefficients.TWISTED if twisted else Coefficients.TRIVIAL
    total = HomologyClass.zero(coeffs)
    for gc in classes:
        total = total + gc.contribution  # type: ignore[operator]

    counters: dict[str, int] = {"n": n, "classes": len(classes)}
    notes: list[str] = []
    if twisted:
        two = [g for g in classes if g.components == 2]
        alpha = sum(1 for g in two if g.epsilon == g.eta)
        gamma = len(two) - alpha
        beta = sum(1 for g in classes if g.components == 4)
        omega = alpha + 2 * beta - gamma
        if HomologyClass(coeffs, omega) != total:
            raise InconsistencyError("total class disagrees with Omega * X_ca")
        counters.update(alpha=alpha, beta=beta, gamma=gamma, omega=omega, omega_mod4=omega % 4)
        if (j - 1) % 4 == 0:
            counters["m"] = (j - 1) // 4
        case = Case.DELTA1_TWISTED
    else:
        c_y, c_z = total.yz_coordinates()
        o1, o2 = closed_form_z2z2(n // 2)
        counters.update(
            y_coordinate=c_y,
            z_coordinate=c_z,
            m=n // 2,
            O1=o1,
            O2=o2,
        )
        if sorted((c_y, c_z)) != sorted((o1, o2)):
            notes.append("direct Y/Z coordinates differ from the *-primitive closed form")
        case = Case.DELTA1_TRIVIAL
        if j == 3:
            abab = next(g for g in classes if g.canonical.word == "ABAB")
            notes.append(
                f"ABAB class: stabilizer {abab.stabilizer} is cyclic of order 4 "
                f"(monodromy {abab.monodromy}, contributes {abab.contribution}); "
                "an order-2 stabilizer (ab) would contribute 0 and leave the verdict unchanged"
            )
    return ObstructionResult(case, expected_d, j, classes, total, bool(total), counters, notes)


def convention_sign_map(payload: dict, flip_epsilon: bool, flip_eta: bool) -> dict:
    """Predict a serialized Delta=1 result under flipped sign conventions.

    Flipping the epsilon convention negates every epsilon; flipping the row
    order of the Jacobian negates every eta (``j`` row transpositions, ``j``
    odd).  In the twisted case each two-component contribution follows the
    product, so exactly one flip exchanges alpha and gamma and negates the
    total in ``Z/4``.  Trivial-coefficient contributions are unaffected.
    """
    out = json.loads(json.dumps(payload))
    if out["case"] == Case.DELTA0.value:
        return out
    for cls in out["classes"]:
        if cls["epsilon"] is not None and flip_epsilon:
            cls["epsilon"] = -cls["epsilon"]
        if cls["eta"] is not None and flip_eta:
            cls["eta"] = -cls["eta"]
    if out["case"] == Case.DELTA1_TWISTED.value and flip_epsilon != flip_eta:
        for cls in out["classes"]:
            if cls["components"] == 2:
                cls["contribution"] = "-Xca" if cls["contribution"] == "+Xca" else "+Xca"
        c = out["counters"]
        c["alpha"], c["gamma"] = c["gamma"], c["alpha"]
        c["omega"] = c["alpha"] + 2 * c["beta"] - c["gamma"]
        c["omega_mod4"] = c["omega"] % 4
        out["total"] = HomologyClass(Coefficients.TWISTED, c["omega"]).token
    return out


def delta0_types(m: int) -> list[tuple[str, str]]:
    """All (signs, word) types: sign vectors times balanced {a,b}-words of length 2m."""
    words = []
    for positions in combinations(range(2 * m), m):
        w = ["b"] * (2 * m)
        for p in positions:
            w[p] = "a"
        words.append("".join(w))
    return [(e1 + e2, w) for e1, e2 in product("+-", repeat=2) for w in words]


def _act_type(g: DihedralElement, t: tuple[str, str]) -> tuple[str, str]:
    signs, w = t
    e1, e2 = signs
    if g.flip1:
        e1 = "-" if e1 == "+" else "+"
    if g.flip2:
        e2 = "-" if e2 == "+" else "+"
    if g.swap:
        return e2 + e1, conjugate(w)
    return e1 + e2, w


DELTA0_BOUND = 8


def obstruction_delta0(m: int, *, bound: int | None = DELTA0_BOUND) -> ObstructionResult:
    """Orbit parity for ``(d, j) = (3m, 2m)``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if bound is not None and m > bound:
        raise ValueError(f"m={m} exceeds the enumeration bound {bound}")
    seen: set[tuple[str, str]] = set()
    orbits = 0
    for t in delta0_types(m):
        if t in seen:
            continue
        orbits += 1
        seen.update(_act_type(g, t) for g in ELEMENTS)
    closed = comb(2 * m - 1, m - 1)
    if closed != orbits:
        raise InconsistencyError(f"orbit count {orbits} != C(2m-1, m-1) = {closed}")
    parity = orbits % 2
    power_of_two = m & (m - 1) == 0
    notes = [
        "odd orbit count occurs exactly for m a power of two "
        f"(m={m}: {'power of two' if power_of_two else 'not a power of two'})",
        "the alternative reading m = 2^q - 1 "
        f"({'holds' if (m + 1) & m == 0 else 'does not hold'} for m={m}) is not used for the verdict",
    ]
    return ObstructionResult(
        Case.DELTA0,
        3 * m,
        2 * m,
        [],
        parity,
        parity == 1,
        {"m": m, "orbits": orbits, "parity": parity, "closed_form": closed},
        notes,
    )
