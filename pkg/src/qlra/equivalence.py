"""Unitary equivalence of the two conditioning-order representations.

The two amplitudes built from the same data under opposite conditioning
orders live in different bases.  A hyperbolic-unitary change of basis
maps one onto the other, up to a multiplier of the form +-exp_j(gamma),
exactly when the two transition matrices are transposes of each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import HNumber, h_arg
from .context import Direction, Matrix2, ProbContext, is_doubly_stochastic
from .engine import run_qlra
from .errors import DegenerateStateError, StochasticityError
from .linear import HMatrix2, HVector2, mat_apply, sq_norm

__all__ = [
    "EquivalenceVerdict",
    "transition_unitary",
    "states_equivalent",
    "check_consistency",
    "proof_relation_residual",
]

# Components with |z|^2 below this cannot anchor the multiplier
# extraction: division degenerates near the null cone.
_NULL_CONE_FLOOR = 1e-6


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Outcome of comparing two states up to a +-exp_j(gamma) multiplier.

    ``symmetry_holds`` is the transpose condition on the transition
    matrices; it is None when the comparison was made on bare vectors
    with no matrices in play.
    """

    equivalent: bool
    gamma: float | None
    sign: int | None
    max_component_deviation: float
    symmetry_holds: bool | None = None


def transition_unitary(p_b_given_a: Matrix2) -> HMatrix2:
    """Basis-change matrix [[sqrt(P00), sqrt(P01)], [sqrt(P10), -sqrt(P11)]].

    Hyperbolic-unitary whenever P is doubly stochastic.
    """
    P = p_b_given_a
    if not is_doubly_stochastic(P):
        raise StochasticityError("transition unitary requires a doubly stochastic matrix")
    return HMatrix2(
        (
            (HNumber(math.sqrt(P[0][0])), HNumber(math.sqrt(P[0][1]))),
            (HNumber(math.sqrt(P[1][0])), HNumber(-math.sqrt(P[1][1]))),
        )
    )


def states_equivalent(v1: HVector2, v2: HVector2, tol: float = 1e-9) -> EquivalenceVerdict:
    """Decide whether v1 = s * exp_j(gamma) * v2 for some sign s and real gamma.

    Both vectors must have unit squared norm within tol.  The multiplier
    is extracted from the component of v2 farthest from the null cone;
    equivalence requires it to have unit squared modulus and to map v2
    onto v1 componentwise within tol.
    """
    for name, v in (("v1", v1), ("v2", v2)):
        n = sq_norm(v)
        if abs(n - 1.0) > max(tol, 1e-6):
            raise ValueError(f"{name} is not a unit vector (sq_norm={n!r})")
    comps2 = v2.components()
    mods = [abs(c.sq_modulus()) for c in comps2]
    k = 0 if mods[0] >= mods[1] else 1
    if mods[k] < _NULL_CONE_FLOOR:
        raise DegenerateStateError(
            "every component of v2 lies (numerically) on the null cone"
        )
    c = v1.components()[k] * comps2[k].inv()
    mapped = v2.scale(c)
    diff = v1 - mapped
    deviation = max(abs(diff.c1.re), abs(diff.c1.hy), abs(diff.c2.re), abs(diff.c2.hy))
    unit_multiplier = abs(c.sq_modulus() - 1.0) <= tol
    equivalent = unit_multiplier and deviation <= tol
    if not equivalent:
        return EquivalenceVerdict(
            equivalent=False, gamma=None, sign=None, max_component_deviation=deviation
        )
    # |c|^2 = 1 forces |c.re| >= 1, so the sign is unambiguous.
    s = 1 if c.re > 0 else -1
    gamma = h_arg(s * c)
    return EquivalenceVerdict(
        equivalent=True, gamma=gamma, sign=s, max_component_deviation=deviation
    )


def _symmetry_holds(ctx: ProbContext, tol: float) -> bool:
    P_ba = ctx.p_b_given_a
    P_ab = ctx.a_given_b()
    return all(
        abs(P_ba[i][j] - P_ab[j][i]) <= tol for i in range(2) for j in range(2)
    )


def check_consistency(
    ctx: ProbContext, tol: float = 1e-9, sign_choice: int = 1
) -> EquivalenceVerdict:
    """Test whether the two conditioning orders give the same state.

    Builds both amplitudes, pushes the b|a one through the transition
    unitary, and compares with the a|b one up to +-exp_j(gamma).  The
    verdict also records whether the transpose symmetry between the two
    transition matrices holds; the two answers agree (that is the
    consistency theorem).
    """
    state_ba = run_qlra(ctx, Direction.B_GIVEN_A, sign_choice=sign_choice)
    U = transition_unitary(ctx.p_b_given_a)
    transported = mat_apply(U, state_ba.psi)
    # The a|b construction carries its own +- phase-branch freedom
    # (cosh is even, so the phase difference of the two amplitude
    # components is only determined up to sign).  Either branch is a
    # representative of the same reconstruction; accept whichever one
    # the transported state matches.
    verdict = None
    for branch in (sign_choice, -sign_choice):
        state_ab = run_qlra(ctx, Direction.A_GIVEN_B, sign_choice=branch)
        candidate = states_equivalent(state_ab.psi, transported, tol=tol)
        if verdict is None or (
            candidate.max_component_deviation < verdict.max_component_deviation
        ):
            verdict = candidate
        if candidate.equivalent:
            break
    return EquivalenceVerdict(
        equivalent=verdict.equivalent,
        gamma=verdict.gamma,
        sign=verdict.sign,
        max_component_deviation=verdict.max_component_deviation,
        symmetry_holds=_symmetry_holds(ctx, tol),
    )


def proof_relation_residual(ctx: ProbContext, sign_choice: int = 1) -> float:
    """| cosh(gamma_2 - gamma_1) - cosh(theta) | for a symmetric context.

    gamma_i are the arguments of the a|b amplitude components (defined
    because their squared moduli equal the strictly positive a-marginals)
    and theta is the hyperbolic phase of the b|a direction.  The residual
    vanishes exactly when the transpose symmetry holds.
    """
    state_ab = run_qlra(ctx, Direction.A_GIVEN_B, sign_choice=sign_choice)
    state_ba = run_qlra(ctx, Direction.B_GIVEN_A, sign_choice=sign_choice)
    g1 = h_arg(state_ab.psi.c1)
    g2 = h_arg(state_ab.psi.c2)
    return abs(math.cosh(g2 - g1) - math.cosh(state_ba.profile.theta[0]))
