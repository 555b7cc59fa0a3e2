"""Certificate verification and the lift-free brute-force oracle.

``verify_certificate`` re-checks a certificate against its configuration
from scratch, using nothing but exact substitution.  ``oracle_enumerate``
decides, for every partition independently, whether signed coefficients with
the required signs can present a common point; it never builds the
projective lift, so it cross-checks the pipeline by a different route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import ONE, ZERO, dot
from .model import (
    COLORED,
    Configuration,
    Hyperplane,
    PlusMinusCertificate,
    validate_configuration,
)
from .lp import FEASIBLE, LinearProgram, constraint, lp_solve
from .separation import separating_hyperplane, trivial_hyperplane
from .solver import Blocks, enumerate_partitions


@dataclass(frozen=True)
class VerifyResult:
    accepted: bool
    reason: Optional[str] = None


def _reject(reason: str) -> VerifyResult:
    return VerifyResult(False, reason)


def verify_certificate(
    config: Configuration, cert: PlusMinusCertificate
) -> VerifyResult:
    """Accept iff every certificate claim holds exactly for ``config``.

    The checks run in a fixed order and the first failure names the reason:
    dimension-mismatch, block-count-mismatch, block-empty,
    index-out-of-range, blocks-not-disjoint, coefficient-key-mismatch,
    affine-combination-mismatch, affine-sum-mismatch, sign-violation,
    rainbow-without-coloring, rainbow-violation, hyperplane-not-separating,
    beta-not-positive, beta-mismatch.
    """
    if len(cert.point_b) != config.d or len(cert.hyperplane.w) != config.d:
        return _reject("dimension-mismatch")
    if len(cert.blocks) != config.r:
        return _reject("block-count-mismatch")
    n = len(config.points)
    seen: set[int] = set()
    for block in cert.blocks:
        if not block:
            return _reject("block-empty")
        for i in block:
            if not 0 <= i < n:
                return _reject("index-out-of-range")
            if i in seen:
                return _reject("blocks-not-disjoint")
            seen.add(i)
    if set(cert.coefficients) != seen:
        return _reject("coefficient-key-mismatch")
    for block in cert.blocks:
        combo = [ZERO] * config.d
        total = ZERO
        for i in block:
            c = cert.coefficients[i]
            total += c
            if c:
                for m in range(config.d):
                    combo[m] += c * config.points[i][m]
        if tuple(combo) != cert.point_b:
            return _reject("affine-combination-mismatch")
        if total != 1:
            return _reject("affine-sum-mismatch")
    members = set(config.mu)
    for i in seen:
        c = cert.coefficients[i]
        if i in members:
            if c > 0:
                return _reject("sign-violation")
        elif c < 0:
            return _reject("sign-violation")
    if cert.rainbow:
        if config.coloring is None:
            return _reject("rainbow-without-coloring")
        for cls in config.coloring:
            cls_set = set(cls)
            for block in cert.blocks:
                if len(cls_set.intersection(block)) > 1:
                    return _reject("rainbow-violation")
    w, alpha = cert.hyperplane.w, cert.hyperplane.alpha
    if all(v == 0 for v in w):
        return _reject("hyperplane-not-separating")
    for i, p in enumerate(config.points):
        s = dot(p, w) - alpha
        if i in members:
            if s >= 0:
                return _reject("hyperplane-not-separating")
        elif s <= 0:
            return _reject("hyperplane-not-separating")
    if cert.beta <= 0:
        return _reject("beta-not-positive")
    if cert.beta * (dot(cert.point_b, w) - alpha) != 1:
        return _reject("beta-mismatch")
    return VerifyResult(True)


def oracle_enumerate(config: Configuration) -> list[Blocks]:
    """Every partition that admits a signed presentation of a common point.

    Checks each partition of the vertices into r nonempty blocks (rainbow
    ones only, in colored mode) with a sign-constrained feasibility program
    posed directly in the original coordinates: coefficients of marked
    vertices at most 0, of unmarked vertices at least 0, each block summing
    to 1 and presenting the same point.  Returns the partitions in canonical
    enumeration order.
    """
    validate_configuration(config)
    coloring = config.coloring if config.mode == COLORED else None
    found = []
    for blocks in enumerate_partitions(len(config.points), config.r, coloring):
        if signed_presentation(config, blocks) is not None:
            found.append(blocks)
    return found


def signed_presentation(
    config: Configuration, blocks: Blocks
) -> Optional[tuple[dict[int, Fraction], tuple[Fraction, ...]]]:
    """Signed coefficients presenting one common point from every block of
    ``blocks``, or None.  This is the direct solve: no lift involved."""
    flat = [i for block in blocks for i in block]
    position = {i: t for t, i in enumerate(flat)}
    members = set(config.mu)
    d = config.d
    nvar = len(flat) + d
    bounds = tuple(
        (None, ZERO) if i in members else (ZERO, None) for i in flat
    ) + ((None, None),) * d
    cons = []
    for block in blocks:
        coeffs = [ZERO] * nvar
        for i in block:
            coeffs[position[i]] = ONE
        cons.append(constraint(coeffs, "=", 1))
    for block in blocks:
        for m in range(d):
            coeffs = [ZERO] * nvar
            for i in block:
                coeffs[position[i]] = config.points[i][m]
            coeffs[len(flat) + m] = -ONE
            cons.append(constraint(coeffs, "=", 0))
    result = lp_solve(LinearProgram(nvar, tuple(cons), bounds=bounds))
    if result.status != FEASIBLE:
        return None
    coefficients = {i: result.point[position[i]] for i in flat}
    b = tuple(result.point[len(flat) :])
    return coefficients, b


def certificate_for_partition(
    config: Configuration,
    blocks: Blocks,
    hyperplane: Optional[Hyperplane] = None,
) -> Optional[PlusMinusCertificate]:
    """Build a certificate for ``blocks`` from the direct solve, or None.

    The normalizer is pinned by the certificate identity
    beta * (<b, w> - alpha) = 1; it is positive whenever some block avoids
    the marked face, which the face-size precondition guarantees.
    """
    solution = signed_presentation(config, blocks)
    if solution is None:
        return None
    coefficients, b = solution
    if hyperplane is None:
        if config.mu:
            hyperplane = separating_hyperplane(config, config.mu)
        else:
            hyperplane = trivial_hyperplane(config)
    denom = dot(b, hyperplane.w) - hyperplane.alpha
    if denom <= 0:
        return None
    return PlusMinusCertificate(
        blocks=blocks,
        coefficients=coefficients,
        point_b=b,
        beta=ONE / denom,
        hyperplane=hyperplane,
        rainbow=config.mode == COLORED,
    )
