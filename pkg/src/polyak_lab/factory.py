from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple
import logging

from .definitions.constants import DEFAULT_ARROW_CEILING, DEFAULT_CHORD_CEILING, DEFAULT_WITNESS_BOUND
from .definitions.namespace import Flavor, Skeleton, Status
from .definitions.structures import Certificate, ClaimT
from .verification import (
    VerificationContext,
    open_cache,
    verify_average,
    verify_caterpillar,
    verify_flip_span,
    verify_membership_lemma,
    verify_stability,
    verify_theorem1,
    verify_universality,
    verify_vanishing,
    verify_xi_compatibility,
)

_logger = logging.getLogger(__name__)

ClaimRunnerT = Callable[..., Certificate]

MEMBERSHIP_FLAVORS: Dict[str, Flavor] = {
    "chord": Flavor.CHORD_SIGNED,
    "arrow": Flavor.ARROW_SIGNED,
}


@dataclass(frozen=True)
class ClaimJob:
    claim: ClaimT
    order: int
    skeleton: Skeleton
    options: Tuple[Tuple[str, Any], ...] = ()

    def __str__(self) -> str:
        extra = "".join(f" {k}={v}" for k, v in self.options)
        return f"{self.claim}[{self.order},{self.skeleton.value}]{extra}"


@dataclass(frozen=True)
class ContextSettings:
    """Picklable recipe for a VerificationContext, one per worker process."""
    cache_dir: Optional[str] = None
    arrow_ceiling: int = DEFAULT_ARROW_CEILING
    chord_ceiling: int = DEFAULT_CHORD_CEILING
    witness_bound: int = DEFAULT_WITNESS_BOUND

    def build(self) -> VerificationContext:
        return VerificationContext(
            cache=open_cache(self.cache_dir or "", enabled=self.cache_dir is not None),
            arrow_ceiling=self.arrow_ceiling,
            chord_ceiling=self.chord_ceiling,
            witness_bound=self.witness_bound,
        )


def _membership(order: int, skeleton: Skeleton, context: VerificationContext, flavor: str = "chord") -> Certificate:
    if flavor not in MEMBERSHIP_FLAVORS:
        raise ValueError(f"Unsupported membership flavor: {flavor}. Supported flavors: {list(MEMBERSHIP_FLAVORS)}")
    return verify_membership_lemma(order, MEMBERSHIP_FLAVORS[flavor], skeleton, context)


def _stability(order: int, skeleton: Skeleton, context: VerificationContext, order_low: int = 1) -> Certificate:
    return verify_stability(order_low, order, skeleton, context)


@dataclass
class ClaimFactory:
    CLAIM_REGISTRY: Dict[ClaimT, ClaimRunnerT] = field(default_factory=lambda: {
        "theorem1": lambda n, s, c: verify_theorem1(n, s, c),
        "vanishing": lambda n, s, c: verify_vanishing(n, s, c),
        "caterpillar": lambda n, s, c: verify_caterpillar(n, s, c),
        "average": lambda n, s, c: verify_average(n, s, c),
        "membership": _membership,
        "stability": _stability,
        "xi": lambda n, s, c: verify_xi_compatibility(n, s, c),
        "universality": lambda n, s, c: verify_universality(n, s, c),
        "flip-span": lambda n, s, c: verify_flip_span(n, s, c),
    })
    # lowest order at which each claim says anything
    LOWEST_ORDER: Dict[ClaimT, int] = field(default_factory=lambda: {
        "theorem1": 1,
        "vanishing": 2,
        "caterpillar": 2,
        "average": 2,
        "membership": 2,
        "stability": 1,
        "xi": 1,
        "universality": 1,
        "flip-span": 1,
    })

    def run_claim(
        self,
        claim: ClaimT,
        order: int,
        skeleton: Skeleton,
        context: Optional[VerificationContext] = None,
        **options: Any,
    ) -> Certificate:
        """
        Verify one claim.

        Args:
            claim (ClaimT): Claim id.
            order (int): Order (the upper order for ``stability``).
            skeleton (Skeleton): Circle or line.
            context (VerificationContext | None): Shared ceilings and cache.
            **options: ``flavor`` for ``membership``, ``order_low`` for ``stability``.

        Returns:
            Certificate: The run's certificate.

        Raises:
            ValueError: If the claim is not supported.
            ResourceLimitException: If the order exceeds a ceiling.
        """
        if claim not in self.CLAIM_REGISTRY:
            raise ValueError(
                f"Unsupported claim: {claim}. "
                f"Supported claims: {list(self.CLAIM_REGISTRY.keys())}"
            )
        context = context or VerificationContext()
        _logger.debug(f"verifying {claim} at order {order} on {skeleton.value}")
        return self.CLAIM_REGISTRY[claim](order, skeleton, context, **options)

    def plan(self, order_max: int, context: VerificationContext) -> List[ClaimJob]:
        """
        Every claim at every order the ceilings allow, circle first.

        Line diagrams have no rotation to quotient by, so signed arrow claims on
        the line stop one order below the circle's ceiling.
        """
        jobs: List[ClaimJob] = []
        for skeleton in (Skeleton.CIRCLE, Skeleton.LINE):
            arrow_max = min(order_max, context.arrow_ceiling - (1 if skeleton is Skeleton.LINE else 0))
            chord_max = min(order_max, context.chord_ceiling)
            for claim in self.CLAIM_REGISTRY:
                top = chord_max if claim == "caterpillar" else arrow_max
                if claim == "stability":
                    if top >= 1:
                        jobs.append(ClaimJob(claim, top, skeleton))
                    continue
                for n in range(self.LOWEST_ORDER[claim], top + 1):
                    if claim == "membership":
                        jobs.extend(ClaimJob(claim, n, skeleton, (("flavor", f),)) for f in MEMBERSHIP_FLAVORS)
                    else:
                        jobs.append(ClaimJob(claim, n, skeleton))
        return jobs

    def run_all(
        self,
        order_max: int,
        settings: Optional[ContextSettings] = None,
        workers: int = 1,
    ) -> List[Certificate]:
        """
        Run the whole suite.

        Args:
            order_max (int): Highest order attempted.
            settings (ContextSettings | None): Ceilings and cache location.
            workers (int): Worker processes; certificates come back in plan order either way.

        Returns:
            list[Certificate]: One certificate per planned job.
        """
        settings = settings or ContextSettings()
        context = settings.build()
        jobs = self.plan(order_max, context)
        _logger.debug(f"running {len(jobs)} claims with {workers} worker(s)")
        if workers <= 1:
            return [self.run_claim(j.claim, j.order, j.skeleton, context, **dict(j.options)) for j in jobs]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_job, jobs, [settings] * len(jobs)))


def _run_job(job: ClaimJob, settings: ContextSettings) -> Certificate:
    return ClaimFactory().run_claim(job.claim, job.order, job.skeleton, settings.build(), **dict(job.options))


def overall_status(certificates: List[Certificate]) -> Status:
    return Status.worst(*(c.status for c in certificates))


run_claim = ClaimFactory().run_claim
run_all = ClaimFactory().run_all
