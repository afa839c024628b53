"""
Base Experiment class for chainring.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..core.models import BoundCheck, ExperimentConfig, ReportRow
from ..ring.core import RingSpec


class Experiment(ABC):
    """Base class that every experiment inherits from.

    ``verify`` runs one seeded trial; ``sweep`` walks a parameter grid. Both
    return flat report rows.
    """

    # config fields that must be set (after defaults are applied)
    requires: Tuple[str, ...] = ()
    # False for experiments whose single run does not depend on the seed
    randomized: bool = True

    @property
    @abstractmethod
    def name(self) -> str:
        """Name used on the command line."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line description."""
        pass

    def defaults(self, ring: RingSpec, config: ExperimentConfig) -> Dict[str, Any]:
        """Values for config fields the user left unset."""
        return {}

    def default_sizes(self, ring: RingSpec, config: ExperimentConfig) -> List[Tuple[int, int]]:
        return [(1, 1)]

    @abstractmethod
    def verify(
        self,
        config: ExperimentConfig,
        ring: RingSpec,
        trial: int,
        sizes: Tuple[int, int],
        rng: np.random.Generator,
    ) -> List[ReportRow]:
        """
        Run one seeded trial.

        Args:
            config: Complete configuration
            ring: The ring named by ``config.ring``
            trial: Trial index
            sizes: Set sizes for this trial
            rng: Generator owned by this trial

        Returns:
            Report rows for the trial
        """
        pass

    def sweep(self, config: ExperimentConfig, ring: RingSpec) -> Optional[List[ReportRow]]:
        """Parameter sweep; None falls back to ``trials`` trials per size pair."""
        return None

    def row(
        self,
        config: ExperimentConfig,
        ring: RingSpec,
        trial: int,
        check: Optional[BoundCheck] = None,
        **fields: Any,
    ) -> ReportRow:
        """Report row pre-filled with the ring, dimensions and an optional bound check."""
        values: Dict[str, Any] = {
            "experiment": self.name,
            "family": ring.family,
            "p": ring.p,
            "n": ring.n,
            "r": ring.r,
            "d": config.d,
            "k": config.k,
            "trial": trial,
        }
        if check is not None:
            values.update(
                observed=check.observed,
                main_term=check.main_term,
                bound=check.bound,
                passed=check.passed,
                note=check.note,
            )
        values.update(fields)
        return ReportRow(**values)
