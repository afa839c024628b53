"""
Experiment registry for chainring.
"""

import importlib
import inspect
import logging
import pkgutil
from typing import Dict, List, Optional

from ..errors import UnknownExperiment
from .base import Experiment

logger = logging.getLogger(__name__)


class ExperimentRegistry:
    """Registry for loading and looking up experiments."""

    def __init__(self):
        """Initialize a new ExperimentRegistry."""
        self.experiments: Dict[str, Experiment] = {}

    def register(self, experiment: Experiment) -> None:
        """
        Register an experiment with the registry.

        Args:
            experiment: The experiment to register
        """
        if experiment.name in self.experiments:
            logger.warning(f"Experiment {experiment.name} is already registered. Overwriting.")

        self.experiments[experiment.name] = experiment
        logger.debug(f"Registered experiment: {experiment.name}")

    def get(self, name: str) -> Optional[Experiment]:
        """
        Get an experiment by name.

        Args:
            name: The name of the experiment

        Returns:
            The experiment, or None if it's not registered
        """
        return self.experiments.get(name)

    def resolve(self, name: str) -> Experiment:
        """Like ``get`` but raises UnknownExperiment for missing names."""
        experiment = self.get(name)
        if experiment is None:
            raise UnknownExperiment(name)
        return experiment

    def names(self) -> List[str]:
        """Registered experiment names, alphabetical."""
        return sorted(self.experiments)

    def discover(self, package_name: str = "chainring.experiments") -> None:
        """
        Discover and register experiments from a package.

        Args:
            package_name: The name of the package to search for experiments
        """
        try:
            package = importlib.import_module(package_name)
        except ImportError:
            logger.error(f"Could not import package {package_name}")
            return

        for _, name, is_pkg in pkgutil.iter_modules(package.__path__, package.__name__ + "."):
            if is_pkg:
                self.discover(name)
                continue

            try:
                module = importlib.import_module(name)
                for _, obj in inspect.getmembers(module, inspect.isclass):
                    if (
                        issubclass(obj, Experiment)
                        and obj is not Experiment
                        and not inspect.isabstract(obj)
                        and obj.__module__ == module.__name__
                    ):
                        self.register(obj())
            except (ImportError, AttributeError) as e:
                logger.error(f"Error loading experiments from {name}: {e}")


def default_registry() -> ExperimentRegistry:
    """Registry with every built-in experiment."""
    registry = ExperimentRegistry()
    registry.discover()
    return registry
