"""Construction interface and registry."""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from ..algebra.field import CoefficientField
from ..algebra.schur_ring import SchurRing
from ..groups.base import FiniteGroup
from ..utils.exceptions import ConstructionError


class SRingConstruction(ABC):
    """Abstract base class for named S-ring constructions."""

    def __init__(self, name: str, kind: str):
        self._name = name
        self._kind = kind

    @property
    def name(self) -> str:
        """Return construction name."""
        return self._name

    @property
    def kind(self) -> str:
        """Return construction kind (basic, product, lattice)."""
        return self._kind

    @abstractmethod
    def build(self, group: FiniteGroup, field: CoefficientField, params: Dict[str, Any]) -> SchurRing:
        """
        Build the S-ring.

        Args:
            group: Ambient group
            field: Coefficient field
            params: Construction-specific parameters

        Returns:
            The verified S-ring

        Raises:
            ConstructionError: If the parameters do not define an S-ring
        """

    def required_params(self) -> List[str]:
        """Parameter names that must be supplied."""
        return []

    def validate_params(self, params: Dict[str, Any]) -> None:
        """
        Raises:
            ConstructionError: If a required parameter is missing
        """
        missing = [key for key in self.required_params() if params.get(key) is None]
        if missing:
            raise ConstructionError(f"{self.name} needs parameters: {missing}",
                                    details={"construction": self.name, "missing": missing})

    def get_construction_info(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind,
            "description": (self.__doc__ or "No description available").strip().splitlines()[0],
            "params": self.required_params(),
        }


class ConstructionRegistry:
    """Registry for managing S-ring constructions."""

    def __init__(self):
        self._constructions: Dict[str, SRingConstruction] = {}

    def register(self, construction: SRingConstruction) -> None:
        """Register a construction."""
        self._constructions[construction.name] = construction

    def get(self, name: str) -> SRingConstruction:
        """
        Raises:
            ConstructionError: For unknown names
        """
        if name not in self._constructions:
            raise ConstructionError(f"Unknown construction: {name}",
                                    details={"known": sorted(self._constructions)})
        return self._constructions[name]

    def list_constructions(self, kind: Optional[str] = None) -> List[str]:
        """List registered construction names, optionally of one kind."""
        return sorted(name for name, c in self._constructions.items() if kind is None or c.kind == kind)

    def get_construction_info(self, name: str) -> Dict[str, Any]:
        return self.get(name).get_construction_info()

    def build(self, name: str, group: FiniteGroup, field: CoefficientField,
              params: Optional[Dict[str, Any]] = None) -> SchurRing:
        construction = self.get(name)
        params = params or {}
        construction.validate_params(params)
        return construction.build(group, field, params)


# Global construction registry
construction_registry = ConstructionRegistry()
