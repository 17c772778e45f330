"""Exception hierarchy shared by all modules."""


class CrystalError(Exception):
    """Base class for every error raised by the package."""


class OrderingError(CrystalError, ValueError):
    """A candidate configuration violates a ≥ b ≥ c or x ≥ y ≥ z ≥ w."""


class DomainError(CrystalError, ValueError):
    """An operator was applied to an inadmissible configuration or outside its bounds."""


class ConsistencyError(CrystalError):
    """An internal invariant was broken (e.g. two preimages, disagreeing case formulas)."""


class PreconditionError(CrystalError):
    """A check was requested on input that lacks what the check needs (labels, K0)."""


class GluingError(CrystalError):
    """Identified vertices carry conflicting labels."""


class StructureError(CrystalError):
    """A sky edge has an X-jump that no colouring rule covers."""


class AxiomViolationError(CrystalError):
    """A computation hit a violated axiom; ``axiom`` names it."""

    def __init__(self, axiom: str, message: str):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom
