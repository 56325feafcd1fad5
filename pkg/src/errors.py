# Convfix Lab
# Error types shared by every package
# October 2026


class ConvfixError(Exception):
    """Base class for every error raised by the lab."""


class GroupSpecError(ConvfixError):
    """A group spec is malformed or outside the supported bounds."""


class CarrierMismatchError(ConvfixError):
    """Two objects live on different groups."""


class SupportCapExceeded(ConvfixError):
    """A lattice measure grew beyond the configured number of atoms."""

    def __init__(self, atoms: int, cap: int):
        super().__init__(f"lattice measure has {atoms} atoms, cap is {cap}")
        self.atoms = atoms
        self.cap = cap


class NonAbelianError(ConvfixError):
    """An operation that needs an abelian group received a non-abelian one."""


class PreconditionError(ConvfixError):
    """An operation was called outside its stated hypotheses."""


class RepresentationError(ConvfixError):
    """A matrix family is not a unitary homomorphism of the group."""


class ScenarioError(ConvfixError):
    """A scenario document could not be parsed."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class UnknownCaseError(ConvfixError):
    """explain was asked for a case the scenario does not produce."""
