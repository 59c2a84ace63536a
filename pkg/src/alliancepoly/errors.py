"""Exception hierarchy shared by the library and the CLI."""


class AllianceError(Exception):
    """Base class for all errors raised by alliancepoly."""


class GraphFormatError(AllianceError, ValueError):
    """Malformed graph input (edge list or graph6)."""


class PolynomialFormatError(AllianceError, ValueError):
    """Malformed polynomial text or JSON."""


class GraphSizeError(AllianceError, ValueError):
    """Graph exceeds a vertex cap (engine limit or representation limit)."""


class BudgetExceeded(AllianceError):
    """Enumeration ran past its configured time budget; no partial result is returned."""
